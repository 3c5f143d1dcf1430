#include "triring/triquaternion.hpp"

#include <string>
#include <vector>

namespace triring::tq {

ExactTriquaternion tq_add(const ExactTriquaternion& x, const ExactTriquaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

ExactTriquaternion tq_neg(const ExactTriquaternion& x) {
    return {-x.a, -x.b, -x.c, -x.d};
}

// Basis products: 1,i span the even part with i*i = -1; the mixed products
// are i*j = k, i*k = -j, j*i = -k, k*i = j; products of j,k vanish.
ExactTriquaternion tq_mul(const ExactTriquaternion& x, const ExactTriquaternion& y) {
    ExactTriquaternion r;
    r.a = x.a * y.a - x.b * y.b;
    r.b = x.a * y.b + x.b * y.a;
    // even . odd : (a+bi)(cj+dk) = (ac - bd) j + (ad + bc) k
    Rational cl = x.a * y.c - x.b * y.d;
    Rational dl = x.a * y.d + x.b * y.c;
    // odd . even : (cj+dk)(a+bi) = (ca + db) j + (da - cb) k
    Rational cr = x.c * y.a + x.d * y.b;
    Rational dr = x.d * y.a - x.c * y.b;
    r.c = cl + cr;
    r.d = dl + dr;
    return r;
}

ExactTriquaternion tq_sharp(const ExactTriquaternion& x, const ExactTriquaternion& y) {
    if (!x.isOdd() || !y.isOdd())
        throw ParityError("local product is defined on odd triquaternions only");
    // j#j = j, j#k = k#j = k, k#k = -j: complex multiplication on (c, d).
    return {0, 0, x.c * y.c - x.d * y.d, x.c * y.d + x.d * y.c};
}

ExactTriquaternion tq_local_power(const ExactTriquaternion& x, int n) {
    ExactTriquaternion r{0, 0, 1, 0};  // local identity j
    for (int i = 0; i < n; ++i) r = tq_sharp(r, x);
    return r;
}

namespace {

const ExactTriquaternion kBasis[4] = {
    {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};

std::string coef_name(int i) {
    static const char* n[] = {"1", "i", "j", "k"};
    return n[i];
}

}  // namespace

ValidationReport validate_rational_triquaternions() {
    ValidationReport rep;

    {
        AxiomCheck c{"mul-assoc-basis"};
        for (int x = 0; x < 4 && c.pass; ++x)
            for (int y = 0; y < 4 && c.pass; ++y)
                for (int z = 0; z < 4 && c.pass; ++z)
                    if (tq_mul(tq_mul(kBasis[x], kBasis[y]), kBasis[z]) !=
                        tq_mul(kBasis[x], tq_mul(kBasis[y], kBasis[z]))) {
                        c.pass = false;
                        c.witness = coef_name(x) + "," + coef_name(y) + "," + coef_name(z);
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"even-mul-comm"};
        for (int x = 0; x < 2 && c.pass; ++x)
            for (int y = 0; y < 2 && c.pass; ++y)
                if (tq_mul(kBasis[x], kBasis[y]) != tq_mul(kBasis[y], kBasis[x])) {
                    c.pass = false;
                    c.witness = coef_name(x) + "," + coef_name(y);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"odd-annihilates"};
        for (int x = 2; x < 4 && c.pass; ++x)
            for (int y = 2; y < 4 && c.pass; ++y)
                if (tq_mul(kBasis[x], kBasis[y]) != ExactTriquaternion{0, 0, 0, 0}) {
                    c.pass = false;
                    c.witness = coef_name(x) + "," + coef_name(y);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"sharp-comm"};
        for (int x = 2; x < 4 && c.pass; ++x)
            for (int y = 2; y < 4 && c.pass; ++y)
                if (tq_sharp(kBasis[x], kBasis[y]) != tq_sharp(kBasis[y], kBasis[x])) {
                    c.pass = false;
                    c.witness = coef_name(x) + "," + coef_name(y);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"sharp-assoc"};
        for (int x = 2; x < 4 && c.pass; ++x)
            for (int y = 2; y < 4 && c.pass; ++y)
                for (int z = 2; z < 4 && c.pass; ++z)
                    if (tq_sharp(tq_sharp(kBasis[x], kBasis[y]), kBasis[z]) !=
                        tq_sharp(kBasis[x], tq_sharp(kBasis[y], kBasis[z]))) {
                        c.pass = false;
                        c.witness = coef_name(x) + "," + coef_name(y) + "," + coef_name(z);
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"local-identity"};
        const ExactTriquaternion j = kBasis[2];
        for (int x = 2; x < 4 && c.pass; ++x)
            if (tq_sharp(j, kBasis[x]) != kBasis[x]) {
                c.pass = false;
                c.witness = coef_name(x);
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"triassoc-basis"};
        for (int x = 0; x < 2 && c.pass; ++x)
            for (int a = 2; a < 4 && c.pass; ++a)
                for (int b = 2; b < 4 && c.pass; ++b) {
                    if (tq_mul(kBasis[x], tq_sharp(kBasis[a], kBasis[b])) !=
                        tq_sharp(tq_mul(kBasis[x], kBasis[a]), kBasis[b])) {
                        c.pass = false;
                        c.witness = coef_name(x) + "(" + coef_name(a) + "#" + coef_name(b) + ")";
                    }
                    if (tq_mul(tq_sharp(kBasis[a], kBasis[b]), kBasis[x]) !=
                        tq_sharp(kBasis[a], tq_mul(kBasis[b], kBasis[x]))) {
                        c.pass = false;
                        c.witness = "(" + coef_name(a) + "#" + coef_name(b) + ")" + coef_name(x);
                    }
                }
        rep.checks.push_back(c);
    }
    {
        // Bilinear laws over a small rational grid, since the table check
        // above only pins the structure constants.
        AxiomCheck c{"bilinearity-grid"};
        const Rational grid[] = {Rational(-1), Rational(0), Rational(1, 2), Rational(2)};
        for (const Rational& s : grid) {
            for (int x = 0; x < 4 && c.pass; ++x)
                for (int y = 0; y < 4 && c.pass; ++y) {
                    ExactTriquaternion sx{s * kBasis[x].a, s * kBasis[x].b,
                                          s * kBasis[x].c, s * kBasis[x].d};
                    ExactTriquaternion lhs = tq_mul(sx, kBasis[y]);
                    ExactTriquaternion m = tq_mul(kBasis[x], kBasis[y]);
                    ExactTriquaternion rhs{s * m.a, s * m.b, s * m.c, s * m.d};
                    if (lhs != rhs) {
                        c.pass = false;
                        c.witness = "scale " + coef_name(x) + "*" + coef_name(y);
                    }
                }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Mod-p tables

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Index tq_even_index(int p, int a, int b) {
    return ((a % p + p) % p) * p + ((b % p + p) % p);
}

Index tq_odd_index(int p, int c, int d) {
    return ((c % p + p) % p) * p + ((d % p + p) % p);
}

FiniteTriring make_tq_modp(int p) {
    if (!is_prime(p) || p % 4 != 3)
        throw HypothesisError("TQ-modp needs a prime p with p % 4 == 3 so the even part is a field");
    const int n = p * p;
    auto dec = [p](Index i) { return std::pair<int, int>{i / p, i % p}; };

    FiniteCommutativeRing even;
    even.size = n;
    even.add.assign(n, std::vector<Index>(n));
    even.mul.assign(n, std::vector<Index>(n));
    OddPartRing odd;
    odd.size = n;
    odd.add.assign(n, std::vector<Index>(n));
    odd.sharp.assign(n, std::vector<Index>(n));
    BimoduleAction act;
    act.left.assign(n, std::vector<Index>(n));
    act.right.assign(n, std::vector<Index>(n));

    for (Index x = 0; x < n; ++x) {
        auto [a, b] = dec(x);
        for (Index y = 0; y < n; ++y) {
            auto [c, d] = dec(y);
            even.add[x][y] = tq_even_index(p, a + c, b + d);
            even.mul[x][y] = tq_even_index(p, a * c - b * d, a * d + b * c);
            odd.add[x][y] = tq_odd_index(p, a + c, b + d);
            odd.sharp[x][y] = tq_odd_index(p, a * c - b * d, a * d + b * c);
            // x = a+bi acting on y = cj+dk, and the reverse order
            act.left[x][y] = tq_odd_index(p, a * c - b * d, a * d + b * c);
            act.right[y][x] = tq_odd_index(p, c * a + d * b, d * a - c * b);
        }
    }
    even.one = tq_even_index(p, 1, 0);
    odd.localOne = tq_odd_index(p, 1, 0);

    return make_triring("TQ-modp(" + std::to_string(p) + ")", std::move(even),
                        std::move(odd), std::move(act));
}

TriringElement reduce_modp(const ExactTriquaternion& x, int p) {
    auto red = [p](const Rational& r) {
        long long num = r.numerator() % p;
        long long den = r.denominator() % p;
        if (den == 0)
            throw HypothesisError("denominator not invertible mod p");
        // denominator inverse by Fermat
        long long inv = 1, base = (den % p + p) % p;
        for (int e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        return static_cast<int>(((num * inv) % p + p) % p);
    };
    TriringElement e;
    e.e = tq_even_index(p, red(x.a), red(x.b));
    e.o = tq_odd_index(p, red(x.c), red(x.d));
    return e;
}

}  // namespace triring::tq
