#include <doctest.h>

#include "oracles.hpp"
#include "triring/corpus.hpp"
#include "triring/ideals.hpp"
#include "triring/triquaternion.hpp"

using namespace triring;

TEST_CASE("builtin carriers pass every axiom") {
    for (const char* name : {"TE(2,2)", "TE(4,4)", "TE(4,2)", "TE(6,3)", "TE(8,4)",
                             "TE(4,1)", "TE(6,1)", "TQ-modp(3)", "TQ-modp(7)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        ValidationReport rep = validate_triring(R);
        INFO(name, ": ", rep.summary());
        CHECK(rep.ok());
    }
}

TEST_CASE("TE constructor rejects a modulus that does not divide") {
    CHECK_THROWS_AS(corpus::make_te(4, 3), HypothesisError);
    CHECK_THROWS_AS(corpus::make_builtin("TQ-modp(5)"), HypothesisError);  // 5 = 1 mod 4
}

TEST_CASE("malformed tables are rejected with coordinates") {
    FiniteTriring te = corpus::make_te(2, 2);
    FiniteCommutativeRing even = te.even;
    even.add[1][1] = 7;  // out of range
    CHECK_THROWS_AS(make_triring("bad", even, te.odd, te.action), MalformedTableError);
    try {
        make_triring("bad", even, te.odd, te.action);
    } catch (const MalformedTableError& e) {
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("mutated sharp table fails commutativity with the right witness") {
    // j#k bent to j while k#j stays k
    FiniteTriring R = corpus::make_builtin("TQ-modp(3)");
    Index j = tq::tq_odd_index(3, 1, 0), k = tq::tq_odd_index(3, 0, 1);
    R.odd.sharp[j][k] = j;
    ValidationReport rep = validate_triring(R);
    CHECK_FALSE(rep.ok());
    bool commFailed = false;
    for (const auto& c : rep.checks)
        if (c.axiom == "odd-sharp-comm" && !c.pass) {
            commFailed = true;
            // the witness names the bent pair, smaller index first
            CHECK(c.witness == "a=" + std::to_string(k) + " b=" + std::to_string(j));
        }
    CHECK(commFailed);
}

TEST_CASE("triquaternion tables over p = 1 mod 4 break odd commutation") {
    // Same construction as the builtin but over Z/5, where the even part has
    // zero divisors: 1+2i annihilates differently from the left and right,
    // so only the final layer fails.
    const int p = 5;
    const int n = p * p;
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
    auto enc = [&](int a, int b) { return ((a % p + p) % p) * p + ((b % p + p) % p); };
    for (int x = 0; x < n; ++x) {
        int a = x / p, b = x % p;
        for (int y = 0; y < n; ++y) {
            int c = y / p, d = y % p;
            even.add[x][y] = enc(a + c, b + d);
            even.mul[x][y] = enc(a * c - b * d, a * d + b * c);
            odd.add[x][y] = enc(a + c, b + d);
            odd.sharp[x][y] = enc(a * c - b * d, a * d + b * c);
            act.left[x][y] = enc(a * c - b * d, a * d + b * c);
            act.right[y][x] = enc(c * a + d * b, d * a - c * b);
        }
    }
    even.one = enc(1, 0);
    odd.localOne = enc(1, 0);
    FiniteTriring R = make_triring("TQ-mod5", even, odd, act);
    ValidationReport rep = validate_triring(R);
    CHECK_FALSE(rep.ok());
    const AxiomCheck* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->axiom == "odd-commutation");
}

TEST_CASE("trivial extension product on TE(4,4)") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    TriringElement x{2, 3}, y{3, 1};
    TriringElement p = mul(R, x, y);
    CHECK(p.e == 2 * 3 % 4);
    CHECK(p.o == (2 * 1 + 3 * 3) % 4);  // x0.y1 + x1.y0
    CHECK(mul(R, x, elem_one(R)) == x);
    CHECK(mul(R, elem_one(R), x) == x);
    // odd times odd vanishes in the ring product
    CHECK(mul(R, TriringElement{0, 2}, TriringElement{0, 3}) == elem_zero());
    CHECK_THROWS_AS(mul(R, TriringElement{5, 0}, y), CrossRingError);
}

TEST_CASE("sharp is odd-only and commutative") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    CHECK(sharp(R, {0, 2}, {0, 2}).o == 0);  // 2*2 = 0 mod 4
    CHECK(sharp(R, {0, 3}, {0, 2}).o == 2);
    CHECK_THROWS_AS(sharp(R, {1, 2}, {0, 2}), ParityError);
}

TEST_CASE("local powers") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    CHECK(R.powSharp(3, 0) == R.odd.localOne);
    CHECK(R.powSharp(2, 2) == 0);
    FiniteTriring Q = corpus::make_builtin("TQ-modp(7)");
    // k#k = -j
    Index kk = Q.powSharp(tq::tq_odd_index(7, 0, 1), 2);
    CHECK(kk == tq::tq_odd_index(7, -1, 0));
}

TEST_CASE("quotient of TE(4,4) by ((2),(2))") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal I{{0, 2}, {0, 2}};
    REQUIRE(is_triideal(R, I));
    QuotientTriring q = quotient(R, I);
    CHECK(q.ring.evenSize() == 2);
    CHECK(q.ring.oddSize() == 2);
    CHECK(validate_triring(q.ring).ok());
    CHECK(kernel(R, q.natural) == I);
    CHECK(validate_homomorphism(R, q.ring, q.natural).ok());
}

TEST_CASE("quotient by the zero and full ideals") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    QuotientTriring byZero = quotient(R, zero_ideal());
    CHECK(is_bijective(R, byZero.ring, byZero.natural));
    QuotientTriring byFull = quotient(R, full_ideal(R));
    CHECK(byFull.ring.carrierSize() == 1);
}

TEST_CASE("homomorphism validation catches a broken even map") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    TriringHomomorphism h = identity_hom(R);
    CHECK(validate_homomorphism(R, R, h).ok());
    std::swap(h.evenMap[1], h.evenMap[3]);  // 1 <-> 3 breaks multiplicativity
    ValidationReport rep = validate_homomorphism(R, R, h);
    CHECK_FALSE(rep.ok());
    bool sawMultiplicative = false;
    for (const auto& c : rep.checks)
        if (!c.pass && (c.axiom == "multiplicative" || c.axiom == "unit-preserving"))
            sawMultiplicative = true;
    CHECK(sawMultiplicative);
}

TEST_CASE("kernel and image of the natural map") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal I{{0, 2}, {0, 2}};
    QuotientTriring q = quotient(R, I);
    CHECK(kernel(R, q.natural) == I);
    CHECK(kernel(R, identity_hom(R)) == zero_ideal());
    Subtriring im = image(R, q.ring, q.natural);
    CHECK(static_cast<int>(im.even.size()) == q.ring.evenSize());
    CHECK(static_cast<int>(im.odd.size()) == q.ring.oddSize());
    CHECK(validate_subtriring(q.ring, im).ok());
}

TEST_CASE("surjection correspondence on TE(4,4)") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal K{{0, 2}, {0, 2}};
    QuotientTriring q = quotient(R, K);

    auto upstairs = enumerate_triideals(R);
    std::vector<Triideal> overK;
    for (const auto& J : upstairs)
        if (ideal_subset(K, J)) overK.push_back(J);
    auto downstairs = enumerate_triideals(q.ring);
    CHECK(overK.size() == downstairs.size());

    for (const auto& J : overK) {
        Triideal down = pushforward_triideal(R, q.ring, q.natural, J);
        CHECK(is_triideal(q.ring, down));
        CHECK(pullback_triideal(R, q.ring, q.natural, down) == J);
    }
    CHECK(pushforward_triideal(R, q.ring, q.natural, K) == zero_ideal());
    CHECK(pullback_triideal(R, q.ring, q.natural, full_ideal(q.ring)) == full_ideal(R));
    // an ideal dropping the kernel is rejected
    CHECK_THROWS_AS(pushforward_triideal(R, q.ring, q.natural, zero_ideal()),
                    HypothesisError);

    // pushing forward and then quotienting is quotienting upstairs:
    // x + J -> phi(x) + phi(J) is an isomorphism
    for (const auto& J : overK) {
        Triideal down = pushforward_triideal(R, q.ring, q.natural, J);
        QuotientTriring byJ = quotient(R, J);
        QuotientTriring byDown = quotient(q.ring, down);
        TriringHomomorphism iso;
        iso.evenMap.assign(byJ.ring.evenSize(), -1);
        iso.oddMap.assign(byJ.ring.oddSize(), -1);
        for (Index x = 0; x < R.evenSize(); ++x) {
            Index from = byJ.natural.evenMap[x];
            Index to = byDown.natural.evenMap[q.natural.evenMap[x]];
            CHECK((iso.evenMap[from] == -1 || iso.evenMap[from] == to));
            iso.evenMap[from] = to;
        }
        for (Index x = 0; x < R.oddSize(); ++x) {
            Index from = byJ.natural.oddMap[x];
            Index to = byDown.natural.oddMap[q.natural.oddMap[x]];
            CHECK((iso.oddMap[from] == -1 || iso.oddMap[from] == to));
            iso.oddMap[from] = to;
        }
        CHECK(is_homomorphism(byJ.ring, byDown.ring, iso));
        CHECK(is_bijective(byJ.ring, byDown.ring, iso));
    }
}

TEST_CASE("surjections carry parts onto parts") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    for (const auto& I : enumerate_triideals(R)) {
        QuotientTriring q = quotient(R, I);
        std::set<Index> evenImage(q.natural.evenMap.begin(), q.natural.evenMap.end());
        std::set<Index> oddImage(q.natural.oddMap.begin(), q.natural.oddMap.end());
        CHECK(static_cast<int>(evenImage.size()) == q.ring.evenSize());
        CHECK(static_cast<int>(oddImage.size()) == q.ring.oddSize());
    }
}

TEST_CASE("homomorphism enumeration finds exactly the ring maps") {
    FiniteTriring A = corpus::make_te(2, 2);
    auto homs = enumerate_homomorphisms(A, A);
    CHECK(homs.size() == 1);  // identity only: both parts are generated by units
    FiniteTriring B = corpus::make_te(4, 4);
    auto homsBA = enumerate_homomorphisms(B, A);
    // reduction mod 2 on both parts is the only map
    CHECK(homsBA.size() == 1);
    CHECK(homsBA[0].evenMap == std::vector<Index>{0, 1, 0, 1});
}
