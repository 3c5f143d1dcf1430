#include "triring/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace triring {

// ---------------------------------------------------------------------------
// Reports

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass " : "FAIL ") << c.axiom;
        if (!c.pass) os << " [" << c.witness << "]";
        os << "\n";
    }
    return os.str();
}

namespace {

void check_table(const Table& t, int rows, int cols, int range,
                 const std::string& what) {
    if (static_cast<int>(t.size()) != rows)
        throw MalformedTableError(what + ": expected " + std::to_string(rows) +
                                  " rows, got " + std::to_string(t.size()));
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(t[i].size()) != cols)
            throw MalformedTableError(what + ": row " + std::to_string(i) +
                                      " has " + std::to_string(t[i].size()) +
                                      " entries, expected " + std::to_string(cols));
        for (int j = 0; j < cols; ++j)
            if (t[i][j] < 0 || t[i][j] >= range)
                throw MalformedTableError(what + ": entry (" + std::to_string(i) +
                                          "," + std::to_string(j) + ") = " +
                                          std::to_string(t[i][j]) + " out of range");
    }
}

std::vector<Index> inverse_lookup(const Table& add, int size) {
    std::vector<Index> neg(size, -1);
    for (Index a = 0; a < size; ++a)
        for (Index b = 0; b < size; ++b)
            if (add[a][b] == 0) {
                neg[a] = b;
                break;
            }
    return neg;
}

std::string wit(std::initializer_list<std::pair<const char*, Index>> parts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : parts) {
        if (!first) os << " ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Carrier construction

Index FiniteTriring::pow0(Index x, int n) const {
    Index r = even.one;
    for (int i = 0; i < n; ++i) r = mul0(r, x);
    return r;
}

Index FiniteTriring::powSharp(Index a, int n) const {
    Index r = odd.localOne;
    for (int i = 0; i < n; ++i) r = sharp1(r, a);
    return r;
}

FiniteTriring make_triring(std::string name, FiniteCommutativeRing even,
                           OddPartRing odd, BimoduleAction action) {
    if (even.size <= 0 || odd.size <= 0)
        throw MalformedTableError("carrier parts must be nonempty");
    check_table(even.add, even.size, even.size, even.size, "even add");
    check_table(even.mul, even.size, even.size, even.size, "even mul");
    check_table(odd.add, odd.size, odd.size, odd.size, "odd add");
    check_table(odd.sharp, odd.size, odd.size, odd.size, "odd sharp");
    check_table(action.left, even.size, odd.size, odd.size, "action left");
    check_table(action.right, odd.size, even.size, odd.size, "action right");
    if (even.one < 0 || even.one >= even.size)
        throw MalformedTableError("even one out of range");
    if (odd.localOne < 0 || odd.localOne >= odd.size)
        throw MalformedTableError("local one out of range");

    FiniteTriring R;
    R.name = std::move(name);
    R.even = std::move(even);
    R.odd = std::move(odd);
    R.action = std::move(action);
    R.evenNeg = inverse_lookup(R.even.add, R.even.size);
    R.oddNeg = inverse_lookup(R.odd.add, R.odd.size);
    return R;
}

// ---------------------------------------------------------------------------
// Axiom validation

namespace {

// One abelian-group layer for a part carrier.
void check_group(const Table& add, int n, const char* part,
                 std::vector<AxiomCheck>& out) {
    AxiomCheck assoc{std::string(part) + "-add-assoc"};
    for (Index a = 0; a < n && assoc.pass; ++a)
        for (Index b = 0; b < n && assoc.pass; ++b)
            for (Index c = 0; c < n && assoc.pass; ++c)
                if (add[add[a][b]][c] != add[a][add[b][c]]) {
                    assoc.pass = false;
                    assoc.witness = wit({{"a", a}, {"b", b}, {"c", c}});
                }
    out.push_back(assoc);

    AxiomCheck comm{std::string(part) + "-add-comm"};
    for (Index a = 0; a < n && comm.pass; ++a)
        for (Index b = 0; b < n && comm.pass; ++b)
            if (add[a][b] != add[b][a]) {
                comm.pass = false;
                comm.witness = wit({{"a", a}, {"b", b}});
            }
    out.push_back(comm);

    AxiomCheck zero{std::string(part) + "-add-zero"};
    for (Index a = 0; a < n && zero.pass; ++a)
        if (add[0][a] != a || add[a][0] != a) {
            zero.pass = false;
            zero.witness = wit({{"a", a}});
        }
    out.push_back(zero);

    AxiomCheck inv{std::string(part) + "-add-inverse"};
    for (Index a = 0; a < n && inv.pass; ++a) {
        bool found = false;
        for (Index b = 0; b < n; ++b)
            if (add[a][b] == 0) found = true;
        if (!found) {
            inv.pass = false;
            inv.witness = wit({{"a", a}});
        }
    }
    out.push_back(inv);
}

void check_comm_ring(const Table& add, const Table& mul, int n, Index one,
                     const char* part, const char* prod,
                     std::vector<AxiomCheck>& out) {
    AxiomCheck assoc{std::string(part) + "-" + prod + "-assoc"};
    for (Index a = 0; a < n && assoc.pass; ++a)
        for (Index b = 0; b < n && assoc.pass; ++b)
            for (Index c = 0; c < n && assoc.pass; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
                    assoc.pass = false;
                    assoc.witness = wit({{"a", a}, {"b", b}, {"c", c}});
                }
    out.push_back(assoc);

    AxiomCheck comm{std::string(part) + "-" + prod + "-comm"};
    for (Index a = 0; a < n && comm.pass; ++a)
        for (Index b = 0; b < n && comm.pass; ++b)
            if (mul[a][b] != mul[b][a]) {
                comm.pass = false;
                comm.witness = wit({{"a", a}, {"b", b}});
            }
    out.push_back(comm);

    AxiomCheck dist{std::string(part) + "-" + prod + "-distrib"};
    for (Index a = 0; a < n && dist.pass; ++a)
        for (Index b = 0; b < n && dist.pass; ++b)
            for (Index c = 0; c < n && dist.pass; ++c)
                if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) {
                    dist.pass = false;
                    dist.witness = wit({{"a", a}, {"b", b}, {"c", c}});
                }
    out.push_back(dist);

    AxiomCheck unit{std::string(part) + "-" + prod + "-identity"};
    for (Index a = 0; a < n && unit.pass; ++a)
        if (mul[one][a] != a || mul[a][one] != a) {
            unit.pass = false;
            unit.witness = wit({{"a", a}});
        }
    out.push_back(unit);
}

}  // namespace

ValidationReport validate_triring(const FiniteTriring& R) {
    ValidationReport rep;
    const int n0 = R.evenSize(), n1 = R.oddSize();

    // Layer 1: abelian groups.
    check_group(R.even.add, n0, "even", rep.checks);
    check_group(R.odd.add, n1, "odd", rep.checks);
    if (!rep.ok()) return rep;

    // Layer 2: ring laws for both parts.
    check_comm_ring(R.even.add, R.even.mul, n0, R.even.one, "even", "mul",
                    rep.checks);
    check_comm_ring(R.odd.add, R.odd.sharp, n1, R.odd.localOne, "odd", "sharp",
                    rep.checks);
    if (!rep.ok()) return rep;

    // The grading closure R0R1 + R1R0 in R1 and R1R1 = 0 hold structurally:
    // the action tables map into odd indices and the derived full product
    // assigns odd*odd the even-odd pair (0,0).
    rep.checks.push_back({"grading-closure", true, ""});

    // Layer 3: bimodule laws.
    {
        AxiomCheck c{"action-left-biadditive"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index y = 0; y < n0 && c.pass; ++y)
                for (Index a = 0; a < n1 && c.pass; ++a)
                    if (R.actL(R.add0(x, y), a) != R.add1(R.actL(x, a), R.actL(y, a))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"y", y}, {"a", a}});
                    }
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index a = 0; a < n1 && c.pass; ++a)
                for (Index b = 0; b < n1 && c.pass; ++b)
                    if (R.actL(x, R.add1(a, b)) != R.add1(R.actL(x, a), R.actL(x, b))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"a", a}, {"b", b}});
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"action-right-biadditive"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index y = 0; y < n0 && c.pass; ++y)
                for (Index a = 0; a < n1 && c.pass; ++a)
                    if (R.actR(a, R.add0(x, y)) != R.add1(R.actR(a, x), R.actR(a, y))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"y", y}, {"a", a}});
                    }
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index a = 0; a < n1 && c.pass; ++a)
                for (Index b = 0; b < n1 && c.pass; ++b)
                    if (R.actR(R.add1(a, b), x) != R.add1(R.actR(a, x), R.actR(b, x))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"a", a}, {"b", b}});
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"action-unital"};
        for (Index a = 0; a < n1 && c.pass; ++a)
            if (R.actL(R.even.one, a) != a || R.actR(a, R.even.one) != a) {
                c.pass = false;
                c.witness = wit({{"a", a}});
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"action-left-assoc"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index y = 0; y < n0 && c.pass; ++y)
                for (Index a = 0; a < n1 && c.pass; ++a)
                    if (R.actL(R.mul0(x, y), a) != R.actL(x, R.actL(y, a))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"y", y}, {"a", a}});
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"action-right-assoc"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index y = 0; y < n0 && c.pass; ++y)
                for (Index a = 0; a < n1 && c.pass; ++a)
                    if (R.actR(a, R.mul0(x, y)) != R.actR(R.actR(a, x), y)) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"y", y}, {"a", a}});
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"action-balanced"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index y = 0; y < n0 && c.pass; ++y)
                for (Index a = 0; a < n1 && c.pass; ++a)
                    if (R.actR(R.actL(x, a), y) != R.actL(x, R.actR(a, y))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"y", y}, {"a", a}});
                    }
        rep.checks.push_back(c);
    }
    if (!rep.ok()) return rep;

    // Layer 4: triassociativity. The cases with an odd left factor hold
    // automatically since odd*odd vanishes in the ring product.
    {
        AxiomCheck c{"triassoc-left"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index a = 0; a < n1 && c.pass; ++a)
                for (Index b = 0; b < n1 && c.pass; ++b)
                    if (R.actL(x, R.sharp1(a, b)) != R.sharp1(R.actL(x, a), b)) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"a", a}, {"b", b}});
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"triassoc-right"};
        for (Index x = 0; x < n0 && c.pass; ++x)
            for (Index a = 0; a < n1 && c.pass; ++a)
                for (Index b = 0; b < n1 && c.pass; ++b)
                    if (R.actR(R.sharp1(a, b), x) != R.sharp1(a, R.actR(b, x))) {
                        c.pass = false;
                        c.witness = wit({{"x", x}, {"a", a}, {"b", b}});
                    }
        rep.checks.push_back(c);
    }
    if (!rep.ok()) return rep;

    // Layer 5: set equality R1*x0 = x0*R1 for every even x0.
    {
        AxiomCheck c{"odd-commutation"};
        for (Index x = 0; x < n0 && c.pass; ++x) {
            std::set<Index> lhs, rhs;
            for (Index a = 0; a < n1; ++a) {
                lhs.insert(R.actR(a, x));
                rhs.insert(R.actL(x, a));
            }
            if (lhs != rhs) {
                c.pass = false;
                c.witness = wit({{"x0", x}});
            }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Element arithmetic

TriringElement elem_zero() { return {0, 0}; }
TriringElement elem_one(const FiniteTriring& R) { return {R.even.one, 0}; }
TriringElement elem_local_one(const FiniteTriring& R) { return {0, R.odd.localOne}; }

void check_element(const FiniteTriring& R, TriringElement x) {
    if (x.e < 0 || x.e >= R.evenSize() || x.o < 0 || x.o >= R.oddSize())
        throw CrossRingError("element (" + std::to_string(x.e) + "," +
                             std::to_string(x.o) + ") does not belong to " + R.name);
}

TriringElement add(const FiniteTriring& R, TriringElement x, TriringElement y) {
    check_element(R, x);
    check_element(R, y);
    return {R.add0(x.e, y.e), R.add1(x.o, y.o)};
}

TriringElement neg(const FiniteTriring& R, TriringElement x) {
    check_element(R, x);
    return {R.neg0(x.e), R.neg1(x.o)};
}

TriringElement mul(const FiniteTriring& R, TriringElement x, TriringElement y) {
    check_element(R, x);
    check_element(R, y);
    return {R.mul0(x.e, y.e), R.add1(R.actL(x.e, y.o), R.actR(x.o, y.e))};
}

TriringElement sharp(const FiniteTriring& R, TriringElement x, TriringElement y) {
    check_element(R, x);
    check_element(R, y);
    if (x.e != 0 || y.e != 0)
        throw ParityError("local product is defined on odd elements only");
    return {0, R.sharp1(x.o, y.o)};
}

TriringElement power(const FiniteTriring& R, TriringElement x, int n) {
    check_element(R, x);
    TriringElement r = elem_one(R);
    for (int i = 0; i < n; ++i) r = mul(R, r, x);
    return r;
}

// ---------------------------------------------------------------------------
// Triideals

Triideal zero_ideal() { return {{0}, {0}}; }

Triideal full_ideal(const FiniteTriring& R) {
    Triideal I;
    I.even.resize(R.evenSize());
    I.odd.resize(R.oddSize());
    std::iota(I.even.begin(), I.even.end(), 0);
    std::iota(I.odd.begin(), I.odd.end(), 0);
    return I;
}

bool ideal_contains(const Triideal& I, Index idx, bool odd) {
    const auto& v = odd ? I.odd : I.even;
    return std::binary_search(v.begin(), v.end(), idx);
}

bool ideal_subset(const Triideal& A, const Triideal& B) {
    return std::includes(B.even.begin(), B.even.end(), A.even.begin(), A.even.end()) &&
           std::includes(B.odd.begin(), B.odd.end(), A.odd.begin(), A.odd.end());
}

bool is_full_ideal(const FiniteTriring& R, const Triideal& I) {
    return static_cast<int>(I.even.size()) == R.evenSize() &&
           static_cast<int>(I.odd.size()) == R.oddSize();
}

ValidationReport validate_triideal(const FiniteTriring& R, const Triideal& I) {
    ValidationReport rep;
    auto in0 = [&](Index i) { return ideal_contains(I, i, false); };
    auto in1 = [&](Index i) { return ideal_contains(I, i, true); };

    for (Index i : I.even)
        if (i < 0 || i >= R.evenSize()) throw CrossRingError("even index out of range");
    for (Index i : I.odd)
        if (i < 0 || i >= R.oddSize()) throw CrossRingError("odd index out of range");

    {
        AxiomCheck c{"even-subgroup"};
        if (!in0(0)) {
            c.pass = false;
            c.witness = "missing 0";
        }
        for (std::size_t i = 0; i < I.even.size() && c.pass; ++i)
            for (std::size_t j = 0; j < I.even.size() && c.pass; ++j)
                if (!in0(R.add0(I.even[i], I.even[j]))) {
                    c.pass = false;
                    c.witness = wit({{"a", I.even[i]}, {"b", I.even[j]}});
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"odd-subgroup"};
        if (!in1(0)) {
            c.pass = false;
            c.witness = "missing 0";
        }
        for (std::size_t i = 0; i < I.odd.size() && c.pass; ++i)
            for (std::size_t j = 0; j < I.odd.size() && c.pass; ++j)
                if (!in1(R.add1(I.odd[i], I.odd[j]))) {
                    c.pass = false;
                    c.witness = wit({{"a", I.odd[i]}, {"b", I.odd[j]}});
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"even-ideal"};
        for (Index x = 0; x < R.evenSize() && c.pass; ++x)
            for (Index a : I.even)
                if (!in0(R.mul0(x, a))) {
                    c.pass = false;
                    c.witness = wit({{"x", x}, {"a", a}});
                    break;
                }
        rep.checks.push_back(c);
    }
    {
        // I0 absorbed into the odd part: R1*I0 and I0*R1 land in I1.
        AxiomCheck c{"absorb-even-into-odd"};
        for (Index a : I.even) {
            for (Index b = 0; b < R.oddSize(); ++b)
                if (!in1(R.actL(a, b)) || !in1(R.actR(b, a))) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b1", b}});
                    break;
                }
            if (!c.pass) break;
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"absorb-odd-action"};
        for (Index a : I.odd) {
            for (Index x = 0; x < R.evenSize(); ++x)
                if (!in1(R.actL(x, a)) || !in1(R.actR(a, x))) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"x0", x}});
                    break;
                }
            if (!c.pass) break;
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"odd-sharp-ideal"};
        for (Index a : I.odd) {
            for (Index b = 0; b < R.oddSize(); ++b)
                if (!in1(R.sharp1(b, a))) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"b1", b}});
                    break;
                }
            if (!c.pass) break;
        }
        rep.checks.push_back(c);
    }
    return rep;
}

bool is_triideal(const FiniteTriring& R, const Triideal& I) {
    return validate_triideal(R, I).ok();
}

// ---------------------------------------------------------------------------
// Homomorphisms

TriringHomomorphism identity_hom(const FiniteTriring& R) {
    TriringHomomorphism h;
    h.evenMap.resize(R.evenSize());
    h.oddMap.resize(R.oddSize());
    std::iota(h.evenMap.begin(), h.evenMap.end(), 0);
    std::iota(h.oddMap.begin(), h.oddMap.end(), 0);
    return h;
}

TriringElement apply(const TriringHomomorphism& h, TriringElement x) {
    return {h.evenMap[x.e], h.oddMap[x.o]};
}

ValidationReport validate_homomorphism(const FiniteTriring& src,
                                       const FiniteTriring& tgt,
                                       const TriringHomomorphism& h) {
    if (static_cast<int>(h.evenMap.size()) != src.evenSize() ||
        static_cast<int>(h.oddMap.size()) != src.oddSize())
        throw CrossRingError("homomorphism maps do not match the source carrier");
    for (Index v : h.evenMap)
        if (v < 0 || v >= tgt.evenSize())
            throw CrossRingError("even image out of target range");
    for (Index v : h.oddMap)
        if (v < 0 || v >= tgt.oddSize())
            throw CrossRingError("odd image out of target range");

    ValidationReport rep;
    const int n0 = src.evenSize(), n1 = src.oddSize();

    // Parity preservation is structural: the maps are typed per part.
    rep.checks.push_back({"parity-preserving", true, ""});

    {
        AxiomCheck c{"additive"};
        for (Index a = 0; a < n0 && c.pass; ++a)
            for (Index b = 0; b < n0 && c.pass; ++b)
                if (h.evenMap[src.add0(a, b)] != tgt.add0(h.evenMap[a], h.evenMap[b])) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b0", b}});
                }
        for (Index a = 0; a < n1 && c.pass; ++a)
            for (Index b = 0; b < n1 && c.pass; ++b)
                if (h.oddMap[src.add1(a, b)] != tgt.add1(h.oddMap[a], h.oddMap[b])) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"b1", b}});
                }
        rep.checks.push_back(c);
    }
    {
        // Multiplicativity on the full ring: even*even, even*odd, odd*even.
        // (odd*odd is zero on both sides.)
        AxiomCheck c{"multiplicative"};
        for (Index a = 0; a < n0 && c.pass; ++a)
            for (Index b = 0; b < n0 && c.pass; ++b)
                if (h.evenMap[src.mul0(a, b)] != tgt.mul0(h.evenMap[a], h.evenMap[b])) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b0", b}});
                }
        for (Index a = 0; a < n0 && c.pass; ++a)
            for (Index b = 0; b < n1 && c.pass; ++b)
                if (h.oddMap[src.actL(a, b)] != tgt.actL(h.evenMap[a], h.oddMap[b])) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b1", b}});
                }
        for (Index a = 0; a < n1 && c.pass; ++a)
            for (Index b = 0; b < n0 && c.pass; ++b)
                if (h.oddMap[src.actR(a, b)] != tgt.actR(h.oddMap[a], h.evenMap[b])) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"b0", b}});
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"unit-preserving"};
        if (h.evenMap[src.even.one] != tgt.even.one) {
            c.pass = false;
            c.witness = wit({{"one", src.even.one}});
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"sharp-preserving"};
        for (Index a = 0; a < n1 && c.pass; ++a)
            for (Index b = 0; b < n1 && c.pass; ++b)
                if (h.oddMap[src.sharp1(a, b)] != tgt.sharp1(h.oddMap[a], h.oddMap[b])) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"b1", b}});
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"local-unit-preserving"};
        if (h.oddMap[src.odd.localOne] != tgt.odd.localOne) {
            c.pass = false;
            c.witness = wit({{"localOne", src.odd.localOne}});
        }
        rep.checks.push_back(c);
    }
    return rep;
}

bool is_homomorphism(const FiniteTriring& src, const FiniteTriring& tgt,
                     const TriringHomomorphism& h) {
    return validate_homomorphism(src, tgt, h).ok();
}

bool is_surjective(const FiniteTriring& tgt, const TriringHomomorphism& h) {
    std::set<Index> e(h.evenMap.begin(), h.evenMap.end());
    std::set<Index> o(h.oddMap.begin(), h.oddMap.end());
    return static_cast<int>(e.size()) == tgt.evenSize() &&
           static_cast<int>(o.size()) == tgt.oddSize();
}

bool is_bijective(const FiniteTriring& src, const FiniteTriring& tgt,
                  const TriringHomomorphism& h) {
    return src.evenSize() == tgt.evenSize() && src.oddSize() == tgt.oddSize() &&
           is_surjective(tgt, h);
}

TriringHomomorphism compose(const TriringHomomorphism& g,
                            const TriringHomomorphism& f) {
    TriringHomomorphism h;
    h.evenMap.reserve(f.evenMap.size());
    h.oddMap.reserve(f.oddMap.size());
    for (Index v : f.evenMap) h.evenMap.push_back(g.evenMap[v]);
    for (Index v : f.oddMap) h.oddMap.push_back(g.oddMap[v]);
    return h;
}

Triideal kernel(const FiniteTriring& src, const TriringHomomorphism& h) {
    Triideal I;
    for (Index a = 0; a < src.evenSize(); ++a)
        if (h.evenMap[a] == 0) I.even.push_back(a);
    for (Index a = 0; a < src.oddSize(); ++a)
        if (h.oddMap[a] == 0) I.odd.push_back(a);
    return I;
}

Subtriring image(const FiniteTriring& src, const FiniteTriring& tgt,
                 const TriringHomomorphism& h) {
    (void)src;
    (void)tgt;
    std::set<Index> e(h.evenMap.begin(), h.evenMap.end());
    std::set<Index> o(h.oddMap.begin(), h.oddMap.end());
    return {{e.begin(), e.end()}, {o.begin(), o.end()}};
}

ValidationReport validate_subtriring(const FiniteTriring& R, const Subtriring& S) {
    ValidationReport rep;
    auto in0 = [&](Index i) {
        return std::binary_search(S.even.begin(), S.even.end(), i);
    };
    auto in1 = [&](Index i) {
        return std::binary_search(S.odd.begin(), S.odd.end(), i);
    };
    {
        AxiomCheck c{"contains-units"};
        if (!in0(0) || !in0(R.even.one) || !in1(0) || !in1(R.odd.localOne)) {
            c.pass = false;
            c.witness = "0, 1 or local one missing";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"additively-closed"};
        for (Index a : S.even)
            for (Index b : S.even)
                if (!in0(R.add0(a, b))) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b0", b}});
                }
        for (Index a : S.odd)
            for (Index b : S.odd)
                if (!in1(R.add1(a, b))) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"b1", b}});
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"multiplicatively-closed"};
        for (Index a : S.even)
            for (Index b : S.even)
                if (!in0(R.mul0(a, b))) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b0", b}});
                }
        for (Index a : S.even)
            for (Index b : S.odd)
                if (!in1(R.actL(a, b)) || !in1(R.actR(b, a))) {
                    c.pass = false;
                    c.witness = wit({{"a0", a}, {"b1", b}});
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"sharp-closed"};
        for (Index a : S.odd)
            for (Index b : S.odd)
                if (!in1(R.sharp1(a, b))) {
                    c.pass = false;
                    c.witness = wit({{"a1", a}, {"b1", b}});
                }
        rep.checks.push_back(c);
    }
    return rep;
}

Triideal pushforward_triideal(const FiniteTriring& src, const FiniteTriring& tgt,
                              const TriringHomomorphism& h, const Triideal& I) {
    if (!is_surjective(tgt, h))
        throw HypothesisError("pushforward requires a surjective homomorphism");
    Triideal ker = kernel(src, h);
    if (!ideal_subset(ker, I))
        throw HypothesisError("pushforward requires an ideal containing the kernel");
    std::set<Index> e, o;
    for (Index a : I.even) e.insert(h.evenMap[a]);
    for (Index a : I.odd) o.insert(h.oddMap[a]);
    return {{e.begin(), e.end()}, {o.begin(), o.end()}};
}

Triideal pullback_triideal(const FiniteTriring& src, const FiniteTriring& tgt,
                           const TriringHomomorphism& h, const Triideal& Ibar) {
    (void)tgt;
    Triideal I;
    for (Index a = 0; a < src.evenSize(); ++a)
        if (ideal_contains(Ibar, h.evenMap[a], false)) I.even.push_back(a);
    for (Index a = 0; a < src.oddSize(); ++a)
        if (ideal_contains(Ibar, h.oddMap[a], true)) I.odd.push_back(a);
    return I;
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

// Coset labelling for a subgroup of a part carrier: class index ordered by
// the minimal member, so the class of 0 gets index 0.
struct CosetSplit {
    std::vector<Index> classOf;
    std::vector<Index> rep;  // minimal member per class
};

CosetSplit cosets(const Table& add, int n, const std::vector<Index>& sub) {
    CosetSplit s;
    s.classOf.assign(n, -1);
    for (Index a = 0; a < n; ++a) {
        if (s.classOf[a] != -1) continue;
        Index cls = static_cast<Index>(s.rep.size());
        s.rep.push_back(a);
        for (Index i : sub) s.classOf[add[a][i]] = cls;
        if (s.classOf[a] != cls)
            throw Error("coset labelling failed: not an additive subgroup");
    }
    return s;
}

}  // namespace

QuotientTriring quotient(const FiniteTriring& R, const Triideal& I) {
    {
        ValidationReport rep = validate_triideal(R, I);
        if (!rep.ok())
            throw HypothesisError("quotient requires a triideal: " +
                                  rep.first_failure()->axiom);
    }
    CosetSplit ce = cosets(R.even.add, R.evenSize(), I.even);
    CosetSplit co = cosets(R.odd.add, R.oddSize(), I.odd);
    const int m0 = static_cast<int>(ce.rep.size());
    const int m1 = static_cast<int>(co.rep.size());

    FiniteCommutativeRing even;
    even.size = m0;
    even.add.assign(m0, std::vector<Index>(m0));
    even.mul.assign(m0, std::vector<Index>(m0));
    for (Index a = 0; a < m0; ++a)
        for (Index b = 0; b < m0; ++b) {
            even.add[a][b] = ce.classOf[R.add0(ce.rep[a], ce.rep[b])];
            even.mul[a][b] = ce.classOf[R.mul0(ce.rep[a], ce.rep[b])];
        }
    even.one = ce.classOf[R.even.one];

    OddPartRing odd;
    odd.size = m1;
    odd.add.assign(m1, std::vector<Index>(m1));
    odd.sharp.assign(m1, std::vector<Index>(m1));
    for (Index a = 0; a < m1; ++a)
        for (Index b = 0; b < m1; ++b) {
            odd.add[a][b] = co.classOf[R.add1(co.rep[a], co.rep[b])];
            odd.sharp[a][b] = co.classOf[R.sharp1(co.rep[a], co.rep[b])];
        }
    odd.localOne = co.classOf[R.odd.localOne];

    BimoduleAction act;
    act.left.assign(m0, std::vector<Index>(m1));
    act.right.assign(m1, std::vector<Index>(m0));
    for (Index x = 0; x < m0; ++x)
        for (Index a = 0; a < m1; ++a) {
            act.left[x][a] = co.classOf[R.actL(ce.rep[x], co.rep[a])];
            act.right[a][x] = co.classOf[R.actR(co.rep[a], ce.rep[x])];
        }

    QuotientTriring q;
    q.ring = make_triring(R.name + "/I", std::move(even), std::move(odd),
                          std::move(act));
    q.natural.evenMap = ce.classOf;
    q.natural.oddMap = co.classOf;

    if (!validate_triring(q.ring).ok())
        throw Error("quotient construction produced an invalid triring");
    if (!validate_homomorphism(R, q.ring, q.natural).ok())
        throw Error("natural map is not a homomorphism");
    if (!(kernel(R, q.natural) == I))
        throw Error("kernel of the natural map differs from the given triideal");
    return q;
}

// ---------------------------------------------------------------------------
// Homomorphism enumeration

namespace {

// Forces closure of a partial part-map under the two binary tables.
// Returns false on contradiction.
bool propagate(const Table& sAdd, const Table& sMul, const Table& tAdd,
               const Table& tMul, std::vector<Index>& m) {
    const int n = static_cast<int>(m.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (Index a = 0; a < n; ++a) {
            if (m[a] < 0) continue;
            for (Index b = 0; b < n; ++b) {
                if (m[b] < 0) continue;
                Index sa = sAdd[a][b], ia = tAdd[m[a]][m[b]];
                if (m[sa] < 0) {
                    m[sa] = ia;
                    changed = true;
                } else if (m[sa] != ia) {
                    return false;
                }
                Index sm = sMul[a][b], im = tMul[m[a]][m[b]];
                if (m[sm] < 0) {
                    m[sm] = im;
                    changed = true;
                } else if (m[sm] != im) {
                    return false;
                }
            }
        }
    }
    return true;
}

void search_even(const FiniteTriring& src, const FiniteTriring& tgt,
                 std::vector<Index> m, std::vector<std::vector<Index>>& out) {
    if (!propagate(src.even.add, src.even.mul, tgt.even.add, tgt.even.mul, m))
        return;
    Index free = -1;
    for (Index a = 0; a < src.evenSize(); ++a)
        if (m[a] < 0) {
            free = a;
            break;
        }
    if (free < 0) {
        out.push_back(std::move(m));
        return;
    }
    for (Index v = 0; v < tgt.evenSize(); ++v) {
        std::vector<Index> next = m;
        next[free] = v;
        search_even(src, tgt, std::move(next), out);
    }
}

bool odd_consistent(const FiniteTriring& src, const FiniteTriring& tgt,
                    const std::vector<Index>& em, const std::vector<Index>& om) {
    for (Index x = 0; x < src.evenSize(); ++x)
        for (Index a = 0; a < src.oddSize(); ++a) {
            if (om[src.actL(x, a)] >= 0 && om[a] >= 0 &&
                om[src.actL(x, a)] != tgt.actL(em[x], om[a]))
                return false;
            if (om[src.actR(a, x)] >= 0 && om[a] >= 0 &&
                om[src.actR(a, x)] != tgt.actR(om[a], em[x]))
                return false;
        }
    return true;
}

void search_odd(const FiniteTriring& src, const FiniteTriring& tgt,
                const std::vector<Index>& em, std::vector<Index> om,
                std::vector<TriringHomomorphism>& out, std::size_t limit) {
    if (limit && out.size() >= limit) return;
    if (!propagate(src.odd.add, src.odd.sharp, tgt.odd.add, tgt.odd.sharp, om))
        return;
    if (!odd_consistent(src, tgt, em, om)) return;
    Index free = -1;
    for (Index a = 0; a < src.oddSize(); ++a)
        if (om[a] < 0) {
            free = a;
            break;
        }
    if (free < 0) {
        out.push_back({em, om});
        return;
    }
    for (Index v = 0; v < tgt.oddSize(); ++v) {
        std::vector<Index> next = om;
        next[free] = v;
        search_odd(src, tgt, em, std::move(next), out, limit);
    }
}

}  // namespace

std::vector<TriringHomomorphism> enumerate_homomorphisms(
    const FiniteTriring& src, const FiniteTriring& tgt, std::size_t limit) {
    std::vector<std::vector<Index>> evens;
    {
        std::vector<Index> m(src.evenSize(), -1);
        m[0] = 0;
        m[src.even.one] = tgt.even.one;
        search_even(src, tgt, std::move(m), evens);
    }
    std::vector<TriringHomomorphism> out;
    for (const auto& em : evens) {
        std::vector<Index> om(src.oddSize(), -1);
        om[0] = 0;
        om[src.odd.localOne] = tgt.odd.localOne;
        search_odd(src, tgt, em, std::move(om), out, limit);
        if (limit && out.size() >= limit) break;
    }
    // The propagation covers addition/multiplication/sharp/action closure;
    // re-validate to keep the enumeration honest.
    std::vector<TriringHomomorphism> checked;
    for (auto& h : out)
        if (is_homomorphism(src, tgt, h)) checked.push_back(std::move(h));
    return checked;
}

}  // namespace triring
