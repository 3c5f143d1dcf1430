#include "triring/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace triring {

namespace {

std::vector<Index> sorted_unique(std::set<Index> s) {
    return {s.begin(), s.end()};
}

// Additive span of a set within one part carrier.
std::vector<Index> additive_span(const Table& add, std::set<Index> gen) {
    gen.insert(0);
    std::vector<Index> work(gen.begin(), gen.end());
    std::set<Index> span(gen.begin(), gen.end());
    while (!work.empty()) {
        Index a = work.back();
        work.pop_back();
        for (Index b : std::vector<Index>(span.begin(), span.end())) {
            Index s = add[a][b];
            if (span.insert(s).second) work.push_back(s);
        }
    }
    return {span.begin(), span.end()};
}

bool additively_closed(const Table& add, const std::vector<Index>& s) {
    std::set<Index> in(s.begin(), s.end());
    for (Index a : s)
        for (Index b : s)
            if (!in.count(add[a][b])) return false;
    return true;
}

}  // namespace

Triideal principal_even(const FiniteTriring& R, Index x0) {
    if (x0 < 0 || x0 >= R.evenSize()) throw ParityError("principal_even needs an even index");
    std::set<Index> e, o;
    for (Index y = 0; y < R.evenSize(); ++y) e.insert(R.mul0(y, x0));
    for (Index a = 0; a < R.oddSize(); ++a) o.insert(R.actR(a, x0));
    Triideal I{sorted_unique(std::move(e)), sorted_unique(std::move(o))};
    if (!additively_closed(R.even.add, I.even) || !additively_closed(R.odd.add, I.odd))
        throw Error("principal even ideal is not additively closed");
    return I;
}

Triideal principal_odd(const FiniteTriring& R, Index x1) {
    if (x1 < 0 || x1 >= R.oddSize()) throw ParityError("principal_odd needs an odd index");
    std::set<Index> o;
    for (Index a = 0; a < R.oddSize(); ++a) o.insert(R.sharp1(a, x1));
    Triideal I{{0}, sorted_unique(std::move(o))};
    if (!additively_closed(R.odd.add, I.odd))
        throw Error("principal odd ideal is not additively closed");
    return I;
}

Triideal ideal_sum(const FiniteTriring& R, const Triideal& I, const Triideal& J) {
    std::set<Index> e(I.even.begin(), I.even.end());
    e.insert(J.even.begin(), J.even.end());
    std::set<Index> o(I.odd.begin(), I.odd.end());
    o.insert(J.odd.begin(), J.odd.end());
    return {additive_span(R.even.add, std::move(e)),
            additive_span(R.odd.add, std::move(o))};
}

Triideal ideal_intersect(const FiniteTriring& R, const Triideal& I, const Triideal& J) {
    (void)R;
    Triideal K;
    std::set_intersection(I.even.begin(), I.even.end(), J.even.begin(), J.even.end(),
                          std::back_inserter(K.even));
    std::set_intersection(I.odd.begin(), I.odd.end(), J.odd.begin(), J.odd.end(),
                          std::back_inserter(K.odd));
    return K;
}

namespace {

std::pair<std::set<Index>, std::set<Index>> mixed_raw_sets(const FiniteTriring& R,
                                                           const Triideal& I,
                                                           const Triideal& J) {
    std::set<Index> e, o;
    for (Index a : I.even)
        for (Index b : J.even) e.insert(R.mul0(a, b));
    for (Index a : I.odd)
        for (Index b : J.odd) o.insert(R.sharp1(a, b));
    return {std::move(e), std::move(o)};
}

}  // namespace

Triideal mixed_product(const FiniteTriring& R, const Triideal& I, const Triideal& J) {
    auto [e, o] = mixed_raw_sets(R, I, J);
    return {additive_span(R.even.add, std::move(e)),
            additive_span(R.odd.add, std::move(o))};
}

std::pair<bool, bool> mixed_product_raw_closed(const FiniteTriring& R,
                                               const Triideal& I, const Triideal& J) {
    auto [e, o] = mixed_raw_sets(R, I, J);
    std::vector<Index> ev(e.begin(), e.end()), ov(o.begin(), o.end());
    return {additively_closed(R.even.add, ev) && e.count(0),
            additively_closed(R.odd.add, ov) && o.count(0)};
}

// ---------------------------------------------------------------------------
// Enumeration: principal ideals closed under pairwise sums. Every ideal of a
// finite ring is a finite sum of principal ideals, so the closure is the
// whole ideal lattice.

namespace {

std::vector<std::vector<Index>> sum_closure(const Table& add,
                                            std::vector<std::vector<Index>> seed) {
    std::set<std::vector<Index>> all(seed.begin(), seed.end());
    std::vector<std::vector<Index>> work(all.begin(), all.end());
    while (!work.empty()) {
        auto cur = work.back();
        work.pop_back();
        for (const auto& other : std::vector<std::vector<Index>>(all.begin(), all.end())) {
            std::set<Index> gen(cur.begin(), cur.end());
            gen.insert(other.begin(), other.end());
            auto s = additive_span(add, std::move(gen));
            if (all.insert(s).second) work.push_back(s);
        }
    }
    return {all.begin(), all.end()};
}

}  // namespace

std::vector<std::vector<Index>> enumerate_even_ideals(const FiniteTriring& R) {
    std::vector<std::vector<Index>> seed;
    for (Index x = 0; x < R.evenSize(); ++x) {
        std::set<Index> gen;
        for (Index y = 0; y < R.evenSize(); ++y) gen.insert(R.mul0(y, x));
        seed.push_back(additive_span(R.even.add, std::move(gen)));
    }
    return sum_closure(R.even.add, std::move(seed));
}

std::vector<std::vector<Index>> enumerate_sharp_ideals(const FiniteTriring& R) {
    std::vector<std::vector<Index>> seed;
    for (Index x = 0; x < R.oddSize(); ++x) {
        std::set<Index> gen;
        for (Index y = 0; y < R.oddSize(); ++y) gen.insert(R.sharp1(y, x));
        seed.push_back(additive_span(R.odd.add, std::move(gen)));
    }
    return sum_closure(R.odd.add, std::move(seed));
}

std::vector<Triideal> enumerate_triideals(const FiniteTriring& R) {
    auto evens = enumerate_even_ideals(R);
    auto odds = enumerate_sharp_ideals(R);
    std::vector<Triideal> out;
    for (const auto& I0 : evens) {
        for (const auto& I1 : odds) {
            std::set<Index> in1(I1.begin(), I1.end());
            bool ok = true;
            for (Index a : I0) {
                for (Index b = 0; b < R.oddSize() && ok; ++b)
                    if (!in1.count(R.actR(b, a)) || !in1.count(R.actL(a, b))) ok = false;
                if (!ok) break;
            }
            if (ok) out.push_back({I0, I1});
        }
    }
    std::sort(out.begin(), out.end(), [](const Triideal& a, const Triideal& b) {
        return a.even != b.even ? a.even < b.even : a.odd < b.odd;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Primality

PrimalityResult is_prime_by_definition(const FiniteTriring& R, const Triideal& P) {
    if (is_full_ideal(R, P)) return {false, PrimalityWitness{0, 0, 0}};
    auto in0 = [&](Index i) { return ideal_contains(P, i, false); };
    auto in1 = [&](Index i) { return ideal_contains(P, i, true); };

    for (Index x = 0; x < R.evenSize(); ++x)
        for (Index y = 0; y < R.evenSize(); ++y)
            if (in0(R.mul0(x, y)) && !in0(x) && !in0(y))
                return {false, PrimalityWitness{1, x, y}};
    for (Index x = 0; x < R.evenSize(); ++x)
        for (Index y = 0; y < R.oddSize(); ++y)
            if (in1(R.actL(x, y)) && !in0(x) && !in1(y))
                return {false, PrimalityWitness{2, x, y}};
    for (Index x = 0; x < R.oddSize(); ++x)
        for (Index y = 0; y < R.evenSize(); ++y)
            if (in1(R.actR(x, y)) && !in1(x) && !in0(y))
                return {false, PrimalityWitness{3, x, y}};
    for (Index x = 0; x < R.oddSize(); ++x)
        for (Index y = 0; y < R.oddSize(); ++y)
            if (in1(R.sharp1(x, y)) && !in1(x) && !in1(y))
                return {false, PrimalityWitness{4, x, y}};
    return {true, std::nullopt};
}

bool is_prime_by_products(const FiniteTriring& R, const Triideal& P,
                          const std::vector<Triideal>& all) {
    if (is_full_ideal(R, P)) return false;
    for (const auto& I : all)
        for (const auto& J : all) {
            if (!ideal_subset(mixed_product(R, I, J), P)) continue;
            if (!ideal_subset(I, P) && !ideal_subset(J, P)) return false;
        }
    return true;
}

namespace {

bool prime_in_part(const Table& mul, int size, const std::vector<Index>& I) {
    if (static_cast<int>(I.size()) == size) return false;
    auto in = [&](Index i) { return std::binary_search(I.begin(), I.end(), i); };
    for (Index x = 0; x < size; ++x)
        for (Index y = 0; y < size; ++y)
            if (in(mul[x][y]) && !in(x) && !in(y)) return false;
    return true;
}

}  // namespace

bool prime_parity_even(const FiniteTriring& R, const Triideal& P) {
    return static_cast<int>(P.odd.size()) == R.oddSize();
}

bool is_prime_by_components(const FiniteTriring& R, const Triideal& P) {
    if (is_full_ideal(R, P)) return false;
    if (prime_parity_even(R, P))
        return prime_in_part(R.even.mul, R.evenSize(), P.even);

    if (!prime_in_part(R.even.mul, R.evenSize(), P.even)) return false;
    if (!prime_in_part(R.odd.sharp, R.oddSize(), P.odd)) return false;

    // R/P must be torsion-free over R0/P0 from both sides: no coset outside
    // P0 may send a coset outside P into P. Exhaust over coset actions.
    auto in0 = [&](Index i) { return ideal_contains(P, i, false); };
    auto in1 = [&](Index i) { return ideal_contains(P, i, true); };
    for (Index x = 0; x < R.evenSize(); ++x) {
        if (in0(x)) continue;
        for (Index ye = 0; ye < R.evenSize(); ++ye)
            for (Index yo = 0; yo < R.oddSize(); ++yo) {
                if (in0(ye) && in1(yo)) continue;
                bool leftIn = in0(R.mul0(x, ye)) && in1(R.actL(x, yo));
                bool rightIn = in0(R.mul0(ye, x)) && in1(R.actR(yo, x));
                if (leftIn || rightIn) return false;
            }
    }
    return true;
}

PrimeTriideal extend_odd_prime(const FiniteTriring& R, const std::vector<Index>& P1) {
    if (R.oddSize() <= 1)
        throw HypothesisError("extend_odd_prime needs a nonzero odd part");
    if (!prime_in_part(R.odd.sharp, R.oddSize(), P1))
        throw HypothesisError("given odd ideal is not #-prime");
    std::set<Index> in1(P1.begin(), P1.end());

    // Members of Omega: even ideals I0 with R1*I0 inside P1. Closed under
    // sums, so the union of all members spans the unique maximum.
    std::set<Index> gen;
    bool sawMember = false;
    std::vector<std::vector<Index>> members;
    for (const auto& I0 : enumerate_even_ideals(R)) {
        bool ok = true;
        for (Index a : I0) {
            for (Index b = 0; b < R.oddSize() && ok; ++b)
                if (!in1.count(R.actR(b, a))) ok = false;
            if (!ok) break;
        }
        if (ok) {
            members.push_back(I0);
            gen.insert(I0.begin(), I0.end());
            sawMember = true;
        }
    }
    if (!sawMember) throw Error("Omega is empty, zero ideal missing");
    Triideal P{additive_span(R.even.add, std::move(gen)),
               std::vector<Index>(P1.begin(), P1.end())};
    std::sort(P.odd.begin(), P.odd.end());

    // Sum closure of Omega: the spanned maximum must itself be a member.
    for (Index a : P.even)
        for (Index b = 0; b < R.oddSize(); ++b)
            if (!in1.count(R.actR(b, a)))
                throw Error("Omega is not closed under sums");
    for (const auto& m : members)
        if (!std::includes(P.even.begin(), P.even.end(), m.begin(), m.end()))
            throw Error("maximum of Omega does not contain a member");

    PrimalityResult pr = is_prime_by_definition(R, P);
    if (!pr.prime) throw Error("extended ideal failed the primality definition");
    return {P, prime_parity_even(R, P)};
}

// ---------------------------------------------------------------------------
// Trinilpotency and radicals

namespace {

// Least exponent m in [1, size] with x^m landing in `targets`, or 0.
int least_power_in(const Table& mul, int size, Index one, Index x,
                   const std::set<Index>& targets) {
    Index p = one;
    for (int m = 1; m <= size; ++m) {
        p = mul[p][x];
        if (targets.count(p)) return m;
    }
    return 0;
}

}  // namespace

std::optional<NilWitness> is_trinilpotent(const FiniteTriring& R, TriringElement x) {
    check_element(R, x);
    const std::set<Index> zero{0};
    int m = least_power_in(R.even.mul, R.evenSize(), R.even.one, x.e, zero);
    if (m == 0) return std::nullopt;
    int n = least_power_in(R.odd.sharp, R.oddSize(), R.odd.localOne, x.o, zero);
    if (n == 0) return std::nullopt;
    return NilWitness{m, n};
}

std::vector<Index> part_nilradical(const Table& mul, int size, Index one) {
    std::vector<Index> out;
    const std::set<Index> zero{0};
    for (Index x = 0; x < size; ++x)
        if (least_power_in(mul, size, one, x, zero) > 0) out.push_back(x);
    return out;
}

Triideal trinilradical(const FiniteTriring& R) {
    return {part_nilradical(R.even.mul, R.evenSize(), R.even.one),
            part_nilradical(R.odd.sharp, R.oddSize(), R.odd.localOne)};
}

Triideal radical(const FiniteTriring& R, const Triideal& I) {
    std::set<Index> t0(I.even.begin(), I.even.end());
    std::set<Index> t1(I.odd.begin(), I.odd.end());
    Triideal out;
    for (Index x = 0; x < R.evenSize(); ++x)
        if (least_power_in(R.even.mul, R.evenSize(), R.even.one, x, t0) > 0)
            out.even.push_back(x);
    for (Index a = 0; a < R.oddSize(); ++a)
        if (least_power_in(R.odd.sharp, R.oddSize(), R.odd.localOne, a, t1) > 0)
            out.odd.push_back(a);
    return out;
}

std::vector<TriringElement> ordinary_nilradical(const FiniteTriring& R) {
    std::vector<TriringElement> out;
    const long long bound = R.carrierSize();
    for (Index e = 0; e < R.evenSize(); ++e)
        for (Index o = 0; o < R.oddSize(); ++o) {
            TriringElement x{e, o};
            TriringElement p = elem_one(R);
            for (long long m = 1; m <= bound; ++m) {
                p = mul(R, p, x);
                if (p == elem_zero()) {
                    out.push_back(x);
                    break;
                }
            }
        }
    return out;
}

}  // namespace triring
