#include "triring/localization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace triring {

namespace {

bool in_sorted(const std::vector<Index>& v, Index x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::string idx_wit(const char* k, Index a, const char* k2, Index b) {
    return std::string(k) + "=" + std::to_string(a) + " " + k2 + "=" + std::to_string(b);
}

}  // namespace

ValidationReport validate_multiplicative_subset(const FiniteTriring& R,
                                                const MultiplicativeSubset& S) {
    for (Index s : S.even)
        if (s < 0 || s >= R.evenSize()) throw CrossRingError("even subset index out of range");
    for (Index s : S.odd)
        if (s < 0 || s >= R.oddSize()) throw CrossRingError("odd subset index out of range");

    ValidationReport rep;
    {
        AxiomCheck c{"avoids-zero"};
        if (in_sorted(S.even, 0) || in_sorted(S.odd, 0)) {
            c.pass = false;
            c.witness = "contains the zero element";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"contains-one"};
        if (!in_sorted(S.even, R.even.one)) {
            c.pass = false;
            c.witness = "1 missing";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"contains-local-one"};
        if (!in_sorted(S.odd, R.odd.localOne)) {
            c.pass = false;
            c.witness = "local identity missing";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"closed-even-even"};
        for (Index s : S.even)
            for (Index t : S.even)
                if (!in_sorted(S.even, R.mul0(s, t))) {
                    c.pass = false;
                    c.witness = idx_wit("s0", s, "t0", t);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"closed-even-odd"};
        for (Index s : S.even)
            for (Index t : S.odd)
                if (!in_sorted(S.odd, R.actL(s, t))) {
                    c.pass = false;
                    c.witness = idx_wit("s0", s, "s1", t);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"closed-odd-even"};
        for (Index s : S.odd)
            for (Index t : S.even)
                if (!in_sorted(S.odd, R.actR(s, t))) {
                    c.pass = false;
                    c.witness = idx_wit("s1", s, "s0", t);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"closed-odd-sharp"};
        for (Index s : S.odd)
            for (Index t : S.odd)
                if (!in_sorted(S.odd, R.sharp1(s, t))) {
                    c.pass = false;
                    c.witness = idx_wit("s1", s, "t1", t);
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"odd-commutation"};
        for (Index s : S.even) {
            std::set<Index> lhs, rhs;
            for (Index t : S.odd) {
                lhs.insert(R.actL(s, t));
                rhs.insert(R.actR(t, s));
            }
            if (lhs != rhs) {
                c.pass = false;
                c.witness = "s0=" + std::to_string(s);
            }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// One-part fraction construction

LocalizedPart localize_part(const Table& add, const Table& mul, int size, Index one,
                            const std::vector<Index>& subset) {
    LocalizedPart L;
    L.subset = subset;
    const int ns = static_cast<int>(subset.size());
    const int raw = size * ns;
    if (ns == 0) throw HypothesisError("empty multiplicative subset");

    std::vector<Index> neg(size, -1);
    for (Index a = 0; a < size; ++a)
        for (Index b = 0; b < size; ++b)
            if (add[a][b] == 0) neg[a] = b;

    auto pairAt = [&](int r) { return std::pair<Index, Index>{r / ns, subset[r % ns]}; };

    // (a,s) ~ (b,t)  iff  u(at - bs) = 0 for some u in the subset.
    std::vector<char> rel(static_cast<std::size_t>(raw) * raw, 0);
    auto related = [&](int p, int q) {
        auto [a, s] = pairAt(p);
        auto [b, t] = pairAt(q);
        Index diff = add[mul[a][t]][neg[mul[b][s]]];
        for (Index u : subset)
            if (mul[u][diff] == 0) return true;
        return false;
    };
    for (int p = 0; p < raw; ++p)
        for (int q = 0; q < raw; ++q) rel[static_cast<std::size_t>(p) * raw + q] = related(p, q);

    // Equivalence verification: reflexive, symmetric, and components are
    // cliques (which together give transitivity).
    for (int p = 0; p < raw; ++p)
        if (!rel[static_cast<std::size_t>(p) * raw + p])
            throw Error("fraction relation is not reflexive");
    for (int p = 0; p < raw; ++p)
        for (int q = 0; q < raw; ++q)
            if (rel[static_cast<std::size_t>(p) * raw + q] !=
                rel[static_cast<std::size_t>(q) * raw + p])
                throw Error("fraction relation is not symmetric");

    std::vector<Index> cls(raw, -1);
    int classes = 0;
    for (int p = 0; p < raw; ++p) {
        if (cls[p] != -1) continue;
        int id = classes++;
        // BFS over the relation graph
        std::vector<int> work{p};
        cls[p] = id;
        while (!work.empty()) {
            int cur = work.back();
            work.pop_back();
            for (int q = 0; q < raw; ++q)
                if (rel[static_cast<std::size_t>(cur) * raw + q] && cls[q] == -1) {
                    cls[q] = id;
                    work.push_back(q);
                }
        }
    }
    for (int p = 0; p < raw; ++p)
        for (int q = 0; q < raw; ++q)
            if ((cls[p] == cls[q]) != static_cast<bool>(rel[static_cast<std::size_t>(p) * raw + q]))
                throw Error("fraction relation is not transitive");

    L.classes = classes;
    L.rep.assign(classes, {-1, -1});
    L.classOf.assign(size, std::vector<Index>(ns));
    for (int p = 0; p < raw; ++p) {
        auto [a, s] = pairAt(p);
        L.classOf[a][p % ns] = cls[p];
        if (L.rep[cls[p]].first == -1) L.rep[cls[p]] = {a, s};  // lexicographically least
    }

    auto classOfPair = [&](Index a, Index s) {
        auto it = std::lower_bound(subset.begin(), subset.end(), s);
        if (it == subset.end() || *it != s)
            throw Error("denominator left the multiplicative subset");
        return L.classOf[a][static_cast<int>(it - subset.begin())];
    };

    // Class arithmetic from canonical representatives, then representative
    // independence over every raw pair combination.
    L.add.assign(classes, std::vector<Index>(classes));
    L.mul.assign(classes, std::vector<Index>(classes));
    for (int c = 0; c < classes; ++c)
        for (int d = 0; d < classes; ++d) {
            auto [a, s] = L.rep[c];
            auto [b, t] = L.rep[d];
            L.add[c][d] = classOfPair(add[mul[a][t]][mul[s][b]], mul[s][t]);
            L.mul[c][d] = classOfPair(mul[a][b], mul[s][t]);
        }
    for (int p = 0; p < raw; ++p)
        for (int q = 0; q < raw; ++q) {
            auto [a, s] = pairAt(p);
            auto [b, t] = pairAt(q);
            if (L.add[cls[p]][cls[q]] != classOfPair(add[mul[a][t]][mul[s][b]], mul[s][t]))
                throw Error("fraction addition depends on representatives");
            if (L.mul[cls[p]][cls[q]] != classOfPair(mul[a][b], mul[s][t]))
                throw Error("fraction multiplication depends on representatives");
        }

    L.one = classOfPair(one, one);
    L.canonical.resize(size);
    for (Index a = 0; a < size; ++a) L.canonical[a] = classOfPair(a, one);
    return L;
}

// ---------------------------------------------------------------------------
// Full triring localization

LocalizedTriring localize(const FiniteTriring& R, const MultiplicativeSubset& S) {
    {
        ValidationReport v = validate_multiplicative_subset(R, S);
        if (!v.ok())
            throw HypothesisError("not a multiplicative subset: " +
                                  v.first_failure()->axiom + " [" +
                                  v.first_failure()->witness + "]");
    }
    LocalizedTriring L;
    L.subset = S;
    L.evenPart = localize_part(R.even.add, R.even.mul, R.evenSize(), R.even.one, S.even);
    L.oddPart = localize_part(R.odd.add, R.odd.sharp, R.oddSize(), R.odd.localOne, S.odd);

    const int m0 = L.evenPart.classes, m1 = L.oddPart.classes;
    const int nsE = static_cast<int>(S.even.size());
    const int nsO = static_cast<int>(S.odd.size());

    auto oddClassOfPair = [&](Index a, Index s) {
        auto it = std::lower_bound(S.odd.begin(), S.odd.end(), s);
        if (it == S.odd.end() || *it != s)
            throw Error("action denominator left the odd subset");
        return L.oddPart.classOf[a][static_cast<int>(it - S.odd.begin())];
    };

    // Induced action on fraction classes: (a0/s0).(b1/t1) = a0b1 / s0t1 and
    // (b1/t1).(a0/s0) = b1a0 / t1s0, derived from the mixed-product formula.
    BimoduleAction act;
    act.left.assign(m0, std::vector<Index>(m1));
    act.right.assign(m1, std::vector<Index>(m0));
    for (int c = 0; c < m0; ++c)
        for (int d = 0; d < m1; ++d) {
            auto [a0, s0] = L.evenPart.rep[c];
            auto [b1, t1] = L.oddPart.rep[d];
            act.left[c][d] = oddClassOfPair(R.actL(a0, b1), R.actL(s0, t1));
            act.right[d][c] = oddClassOfPair(R.actR(b1, a0), R.actR(t1, s0));
        }
    // Representative independence of the induced action.
    for (Index a0 = 0; a0 < R.evenSize(); ++a0)
        for (int si = 0; si < nsE; ++si)
            for (Index b1 = 0; b1 < R.oddSize(); ++b1)
                for (int ti = 0; ti < nsO; ++ti) {
                    Index s0 = S.even[si], t1 = S.odd[ti];
                    int c = L.evenPart.classOf[a0][si];
                    int d = L.oddPart.classOf[b1][ti];
                    if (act.left[c][d] != oddClassOfPair(R.actL(a0, b1), R.actL(s0, t1)))
                        throw Error("fraction action depends on representatives");
                    if (act.right[d][c] != oddClassOfPair(R.actR(b1, a0), R.actR(t1, s0)))
                        throw Error("fraction action depends on representatives");
                }

    FiniteCommutativeRing even;
    even.size = m0;
    even.add = L.evenPart.add;
    even.mul = L.evenPart.mul;
    even.one = L.evenPart.one;
    OddPartRing odd;
    odd.size = m1;
    odd.add = L.oddPart.add;
    odd.sharp = L.oddPart.mul;
    odd.localOne = L.oddPart.one;

    L.ring = make_triring(R.name + " localized", std::move(even), std::move(odd),
                          std::move(act));
    if (!validate_triring(L.ring).ok())
        throw Error("localized carrier fails the triring axioms");

    L.canonicalHom.evenMap = L.evenPart.canonical;
    L.canonicalHom.oddMap = L.oddPart.canonical;
    if (!is_homomorphism(R, L.ring, L.canonicalHom))
        throw Error("canonical map into the localization is not a homomorphism");
    L.canonicalBijective = is_bijective(R, L.ring, L.canonicalHom);

    // Every inverted element becomes a unit (universal-property part (i)).
    for (Index s : S.even) {
        Index c = L.evenPart.canonical[s];
        bool inv = false;
        for (int d = 0; d < m0 && !inv; ++d)
            if (L.ring.mul0(c, d) == L.ring.even.one) inv = true;
        if (!inv) throw Error("inverted even element is not a unit in the localization");
    }
    for (Index s : S.odd) {
        Index c = L.oddPart.canonical[s];
        bool inv = false;
        for (int d = 0; d < m1 && !inv; ++d)
            if (L.ring.sharp1(c, d) == L.ring.odd.localOne) inv = true;
        if (!inv) throw Error("inverted odd element is not sharp-invertible in the localization");
    }
    return L;
}

LocalizedTriring localize_at_prime(const FiniteTriring& R, const Triideal& P) {
    if (!is_triideal(R, P)) throw HypothesisError("localize_at_prime needs a triideal");
    if (static_cast<int>(P.odd.size()) == R.oddSize())
        throw HypothesisError("no localization at a triideal containing the whole odd part");
    MultiplicativeSubset S;
    for (Index a = 0; a < R.evenSize(); ++a)
        if (!ideal_contains(P, a, false)) S.even.push_back(a);
    for (Index a = 0; a < R.oddSize(); ++a)
        if (!ideal_contains(P, a, true)) S.odd.push_back(a);
    return localize(R, S);
}

TypeTwoLocalization localize_at_even(const FiniteTriring& R, const Trispectrum& sp,
                                     Index f0) {
    if (f0 < 0 || f0 >= R.evenSize()) throw ParityError("localize_at_even needs an even index");
    BasicOpen D = basic_open(R, sp, {false, f0});
    std::vector<int> oddPts = set_intersect(D.points, sp.oddPoints);
    if (oddPts.empty())
        throw EmptyOddLocusError("D#(f0) meets no odd spectrum point");

    const int bound = R.evenSize();
    TypeTwoLocalization T;
    T.f0 = f0;

    // T0: distinct powers of f0, with the least exponent realizing each.
    std::map<Index, int> evenExp;
    {
        Index p = R.even.one;
        evenExp[p] = 0;
        for (int n = 1; n <= bound; ++n) {
            p = R.mul0(p, f0);
            evenExp.emplace(p, n);
        }
    }
    // Odd companions: z1 outside every odd prime of D#(f0), times powers of f0.
    std::vector<Index> zs;
    for (Index z = 0; z < R.oddSize(); ++z) {
        bool ok = true;
        for (int pi : oddPts)
            if (ideal_contains(sp.points[pi].ideal, z, true)) ok = false;
        if (ok) zs.push_back(z);
    }
    std::map<Index, std::pair<Index, int>> oddDecomp;  // element -> (z1, m), least m then z1
    for (int m = 0; m <= bound; ++m) {
        Index fp = R.pow0(f0, m);
        for (Index z : zs) oddDecomp.emplace(R.actR(z, fp), std::pair<Index, int>{z, m});
    }

    MultiplicativeSubset S;
    for (auto& [e, n] : evenExp) S.even.push_back(e);
    for (auto& [e, d] : oddDecomp) S.odd.push_back(e);
    T.loc = localize(R, S);
    for (Index s : T.loc.subset.even) T.evenExpOf.push_back(evenExp.at(s));
    for (Index s : T.loc.subset.odd) T.oddDecompOf.push_back(oddDecomp.at(s));
    return T;
}

TypeThreeLocalization localize_at_odd(const FiniteTriring& R, Index f1) {
    if (f1 < 0 || f1 >= R.oddSize()) throw ParityError("localize_at_odd needs an odd index");
    if (is_trinilpotent(R, {0, f1}))
        throw TrinilpotentError("no localization at a trinilpotent odd element");

    const int bound = R.oddSize();
    std::map<Index, int> oddExp;
    {
        Index p = R.odd.localOne;
        oddExp[p] = 0;
        for (int m = 1; m <= bound; ++m) {
            p = R.sharp1(p, f1);
            oddExp.emplace(p, m);
        }
    }
    MultiplicativeSubset S;
    S.even = {R.even.one};
    for (auto& [e, m] : oddExp) S.odd.push_back(e);

    TypeThreeLocalization T;
    T.f1 = f1;
    T.loc = localize(R, S);
    for (Index s : T.loc.subset.odd) T.oddExpOf.push_back(oddExp.at(s));
    return T;
}

// ---------------------------------------------------------------------------
// Universal property

std::vector<Index> part_units(const Table& mul, int size, Index one) {
    std::vector<Index> units;
    for (Index a = 0; a < size; ++a)
        for (Index b = 0; b < size; ++b)
            if (mul[a][b] == one) {
                units.push_back(a);
                break;
            }
    return units;
}

namespace {

Index part_inverse(const Table& mul, int size, Index one, Index a) {
    for (Index b = 0; b < size; ++b)
        if (mul[a][b] == one) return b;
    return -1;
}

}  // namespace

FactorResult factor_through(const LocalizedTriring& L, const FiniteTriring& R,
                            const FiniteTriring& T, const TriringHomomorphism& psi,
                            std::size_t exhaustiveLimit) {
    if (!is_homomorphism(R, T, psi))
        throw HypothesisError("psi is not a triring homomorphism");
    for (Index s : L.subset.even)
        if (part_inverse(T.even.mul, T.evenSize(), T.even.one, psi.evenMap[s]) < 0)
            throw HypothesisError("psi does not invert even element " + std::to_string(s));
    for (Index s : L.subset.odd)
        if (part_inverse(T.odd.sharp, T.oddSize(), T.odd.localOne, psi.oddMap[s]) < 0)
            throw HypothesisError("psi does not sharp-invert odd element " + std::to_string(s));

    FactorResult out;
    out.hom.evenMap.resize(L.evenPart.classes);
    out.hom.oddMap.resize(L.oddPart.classes);
    for (int c = 0; c < L.evenPart.classes; ++c) {
        auto [a, s] = L.evenPart.rep[c];
        Index inv = part_inverse(T.even.mul, T.evenSize(), T.even.one, psi.evenMap[s]);
        out.hom.evenMap[c] = T.mul0(psi.evenMap[a], inv);
    }
    for (int c = 0; c < L.oddPart.classes; ++c) {
        auto [a, s] = L.oddPart.rep[c];
        Index inv = part_inverse(T.odd.sharp, T.oddSize(), T.odd.localOne, psi.oddMap[s]);
        out.hom.oddMap[c] = T.sharp1(psi.oddMap[a], inv);
    }

    // Well-defined on every representative, a homomorphism, and a factoring.
    for (Index a = 0; a < R.evenSize(); ++a)
        for (std::size_t si = 0; si < L.subset.even.size(); ++si) {
            Index s = L.subset.even[si];
            Index inv = part_inverse(T.even.mul, T.evenSize(), T.even.one, psi.evenMap[s]);
            if (out.hom.evenMap[L.evenPart.classOf[a][si]] != T.mul0(psi.evenMap[a], inv))
                throw Error("factoring map depends on representatives");
        }
    for (Index a = 0; a < R.oddSize(); ++a)
        for (std::size_t si = 0; si < L.subset.odd.size(); ++si) {
            Index s = L.subset.odd[si];
            Index inv = part_inverse(T.odd.sharp, T.oddSize(), T.odd.localOne, psi.oddMap[s]);
            if (out.hom.oddMap[L.oddPart.classOf[a][si]] != T.sharp1(psi.oddMap[a], inv))
                throw Error("factoring map depends on representatives");
        }
    if (!is_homomorphism(L.ring, T, out.hom))
        throw Error("factoring map is not a homomorphism");
    {
        TriringHomomorphism round = compose(out.hom, L.canonicalHom);
        if (round.evenMap != psi.evenMap || round.oddMap != psi.oddMap)
            throw Error("factoring map does not reproduce psi");
    }

    // Uniqueness: exhaustive on small instances, by generation otherwise
    // (every class is psi(a) psi(s)^{-1}, both forced by the factoring identity).
    if (L.ring.carrierSize() <= static_cast<long long>(exhaustiveLimit) &&
        T.carrierSize() <= static_cast<long long>(exhaustiveLimit)) {
        int count = 0;
        for (const auto& h : enumerate_homomorphisms(L.ring, T)) {
            TriringHomomorphism round = compose(h, L.canonicalHom);
            if (round.evenMap == psi.evenMap && round.oddMap == psi.oddMap) {
                ++count;
                if (!(h.evenMap == out.hom.evenMap && h.oddMap == out.hom.oddMap))
                    throw Error("a different factoring homomorphism exists");
            }
        }
        if (count != 1) throw Error("factoring homomorphism is not unique");
        out.uniquenessExhaustive = true;
        out.candidateCount = count;
    }
    return out;
}

}  // namespace triring
