#include "triring/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace triring {

Trispectrum trispectrum(const FiniteTriring& R) {
    Trispectrum sp;
    std::vector<PrimeTriideal> evens, odds;
    for (const auto& I : enumerate_triideals(R)) {
        if (!is_prime_by_definition(R, I).prime) continue;
        bool even = prime_parity_even(R, I);
        (even ? evens : odds).push_back({I, even});
    }
    auto lex = [](const PrimeTriideal& a, const PrimeTriideal& b) {
        return a.ideal.even != b.ideal.even ? a.ideal.even < b.ideal.even
                                            : a.ideal.odd < b.ideal.odd;
    };
    std::sort(evens.begin(), evens.end(), lex);
    std::sort(odds.begin(), odds.end(), lex);
    for (auto& p : evens) {
        sp.evenPoints.push_back(static_cast<int>(sp.points.size()));
        sp.points.push_back(std::move(p));
    }
    for (auto& p : odds) {
        sp.oddPoints.push_back(static_cast<int>(sp.points.size()));
        sp.points.push_back(std::move(p));
    }
    return sp;
}

ClosedSet vanishing_set(const FiniteTriring& R, const Trispectrum& sp, const Triideal& I) {
    (void)R;
    ClosedSet c;
    c.generator = I;
    for (std::size_t i = 0; i < sp.points.size(); ++i)
        if (ideal_subset(I, sp.points[i].ideal)) c.points.push_back(static_cast<int>(i));
    return c;
}

OpenSet open_of_ideal(const FiniteTriring& R, const Trispectrum& sp, const Triideal& I) {
    ClosedSet v = vanishing_set(R, sp, I);
    OpenSet o;
    for (std::size_t i = 0; i < sp.points.size(); ++i)
        if (!std::binary_search(v.points.begin(), v.points.end(), static_cast<int>(i)))
            o.points.push_back(static_cast<int>(i));
    return o;
}

Triideal gen_ideal(const FiniteTriring& R, BasicGen g) {
    return g.odd ? principal_odd(R, g.x) : principal_even(R, g.x);
}

BasicOpen basic_open(const FiniteTriring& R, const Trispectrum& sp, BasicGen g) {
    return {g, open_of_ideal(R, sp, gen_ideal(R, g)).points};
}

PointSet full_point_set(const Trispectrum& sp) {
    PointSet s(sp.points.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<int>(i);
    return s;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

PointSet set_intersect(const PointSet& a, const PointSet& b) {
    PointSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool set_subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ClosedSet> closed_sets(const FiniteTriring& R, const Trispectrum& sp,
                                   const std::vector<Triideal>& triideals) {
    std::map<PointSet, Triideal> byPoints;
    for (const auto& I : triideals) {
        ClosedSet c = vanishing_set(R, sp, I);
        byPoints.emplace(c.points, c.generator);  // first generator wins
    }
    std::vector<ClosedSet> out;
    for (auto& [pts, gen] : byPoints) out.push_back({pts, gen});
    return out;
}

bool is_irreducible(const FiniteTriring& R, const Trispectrum& sp,
                    const std::vector<ClosedSet>& closed, const PointSet& C) {
    // Topological criterion.
    bool topo;
    if (C.empty()) {
        topo = false;
    } else {
        topo = true;
        for (const auto& A : closed) {
            if (!set_subset(A.points, C) || A.points == C) continue;
            for (const auto& B : closed) {
                if (!set_subset(B.points, C) || B.points == C) continue;
                if (set_union(A.points, B.points) == C) {
                    topo = false;
                    break;
                }
            }
            if (!topo) break;
        }
    }

    // Algebraic criterion: the intersection of the points (the radical of any
    // generating ideal) is a prime triideal. Empty intersection gives the
    // full ideal, which is never prime.
    Triideal meet = full_ideal(R);
    for (int p : C) meet = ideal_intersect(R, meet, sp.points[p].ideal);
    bool alg = !C.empty() && is_prime_by_definition(R, meet).prime;

    // Same criterion through the radical of a generating ideal, for any
    // provenance ideal that cuts out this point set.
    for (const auto& cs : closed) {
        if (cs.points != C) continue;
        bool viaRadical = !C.empty() &&
                          is_prime_by_definition(R, radical(R, cs.generator)).prime;
        if (viaRadical != alg)
            throw Error("radical criterion disagrees with the point intersection");
    }

    if (topo != alg)
        throw Error("irreducibility criteria disagree on a closed set");
    return topo;
}

std::vector<int> finite_subcover(const FiniteTriring& R, const Trispectrum& sp,
                                 const std::string& target,
                                 const std::vector<Triideal>& cover) {
    if (target != "full" && target != "odd")
        throw HypothesisError("subcover target must be 'full' or 'odd'");
    PointSet want = target == "full" ? full_point_set(sp) : sp.oddPoints;

    std::vector<PointSet> opens;
    opens.reserve(cover.size());
    PointSet all;
    for (const auto& I : cover) {
        opens.push_back(open_of_ideal(R, sp, I).points);
        all = set_union(all, opens.back());
    }
    for (int p : want)
        if (!std::binary_search(all.begin(), all.end(), p))
            throw CoverError("family does not cover point " + std::to_string(p));

    // Constructive certificate from the quasicompactness proof: covering the
    // full spectrum forces 1 into the sum of the even parts, covering the odd
    // part forces the local identity into the sum of the odd parts.
    {
        Triideal sum = zero_ideal();
        for (const auto& I : cover) sum = ideal_sum(R, sum, I);
        bool cert = target == "full" ? ideal_contains(sum, R.even.one, false)
                                     : ideal_contains(sum, R.odd.localOne, true);
        if (!cert) throw Error("cover certificate missing from the ideal sum");
    }

    // Minimal-cardinality subfamily, lexicographically first among winners.
    const int n = static_cast<int>(cover.size());
    std::vector<int> best;
    std::vector<int> pick;
    auto covers = [&](const std::vector<int>& sel) {
        PointSet u;
        for (int i : sel) u = set_union(u, opens[i]);
        return set_subset(want, u);
    };
    std::function<bool(int, int)> rec = [&](int start, int need) {
        if (need == 0) return covers(pick);
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            if (rec(i + 1, need - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        pick.clear();
        if (rec(0, k)) {
            best = pick;
            break;
        }
    }
    return best;
}

std::vector<std::pair<int, int>> specialization_order(const Trispectrum& sp) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t p = 0; p < sp.points.size(); ++p)
        for (std::size_t q = 0; q < sp.points.size(); ++q) {
            if (p == q) continue;
            if (ideal_subset(sp.points[p].ideal, sp.points[q].ideal))
                edges.emplace_back(static_cast<int>(p), static_cast<int>(q));
        }
    return edges;
}

namespace {

std::string ideal_label(const Triideal& I) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < I.even.size(); ++i) os << (i ? "," : "") << I.even[i];
    os << "|";
    for (std::size_t i = 0; i < I.odd.size(); ++i) os << (i ? "," : "") << I.odd[i];
    os << ")";
    return os.str();
}

}  // namespace

std::string specialization_dot(const FiniteTriring& R, const Trispectrum& sp) {
    std::ostringstream os;
    os << "digraph trispectrum {\n";
    os << "  label=\"" << R.name << "\";\n";
    for (std::size_t i = 0; i < sp.points.size(); ++i) {
        os << "  p" << i << " [label=\"" << ideal_label(sp.points[i].ideal)
           << "\", shape=" << (sp.points[i].even ? "box" : "ellipse") << "];\n";
    }
    for (auto [p, q] : specialization_order(sp))
        os << "  p" << p << " -> p" << q << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace triring
