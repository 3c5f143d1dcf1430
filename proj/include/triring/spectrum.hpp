#pragma once

#include <string>

#include "triring/ideals.hpp"

// The trispectrum and its extended Zariski topology: vanishing sets, basic
// opens, irreducibility, quasicompactness subcovers and the specialization
// order.

namespace triring {

struct Trispectrum {
    std::vector<PrimeTriideal> points;   // even points first, then lex order
    std::vector<int> evenPoints;         // indices into points
    std::vector<int> oddPoints;
};

Trispectrum trispectrum(const FiniteTriring& R);

// Point sets are sorted index lists into Trispectrum::points.
using PointSet = std::vector<int>;

struct ClosedSet {
    PointSet points;
    Triideal generator;  // provenance; equality of closed sets is by points
};

struct OpenSet {
    PointSet points;
};

// Parity-tagged generator of a basic open.
struct BasicGen {
    bool odd = false;
    Index x = 0;
    auto operator<=>(const BasicGen&) const = default;
};

struct BasicOpen {
    BasicGen gen;
    PointSet points;
};

ClosedSet vanishing_set(const FiniteTriring& R, const Trispectrum& sp, const Triideal& I);
OpenSet open_of_ideal(const FiniteTriring& R, const Trispectrum& sp, const Triideal& I);
BasicOpen basic_open(const FiniteTriring& R, const Trispectrum& sp, BasicGen g);

// The triideal a basic generator spans (R*x0 or R1#x1).
Triideal gen_ideal(const FiniteTriring& R, BasicGen g);

PointSet full_point_set(const Trispectrum& sp);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersect(const PointSet& a, const PointSet& b);
bool set_subset(const PointSet& a, const PointSet& b);

// All closed point sets of the topology (canonicalized by point set; one
// representative generator kept as provenance).
std::vector<ClosedSet> closed_sets(const FiniteTriring& R, const Trispectrum& sp,
                                   const std::vector<Triideal>& triideals);

// Checks both the topological criterion (no decomposition into two proper
// closed subsets) and the algebraic one (the intersection of the points is a
// prime triideal); throws if they disagree. Empty set counts as reducible.
bool is_irreducible(const FiniteTriring& R, const Trispectrum& sp,
                    const std::vector<ClosedSet>& closed, const PointSet& C);

// Minimal-cardinality subcover with lexicographic tie-breaking. target is
// "full" or "odd". Throws CoverError (with an uncovered point) when the
// family does not cover the target.
std::vector<int> finite_subcover(const FiniteTriring& R, const Trispectrum& sp,
                                 const std::string& target,
                                 const std::vector<Triideal>& cover);

// Specialization edges P -> Q whenever Q properly contains P.
std::vector<std::pair<int, int>> specialization_order(const Trispectrum& sp);

std::string specialization_dot(const FiniteTriring& R, const Trispectrum& sp);

}  // namespace triring
