#pragma once

#include "triring/spectrum.hpp"

// Localization by fractions: multiplicative subsets, the equivalence on
// fraction pairs, the localized triring with its canonical homomorphism, the
// universal property, and the three standard localization types (at an odd
// prime's complement, at an even element, at a non-trinilpotent odd element).

namespace triring {

struct MultiplicativeSubset {
    std::vector<Index> even;  // sorted; never contains 0, always contains 1
    std::vector<Index> odd;   // sorted; never contains 0, always contains 1#
};

ValidationReport validate_multiplicative_subset(const FiniteTriring& R,
                                                const MultiplicativeSubset& S);

// One part of the fraction construction: the ordinary localization of a
// commutative part table at a multiplicative subset of it. Keeps full
// class bookkeeping so callers can reason about representatives.
struct LocalizedPart {
    std::vector<Index> subset;            // the inverted elements, sorted
    int classes = 0;
    std::vector<std::vector<Index>> classOf;  // [element][subsetPos] -> class
    std::vector<std::pair<Index, Index>> rep;  // canonical (numerator, denominator)
    Table add, mul;                       // class arithmetic
    Index one = 0;                        // class of (identity, identity)
    std::vector<Index> canonical;         // element -> class of (element / 1)
};

LocalizedPart localize_part(const Table& add, const Table& mul, int size, Index one,
                            const std::vector<Index>& subset);

struct LocalizedTriring {
    FiniteTriring ring;
    MultiplicativeSubset subset;
    LocalizedPart evenPart;
    LocalizedPart oddPart;
    TriringHomomorphism canonicalHom;
    bool canonicalBijective = false;

    int classCount() const { return evenPart.classes * oddPart.classes; }
};

// Fraction localization at a validated multiplicative subset. Construction
// verifies that the relation is an equivalence, that +, * and # descend to
// classes independently of representatives, that the induced action is
// well-defined, that the result passes validate_triring and that the
// canonical map is a homomorphism. Any failure is surfaced as an Error.
LocalizedTriring localize(const FiniteTriring& R, const MultiplicativeSubset& S);

// Type 1: at the complement of a triideal P with P1 != R1. For non-prime P
// the complement may fail the multiplicative-subset clauses; the validator
// decides per instance and a failure is thrown as HypothesisError.
LocalizedTriring localize_at_prime(const FiniteTriring& R, const Triideal& P);

// Type 2: at an even element f0, with the odd companion set
// T1(f0) = { z1 f0^n : z1 outside every odd prime of D#(f0) }.
// Throws EmptyOddLocusError when D#(f0) has no odd point.
struct TypeTwoLocalization {
    Index f0 = 0;
    LocalizedTriring loc;
    std::vector<int> evenExpOf;                    // subset pos -> minimal n with s = f0^n
    std::vector<std::pair<Index, int>> oddDecompOf;  // subset pos -> minimal (z1, m)
};

TypeTwoLocalization localize_at_even(const FiniteTriring& R, const Trispectrum& sp,
                                     Index f0);

// Type 3: at a non-trinilpotent odd element f1 (S0 = {1}, S1 = local powers).
struct TypeThreeLocalization {
    Index f1 = 0;
    LocalizedTriring loc;
    std::vector<int> oddExpOf;  // subset pos -> minimal m with s = f1^#m
};

TypeThreeLocalization localize_at_odd(const FiniteTriring& R, Index f1);

// Universal property: given psi : R -> T inverting every member of S, the
// unique factoring homomorphism through the localization.
struct FactorResult {
    TriringHomomorphism hom;
    bool uniquenessExhaustive = false;  // verified by full homomorphism search
    int candidateCount = 1;             // factoring homomorphisms found (exhaustive mode)
};

FactorResult factor_through(const LocalizedTriring& L, const FiniteTriring& R,
                            const FiniteTriring& T, const TriringHomomorphism& psi,
                            std::size_t exhaustiveLimit = 32);

// Units of one part table (elements with a multiplicative inverse).
std::vector<Index> part_units(const Table& mul, int size, Index one);

}  // namespace triring
