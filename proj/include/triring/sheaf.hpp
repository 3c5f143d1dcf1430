#pragma once

#include <map>
#include <memory>

#include "triring/localization.hpp"

// Section spaces on basic opens, restriction maps realized through explicit
// exponent/cofactor witnesses, inverse limits over the basic-open order, and
// exhaustive presheaf/sheaf axiom verification.

namespace triring {

enum class SectionCase { Zero, EvenNoOdd, EvenWithOdd, Odd };

// The sections over one basic open D#(gen), packaged as a triring:
//   Zero        - one-element carrier (generator trinilpotent, empty open)
//   EvenNoOdd   - pairs ((R0)_f0, R0), a zero-odd-part triring
//   EvenWithOdd - pairs (R#_f0, R#_{1#f0}) with componentwise operations
//   Odd         - the Type-3 localization R#_f1
struct SectionSpace {
    BasicGen gen;
    SectionCase tag = SectionCase::Zero;
    PointSet points;
    FiniteTriring ring;

    std::shared_ptr<TypeTwoLocalization> loc2;   // EvenWithOdd
    std::shared_ptr<TypeThreeLocalization> loc3; // EvenWithOdd (at 1#f0) / Odd (at f1)
    std::shared_ptr<LocalizedPart> evenLoc;      // EvenNoOdd: (R0)_f0
    std::vector<int> evenLocExpOf;               // EvenNoOdd: subset pos -> exponent

    // pair codecs (EvenWithOdd / EvenNoOdd carriers are products)
    int secondEven = 1, secondOdd = 1;
    Index encodeEven(Index a, Index b) const { return a * secondEven + b; }
    Index encodeOdd(Index a, Index b) const { return a * secondOdd + b; }
    std::pair<Index, Index> decodeEven(Index e) const { return {e / secondEven, e % secondEven}; }
    std::pair<Index, Index> decodeOdd(Index o) const { return {o / secondOdd, o % secondOdd}; }
};

struct RestrictionWitness {
    int exponent = 1;   // u, v or theta
    Index cofactor = 0; // r0, r1 or t1
};

struct SheafContext {
    const FiniteTriring* R = nullptr;
    Trispectrum sp;
    Triideal nil;
    std::vector<Triideal> triideals;
    std::vector<PointSet> opens;  // every open point set of the topology

    std::map<BasicGen, std::shared_ptr<SectionSpace>> spaceCache;
    std::map<std::pair<BasicGen, BasicGen>, std::shared_ptr<TriringHomomorphism>> mapCache;
};

SheafContext make_sheaf_context(const FiniteTriring& R);

std::vector<BasicGen> all_gens(const FiniteTriring& R);

const SectionSpace& section_space(SheafContext& ctx, BasicGen g);

// Minimal witness (least exponent, then least cofactor) realizing the
// containment D#(g) inside D#(f). Throws HypothesisError when the
// containment fails, and for the odd-over-even case which needs no witness.
RestrictionWitness find_witness(SheafContext& ctx, BasicGen f, BasicGen g);
std::vector<RestrictionWitness> all_witnesses(SheafContext& ctx, BasicGen f, BasicGen g);

// The restriction map between section spaces, verified to be a triring
// homomorphism and independent of both the witness and the representative
// decompositions. Cached per ordered pair.
const TriringHomomorphism& restriction(SheafContext& ctx, BasicGen f, BasicGen g);

// ---------------------------------------------------------------------------
// Inverse limits over the basic opens inside an open set

struct InverseLimit {
    PointSet open;
    std::vector<BasicGen> gens;                 // canonical order
    std::vector<std::vector<Index>> evenTuples; // even slot values per member
    std::vector<std::vector<Index>> oddTuples;
    FiniteTriring ring;

    int slotOf(BasicGen g) const;
    TriringHomomorphism projection(const SheafContext& ctx, int slot) const;
};

InverseLimit inverse_limit(SheafContext& ctx, const PointSet& U);

// Induced map between limits of nested opens (subtuple projection).
TriringHomomorphism open_restriction(SheafContext& ctx, const InverseLimit& U,
                                     const InverseLimit& V);

// ---------------------------------------------------------------------------
// Axiom suites

ValidationReport verify_presheaf_axioms(SheafContext& ctx);

struct CoverVerdict {
    BasicGen target;
    std::vector<BasicGen> cover;
    bool identityAxiom = true;
    bool gluingAxiom = true;
    std::string counterexample;
};

struct SheafReport {
    std::vector<CoverVerdict> verdicts;
    bool allPass() const;
};

// Both sheaf axioms for one explicit basic cover of D#(f).
CoverVerdict check_cover(SheafContext& ctx, BasicGen f, const std::vector<BasicGen>& cover);

// All basic opens, all irredundant basic covers of size <= maxCoverSize.
SheafReport verify_sheaf_axioms(SheafContext& ctx, int maxCoverSize = 4);

// Canonical generator for the intersection of two basic opens
// (product of the generators, parity-typed).
BasicGen gen_product(const FiniteTriring& R, BasicGen a, BasicGen b);

}  // namespace triring
