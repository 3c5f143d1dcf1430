#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Table-driven finite trirings: a carrier R = R0 (+) R1 where R0 is a finite
// commutative ring, R1 carries its own commutative "local" product # besides
// the R0-bimodule action, and the full ring product is the trivial-extension
// product with R1*R1 = 0. Elements are integer indices into the part
// carriers; index 0 is always the additive zero of its part.

namespace triring {

using Index = int;
using Table = std::vector<std::vector<Index>>;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally broken input tables (non-square, index out of range, ...).
class MalformedTableError : public Error {
public:
    using Error::Error;
};

// An element index that does not belong to the carrier it is used with.
class CrossRingError : public Error {
public:
    using Error::Error;
};

// An even element passed where an odd one is required, or vice versa.
class ParityError : public Error {
public:
    using Error::Error;
};

// Operation needs a finite table backend (rational triquaternions rejected).
class BackendError : public Error {
public:
    using Error::Error;
};

// A stated hypothesis of the operation does not hold for the given input.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Type-2 localization: D#(f0) contains no odd spectrum point.
class EmptyOddLocusError : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

// Type-3 localization: the chosen odd element is #-nilpotent.
class TrinilpotentError : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

// A claimed open cover fails to cover its target.
class CoverError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Validation reports

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;  // empty when pass
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;

    bool ok() const;
    const AxiomCheck* first_failure() const;
    std::string summary() const;
};

// ---------------------------------------------------------------------------
// Carrier pieces

struct FiniteCommutativeRing {
    int size = 0;
    Table add;   // size x size
    Table mul;   // size x size
    Index one = 0;  // additive zero is fixed at index 0
};

struct OddPartRing {
    int size = 0;
    Table add;    // size x size
    Table sharp;  // size x size, the local product
    Index localOne = 0;
};

struct BimoduleAction {
    Table left;   // evenSize x oddSize:  x0 . a1
    Table right;  // oddSize x evenSize:  a1 . x0
};

struct FiniteTriring {
    std::string name;
    FiniteCommutativeRing even;
    OddPartRing odd;
    BimoduleAction action;

    // additive inverse lookup, -1 where missing (broken group axioms)
    std::vector<Index> evenNeg;
    std::vector<Index> oddNeg;

    int evenSize() const { return even.size; }
    int oddSize() const { return odd.size; }
    long long carrierSize() const { return 1LL * even.size * odd.size; }

    Index add0(Index a, Index b) const { return even.add[a][b]; }
    Index mul0(Index a, Index b) const { return even.mul[a][b]; }
    Index neg0(Index a) const { return evenNeg[a]; }
    Index sub0(Index a, Index b) const { return add0(a, neg0(b)); }
    Index add1(Index a, Index b) const { return odd.add[a][b]; }
    Index sharp1(Index a, Index b) const { return odd.sharp[a][b]; }
    Index neg1(Index a) const { return oddNeg[a]; }
    Index sub1(Index a, Index b) const { return add1(a, neg1(b)); }
    Index actL(Index x0, Index a1) const { return action.left[x0][a1]; }
    Index actR(Index a1, Index x0) const { return action.right[a1][x0]; }

    Index pow0(Index x, int n) const;       // x^n in the even ring, n >= 0
    Index powSharp(Index a, int n) const;   // local nth power, a^#0 = 1#
};

// Builds the carrier and structural caches. Throws MalformedTableError when
// tables are not well-formed; does NOT check the triring axioms (see
// validate_triring), so deliberately broken instances can be constructed.
FiniteTriring make_triring(std::string name, FiniteCommutativeRing even,
                           OddPartRing odd, BimoduleAction action);

// Full axiom validation, layered: group laws, ring laws, bimodule laws,
// triassociativity, odd commutation R1*x0 = x0*R1. Only the first failing
// layer is reported in detail since later layers presuppose earlier ones.
ValidationReport validate_triring(const FiniteTriring& R);

// ---------------------------------------------------------------------------
// Elements of the full ring R = R0 (+) R1

struct TriringElement {
    Index e = 0;
    Index o = 0;
    bool operator==(const TriringElement&) const = default;
};

TriringElement elem_zero();
TriringElement elem_one(const FiniteTriring& R);
TriringElement elem_local_one(const FiniteTriring& R);

void check_element(const FiniteTriring& R, TriringElement x);

TriringElement add(const FiniteTriring& R, TriringElement x, TriringElement y);
TriringElement neg(const FiniteTriring& R, TriringElement x);
// Trivial-extension product: (x0,x1)(y0,y1) = (x0y0, x0.y1 + x1.y0).
TriringElement mul(const FiniteTriring& R, TriringElement x, TriringElement y);
// Local product of two purely odd elements; ParityError on an even part.
TriringElement sharp(const FiniteTriring& R, TriringElement x, TriringElement y);
TriringElement power(const FiniteTriring& R, TriringElement x, int n);

// ---------------------------------------------------------------------------
// Triideals (carrier split representation; lattice operations live in
// ideals.hpp, the type and its validator are shared by quotients/kernels)

struct Triideal {
    std::vector<Index> even;  // sorted, unique
    std::vector<Index> odd;   // sorted, unique
    bool operator==(const Triideal&) const = default;
};

Triideal zero_ideal();
Triideal full_ideal(const FiniteTriring& R);
bool ideal_contains(const Triideal& I, Index idx, bool odd);
bool ideal_subset(const Triideal& A, const Triideal& B);
bool is_full_ideal(const FiniteTriring& R, const Triideal& I);

ValidationReport validate_triideal(const FiniteTriring& R, const Triideal& I);
bool is_triideal(const FiniteTriring& R, const Triideal& I);

// ---------------------------------------------------------------------------
// Homomorphisms

struct TriringHomomorphism {
    std::vector<Index> evenMap;  // source even index -> target even index
    std::vector<Index> oddMap;   // source odd index -> target odd index
};

TriringHomomorphism identity_hom(const FiniteTriring& R);
TriringElement apply(const TriringHomomorphism& h, TriringElement x);

ValidationReport validate_homomorphism(const FiniteTriring& src,
                                       const FiniteTriring& tgt,
                                       const TriringHomomorphism& h);
bool is_homomorphism(const FiniteTriring& src, const FiniteTriring& tgt,
                     const TriringHomomorphism& h);
bool is_surjective(const FiniteTriring& tgt, const TriringHomomorphism& h);
bool is_bijective(const FiniteTriring& src, const FiniteTriring& tgt,
                  const TriringHomomorphism& h);
TriringHomomorphism compose(const TriringHomomorphism& g,
                            const TriringHomomorphism& f);  // g after f

Triideal kernel(const FiniteTriring& src, const TriringHomomorphism& h);

// Subtriring descriptor (images of homomorphisms).
struct Subtriring {
    std::vector<Index> even;
    std::vector<Index> odd;
    bool operator==(const Subtriring&) const = default;
};

Subtriring image(const FiniteTriring& src, const FiniteTriring& tgt,
                 const TriringHomomorphism& h);
ValidationReport validate_subtriring(const FiniteTriring& R, const Subtriring& S);

// Surjection correspondence: ideals of the target vs ideals of the source
// containing the kernel.
Triideal pushforward_triideal(const FiniteTriring& src, const FiniteTriring& tgt,
                              const TriringHomomorphism& h, const Triideal& I);
Triideal pullback_triideal(const FiniteTriring& src, const FiniteTriring& tgt,
                           const TriringHomomorphism& h, const Triideal& Ibar);

// ---------------------------------------------------------------------------
// Quotients

struct QuotientTriring {
    FiniteTriring ring;
    TriringHomomorphism natural;  // R -> R/I, kernel I
};

// Quotient by a validated triideal. The result passes validate_triring and
// kernel(natural) == I; both are asserted during construction.
QuotientTriring quotient(const FiniteTriring& R, const Triideal& I);

// ---------------------------------------------------------------------------
// Exhaustive homomorphism search (backtracking with additive/multiplicative
// closure propagation). Used for universal-property uniqueness checks.
std::vector<TriringHomomorphism> enumerate_homomorphisms(
    const FiniteTriring& src, const FiniteTriring& tgt, std::size_t limit = 0);

}  // namespace triring
