#pragma once

#include <optional>
#include <utility>

#include "triring/core.hpp"

// Triideal lattice operations, the three primality criteria, trinilpotency
// and radicals.

namespace triring {

// Principal triideals R*x0 = R0x0 (+) R1x0 and 0 (+) R1#x1. Both sets are
// already additively closed; that is asserted during construction.
Triideal principal_even(const FiniteTriring& R, Index x0);
Triideal principal_odd(const FiniteTriring& R, Index x1);

Triideal ideal_sum(const FiniteTriring& R, const Triideal& I, const Triideal& J);
Triideal ideal_intersect(const FiniteTriring& R, const Triideal& I, const Triideal& J);

// Mixed product: even part spans I0*J0, odd part spans I1#J1.
Triideal mixed_product(const FiniteTriring& R, const Triideal& I, const Triideal& J);
// Whether the raw product sets were already additively closed (even, odd).
std::pair<bool, bool> mixed_product_raw_closed(const FiniteTriring& R,
                                               const Triideal& I, const Triideal& J);

// Ideals of the even ring and #-ideals of the odd ring, each computed as the
// sum-closure of the principal ideals. Sorted canonically.
std::vector<std::vector<Index>> enumerate_even_ideals(const FiniteTriring& R);
std::vector<std::vector<Index>> enumerate_sharp_ideals(const FiniteTriring& R);

// Complete duplicate-free triideal list: pairs (even ideal, #-ideal) with
// R1*I0 + I0*R1 inside I1, ordered lexicographically.
std::vector<Triideal> enumerate_triideals(const FiniteTriring& R);

// ---------------------------------------------------------------------------
// Primality

struct PrimalityWitness {
    int clause = 0;  // 1: x0y0, 2: x0y1, 3: x1y0, 4: x1#y1, 0: not proper
    Index x = 0, y = 0;
};

struct PrimalityResult {
    bool prime = false;
    std::optional<PrimalityWitness> witness;  // set when not prime
};

// The four defining implications, checked over all element pairs; the
// lexicographically least violating pair is reported.
PrimalityResult is_prime_by_definition(const FiniteTriring& R, const Triideal& P);

// Mixed-product criterion over a complete triideal list.
bool is_prime_by_products(const FiniteTriring& R, const Triideal& P,
                          const std::vector<Triideal>& all);

// Parity-split criterion. Even case: P1 = R1 and P0 prime in the even ring.
// Odd case: P0 prime, P1 #-prime, and every nonzero coset of R0/P0 acts
// injectively on R/P from both sides.
bool is_prime_by_components(const FiniteTriring& R, const Triideal& P);

struct PrimeTriideal {
    Triideal ideal;
    bool even = false;  // P contains all of R1
};

bool prime_parity_even(const FiniteTriring& R, const Triideal& P);

// Given a #-prime ideal P1 of the odd part, returns the prime triideal
// P0 (+) P1 where P0 is the maximum of { I0 : R1*I0 inside P1 } (the family
// is closed under sums, so the maximum exists and is unique).
PrimeTriideal extend_odd_prime(const FiniteTriring& R, const std::vector<Index>& P1);

// ---------------------------------------------------------------------------
// Trinilpotency and radicals

struct NilWitness {
    int m = 0;  // least m >= 1 with x0^m = 0
    int n = 0;  // least n >= 1 with x1^#n = 0
};

std::optional<NilWitness> is_trinilpotent(const FiniteTriring& R, TriringElement x);

Triideal trinilradical(const FiniteTriring& R);

// Elements whose even powers and local powers eventually land in I.
Triideal radical(const FiniteTriring& R, const Triideal& I);

// Ordinary nilradical of the full ring under the trivial-extension product,
// computed by direct power iteration (independent of trinilradical).
std::vector<TriringElement> ordinary_nilradical(const FiniteTriring& R);

// Nilpotent elements of one part table (helper shared with spectrum checks).
std::vector<Index> part_nilradical(const Table& mul, int size, Index one);

}  // namespace triring
