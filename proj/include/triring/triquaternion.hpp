#pragma once

#include "triring/core.hpp"
#include "triring/rational.hpp"

// Triquaternions: the 4-dimensional carrier Q = <1, i> (+) <j, k> whose even
// part multiplies like complex numbers, whose odd part is annihilated by the
// ring product, and whose local product on <j, k> is again complex
// multiplication with j as the local identity.
//
// Two backends: exact rational coefficients (element arithmetic and axiom
// checking only; spectrum-level operations reject it with BackendError) and
// coefficient tables over Z/p, which need p prime with p % 4 == 3 so that the
// even part is a field.

namespace triring::tq {

using triring::Rational;

struct ExactTriquaternion {
    Rational a, b, c, d;  // a*1 + b*i + c*j + d*k

    bool operator==(const ExactTriquaternion&) const = default;
    bool isEven() const { return c == 0 && d == 0; }
    bool isOdd() const { return a == 0 && b == 0; }
};

ExactTriquaternion tq_add(const ExactTriquaternion& x, const ExactTriquaternion& y);
ExactTriquaternion tq_neg(const ExactTriquaternion& x);
ExactTriquaternion tq_mul(const ExactTriquaternion& x, const ExactTriquaternion& y);
// Local product; both operands must be odd (ParityError otherwise).
ExactTriquaternion tq_sharp(const ExactTriquaternion& x, const ExactTriquaternion& y);
ExactTriquaternion tq_local_power(const ExactTriquaternion& x, int n);

// Axiom suite for the rational backend: exhaustive over basis products plus
// a small rational coefficient grid for the bilinear laws.
ValidationReport validate_rational_triquaternions();

// Table backend over Z/p. Throws HypothesisError unless p is a prime with
// p % 4 == 3.
FiniteTriring make_tq_modp(int p);

// Index of the coefficientwise mod-p reduction of an exact element
// (denominators must be coprime to p).
TriringElement reduce_modp(const ExactTriquaternion& x, int p);

// Basis helpers for the table backend: even index of a+bi, odd index of cj+dk.
Index tq_even_index(int p, int a, int b);
Index tq_odd_index(int p, int c, int d);

}  // namespace triring::tq
