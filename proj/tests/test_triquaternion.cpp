#include <doctest.h>

#include "triring/corpus.hpp"
#include "triring/triquaternion.hpp"

using namespace triring;
using namespace triring::tq;

namespace {
const ExactTriquaternion one{1, 0, 0, 0};
const ExactTriquaternion i{0, 1, 0, 0};
const ExactTriquaternion j{0, 0, 1, 0};
const ExactTriquaternion k{0, 0, 0, 1};
}  // namespace

TEST_CASE("exact basis products match the multiplication tables") {
    CHECK(tq_mul(i, i) == ExactTriquaternion{-1, 0, 0, 0});
    CHECK(tq_mul(i, j) == k);
    CHECK(tq_mul(j, i) == tq_neg(k));
    CHECK(tq_mul(i, k) == tq_neg(j));
    CHECK(tq_mul(k, i) == j);
    CHECK(tq_mul(j, k) == ExactTriquaternion{0, 0, 0, 0});
    CHECK(tq_mul(j, j) == ExactTriquaternion{0, 0, 0, 0});
    CHECK(tq_sharp(j, j) == j);
    CHECK(tq_sharp(j, k) == k);
    CHECK(tq_sharp(k, k) == tq_neg(j));
    CHECK(tq_local_power(k, 2) == tq_neg(j));
    CHECK(tq_local_power(k, 0) == j);
    CHECK_THROWS_AS(tq_sharp(one, j), ParityError);
}

TEST_CASE("rational backend axiom suite passes") {
    ValidationReport rep = validate_rational_triquaternions();
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("exact arithmetic with fractions stays exact") {
    ExactTriquaternion x{Rational(1, 2), Rational(-2, 3), Rational(1, 6), Rational(0)};
    ExactTriquaternion y{Rational(3), Rational(1, 2), Rational(0), Rational(5, 2)};
    ExactTriquaternion p = tq_mul(x, y);
    // even part: (1/2 + -2/3 i)(3 + 1/2 i) = (3/2 + 1/3) + (1/4 - 2) i
    CHECK(p.a == Rational(11, 6));
    CHECK(p.b == Rational(-7, 4));
}

TEST_CASE("mod-p reduction is a homomorphism onto the table backend") {
    for (int p : {3, 7}) {
        FiniteTriring Q = make_tq_modp(p);
        REQUIRE(validate_triring(Q).ok());
        // exhaust small integer coefficients; all pairs for p = 3, a
        // deterministic stride for p = 7 to keep the loop tight
        int step = p == 3 ? 1 : 5;
        std::vector<ExactTriquaternion> sample;
        for (int a = 0; a < p; a += step)
            for (int b = 0; b < p; b += step)
                for (int c = 0; c < p; c += step)
                    for (int d = 0; d < p; ++d)
                        sample.push_back({a, b, c, d});
        for (const auto& x : sample)
            for (const auto& y : sample) {
                TriringElement rx = reduce_modp(x, p), ry = reduce_modp(y, p);
                CHECK(reduce_modp(tq_mul(x, y), p) == mul(Q, rx, ry));
                CHECK(reduce_modp(tq_add(x, y), p) == add(Q, rx, ry));
                if (x.isOdd() && y.isOdd())
                    CHECK(reduce_modp(tq_sharp(x, y), p) == sharp(Q, rx, ry));
            }
    }
}

TEST_CASE("reduction inverts denominators coprime to p") {
    ExactTriquaternion x{Rational(1, 2), 0, 0, 0};
    TriringElement r = reduce_modp(x, 3);  // 1/2 = 2 mod 3
    CHECK(r.e == tq_even_index(3, 2, 0));
    CHECK_THROWS_AS(reduce_modp(ExactTriquaternion{Rational(1, 3), 0, 0, 0}, 3),
                    HypothesisError);
}
