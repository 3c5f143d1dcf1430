#include <doctest.h>

#include "oracles.hpp"
#include "triring/corpus.hpp"
#include "triring/ideals.hpp"

using namespace triring;

TEST_CASE("principal triideals on TE(4,4)") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal pe = principal_even(R, 2);
    CHECK(pe == Triideal{{0, 2}, {0, 2}});
    CHECK(is_triideal(R, pe));
    Triideal po = principal_odd(R, 2);
    CHECK(po == Triideal{{0}, {0, 2}});
    CHECK(is_triideal(R, po));
    CHECK(principal_even(R, 0) == zero_ideal());
}

TEST_CASE("sum and intersection are componentwise") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal A{{0, 2}, {0, 1, 2, 3}};  // ((2), R1)
    Triideal B{{0, 2}, {0, 2}};
    CHECK(ideal_intersect(R, A, B) == B);
    CHECK(ideal_sum(R, B, zero_ideal()) == B);
    CHECK(ideal_sum(R, B, full_ideal(R)) == full_ideal(R));
    for (const auto& I : enumerate_triideals(R))
        for (const auto& J : enumerate_triideals(R)) {
            CHECK(is_triideal(R, ideal_sum(R, I, J)));
            CHECK(is_triideal(R, ideal_intersect(R, I, J)));
        }
}

TEST_CASE("mixed products") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal B{{0, 2}, {0, 2}};
    CHECK(mixed_product(R, B, B) == zero_ideal());  // 2*2 = 0 both ways
    for (const auto& I : enumerate_triideals(R)) {
        Triideal product = mixed_product(R, I, full_ideal(R));
        CHECK(product == I);  // identity factors survive
        CHECK(is_triideal(R, product));
    }

    FiniteTriring S = corpus::make_builtin("TE(6,3)");
    Triideal I{{0, 2, 4}, {0, 1, 2}};  // ((2), Z/3)
    Triideal J{{0, 3}, {0, 1, 2}};     // ((3), Z/3)
    Triideal got = mixed_product(S, I, J);
    CHECK(got == Triideal{{0}, {0, 1, 2}});
    auto [evenClosed, oddClosed] = mixed_product_raw_closed(S, I, J);
    CHECK(evenClosed);
    CHECK(oddClosed);
}

TEST_CASE("triideal enumeration matches the subgroup-pair oracle") {
    for (const char* name : {"TE(2,2)", "TE(4,4)", "TE(4,2)", "TE(6,3)", "TE(4,1)",
                             "TE(6,1)", "TE(8,4)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        auto fast = enumerate_triideals(R);
        auto slow = oracle::enumerate_triideals(R);
        INFO(name);
        CHECK(fast == slow);
        for (const auto& I : fast) CHECK(is_triideal(R, I));
    }
}

TEST_CASE("TE(4,4) has exactly the six expected triideals") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    std::vector<Triideal> expect = {
        {{0}, {0}},        {{0}, {0, 2}},       {{0}, {0, 1, 2, 3}},
        {{0, 2}, {0, 2}},  {{0, 2}, {0, 1, 2, 3}}, {{0, 1, 2, 3}, {0, 1, 2, 3}}};
    std::sort(expect.begin(), expect.end(), [](const Triideal& a, const Triideal& b) {
        return a.even != b.even ? a.even < b.even : a.odd < b.odd;
    });
    CHECK(enumerate_triideals(R) == expect);
    CHECK(enumerate_triideals(corpus::make_builtin("TE(6,3)")).size() == 6);
    CHECK(enumerate_triideals(quotient(R, full_ideal(R)).ring).size() == 1);
}

TEST_CASE("primality by definition with witnesses") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    CHECK(is_prime_by_definition(R, Triideal{{0, 2}, {0, 2}}).prime);
    PrimalityResult zero = is_prime_by_definition(R, zero_ideal());
    CHECK_FALSE(zero.prime);
    REQUIRE(zero.witness.has_value());
    CHECK(zero.witness->clause == 1);
    CHECK(zero.witness->x == 2);
    CHECK(zero.witness->y == 2);
    CHECK_FALSE(is_prime_by_definition(R, full_ideal(R)).prime);
}

TEST_CASE("primality by mixed products") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    auto all = enumerate_triideals(R);
    CHECK(is_prime_by_products(R, Triideal{{0, 2}, {0, 2}}, all));
    CHECK(is_prime_by_products(R, Triideal{{0, 2}, {0, 1, 2, 3}}, all));
    CHECK_FALSE(is_prime_by_products(R, Triideal{{0}, {0, 2}}, all));
}

TEST_CASE("primality by components") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    CHECK(is_prime_by_components(R, Triideal{{0, 2}, {0, 2}}));
    FiniteTriring S = corpus::make_builtin("TE(6,3)");
    CHECK(is_prime_by_components(S, Triideal{{0, 3}, {0}}));
    CHECK(is_prime_by_components(S, Triideal{{0, 2, 4}, {0, 1, 2}}));
    CHECK_FALSE(is_prime_by_components(S, Triideal{{0}, {0}}));
}

TEST_CASE("the three primality criteria agree on every corpus triideal") {
    for (const char* name : {"TE(2,2)", "TE(4,4)", "TE(4,2)", "TE(6,3)", "TE(8,4)",
                             "TE(4,1)", "TE(6,1)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        auto all = enumerate_triideals(R);
        for (const auto& P : all) {
            bool def = is_prime_by_definition(R, P).prime;
            INFO(name);
            CHECK(def == is_prime_by_products(R, P, all));
            CHECK(def == is_prime_by_components(R, P));
        }
    }
}

TEST_CASE("extending an odd sharp-prime") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    PrimeTriideal P = extend_odd_prime(R, {0, 2});
    CHECK(P.ideal == Triideal{{0, 2}, {0, 2}});
    CHECK_FALSE(P.even);

    FiniteTriring S = corpus::make_builtin("TE(6,3)");
    CHECK(extend_odd_prime(S, {0}).ideal == Triideal{{0, 3}, {0}});

    FiniteTriring Q = corpus::make_builtin("TQ-modp(3)");
    CHECK(extend_odd_prime(Q, {0}).ideal == Triideal{{0}, {0}});

    // (0) is not sharp-prime in Z/4
    CHECK_THROWS_AS(extend_odd_prime(R, {0}), HypothesisError);
}

TEST_CASE("trinilpotency witnesses") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    auto w = is_trinilpotent(R, {2, 2});
    REQUIRE(w.has_value());
    CHECK(w->m == 2);
    CHECK(w->n == 2);
    auto z = is_trinilpotent(R, elem_zero());
    REQUIRE(z.has_value());
    CHECK(z->m == 1);
    CHECK(z->n == 1);
    FiniteTriring S = corpus::make_builtin("TE(6,3)");
    CHECK_FALSE(is_trinilpotent(S, {2, 1}).has_value());
}

TEST_CASE("trinilradical matches the element oracle") {
    for (const char* name : {"TE(4,4)", "TE(6,3)", "TE(8,4)", "TQ-modp(3)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        Triideal nil = trinilradical(R);
        CHECK(is_triideal(R, nil));
        auto elems = oracle::trinilpotents(R);
        // the oracle set must be exactly the product of the two components
        std::set<std::pair<Index, Index>> expect;
        for (Index e : nil.even)
            for (Index o : nil.odd) expect.insert({e, o});
        std::set<std::pair<Index, Index>> got;
        for (const auto& x : elems) got.insert({x.e, x.o});
        INFO(name);
        CHECK(expect == got);
    }
    CHECK(trinilradical(corpus::make_builtin("TE(4,4)")) == Triideal{{0, 2}, {0, 2}});
    CHECK(trinilradical(corpus::make_builtin("TE(6,3)")) == zero_ideal());
    CHECK(trinilradical(corpus::make_builtin("TQ-modp(3)")) == zero_ideal());
}

TEST_CASE("radicals") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    CHECK(radical(R, zero_ideal()) == trinilradical(R));
    CHECK(radical(R, full_ideal(R)) == full_ideal(R));
    for (const auto& P : oracle::primes(R)) CHECK(radical(R, P) == P);
    for (const auto& I : enumerate_triideals(R)) {
        Triideal r = radical(R, I);
        CHECK(radical(R, r) == r);
        CHECK(ideal_subset(I, r));
    }
}

TEST_CASE("trinilradical sits inside the ordinary nilradical") {
    FiniteTriring R = corpus::make_builtin("TE(8,4)");
    auto ord = ordinary_nilradical(R);
    std::set<std::pair<Index, Index>> ordSet;
    for (const auto& x : ord) ordSet.insert({x.e, x.o});
    Triideal nil = trinilradical(R);
    for (Index e : nil.even)
        for (Index o : nil.odd) CHECK(ordSet.count({e, o}) == 1);
    // and the inclusion is strict here: (0,1) is ring-nilpotent, not tri-nilpotent
    CHECK(ordSet.count({0, 1}) == 1);
    CHECK_FALSE(is_trinilpotent(R, {0, 1}).has_value());
}
