#include <doctest.h>

#include "oracles.hpp"
#include "triring/corpus.hpp"
#include "triring/spectrum.hpp"

using namespace triring;

TEST_CASE("golden spectra against the subset oracle") {
    {
        FiniteTriring R = corpus::make_builtin("TE(4,4)");
        Trispectrum sp = trispectrum(R);
        REQUIRE(sp.points.size() == 2);
        CHECK(sp.evenPoints.size() == 1);
        CHECK(sp.oddPoints.size() == 1);
        CHECK(sp.points[0].ideal == Triideal{{0, 2}, {0, 1, 2, 3}});
        CHECK(sp.points[1].ideal == Triideal{{0, 2}, {0, 2}});
        auto slow = oracle::primes(R);
        CHECK(slow.size() == 2);
    }
    {
        FiniteTriring R = corpus::make_builtin("TE(6,3)");
        Trispectrum sp = trispectrum(R);
        REQUIRE(sp.points.size() == 3);
        CHECK(sp.evenPoints.size() == 2);
        CHECK(sp.oddPoints.size() == 1);
        CHECK(sp.points[2].ideal == Triideal{{0, 3}, {0}});
        CHECK(oracle::primes(R).size() == 3);
    }
    {
        // zero odd part over Z/6: both points even
        FiniteTriring R = corpus::make_builtin("TE(6,1)");
        Trispectrum sp = trispectrum(R);
        CHECK(sp.points.size() == 2);
        CHECK(sp.oddPoints.empty());
    }
}

TEST_CASE("spectrum points agree with the oracle on every finite corpus ring") {
    for (const auto& e : corpus::builtin_corpus()) {
        if (!e.finiteBackend || e.name == "TQ-modp(3)") continue;  // oracle needs small parts
        FiniteTriring R = corpus::make_builtin(e.name);
        Trispectrum sp = trispectrum(R);
        std::vector<Triideal> got;
        for (const auto& p : sp.points) got.push_back(p.ideal);
        std::sort(got.begin(), got.end(), [](const Triideal& a, const Triideal& b) {
            return a.even != b.even ? a.even < b.even : a.odd < b.odd;
        });
        INFO(e.name);
        CHECK(got == oracle::primes(R));
    }
}

TEST_CASE("odd trispectrum is nonempty whenever the odd part is") {
    for (const char* name : {"TE(2,2)", "TE(4,4)", "TE(4,2)", "TE(6,3)", "TE(8,4)",
                             "TQ-modp(3)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        CHECK_FALSE(trispectrum(R).oddPoints.empty());
    }
}

TEST_CASE("extremal vanishing sets") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    Trispectrum sp = trispectrum(R);
    CHECK(vanishing_set(R, sp, zero_ideal()).points == full_point_set(sp));
    CHECK(vanishing_set(R, sp, full_ideal(R)).points.empty());
    // D#(local identity) is exactly the odd trispectrum
    CHECK(basic_open(R, sp, {true, R.odd.localOne}).points == sp.oddPoints);
}

TEST_CASE("vanishing-set identities over all triideal pairs") {
    for (const char* name : {"TE(4,4)", "TE(6,3)", "TE(8,4)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        Trispectrum sp = trispectrum(R);
        auto ideals = enumerate_triideals(R);
        for (const auto& I : ideals)
            for (const auto& J : ideals) {
                PointSet u = set_union(vanishing_set(R, sp, I).points,
                                       vanishing_set(R, sp, J).points);
                CHECK(u == vanishing_set(R, sp, ideal_intersect(R, I, J)).points);
                CHECK(u == vanishing_set(R, sp, mixed_product(R, I, J)).points);
            }
    }
}

TEST_CASE("irreducibility: topological and algebraic criteria") {
    {
        FiniteTriring R = corpus::make_builtin("TE(4,4)");
        Trispectrum sp = trispectrum(R);
        auto closed = closed_sets(R, sp, enumerate_triideals(R));
        // V(0) is the whole space; its radical is the odd prime
        CHECK(is_irreducible(R, sp, closed, full_point_set(sp)));
    }
    {
        FiniteTriring R = corpus::make_builtin("TE(6,3)");
        Trispectrum sp = trispectrum(R);
        auto closed = closed_sets(R, sp, enumerate_triideals(R));
        CHECK_FALSE(is_irreducible(R, sp, closed, full_point_set(sp)));
        for (int p = 0; p < static_cast<int>(sp.points.size()); ++p) {
            PointSet single{p};
            bool isClosed = false;
            for (const auto& c : closed) isClosed = isClosed || c.points == single;
            if (isClosed) CHECK(is_irreducible(R, sp, closed, single));
        }
        CHECK_FALSE(is_irreducible(R, sp, closed, PointSet{}));
    }
}

TEST_CASE("finite subcovers") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    Trispectrum sp = trispectrum(R);
    std::vector<Triideal> cover{principal_even(R, 2), principal_even(R, 3),
                                principal_even(R, 5)};
    // 5 is a unit, so the lone third member already covers
    CHECK(finite_subcover(R, sp, "full", cover) == std::vector<int>{2});

    std::vector<Triideal> noUnit{principal_even(R, 2), principal_even(R, 3)};
    CHECK(finite_subcover(R, sp, "full", noUnit) == std::vector<int>{0, 1});

    CHECK(finite_subcover(R, sp, "full", {full_ideal(R)}) == std::vector<int>{0});

    FiniteTriring S = corpus::make_builtin("TE(4,4)");
    Trispectrum spS = trispectrum(S);
    CHECK(finite_subcover(S, spS, "odd", {principal_odd(S, S.odd.localOne)}) ==
          std::vector<int>{0});

    CHECK_THROWS_AS(finite_subcover(R, sp, "full", {principal_even(R, 2)}), CoverError);
}

TEST_CASE("specialization order") {
    {
        FiniteTriring R = corpus::make_builtin("TE(4,4)");
        Trispectrum sp = trispectrum(R);
        auto edges = specialization_order(sp);
        // the odd prime sits inside the even one
        REQUIRE(edges.size() == 1);
        CHECK(sp.points[edges[0].first].even == false);
        CHECK(sp.points[edges[0].second].even == true);
        CHECK(specialization_dot(R, sp).find("digraph") == 0);
    }
    {
        FiniteTriring R = corpus::make_builtin("TE(6,3)");
        Trispectrum sp = trispectrum(R);
        auto edges = specialization_order(sp);
        REQUIRE(edges.size() == 1);
        // ((3),(0)) -> ((3),Z/3), never into ((2),Z/3)
        CHECK(sp.points[edges[0].first].ideal == Triideal{{0, 3}, {0}});
        CHECK(sp.points[edges[0].second].ideal == Triideal{{0, 3}, {0, 1, 2}});
    }
    {
        // the odd point of the triquaternions still specializes into the
        // even one: ((0),(0)) sits inside ((0),R1)
        FiniteTriring R = corpus::make_builtin("TQ-modp(3)");
        auto edges = specialization_order(trispectrum(R));
        REQUIRE(edges.size() == 1);
        CHECK(trispectrum(R).points[edges[0].second].even);
    }
    {
        // incomparable even primes form an antichain
        FiniteTriring R = corpus::make_builtin("TE(6,1)");
        CHECK(specialization_order(trispectrum(R)).empty());
    }
}

TEST_CASE("intersection of up to three vanishing sets is the sum's") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Trispectrum sp = trispectrum(R);
    auto ideals = enumerate_triideals(R);
    for (const auto& I : ideals)
        for (const auto& J : ideals)
            for (const auto& K : ideals) {
                PointSet meet = set_intersect(
                    set_intersect(vanishing_set(R, sp, I).points,
                                  vanishing_set(R, sp, J).points),
                    vanishing_set(R, sp, K).points);
                Triideal sum = ideal_sum(R, ideal_sum(R, I, J), K);
                CHECK(meet == vanishing_set(R, sp, sum).points);
            }
}
