#include <doctest.h>

#include "oracles.hpp"
#include "triring/corpus.hpp"
#include "triring/localization.hpp"

using namespace triring;

TEST_CASE("multiplicative subset validation") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    CHECK(validate_multiplicative_subset(R, {{1, 3}, {1, 3}}).ok());
    CHECK(validate_multiplicative_subset(R, {{1}, {1}}).ok());
    ValidationReport bad = validate_multiplicative_subset(R, {{1, 2}, {1}});
    CHECK_FALSE(bad.ok());
    // 2*2 = 0 escapes S0 and lands on zero
    const AxiomCheck* f = bad.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->axiom == "closed-even-even");
}

TEST_CASE("zero odd part admits no multiplicative subsets") {
    FiniteTriring R = corpus::make_builtin("TE(4,1)");
    // the local identity is 0, so any candidate hits the zero exclusion
    ValidationReport rep = validate_multiplicative_subset(R, {{1}, {0}});
    CHECK_FALSE(rep.ok());
}

TEST_CASE("localizing TE(4,4) at its odd prime inverts only units") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    LocalizedTriring L = localize_at_prime(R, Triideal{{0, 2}, {0, 2}});
    CHECK(L.classCount() == 16);
    CHECK(L.canonicalBijective);
    CHECK(validate_triring(L.ring).ok());
}

TEST_CASE("localizing TE(6,3) at its odd prime collapses to nine classes") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    LocalizedTriring L = localize_at_prime(R, Triideal{{0, 3}, {0}});
    CHECK(L.classCount() == 9);
    CHECK(L.evenPart.classes == 3);
    CHECK(L.oddPart.classes == 3);
    // count equality against the relation-row oracle
    CHECK(oracle::fraction_classes(R.even.add, R.even.mul, R.evenSize(),
                                   L.subset.even) == 3);
    CHECK(oracle::fraction_classes(R.odd.add, R.odd.sharp, R.oddSize(),
                                   L.subset.odd) == 3);
    // localization at an even prime is rejected
    CHECK_THROWS_AS(localize_at_prime(R, Triideal{{0, 2, 4}, {0, 1, 2}}),
                    HypothesisError);
}

TEST_CASE("fields in both parts localize trivially at the zero odd prime") {
    FiniteTriring R = corpus::make_builtin("TQ-modp(3)");
    LocalizedTriring L = localize_at_prime(R, zero_ideal());
    CHECK(L.canonicalBijective);
    CHECK(L.classCount() == 81);
}

TEST_CASE("the complement of a non-prime triideal fails the subset clauses") {
    // P1 != R1 is allowed in principle; whether the complement is
    // multiplicative is decided per instance, and for a non-prime ideal a
    // closure clause always breaks.
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Triideal P{{0}, {0, 2}};
    REQUIRE(is_triideal(R, P));
    REQUIRE_FALSE(is_prime_by_definition(R, P).prime);
    CHECK_THROWS_AS(localize_at_prime(R, P), HypothesisError);
}

TEST_CASE("minimal subset localization is a bijection") {
    for (const char* name : {"TE(4,4)", "TE(6,3)", "TE(8,4)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        LocalizedTriring L = localize(R, {{R.even.one}, {R.odd.localOne}});
        INFO(name);
        CHECK(L.canonicalBijective);
    }
}

TEST_CASE("the displayed fraction product formula matches the componentwise one") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    LocalizedTriring L = localize_at_prime(R, Triideal{{0, 3}, {0}});
    const auto& S0 = L.subset.even;
    const auto& S1 = L.subset.odd;
    for (Index a0 = 0; a0 < R.evenSize(); ++a0)
        for (Index s0 : S0)
            for (Index a1 = 0; a1 < R.oddSize(); ++a1)
                for (Index s1 : S1)
                    for (Index b0 = 0; b0 < R.evenSize(); ++b0)
                        for (Index t0 : S0)
                            for (Index b1 = 0; b1 < R.oddSize(); ++b1)
                                for (Index t1 : S1) {
                                    auto cls = [&](Index n, Index d, bool odd) {
                                        const LocalizedPart& p =
                                            odd ? L.oddPart : L.evenPart;
                                        auto it = std::lower_bound(
                                            p.subset.begin(), p.subset.end(), d);
                                        return p.classOf[n][it - p.subset.begin()];
                                    };
                                    TriringElement x{cls(a0, s0, false), cls(a1, s1, true)};
                                    TriringElement y{cls(b0, t0, false), cls(b1, t1, true)};
                                    TriringElement got = mul(L.ring, x, y);
                                    // displayed numerators and denominators
                                    Index evenNum = R.mul0(a0, b0);
                                    Index evenDen = R.mul0(s0, t0);
                                    Index oddNum = R.add1(
                                        R.sharp1(R.actL(a0, b1), R.actR(s1, t0)),
                                        R.sharp1(R.actL(s0, t1), R.actR(a1, b0)));
                                    Index oddDen =
                                        R.sharp1(R.actL(s0, t1), R.actR(s1, t0));
                                    CHECK(got.e == cls(evenNum, evenDen, false));
                                    CHECK(got.o == cls(oddNum, oddDen, true));
                                }
}

TEST_CASE("type 2 localization and its companions") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    Trispectrum sp = trispectrum(R);
    {
        TypeTwoLocalization T = localize_at_even(R, sp, 3);
        CHECK(T.loc.subset.even == std::vector<Index>{1, 3});
        CHECK(T.loc.subset.odd == std::vector<Index>{1, 3});
        CHECK(T.loc.classCount() == 16);
    }
    {
        TypeTwoLocalization T = localize_at_even(R, sp, 1);
        CHECK(T.loc.subset.even == std::vector<Index>{1});
        CHECK(T.loc.subset.odd == std::vector<Index>{1, 3});
        CHECK(T.loc.classCount() == 16);
    }
    CHECK_THROWS_AS(localize_at_even(R, sp, 2), EmptyOddLocusError);
}

TEST_CASE("type 3 localization") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    TypeThreeLocalization T = localize_at_odd(R, 2);
    CHECK(T.loc.classCount() == 18);
    CHECK(T.loc.evenPart.classes == 6);  // even part untouched
    CHECK(T.loc.oddPart.classes == 3);

    CHECK(localize_at_odd(R, R.odd.localOne).loc.canonicalBijective);

    FiniteTriring S = corpus::make_builtin("TE(4,4)");
    CHECK_THROWS_AS(localize_at_odd(S, 2), TrinilpotentError);
}

TEST_CASE("factoring through the localization") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    MultiplicativeSubset units{{1, 3}, {1, 3}};
    LocalizedTriring L = localize(R, units);

    // the canonical map factors through itself by the identity
    FactorResult f = factor_through(L, R, L.ring, L.canonicalHom);
    TriringHomomorphism id = identity_hom(L.ring);
    CHECK(f.hom.evenMap == id.evenMap);
    CHECK(f.hom.oddMap == id.oddMap);
    CHECK(f.uniquenessExhaustive);
    CHECK(f.candidateCount == 1);

    // a map that fails to invert a member is rejected with the witness
    FiniteTriring S = corpus::make_builtin("TE(6,3)");
    Trispectrum spS = trispectrum(S);
    TypeTwoLocalization T = localize_at_even(S, spS, 2);  // inverts 2 and 4
    QuotientTriring q = quotient(S, Triideal{{0, 2, 4}, {0, 1, 2}});
    try {
        factor_through(T.loc, S, q.ring, q.natural);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()).find("invert") != std::string::npos);
    }
}

TEST_CASE("factoring through a quotient target that inverts everything") {
    // TE(6,3) at the odd prime; target is the quotient by it. Complement
    // members map to units of the quotient, so psi factors uniquely.
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    Triideal P{{0, 3}, {0}};
    LocalizedTriring L = localize_at_prime(R, P);
    QuotientTriring q = quotient(R, P);
    FactorResult f = factor_through(L, R, q.ring, q.natural);
    CHECK(is_homomorphism(L.ring, q.ring, f.hom));
    TriringHomomorphism round = compose(f.hom, L.canonicalHom);
    CHECK(round.evenMap == q.natural.evenMap);
    CHECK(round.oddMap == q.natural.oddMap);
    CHECK(f.uniquenessExhaustive);
}

TEST_CASE("every inverted element becomes invertible downstairs") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    LocalizedTriring L = localize_at_prime(R, Triideal{{0, 3}, {0}});
    for (Index s : L.subset.even) {
        Index c = L.canonicalHom.evenMap[s];
        bool unit = false;
        for (Index d = 0; d < L.ring.evenSize(); ++d)
            if (L.ring.mul0(c, d) == L.ring.even.one) unit = true;
        CHECK(unit);
    }
    for (Index s : L.subset.odd) {
        Index c = L.canonicalHom.oddMap[s];
        bool unit = false;
        for (Index d = 0; d < L.ring.oddSize(); ++d)
            if (L.ring.sharp1(c, d) == L.ring.odd.localOne) unit = true;
        CHECK(unit);
    }
}
