#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "triring/corpus.hpp"

using namespace triring;
using corpus::json;

namespace {

std::string temp_path(const char* stem) {
    return std::string("triring_test_") + stem + ".json";
}

}  // namespace

TEST_CASE("every corpus entry reproduces its golden facts") {
    for (const auto& e : corpus::builtin_corpus()) {
        INFO(e.name);
        CHECK_NOTHROW(corpus::verify_entry(e));
    }
}

TEST_CASE("builtin name parsing") {
    CHECK(corpus::is_builtin_name("TE(4,4)"));
    CHECK(corpus::is_builtin_name("TQ-modp(3)"));
    CHECK(corpus::is_builtin_name("TQ-rational"));
    CHECK_FALSE(corpus::is_builtin_name("TE(4;4)"));
    CHECK_THROWS_AS(corpus::make_builtin("TQ-rational"), BackendError);
    CHECK(corpus::make_builtin("TQ-modp(3)").carrierSize() == 81);
}

TEST_CASE("description files round-trip with table equality") {
    for (const char* name : {"TE(4,4)", "TE(6,3)", "TQ-modp(3)"}) {
        FiniteTriring R = corpus::make_builtin(name);
        std::string path = temp_path("roundtrip");
        corpus::save_triring(R, path);
        FiniteTriring back = corpus::load_triring(path);
        CHECK(back.even.add == R.even.add);
        CHECK(back.even.mul == R.even.mul);
        CHECK(back.odd.add == R.odd.add);
        CHECK(back.odd.sharp == R.odd.sharp);
        CHECK(back.action.left == R.action.left);
        CHECK(back.action.right == R.action.right);
        CHECK(back.even.one == R.even.one);
        CHECK(back.odd.localOne == R.odd.localOne);
        std::remove(path.c_str());
    }
}

TEST_CASE("zmod description with reduction action loads") {
    json doc{{"name", "file-te"},
             {"even", {{"kind", "zmod"}, {"n", 4}}},
             {"odd", {{"kind", "zmod-sharp"}, {"m", 4}}},
             {"action", {{"kind", "reduction"}}}};
    FiniteTriring R = corpus::triring_from_json(doc);
    CHECK(R.evenSize() == 4);
    CHECK(validate_triring(R).ok());
}

TEST_CASE("loading rejects a non-associative even table with a witness") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    json doc = corpus::triring_to_json(R);
    doc["even"]["mul"][2][3] = 1;  // breaks associativity and commutativity
    try {
        corpus::triring_from_json(doc);
        FAIL("expected axiom failure");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("axiom failure") != std::string::npos);
    }
}

TEST_CASE("loading reports parse and structural errors distinctly") {
    std::string path = temp_path("broken");
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(corpus::load_triring(path), MalformedTableError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(corpus::load_triring("does-not-exist.json"), Error);
    // reduction action over incompatible moduli
    json doc{{"name", "bad"},
             {"even", {{"kind", "zmod"}, {"n", 4}}},
             {"odd", {{"kind", "zmod-sharp"}, {"m", 3}}},
             {"action", {{"kind", "reduction"}}}};
    CHECK_THROWS_AS(corpus::triring_from_json(doc), MalformedTableError);
}

TEST_CASE("verify-all report on TE(4,4)") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    json rep = corpus::verify_all_report(R, 4);
    CHECK(rep["allPass"].get<bool>());
    std::vector<std::string> names;
    for (const auto& c : rep["checks"]) names.push_back(c["name"].get<std::string>());
    std::vector<std::string> expect{"axioms",
                                    "arithmetic-identities",
                                    "prime-criteria-agreement",
                                    "radical-identities",
                                    "topology-identities",
                                    "localization",
                                    "presheaf-laws",
                                    "sheaf-axioms"};
    CHECK(names == expect);
}

TEST_CASE("verify-all flags the gluing failure on TE(6,3)") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    json rep = corpus::verify_all_report(R, 4);
    CHECK_FALSE(rep["allPass"].get<bool>());
    for (const auto& c : rep["checks"]) {
        bool expectPass = c["name"] != "sheaf-axioms";
        INFO(c.dump());
        CHECK(c["pass"].get<bool>() == expectPass);
    }
}

TEST_CASE("verify-all is byte-deterministic") {
    FiniteTriring R = corpus::make_builtin("TE(4,4)");
    std::string a = corpus::verify_all_report(R, 4).dump(2);
    std::string b = corpus::verify_all_report(R, 4).dump(2);
    CHECK(a == b);
}

TEST_CASE("verify-all across the whole finite corpus") {
    // Z/6-based carriers carry the disjoint-cover gluing failure; every
    // other layer passes everywhere.
    for (const auto& e : corpus::builtin_corpus()) {
        if (!e.finiteBackend) continue;
        FiniteTriring R = corpus::make_builtin(e.name);
        json rep = corpus::verify_all_report(R, 4);
        bool expectSheaf = e.name != "TE(6,3)" && e.name != "TE(6,1)";
        INFO(e.name, ": ", rep.dump());
        for (const auto& c : rep["checks"]) {
            bool expected = c["name"] == "sheaf-axioms" ? expectSheaf : true;
            CHECK(c["pass"].get<bool>() == expected);
        }
        CHECK(rep["allPass"].get<bool>() == expectSheaf);
    }
}

TEST_CASE("sheaf report schema carries the counterexample") {
    FiniteTriring R = corpus::make_builtin("TE(6,3)");
    SheafContext ctx = make_sheaf_context(R);
    json rep = corpus::sheaf_report_json(verify_sheaf_axioms(ctx, 4));
    CHECK_FALSE(rep["allPass"].get<bool>());
    bool sawCounterexample = false;
    for (const auto& t : rep["targets"])
        for (const auto& c : t["covers"]) {
            CHECK(c.contains("identityAxiom"));
            CHECK(c.contains("gluingAxiom"));
            CHECK(c["identityAxiom"].get<bool>());  // separation holds everywhere
            if (!c["gluingAxiom"].get<bool>()) {
                CHECK(c.contains("counterexample"));
                sawCounterexample = true;
            }
        }
    CHECK(sawCounterexample);
}
