#pragma once

#include <json.hpp>

#include "triring/localization.hpp"
#include "triring/sheaf.hpp"

// Builtin example trirings, description-file loading and saving, and the
// JSON report schemas shared by the CLI and the test suites.

namespace triring::corpus {

using json = nlohmann::ordered_json;

// Builtin names:
//   TE(n,m)      - Z/n (+) Z/m with reduction action and # = product mod m
//                  (needs m | n; m = 1 gives a zero-odd-part carrier)
//   TQ-modp(p)   - triquaternion tables over Z/p (needs prime p = 3 mod 4)
//   TQ-rational  - exact element backend only; no finite tables
bool is_builtin_name(const std::string& name);
bool is_rational_backend(const std::string& name);
FiniteTriring make_builtin(const std::string& name);

FiniteTriring make_te(int n, int m);

// Description files per the documented schema; loading validates the triring
// and throws MalformedTableError / Error with a witness otherwise.
FiniteTriring triring_from_json(const json& doc);
json triring_to_json(const FiniteTriring& R);
FiniteTriring load_triring(const std::string& path);
void save_triring(const FiniteTriring& R, const std::string& path);

// Resolves either a builtin name or a file path.
FiniteTriring resolve_input(const std::string& builtinName, const std::string& path);

struct CorpusEntry {
    std::string name;
    bool finiteBackend = true;
    // golden structural facts, all reproduced by the kernel on demand
    int triidealCount = 0;
    int spectrumSize = 0;
    int evenPoints = 0;
    int oddPoints = 0;
    std::vector<Index> nilEven, nilOdd;
    std::string provenance;
};

std::vector<CorpusEntry> builtin_corpus();

// Recomputes every golden fact of the entry; throws Error on drift.
void verify_entry(const CorpusEntry& e);

// ---------------------------------------------------------------------------
// Report schemas

json to_json(const Triideal& I);
Triideal triideal_from_json(const FiniteTriring& R, const json& j);
json to_json(const ValidationReport& rep);
json to_json(const FiniteTriring& R, const PrimalityResult& pr, const Triideal& P);
json spectrum_report(const FiniteTriring& R);
json topology_report(const FiniteTriring& R);
json localization_report(const LocalizedTriring& L);
json sheaf_report_json(const SheafReport& rep);
json ideals_report(const FiniteTriring& R);

// The aggregated verification report (one verdict per layer).
json verify_all_report(const FiniteTriring& R, int maxCoverSize);

}  // namespace triring::corpus
