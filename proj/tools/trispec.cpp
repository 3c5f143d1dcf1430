// trispec: command-line front end for the finite-triring kernel.
//
// Exit codes: 0 all verdicts pass, 1 a mathematical verdict failed
// (counterexample found), 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>

#include "triring/corpus.hpp"
#include "triring/triquaternion.hpp"

using namespace triring;
using corpus::json;

namespace {

struct CommonArgs {
    std::string builtin;
    std::string file;
    std::string format = "json";
};

void add_input_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--builtin", args.builtin, "builtin triring name, e.g. TE(4,4)");
    cmd->add_option("file", args.file, "triring description file");
    cmd->add_option("--format", args.format, "json|dot|text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
}

FiniteTriring resolve(const CommonArgs& args) {
    return corpus::resolve_input(args.builtin, args.file);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite triring kernel: spectra, topology, localization, structure presheaf"};
    app.require_subcommand(1);

    CommonArgs args;
    int maxCoverSize = 4;
    int atPrime = -1;
    std::string atEven, atOdd;
    int idealIndex = -1;

    auto* validate = app.add_subcommand("validate", "check every triring axiom");
    add_input_options(validate, args);

    auto* spec = app.add_subcommand("spec", "compute the trispectrum");
    add_input_options(spec, args);

    auto* topology = app.add_subcommand("topology", "closed sets, irreducibility, specialization");
    add_input_options(topology, args);

    auto* ideals = app.add_subcommand("ideals", "enumerate triideals with primality");
    add_input_options(ideals, args);

    auto* localizeCmd = app.add_subcommand("localize", "localize by fractions");
    add_input_options(localizeCmd, args);
    localizeCmd->add_option("--at-prime", atPrime, "spectrum point index (type 1)");
    localizeCmd->add_option("--at-even", atEven, "even element index (type 2)");
    localizeCmd->add_option("--at-odd", atOdd, "odd element index (type 3)");

    auto* quotientCmd = app.add_subcommand("quotient", "quotient by an enumerated triideal");
    add_input_options(quotientCmd, args);
    quotientCmd->add_option("--ideal-index", idealIndex, "index into the triideal list")
        ->required();

    auto* sheafCmd = app.add_subcommand("sheaf-check", "verify both sheaf axioms on basic covers");
    add_input_options(sheafCmd, args);
    sheafCmd->add_option("--max-cover-size", maxCoverSize, "largest cover checked");

    auto* verifyAll = app.add_subcommand("verify-all", "run every verification suite");
    add_input_options(verifyAll, args);
    verifyAll->add_option("--max-cover-size", maxCoverSize, "largest cover checked");

    auto* corpusCmd = app.add_subcommand("corpus", "list builtin corpus entries");
    corpusCmd->add_flag("--verify", "recompute every golden fact");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (corpusCmd->parsed()) {
            bool verify = corpusCmd->count("--verify") > 0;
            json arr = json::array();
            for (const auto& e : corpus::builtin_corpus()) {
                json j{{"name", e.name}, {"finiteBackend", e.finiteBackend}};
                if (e.finiteBackend) {
                    j["triidealCount"] = e.triidealCount;
                    j["spectrumSize"] = e.spectrumSize;
                    j["evenPoints"] = e.evenPoints;
                    j["oddPoints"] = e.oddPoints;
                }
                j["provenance"] = e.provenance;
                if (verify) {
                    corpus::verify_entry(e);
                    j["verified"] = true;
                }
                arr.push_back(std::move(j));
            }
            emit(json{{"corpus", std::move(arr)}});
            return 0;
        }

        if (validate->parsed()) {
            if (corpus::is_rational_backend(args.builtin)) {
                ValidationReport rep = tq::validate_rational_triquaternions();
                emit(corpus::to_json(rep));
                return rep.ok() ? 0 : 1;
            }
            FiniteTriring R;
            try {
                R = resolve(args);
            } catch (const Error& e) {
                // loading already validates; report the failure as a verdict
                std::string msg = e.what();
                if (msg.find("axiom failure") != std::string::npos) {
                    emit(json{{"ok", false}, {"error", msg}});
                    return 1;
                }
                throw;
            }
            ValidationReport rep = validate_triring(R);
            emit(corpus::to_json(rep));
            return rep.ok() ? 0 : 1;
        }

        // everything below needs the finite backend
        if (corpus::is_rational_backend(args.builtin))
            throw BackendError("operation requires a finite table backend");

        if (spec->parsed()) {
            FiniteTriring R = resolve(args);
            emit(corpus::spectrum_report(R));
            return 0;
        }
        if (topology->parsed()) {
            FiniteTriring R = resolve(args);
            if (args.format == "dot") {
                std::cout << specialization_dot(R, trispectrum(R));
            } else {
                emit(corpus::topology_report(R));
            }
            return 0;
        }
        if (ideals->parsed()) {
            FiniteTriring R = resolve(args);
            emit(corpus::ideals_report(R));
            return 0;
        }
        if (localizeCmd->parsed()) {
            FiniteTriring R = resolve(args);
            int given = (atPrime >= 0) + !atEven.empty() + !atOdd.empty();
            if (given != 1)
                throw std::invalid_argument("pick exactly one of --at-prime/--at-even/--at-odd");
            if (atPrime >= 0) {
                Trispectrum sp = trispectrum(R);
                if (atPrime >= static_cast<int>(sp.points.size()))
                    throw std::invalid_argument("spectrum point index out of range");
                emit(corpus::localization_report(
                    localize_at_prime(R, sp.points[atPrime].ideal)));
            } else if (!atEven.empty()) {
                Trispectrum sp = trispectrum(R);
                emit(corpus::localization_report(
                    localize_at_even(R, sp, std::stoi(atEven)).loc));
            } else {
                emit(corpus::localization_report(localize_at_odd(R, std::stoi(atOdd)).loc));
            }
            return 0;
        }
        if (quotientCmd->parsed()) {
            FiniteTriring R = resolve(args);
            auto list = enumerate_triideals(R);
            if (idealIndex < 0 || idealIndex >= static_cast<int>(list.size()))
                throw std::invalid_argument("ideal index out of range");
            QuotientTriring q = quotient(R, list[idealIndex]);
            emit(json{{"ring", R.name},
                      {"ideal", corpus::to_json(list[idealIndex])},
                      {"evenSize", q.ring.evenSize()},
                      {"oddSize", q.ring.oddSize()},
                      {"valid", validate_triring(q.ring).ok()}});
            return 0;
        }
        if (sheafCmd->parsed()) {
            FiniteTriring R = resolve(args);
            SheafContext ctx = make_sheaf_context(R);
            SheafReport rep = verify_sheaf_axioms(ctx, maxCoverSize);
            emit(corpus::sheaf_report_json(rep));
            return rep.allPass() ? 0 : 1;
        }
        if (verifyAll->parsed()) {
            FiniteTriring R = resolve(args);
            json rep = corpus::verify_all_report(R, maxCoverSize);
            emit(rep);
            return rep["allPass"].get<bool>() ? 0 : 1;
        }
    } catch (const CoverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
