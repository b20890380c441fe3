#include "snrep/characters.hpp"
#include "snrep/errors.hpp"
#include "snrep/markov.hpp"
#include "snrep/serialize.hpp"
#include "snrep/tensor.hpp"
#include "snrep/verify.hpp"
#include "snrep/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <ctime>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;
using namespace snrep;

// Exit-code contract, kept in one place:
//   0 success, 1 verification failure, 2 usage error,
//   3 resource guard, 4 semantic input error.
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;
constexpr int kExitSemantic = 4;

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buffer[32];
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

// Everything a command prints is one envelope; the timestamp is the only
// field allowed to differ between identical invocations.
void emit_envelope(const std::string& command, json parameters, json result,
                   const std::uint64_t* seed = nullptr) {
    json doc{{"command", command},
             {"parameters", std::move(parameters)},
             {"result", std::move(result)},
             {"version", kVersion},
             {"timestamp", iso_timestamp()}};
    if (seed != nullptr) {
        doc["seed"] = *seed;
    }
    std::cout << doc.dump(2) << '\n';
}

struct ChartableArgs {
    int n = 0;
    std::string format = "json";
};

int run_chartable(const ChartableArgs& args) {
    if (args.n < 1) {
        std::cerr << "chartable: --n must be at least 1\n";
        return kExitUsage;
    }
    const CharacterTable table = character_table(args.n);
    if (args.format == "csv") {
        std::cout << table_to_csv(table);
    } else {
        emit_envelope("chartable", json{{"n", args.n}, {"format", args.format}},
                      table_to_json(table));
    }
    return 0;
}

struct DecomposeArgs {
    int n = 0;
    int r = 0;
    std::string rep = "defining";
    std::string method = "auto";
    std::string format = "json";
};

int run_decompose(const DecomposeArgs& args) {
    if (args.n < 1) {
        std::cerr << "decompose: --n must be at least 1\n";
        return kExitUsage;
    }
    if (args.r < 0) {
        std::cerr << "decompose: --r must be nonnegative\n";
        return kExitUsage;
    }
    const RepKind kind = args.rep == "standard" ? RepKind::standard : RepKind::defining;
    MethodChoice method = MethodChoice::auto_select;
    if (args.method == "closed") {
        method = MethodChoice::closed;
    } else if (args.method == "oracle") {
        method = MethodChoice::oracle;
    }
    if (method == MethodChoice::closed && args.r < 1) {
        std::cerr << "decompose: the closed method starts at r = 1\n";
        return kExitUsage;
    }
    const DecompositionTable table = decompose(args.n, args.r, kind, method);
    if (args.format == "csv") {
        std::cout << decomposition_to_csv(table);
    } else {
        emit_envelope("decompose",
                      json{{"n", args.n},
                           {"r", args.r},
                           {"rep", args.rep},
                           {"method", args.method},
                           {"format", args.format}},
                      decomposition_to_json(table));
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int nmax = 6;
    int n = 6;
    int kmax = 6;
    int chains = 20;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args) {
    const json parameters{{"suite", args.suite}, {"nmax", args.nmax},  {"n", args.n},
                          {"kmax", args.kmax},   {"chains", args.chains},
                          {"trials", args.trials}, {"seed", args.seed}};

    std::vector<VerificationReport> reports;
    const bool all = args.suite == "all";
    if (all || args.suite == "prop1") {
        reports.push_back(verify_prop1(args.nmax));
    }
    if (all || args.suite == "cor2") {
        reports.push_back(verify_cor2(args.nmax));
    }
    if (all || args.suite == "prop3") {
        Prop3Config config;
        config.n = args.n;
        config.k_max = args.kmax;
        config.chains = args.chains;
        config.seed = args.seed;
        config.trials = args.trials;
        reports.push_back(verify_prop3(config));
    }

    bool passed = true;
    json report_docs = json::array();
    for (const VerificationReport& report : reports) {
        passed = passed && report.passed;
        report_docs.push_back(report_to_json(report));
    }
    const json result{{"passed", passed}, {"reports", std::move(report_docs)}};

    const bool seeded = all || args.suite == "prop3";
    emit_envelope("verify", parameters, result, seeded ? &args.seed : nullptr);
    return passed ? 0 : kExitVerificationFailure;
}

struct SimulateArgs {
    std::string chain_file;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& args) {
    const ChainSpec chain = load_chain_file(args.chain_file);
    const BigRat exact = expected_fixed_points(chain);
    const SimulationSummary summary = simulate(chain, args.trials, args.seed);
    emit_envelope("simulate",
                  json{{"chain", args.chain_file}, {"trials", args.trials}, {"seed", args.seed}},
                  json{{"chain", chain_to_json(chain)},
                       {"expected_fixed_points", to_fraction(exact)},
                       {"summary", summary_to_json(summary)}},
                  &args.seed);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact S_n tensor-power decompositions and class-measure chains"};
    app.require_subcommand(1);

    ChartableArgs chartable_args;
    CLI::App* chartable = app.add_subcommand("chartable", "Print the character table of S_n");
    chartable->add_option("--n", chartable_args.n, "Symmetric group degree")->required();
    chartable->add_option("--format", chartable_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    DecomposeArgs decompose_args;
    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "Decompose the r-th tensor power into irreducibles");
    decompose_cmd->add_option("--n", decompose_args.n, "Symmetric group degree")->required();
    decompose_cmd->add_option("--r", decompose_args.r, "Tensor power")->required();
    decompose_cmd->add_option("--rep", decompose_args.rep, "defining or standard")
        ->check(CLI::IsMember({"defining", "standard"}));
    decompose_cmd->add_option("--method", decompose_args.method, "closed, oracle, or auto")
        ->check(CLI::IsMember({"closed", "oracle", "auto"}));
    decompose_cmd->add_option("--format", decompose_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify_args.suite, "prop1, cor2, prop3, or all")
        ->required()
        ->check(CLI::IsMember({"prop1", "cor2", "prop3", "all"}));
    verify_cmd->add_option("--nmax", verify_args.nmax, "Largest n for the closed-form sweeps");
    verify_cmd->add_option("--n", verify_args.n, "Group degree for the chain suite");
    verify_cmd->add_option("--kmax", verify_args.kmax, "Chain length for the chain suite");
    verify_cmd->add_option("--chains", verify_args.chains, "Random chains per run");
    verify_cmd->add_option("--trials", verify_args.trials,
                           "Monte Carlo trials per chain (0 for exact checks only)");
    verify_cmd->add_option("--seed", verify_args.seed, "Random seed");

    SimulateArgs simulate_args;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo run of a chain document");
    simulate_cmd->add_option("--chain", simulate_args.chain_file, "Chain JSON file")->required();
    simulate_cmd->add_option("--trials", simulate_args.trials, "Number of trials");
    simulate_cmd->add_option("--seed", simulate_args.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(chartable)) {
            return run_chartable(chartable_args);
        }
        if (app.got_subcommand(decompose_cmd)) {
            return run_decompose(decompose_args);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(verify_args);
        }
        if (app.got_subcommand(simulate_cmd)) {
            return run_simulate(simulate_args);
        }
    } catch (const ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceGuard;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return 0;
}
