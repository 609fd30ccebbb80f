// Command line front end: circuit inspection (polynomials, safety, normal
// forms, reverse derivatives, equivalence) and the training experiments.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rdcirc/compile.hpp"
#include "rdcirc/errors.hpp"
#include "rdcirc/experiment.hpp"
#include "rdcirc/rdiff.hpp"
#include "rdcirc/semantics.hpp"
#include "rdcirc/text.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBruteLimit = 3;
constexpr int kExitArity = 4;
constexpr int kExitMissingData = 5;
constexpr int kBruteWireLimit = 16;

rdcirc::Term parse_or_exit(const std::string& text) {
    try {
        return rdcirc::parse(text);
    } catch (const rdcirc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? v : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolean and polynomial circuits with reverse derivative ascent"};
    app.require_subcommand(1);

    std::string circuit_text, other_text, mode = "bool";
    bool brute = false;

    auto* cmd_poly = app.add_subcommand("poly", "print a circuit's polynomial tuple");
    cmd_poly->add_option("circuit", circuit_text, "circuit text")->required();

    auto* cmd_safety = app.add_subcommand("safety", "report unsafe AND gates");
    cmd_safety->add_option("circuit", circuit_text, "circuit text")->required();

    auto* cmd_canon = app.add_subcommand("canon", "canonical sum-of-monomials form");
    cmd_canon->add_option("circuit", circuit_text, "circuit text")->required();

    auto* cmd_safe = app.add_subcommand("safe", "safe boolean-equivalent form");
    cmd_safe->add_option("circuit", circuit_text, "circuit text")->required();

    auto* cmd_rdiff = app.add_subcommand("rdiff", "reverse derivative of a circuit");
    cmd_rdiff->add_option("circuit", circuit_text, "circuit text")->required();
    cmd_rdiff->add_flag("--brute", brute, "print the brute-force truth table instead");

    auto* cmd_equiv = app.add_subcommand("equiv", "decide circuit equivalence");
    cmd_equiv->add_option("c", circuit_text, "first circuit")->required();
    cmd_equiv->add_option("d", other_text, "second circuit")->required();
    cmd_equiv->add_option("--mod", mode, "equational theory: A (polynomial) or bool")
        ->check(CLI::IsMember({"A", "bool"}))
        ->default_val("bool");

    rdcirc::ExperimentConfig config;
    std::string encoding = "binary", out_path;
    config.iris_path = env_or("IRIS_PATH", "data/iris.data");
    config.mnist_dir = env_or("MNIST_DIR", "data/mnist");

    auto* cmd_train = app.add_subcommand("train", "run a Table-1 experiment preset");
    cmd_train->add_option("dataset", config.dataset, "iris2 | iris3 | mnist01")
        ->required()
        ->check(CLI::IsMember({"iris2", "iris3", "mnist01"}));
    cmd_train->add_option("--encoding", encoding, "label encoding")
        ->check(CLI::IsMember({"binary", "one-hot"}))
        ->default_val("binary");
    cmd_train->add_option("--epochs", config.epochs, "schedule epochs (preset default if unset)");
    cmd_train->add_option("--seed", config.seed, "PRNG seed for split and shuffles")
        ->default_val(2020);
    cmd_train->add_option("--test-fraction", config.test_fraction,
                          "held-out fraction for the iris presets")
        ->default_val(0.2);
    cmd_train->add_option("--subsample", config.subsample,
                          "cap on training examples (mnist01)");
    cmd_train->add_flag("--random-init", config.random_init,
                        "start from seeded uniform-random parameters instead of zeros");
    cmd_train->add_option("--iris", config.iris_path, "iris CSV path");
    cmd_train->add_option("--mnist-dir", config.mnist_dir, "directory with the IDX files");
    cmd_train->add_option("--out", out_path, "write the TSV report here");
    cmd_train->add_option("--trajectory", config.trajectory_path,
                          "dump the parameter trajectory (hex, one line per step)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_poly->parsed()) {
            std::cout << rdcirc::to_poly(parse_or_exit(circuit_text)).str() << "\n";
        } else if (cmd_safety->parsed()) {
            rdcirc::SafetyReport report = rdcirc::is_safe(parse_or_exit(circuit_text));
            if (report.safe) {
                std::cout << "safe\n";
            } else {
                for (const auto& violation : report.violations)
                    std::cout << "unsafe: and@" << violation.and_node
                              << " reachable-from input " << violation.input << "\n";
            }
        } else if (cmd_canon->parsed()) {
            std::cout << rdcirc::print(rdcirc::canonical_form(parse_or_exit(circuit_text)))
                      << "\n";
        } else if (cmd_safe->parsed()) {
            std::cout << rdcirc::print(rdcirc::safe_form(parse_or_exit(circuit_text))) << "\n";
        } else if (cmd_rdiff->parsed()) {
            rdcirc::Term t = parse_or_exit(circuit_text);
            if (brute) {
                int wires = t.inputs() + t.outputs();
                if (wires > kBruteWireLimit) {
                    std::cerr << "error: brute-force table over " << wires
                              << " wires exceeds the limit of " << kBruteWireLimit << "\n";
                    return kExitBruteLimit;
                }
                rdcirc::BlackBoxFn r = rdcirc::rdiff_brute(rdcirc::as_black_box(t));
                for (std::uint64_t k = 0; k < (std::uint64_t{1} << wires); ++k) {
                    rdcirc::BitVec in = rdcirc::BitVec::from_index(wires, k);
                    std::cout << in.to_string() << " -> " << r(in).to_string() << "\n";
                }
            } else {
                std::cout << rdcirc::print(rdcirc::rdiff_bool(t)) << "\n";
            }
        } else if (cmd_equiv->parsed()) {
            rdcirc::Term c = parse_or_exit(circuit_text);
            rdcirc::Term d = parse_or_exit(other_text);
            bool equal = false;
            try {
                equal = mode == "A" ? rdcirc::equiv_poly(c, d) : rdcirc::equiv_bool(c, d);
            } catch (const rdcirc::ArityMismatch& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitArity;
            }
            std::cout << (equal ? "yes" : "no") << "\n";
            return equal ? 0 : 1;
        } else if (cmd_train->parsed()) {
            config.encoding = encoding == "binary" ? rdcirc::LabelEncoding::Binary
                                                   : rdcirc::LabelEncoding::OneHot;
            rdcirc::ExperimentReport report;
            try {
                report = rdcirc::run_experiment(config);
            } catch (const rdcirc::IoError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitMissingData;
            }
            std::cout << report.table_row() << "\n";
            std::cout << rdcirc::ExperimentReport::tsv_header() << "\n"
                      << report.tsv_row() << "\n";
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "error: cannot write " << out_path << "\n";
                    return 1;
                }
                out << rdcirc::ExperimentReport::tsv_header() << "\n"
                    << report.tsv_row() << "\n";
            }
        }
    } catch (const rdcirc::TypeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const rdcirc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
