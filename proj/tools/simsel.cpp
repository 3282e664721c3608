// Command-line front end: prove one problem, or benchmark heuristics over a
// directory of problems.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simsel/simsel.hpp"

namespace {

constexpr int kExitProof = 0;
constexpr int kExitSaturated = 1;
constexpr int kExitResourceOut = 2;
constexpr int kExitInputError = 3;

const char* const kDefaultHeuristic = "(1*ConjectureLevWeight(ConstPrio,Uni,Gen,Sim,1,5,5))";

int exit_code(simsel::Outcome o) {
    switch (o) {
        case simsel::Outcome::proof: return kExitProof;
        case simsel::Outcome::saturated: return kExitSaturated;
        case simsel::Outcome::resource_out: return kExitResourceOut;
    }
    return kExitInputError;
}

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

int prove(const std::string& path, const std::string& spec, const simsel::Limits& limits, bool json,
          bool derivation) {
    simsel::Heuristic h = simsel::parse_heuristic(spec);
    simsel::RunReport rep = simsel::run_problem(path, h, limits, derivation);
    if (rep.error) {
        std::cerr << path << ": " << *rep.error << "\n";
        return kExitInputError;
    }
    if (json) {
        nlohmann::json j = simsel::to_json(rep);
        if (derivation) j["derivation"] = rep.derivation;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "% Problem    : " << rep.problem << "\n"
                  << "% Heuristic  : " << rep.heuristic << "\n"
                  << "% Outcome    : " << simsel::outcome_name(rep.outcome) << "\n"
                  << "% Processed  : " << rep.processed << "\n"
                  << "% Generated  : " << rep.generated << "\n"
                  << "% Wall time  : " << fixed(rep.wall_time, 3) << " s\n"
                  << "% Speed      : " << fixed(rep.kclauses_per_sec, 2) << " kclauses/s\n";
        if (derivation && !rep.derivation.empty()) std::cout << rep.derivation;
    }
    return exit_code(rep.outcome);
}

void print_table(const simsel::BenchmarkTable& t) {
    std::size_t width = 9;
    for (const auto& row : t.rows) width = std::max(width, row.heuristic.size());
    std::cout << std::left << std::setw(static_cast<int>(width)) << "heuristic" << std::right << std::setw(8)
              << "solved" << std::setw(9) << "speed" << std::setw(8) << "%Ref+" << std::setw(8) << "compl"
              << "\n";
    for (const auto& row : t.rows) {
        std::string gain = row.ref_gain_percent ? fixed(*row.ref_gain_percent, 1) : "n/a";
        std::cout << std::left << std::setw(static_cast<int>(width)) << row.heuristic << std::right << std::setw(8)
                  << row.solved << std::setw(9) << fixed(row.mean_kclauses_per_sec, 2) << std::setw(8) << gain
                  << std::setw(8) << (row.baseline ? std::string("-") : std::to_string(row.complementary))
                  << (row.baseline ? "  (baseline)" : "") << "\n";
    }
    std::cout << t.problems.size() << " problems\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saturation prover with conjecture-similarity clause selection"};
    std::vector<std::string> heuristics;
    std::string problem;
    std::string benchmark_dir;
    std::string baseline = simsel::reference_heuristic();
    simsel::Limits limits;
    limits.time_seconds = 5;
    bool json = false;
    bool derivation = false;
    bool published = false;
    unsigned jobs = 1;

    app.add_option("problem", problem, "TPTP CNF problem file");
    app.add_option("--heuristic", heuristics, "Heuristic (n1*CEF1,...,nk*CEFk); repeatable with --benchmark");
    app.add_option("--timeout", limits.time_seconds, "Wall-clock limit per problem in seconds (0 = none)")
        ->capture_default_str();
    app.add_option("--max-processed", limits.max_processed, "Processed clause limit (0 = none)")->capture_default_str();
    app.add_option("--max-generated", limits.max_generated, "Generated clause limit (0 = none)")->capture_default_str();
    app.add_flag("--json", json, "Machine-readable output");
    app.add_flag("--derivation", derivation, "Print the proof");
    app.add_option("--benchmark", benchmark_dir, "Run every heuristic on every .p file of a directory");
    app.add_option("--baseline", baseline, "Baseline heuristic for %Ref+ and complementarity")->capture_default_str();
    app.add_flag("--published", published, "Benchmark the published top configurations of every weight");
    app.add_option("--jobs", jobs, "Benchmark worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (!benchmark_dir.empty()) {
            if (published || heuristics.empty())
                for (const auto& named : simsel::published_configurations()) heuristics.push_back(named.spec);
            simsel::BenchmarkTable t = simsel::run_benchmark(benchmark_dir, heuristics, baseline, limits, jobs);
            if (json) std::cout << simsel::to_json(t).dump(2) << "\n";
            else print_table(t);
            return 0;
        }
        if (problem.empty()) {
            std::cerr << "no problem file given (see --help)\n";
            return kExitInputError;
        }
        if (heuristics.size() > 1) {
            std::cerr << "a single run takes one --heuristic\n";
            return kExitInputError;
        }
        return prove(problem, heuristics.empty() ? kDefaultHeuristic : heuristics.front(), limits, json, derivation);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
