#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "simsel/heuristic.hpp"
#include "simsel/saturation.hpp"
#include "simsel/tptp.hpp"

namespace simsel {

/// Processed kilo-clauses per second; 0 when no time elapsed.
inline double kclauses_per_second(std::uint64_t processed, double wall_seconds) {
    return wall_seconds > 0 ? static_cast<double>(processed) / (1000.0 * wall_seconds) : 0.0;
}

struct RunReport {
    std::string problem;
    std::string heuristic;
    Outcome outcome = Outcome::saturated;
    /// Set when the problem could not be loaded; outcome is then meaningless.
    std::optional<std::string> error;
    double wall_time = 0;
    std::uint64_t processed = 0;
    std::uint64_t generated = 0;
    double kclauses_per_sec = 0;
    /// Proof listing, filled only on request.
    std::string derivation;

    bool solved() const { return !error && outcome == Outcome::proof; }
};

inline RunReport report_of(const std::string& name, const Heuristic& h, const SaturationResult& r) {
    RunReport rep;
    rep.problem = name;
    rep.heuristic = print_heuristic(h);
    rep.outcome = r.outcome;
    rep.wall_time = r.stats.elapsed_seconds;
    rep.processed = r.stats.processed;
    rep.generated = r.stats.generated;
    rep.kclauses_per_sec = kclauses_per_second(rep.processed, rep.wall_time);
    return rep;
}

/// Parse, saturate and report. Load and parse failures are reported in
/// RunReport::error rather than thrown.
inline RunReport run_problem(const std::string& path, const Heuristic& h, const Limits& limits,
                             bool with_derivation = false) {
    std::string name = std::filesystem::path(path).filename().string();
    Problem problem;
    try {
        problem = load_problem(path);
    } catch (const std::exception& e) {
        RunReport rep;
        rep.problem = name;
        rep.heuristic = print_heuristic(h);
        rep.error = e.what();
        return rep;
    }
    SaturationResult r = saturate(problem.clauses, h, limits);
    RunReport rep = report_of(name, h, r);
    if (with_derivation && r.outcome == Outcome::proof) rep.derivation = print_derivation(r.derivation, problem.signature);
    return rep;
}

struct BenchmarkRow {
    std::string heuristic;
    bool baseline = false;
    std::size_t solved = 0;
    double mean_kclauses_per_sec = 0;
    /// 100 * (solved - solved_baseline) / solved_baseline, one decimal;
    /// empty when the baseline solved nothing.
    std::optional<double> ref_gain_percent;
    /// Problems solved here but not by the baseline.
    std::size_t complementary = 0;
    std::vector<RunReport> runs;
};

struct BenchmarkTable {
    std::vector<std::string> problems;
    Limits limits;
    std::vector<BenchmarkRow> rows;
};

inline std::vector<std::filesystem::path> problem_files(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: '" + dir + "'");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".p") files.push_back(entry.path());
    if (files.empty()) throw std::invalid_argument("no .p problem files in '" + dir + "'");
    std::ranges::sort(files, {}, [](const fs::path& p) { return p.filename().string(); });
    return files;
}

inline double round_one_decimal(double x) { return std::round(x * 10.0) / 10.0; }

/// Runs the baseline and every heuristic on every problem of `dir`. Rows
/// and runs are ordered by heuristic position and problem name regardless
/// of how the work is spread over `jobs` threads.
inline BenchmarkTable run_benchmark(const std::string& dir, const std::vector<std::string>& heuristics,
                                    const std::string& baseline, const Limits& limits, unsigned jobs = 1) {
    auto files = problem_files(dir);
    std::vector<std::string> specs{baseline};
    specs.insert(specs.end(), heuristics.begin(), heuristics.end());
    std::vector<Heuristic> parsed;
    for (const std::string& s : specs) parsed.push_back(parse_heuristic(s));

    struct Loaded {
        std::string name;
        std::optional<Problem> problem;
        std::string error;
    };
    std::vector<Loaded> loaded;
    for (const auto& f : files) {
        Loaded l{f.filename().string(), std::nullopt, {}};
        try {
            l.problem = load_problem(f.string());
        } catch (const std::exception& e) {
            l.error = e.what();
        }
        loaded.push_back(std::move(l));
    }

    const std::size_t n_problems = loaded.size();
    std::vector<RunReport> reports(parsed.size() * n_problems);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t task = cursor++; task < reports.size(); task = cursor++) {
            const Heuristic& h = parsed[task / n_problems];
            const Loaded& l = loaded[task % n_problems];
            if (!l.problem) {
                RunReport rep;
                rep.problem = l.name;
                rep.heuristic = print_heuristic(h);
                rep.error = l.error;
                reports[task] = std::move(rep);
                continue;
            }
            reports[task] = report_of(l.name, h, saturate(l.problem->clauses, h, limits));
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }

    BenchmarkTable table;
    table.limits = limits;
    for (const Loaded& l : loaded) table.problems.push_back(l.name);
    std::set<std::string> baseline_solved;
    for (std::size_t h = 0; h < parsed.size(); ++h) {
        BenchmarkRow row;
        row.heuristic = print_heuristic(parsed[h]);
        row.baseline = h == 0;
        double kcps = 0;
        for (std::size_t p = 0; p < n_problems; ++p) {
            RunReport& rep = reports[h * n_problems + p];
            if (rep.solved()) {
                ++row.solved;
                if (h == 0) baseline_solved.insert(rep.problem);
                else if (!baseline_solved.contains(rep.problem)) ++row.complementary;
            }
            kcps += rep.kclauses_per_sec;
            row.runs.push_back(std::move(rep));
        }
        row.mean_kclauses_per_sec = kcps / static_cast<double>(n_problems);
        table.rows.push_back(std::move(row));
    }
    const std::size_t base = table.rows.front().solved;
    for (BenchmarkRow& row : table.rows) {
        if (base > 0)
            row.ref_gain_percent = round_one_decimal(100.0 * (static_cast<double>(row.solved) - static_cast<double>(base)) /
                                                     static_cast<double>(base));
    }
    return table;
}

/// Fields holding measured durations; everything else in a report is a
/// function of the inputs.
inline const std::vector<std::string>& timing_fields() {
    static const std::vector<std::string> fields{"wall_time_s", "kclauses_per_sec", "mean_kclauses_per_sec"};
    return fields;
}

inline nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j;
    j["problem"] = r.problem;
    j["heuristic"] = r.heuristic;
    j["outcome"] = r.error ? "input_error" : std::string(outcome_name(r.outcome));
    if (r.error) j["error"] = *r.error;
    j["processed"] = r.processed;
    j["generated"] = r.generated;
    j["wall_time_s"] = r.wall_time;
    j["kclauses_per_sec"] = r.kclauses_per_sec;
    return j;
}

inline nlohmann::json to_json(const BenchmarkTable& t) {
    nlohmann::json j;
    j["problems"] = t.problems;
    j["limits"] = {{"time_s", t.limits.time_seconds},
                   {"max_processed", t.limits.max_processed},
                   {"max_generated", t.limits.max_generated}};
    j["rows"] = nlohmann::json::array();
    for (const BenchmarkRow& row : t.rows) {
        nlohmann::json r;
        r["heuristic"] = row.heuristic;
        r["baseline"] = row.baseline;
        r["solved"] = row.solved;
        r["mean_kclauses_per_sec"] = row.mean_kclauses_per_sec;
        r["ref_gain_percent"] = row.ref_gain_percent ? nlohmann::json(*row.ref_gain_percent) : nlohmann::json();
        r["complementary"] = row.complementary;
        r["runs"] = nlohmann::json::array();
        for (const RunReport& run : row.runs) r["runs"].push_back(to_json(run));
        j["rows"].push_back(std::move(r));
    }
    return j;
}

/// Copy of a report with every timing field removed, recursively.
inline nlohmann::json without_timing(nlohmann::json j) {
    if (j.is_object()) {
        for (const std::string& f : timing_fields()) j.erase(f);
        for (auto& [key, value] : j.items()) value = without_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = without_timing(value);
    }
    return j;
}

/// The five best configurations of every similarity weight from the
/// published comparison, plus the conjecture symbol weight reference.
/// Term and Pref take this project's default numeric arguments.
struct NamedHeuristic {
    std::string label;
    std::string spec;
};

inline const std::string& reference_heuristic() {
    static const std::string ref = "(1*Ref(ConstPrio,0.5,2,1,1,1))";
    return ref;
}

inline std::vector<NamedHeuristic> published_configurations() {
    std::vector<NamedHeuristic> out;
    auto add = [&](std::string label, std::string cef) { out.push_back({std::move(label), "(1*" + cef + ")"}); };
    for (auto vre : {"Uni,Gen,Sum", "Alf,Gen,Sum", "Uni,Sub,Sum", "Uni,Ter,Sum", "Alf,Ter,Sum"})
        add(std::string("Term ") + vre, std::string("ConjectureTermWeight(ConstPrio,") + vre + ",0.5,2,1,1,1)");
    for (auto [vre, doc] : {std::pair{"Alf,Gen,Sum", "pro"}, {"Alf,Gen,Sum", "ax"}, {"Uni,Gen,Sum", "pro"},
                            {"Uni,Gen,Sum", "ax"}, {"Uni,Ter,Sum", "pro"}})
        add(std::string("Tfidf ") + vre + " " + doc,
            std::string("ConjectureTfIdfWeight(ConstPrio,") + vre + "," + doc + ")");
    for (auto vre : {"Alf,Gen,Sum", "Alf,Top,Sum", "Uni,Gen,Sum", "Alf,Gen,Sim", "Uni,Sub,Sum"})
        add(std::string("Pref ") + vre, std::string("ConjecturePrefixWeight(ConstPrio,") + vre + ",1,3)");
    for (auto [vre, code] : {std::pair{"Uni,Gen,Sim", "155"}, {"Alf,Gen,Sim", "155"}, {"Alf,Gen,Sim", "151"},
                             {"Alf,Gen,Sim", "111"}, {"Uni,Gen,Sim", "151"}})
        add(std::string("Lev ") + vre + " " + code, std::string("ConjectureLevWeight(ConstPrio,") + vre + "," + code + ")");
    for (auto [vre, code] : {std::pair{"Alf,Gen,Sim", "511"}, {"Alf,Gen,Sim", "111"}, {"Uni,Gen,Sum", "155"},
                             {"Alf,Gen,Sum", "155"}, {"Alf,Gen,Sim", "155"}})
        add(std::string("Ted ") + vre + " " + code, std::string("ConjectureTedWeight(ConstPrio,") + vre + "," + code + ")");
    for (auto [vre, code] : {std::pair{"Uni,Ter,Sim", "115"}, {"Alf,Ter,Sim", "115"}, {"Uni,Sub,Sum", "115"},
                             {"Alf,Sub,Sum", "115"}, {"Uni,Sub,Sim", "115"}})
        add(std::string("Struc ") + vre + " " + code,
            std::string("ConjectureStrucWeight(ConstPrio,") + vre + "," + code + ")");
    out.push_back({"Ref", reference_heuristic()});
    return out;
}

}  // namespace simsel
