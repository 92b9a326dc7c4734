#pragma once

// Command-line front end. run_cli() does all the work so the test suite can
// drive it in-process; tools/sdqc_cli.cpp is a thin main().

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdqc/apps.hpp"
#include "sdqc/config.hpp"
#include "sdqc/error.hpp"
#include "sdqc/errors.hpp"
#include "sdqc/layout.hpp"
#include "sdqc/report.hpp"
#include "sdqc/schedule.hpp"
#include "sdqc/validation.hpp"

namespace sdqc::cli {

using json = nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kValidationFailed = 2 };

// Usage errors raised after CLI11 has finished parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

inline double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + " value '" + s + "'");
    }
}

inline int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + " value '" + s + "'");
    }
}

// "1,10,100" or "log:a:b:n" (n log-spaced points from a to b inclusive).
inline std::vector<double> parse_lambda_grid(const std::string& text) {
    if (text.rfind("log:", 0) == 0) {
        auto parts = split(text.substr(4), ':');
        if (parts.size() != 3) throw UsageError("lambda grid must look like log:a:b:n");
        double a = to_double(parts[0], "lambda"), b = to_double(parts[1], "lambda");
        int n = to_int(parts[2], "lambda grid size");
        if (!(a > 0 && b > 0) || n < 1) throw UsageError("log grid needs positive bounds and n >= 1");
        std::vector<double> v;
        for (int i = 0; i < n; ++i)
            v.push_back(n == 1 ? a : a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
        return v;
    }
    std::vector<double> v;
    for (const auto& p : split(text, ',')) v.push_back(to_double(p, "lambda"));
    return v;
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> v;
    for (const auto& p : split(text, ',')) v.push_back(to_int(p, what));
    if (v.empty()) throw UsageError("empty " + what + " list");
    return v;
}

inline std::vector<ArchKind> parse_archs(const std::string& text) {
    std::vector<ArchKind> v;
    for (const auto& p : split(text, ',')) {
        if (p == "all") {
            for (auto k : kAllArchs)
                if (std::find(v.begin(), v.end(), k) == v.end()) v.push_back(k);
            continue;
        }
        auto k = parse_arch(p);
        if (!k) throw UsageError("unknown architecture '" + p + "' (expected sdqc, qccd, photonic or all)");
        if (std::find(v.begin(), v.end(), *k) == v.end()) v.push_back(*k);
    }
    if (v.empty()) throw UsageError("empty architecture list");
    return v;
}

inline const ApplicationSpec& parse_app(const std::string& name) {
    static std::map<std::string, ApplicationSpec> cache;
    auto app = find_application(name);
    if (!app) throw UsageError("unknown application '" + name + "' (expected fermi-hubbard or ecdlp)");
    return cache[app->name] = *app;
}

template <class T, class F>
std::vector<T> unique_values(const std::vector<Scenario>& v, F get) {
    std::vector<T> out;
    for (const auto& s : v) {
        T x = get(s);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

struct Options {
    std::string config;
    std::vector<std::string> overrides;
    std::string format = "csv";
    std::string out;

    std::string arch;
    std::string distances;
    std::string lambdas;
    std::string lambda_se;
    std::string n_logical;
    std::string p_trans;
    std::string app;
    std::optional<long long> spares;
    bool unpipelined = false;
    double target = 0.90;
    unsigned threads = 0;
    std::uint64_t seed = 42;
    long long trials = 10'000'000;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
        json doc = json::object();
        if (auto path = resolve_config_path(o.config)) doc = read_config_document(*path);
        for (const auto& s : o.overrides) apply_override(doc, s);
        scenarios_ = scenarios_from_json(doc);
        base_ = scenarios_.front();
    }

    std::vector<ArchKind> archs(const char* fallback = nullptr) const {
        if (!o_.arch.empty()) return parse_archs(o_.arch);
        if (fallback) return parse_archs(fallback);
        return unique_values<ArchKind>(scenarios_, [](const Scenario& s) { return s.architecture.kind; });
    }
    std::vector<int> distances(const char* fallback = nullptr) const {
        if (!o_.distances.empty()) return parse_int_list(o_.distances, "code distance");
        if (fallback) return parse_int_list(fallback, "code distance");
        return unique_values<int>(scenarios_, [](const Scenario& s) { return s.code_distance; });
    }
    std::vector<double> lambdas(const char* fallback = nullptr) const {
        if (!o_.lambdas.empty()) return parse_lambda_grid(o_.lambdas);
        if (fallback) return parse_lambda_grid(fallback);
        return unique_values<double>(scenarios_, [](const Scenario& s) { return s.improvements.lambda; });
    }
    std::vector<long long> n_logicals() const {
        if (o_.n_logical.empty())
            return unique_values<long long>(scenarios_, [](const Scenario& s) { return s.n_logical; });
        std::vector<long long> v;
        for (int x : parse_int_list(o_.n_logical, "n_logical")) v.push_back(x);
        return v;
    }

    Scenario scenario(ArchKind arch, int d, double lambda, long long n_logical) const {
        Scenario s = base_;
        s.architecture.kind = arch;
        if (arch != ArchKind::SDQC) s.architecture.purification_enabled = false;
        s.code_distance = d;
        s.n_logical = n_logical;
        s.improvements = {lambda, o_.lambda_se.empty() ? lambda : to_double(o_.lambda_se, "lambda_se")};
        validate(s);
        return s;
    }

    bool as_json() const { return o_.format == "json"; }

    int layout() {
        json docs = json::array();
        report::CsvWriter w(out_);
        if (!as_json()) w.row(report::layout_columns());
        for (auto arch : archs("sdqc"))
            for (int d : distances("3,5,7,9,11,13")) {
                auto l = chain_mapping(arch, d);
                if (as_json()) {
                    json j = report::to_json(l);
                    j["counts"] = report::to_json(code_qubit_counts(d));
                    docs.push_back(j);
                } else {
                    report::layout_rows(w, l);
                }
            }
        if (as_json()) out_ << docs.dump(2) << '\n';
        return kOk;
    }

    int timing() {
        json docs = json::array();
        report::CsvWriter w(out_);
        if (!as_json()) w.row(report::timing_columns());
        for (auto arch : archs("all"))
            for (long long nl : n_logicals())
                for (int d : distances()) {
                    auto s = scenario(arch, d, base_.improvements.lambda, nl);
                    auto r = schedule(s, !o_.unpipelined);
                    if (as_json()) {
                        json j = report::to_json(r);
                        j["arch"] = std::string(to_string(arch));
                        j["n_logical"] = nl;
                        j["d"] = d;
                        docs.push_back(j);
                    } else {
                        w.row(report::timing_cells(s, r));
                    }
                }
        if (as_json()) out_ << docs.dump(2) << '\n';
        return kOk;
    }

    int errors() {
        json docs = json::array();
        report::CsvWriter w(out_);
        if (!as_json()) w.row(report::error_columns());
        auto emit = [&](std::string_view mode, const Scenario& s, double p, const TransversalErrorBreakdown* tb) {
            const auto& fit = fit_params(s.architecture.kind, s.code_distance);
            auto e = logical_error(fit, p, s.improvements.lambda_se);
            double p_star = crossover(fit, s.improvements.lambda_se);
            if (as_json()) {
                json j = {{"mode", mode},
                          {"arch", std::string(to_string(s.architecture.kind))},
                          {"d", s.code_distance},
                          {"lambda", s.improvements.lambda},
                          {"lambda_se", s.improvements.lambda_se},
                          {"p_trans", p},
                          {"crossover", p_star},
                          {"p_logical", report::to_json(e)}};
                if (tb) {
                    j["n_logical"] = s.n_logical;
                    j["transversal"] = report::to_json(*tb);
                }
                docs.push_back(j);
            } else {
                w.row(report::error_cells(mode, s, p, e, p_star));
            }
        };
        std::vector<double> fixed;
        for (const auto& p : split(o_.p_trans, ',')) fixed.push_back(to_double(p, "p_trans"));
        for (auto arch : archs())
            for (int d : distances())
                for (double lam : lambdas()) {
                    if (!fixed.empty()) {
                        auto s = scenario(arch, d, lam, base_.n_logical);
                        for (double p : fixed) emit("p_trans", s, p, nullptr);
                        continue;
                    }
                    for (long long nl : n_logicals()) {
                        auto s = scenario(arch, d, lam, nl);
                        auto tb = transversal_gate_error(s);
                        emit("n_logical", s, tb.p_trans, &tb);
                    }
                }
        if (as_json()) out_ << docs.dump(2) << '\n';
        return kOk;
    }

    int evaluate_cmd() {
        const auto& app = require_app();
        EvalOptions opt;
        opt.n_spare = o_.spares;
        json docs = json::array();
        report::CsvWriter w(out_);
        if (!as_json()) w.row(report::eval_columns());
        for (auto arch : archs())
            for (int d : distances())
                for (double lam : lambdas()) {
                    auto r = evaluate(app, scenario(arch, d, lam, app.n_logical), opt);
                    if (as_json()) docs.push_back(report::to_json(r));
                    else w.row(report::eval_cells(r));
                }
        if (as_json()) out_ << (docs.size() == 1 ? docs.front() : docs).dump(2) << '\n';
        return kOk;
    }

    int sweep_cmd() {
        const auto& app = require_app();
        auto rows = sweep(app, archs("all"), distances("3,5,7,9,11,13"), lambdas("log:0.1:1000:25"), base_, o_.threads);
        if (as_json()) {
            json docs = json::array();
            for (const auto& r : rows) docs.push_back(report::to_json(app.name, r));
            out_ << docs.dump(2) << '\n';
            return kOk;
        }
        report::CsvWriter w(out_);
        w.row(report::eval_columns());
        for (const auto& r : rows) w.row(r.result ? report::eval_cells(*r.result) : report::failed_cells(app.name, r));
        return kOk;
    }

    int frontier() {
        const auto& app = require_app();
        if (!(o_.target >= 0.0 && o_.target < 1.0)) throw UsageError("--target must lie in [0, 1)");
        json docs = json::array();
        report::CsvWriter w(out_);
        if (!as_json()) w.row(report::frontier_columns());
        for (auto arch : archs("all"))
            for (int d : distances()) {
                auto r = min_improvement_for_target(app, arch, d, o_.target, base_);
                if (as_json()) {
                    docs.push_back({{"app", app.name},
                                    {"arch", std::string(to_string(arch))},
                                    {"d", d},
                                    {"target", o_.target},
                                    {"reachable", r.reachable},
                                    {"lambda_star", r.reachable ? json(r.lambda_star) : json(nullptr)},
                                    {"success_at_star", r.success_at_star}});
                } else {
                    w.row({app.name, std::string(to_string(arch)), report::num(d), report::num(o_.target),
                           r.reachable ? "true" : "false", r.reachable ? report::num(r.lambda_star) : "",
                           report::num(r.success_at_star)});
                }
            }
        if (as_json()) out_ << docs.dump(2) << '\n';
        return kOk;
    }

    int validate_cmd() {
        if (o_.trials < 1) throw UsageError("--trials must be positive");
        auto cases = validate(ValidationOptions{o_.seed, o_.trials});
        bool all = std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
        if (as_json()) {
            json docs = json::array();
            for (const auto& c : cases)
                docs.push_back({{"criterion", c.criterion},
                                {"id", c.id},
                                {"description", c.description},
                                {"expected", c.expected},
                                {"tolerance", c.tolerance_text()},
                                {"actual", std::isnan(c.actual) ? json(nullptr) : json(c.actual)},
                                {"pass", c.pass},
                                {"citation", c.citation},
                                {"error", c.error}});
            out_ << json{{"pass", all}, {"cases", docs}}.dump(2) << '\n';
        } else {
            report::CsvWriter w(out_);
            w.row({"criterion", "id", "description", "expected", "tolerance", "actual", "pass", "citation", "error"});
            for (const auto& c : cases)
                w.row({report::num(c.criterion), c.id, c.description, report::num(c.expected), c.tolerance_text(),
                       std::isnan(c.actual) ? "" : report::num(c.actual), c.pass ? "pass" : "FAIL", c.citation,
                       c.error});
        }
        return all ? kOk : kValidationFailed;
    }

private:
    const ApplicationSpec& require_app() const {
        if (o_.app.empty()) throw UsageError("--app is required (fermi-hubbard or ecdlp)");
        return parse_app(o_.app);
    }

    const Options& o_;
    std::ostream& out_;
    std::vector<Scenario> scenarios_;
    Scenario base_;
};

} // namespace detail

// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Resource estimates for trapped-ion fault-tolerant architectures", "sdqc"};
    app.require_subcommand(1, 1);
    app.option_defaults()->always_capture_default();

    app.add_option("--config", o.config, "JSON configuration file (defaults to $SDQC_CONFIG)");
    app.add_option("--set", o.overrides, "Override a config field, key.path=value (repeatable)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out, "Write output to this file instead of stdout");

    auto grid = [&](CLI::App* sub, bool with_lambda) {
        sub->add_option("--arch", o.arch, "sdqc, qccd, photonic, all, or a comma list");
        sub->add_option("-d,--distance", o.distances, "Comma-separated odd code distances");
        if (with_lambda) {
            sub->add_option("--lambda", o.lambdas, "Improvement factors: list or log:a:b:n");
            sub->add_option("--lambda-se", o.lambda_se, "Syndrome-extraction improvement (defaults to lambda)");
        }
    };

    auto* layout = app.add_subcommand("layout", "Qubit counts and chain mapping per code distance");
    grid(layout, false);
    auto* timing = app.add_subcommand("timing", "Remote-gate, syndrome-round and logical-clock latency");
    grid(timing, false);
    timing->add_option("--n-logical", o.n_logical, "Comma-separated logical qubit counts");
    timing->add_flag("--unpipelined", o.unpipelined, "Put every operation on the critical path");
    auto* errors = app.add_subcommand("errors", "Transversal and logical error rates");
    grid(errors, true);
    errors->add_option("--n-logical", o.n_logical, "Comma-separated logical qubit counts");
    errors->add_option("--p-trans", o.p_trans, "Evaluate at these transversal error rates instead");
    auto* evaluate = app.add_subcommand("evaluate", "Full application evaluation at given points");
    grid(evaluate, true);
    evaluate->add_option("--app", o.app, "fermi-hubbard or ecdlp")->required();
    evaluate->add_option("--spares", o.spares, "Fix the SDQC spare count instead of sizing it");
    auto* sweep = app.add_subcommand("sweep", "Application evaluation over a (d, lambda) grid");
    grid(sweep, true);
    sweep->add_option("--app", o.app, "fermi-hubbard or ecdlp")->required();
    sweep->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
    auto* frontier = app.add_subcommand("frontier", "Smallest lambda reaching a success target");
    grid(frontier, false);
    frontier->add_option("--app", o.app, "fermi-hubbard or ecdlp")->required();
    frontier->add_option("--target", o.target, "Success target in [0, 1)");
    auto* val = app.add_subcommand("validate", "Run the reference-value validation suite");
    val->add_option("--seed", o.seed, "Monte Carlo seed");
    val->add_option("--trials", o.trials, "Monte Carlo trials");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "error: cannot open '" << o.out << "' for writing\n";
            return kUsage;
        }
    }
    std::ostream& dest = o.out.empty() ? out : file;

    try {
        detail::Runner run(o, dest);
        if (layout->parsed()) return run.layout();
        if (timing->parsed()) return run.timing();
        if (errors->parsed()) return run.errors();
        if (evaluate->parsed()) return run.evaluate_cmd();
        if (sweep->parsed()) return run.sweep_cmd();
        if (frontier->parsed()) return run.frontier();
        return run.validate_cmd();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace sdqc::cli
