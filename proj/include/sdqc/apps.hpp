#pragma once

// Application-level evaluation: space cost, execution time, success rate,
// sweeps and the minimum improvement factor reaching a success target.

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sdqc/config.hpp"
#include "sdqc/error.hpp"
#include "sdqc/errors.hpp"
#include "sdqc/layout.hpp"
#include "sdqc/schedule.hpp"

namespace sdqc {

struct ApplicationSpec {
    std::string name;
    long long n_logical = 0;
    double n_layer = 0;   // logical layers per shot
    double n_gate = 0;    // logical two-qubit gates per shot
    double n_idle = 0;    // idle logical-qubit-layers per shot
    double n_shots = 1;
    long long max_gates_per_layer = 0;
};

inline const ApplicationSpec& fermi_hubbard() {
    static const ApplicationSpec app{"fermi-hubbard", 132, 8787, 331024, 828860, 10000, 42};
    return app;
}

inline const ApplicationSpec& ecdlp() {
    static const ApplicationSpec app{"ecdlp", 2871, 1.4 * 134217728.0, 1.4 * 17179869184.0, 4.91e11, 1, 343};
    return app;
}

inline std::optional<ApplicationSpec> find_application(std::string_view name) {
    if (name == "fermi" || name == "fermi-hubbard" || name == "fh") return fermi_hubbard();
    if (name == "ecdlp" || name == "shor") return ecdlp();
    return std::nullopt;
}

struct SpaceCost {
    long long data = 0;
    long long syndrome_extraction = 0;
    long long gate_teleportation = 0;
    long long total = 0;
    long long n_spare_used = 0;
};

inline SpaceCost space_cost(ArchKind arch, const ApplicationSpec& app, const CodeCounts& c, long long n_spare) {
    if (n_spare < 0) throw DomainError("n_spare must be nonnegative");
    const long long nl = app.n_logical;
    const long long g = app.max_gates_per_layer;
    SpaceCost s;
    s.data = c.n_d * nl;
    switch (arch) {
    case ArchKind::SDQC:
        s.syndrome_extraction = 2LL * c.n_a * nl;
        s.gate_teleportation = 2 * (c.n_d + n_spare) * g;
        s.n_spare_used = n_spare;
        break;
    case ArchKind::QCCD:
        s.syndrome_extraction = 2LL * c.n_a * nl;
        break;
    case ArchKind::PhotonicDQC:
        s.syndrome_extraction = (2LL * c.n_a + 2LL * c.n_seg) * nl;
        s.gate_teleportation = 2LL * c.n_d * g;
        break;
    }
    s.total = s.data + s.syndrome_extraction + s.gate_teleportation;
    return s;
}

struct SuccessRate {
    double central = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool saturated = false;
};

namespace detail {

inline double success_from(const ApplicationSpec& app, double p_l, double p_idle, bool& saturated) {
    if (2.0 * p_l >= 1.0 || p_idle >= 1.0) {
        saturated = true;
        return 0.0;
    }
    return std::exp(app.n_gate * std::log1p(-2.0 * p_l) + app.n_idle * std::log1p(-p_idle));
}

} // namespace detail

// Logical gates count twice: one gate can corrupt two logical qubits.
inline SuccessRate success_rate(const ApplicationSpec& app, const LogicalErrorEstimate& p_logical,
                                const LogicalErrorEstimate& p_idle) {
    SuccessRate r;
    bool sat_c = false, sat_l = false, sat_u = false;
    r.central = detail::success_from(app, p_logical.central, p_idle.central, sat_c);
    r.lower = detail::success_from(app, p_logical.upper, p_idle.upper, sat_l);
    r.upper = detail::success_from(app, p_logical.lower, p_idle.lower, sat_u);
    r.saturated = sat_c;
    return r;
}

inline double success_rate(const ApplicationSpec& app, double p_logical, double p_idle) {
    bool sat = false;
    return detail::success_from(app, p_logical, p_idle, sat);
}

struct ExecutionTime {
    double seconds = 0.0;
    double days() const { return seconds / 86400.0; }
};

inline ExecutionTime execution_time(const ApplicationSpec& app, const ScheduleResult& sched) {
    return {app.n_layer * sched.t_logical_clock * 1e-6 * app.n_shots};
}

struct EvalOptions {
    std::optional<long long> n_spare; // overrides spare sizing (SDQC)
    double spare_fraction = 0.01;     // loss budget relative to p_trans
};

struct EvalResult {
    std::string app;
    Scenario scenario;
    CodeCounts counts;
    RoutingMetrics routing;
    ScheduleResult schedule;
    TransversalErrorBreakdown transversal;
    std::optional<LossModel> loss;
    std::optional<SpaceCost> space;
    LogicalErrorEstimate p_logical;
    LogicalErrorEstimate p_idle_logical;
    SuccessRate success;
    ExecutionTime t_exec;
    std::string note; // partial failures, e.g. spare sizing
};

// Builds the scenario an application runs in: the app fixes n_logical.
inline Scenario app_scenario(const ApplicationSpec& app, Scenario base) {
    base.n_logical = app.n_logical;
    return base;
}

inline EvalResult evaluate(const ApplicationSpec& app, const Scenario& base, const EvalOptions& opt = {}) {
    EvalResult r;
    r.app = app.name;
    r.scenario = app_scenario(app, base);
    validate(r.scenario);
    const Scenario& s = r.scenario;
    const ArchKind arch = s.architecture.kind;
    r.counts = code_qubit_counts(s.code_distance);
    r.routing = routing_metrics(arch, r.counts, s.n_logical);
    r.schedule = schedule(s);
    r.transversal = transversal_gate_error(s, r.schedule, r.routing);
    if (r.transversal.saturated) r.note = "transversal error saturated";

    const auto& fit = fit_params(arch, s.code_distance);
    r.p_logical = logical_error(fit, r.transversal.p_trans, s.improvements.lambda_se);
    r.p_idle_logical = logical_error(fit, 0.0, s.improvements.lambda_se);
    r.success = success_rate(app, r.p_logical, r.p_idle_logical);
    r.t_exec = execution_time(app, r.schedule);

    try {
        long long spares = 0;
        if (arch == ArchKind::SDQC) {
            if (opt.n_spare) {
                spares = *opt.n_spare;
            } else {
                r.loss = loss_model(s, r.routing, r.transversal.p_trans, opt.spare_fraction);
                spares = r.loss->n_spare;
            }
        }
        r.space = space_cost(arch, app, r.counts, spares);
    } catch (const DomainError& e) {
        if (!r.note.empty()) r.note += "; ";
        r.note += std::string("spare sizing failed: ") + e.what();
    }
    return r;
}

// ---------------------------------------------------------------------------

struct SweepRow {
    ArchKind arch;
    int d;
    double lambda;
    std::optional<EvalResult> result;
    std::string error;
};

// One row per (arch, d, lambda); d outer, lambda inner within each
// architecture. lambda_se follows lambda. Rows are evaluated concurrently;
// ordering does not depend on `threads`.
inline std::vector<SweepRow> sweep(const ApplicationSpec& app, const std::vector<ArchKind>& archs,
                                   const std::vector<int>& d_grid, const std::vector<double>& lambda_grid,
                                   const Scenario& base = {}, unsigned threads = 0) {
    std::vector<SweepRow> rows;
    for (auto a : archs)
        for (int d : d_grid)
            for (double lam : lambda_grid) rows.push_back({a, d, lam, std::nullopt, {}});
    if (rows.empty()) return rows;

    auto run = [&](std::size_t i) {
        auto& row = rows[i];
        try {
            Scenario s = base;
            s.architecture.kind = row.arch;
            if (row.arch != ArchKind::SDQC) s.architecture.purification_enabled = false;
            s.code_distance = row.d;
            s.improvements = {row.lambda, row.lambda};
            row.result = evaluate(app, s);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w)
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < rows.size(); i += threads) run(i);
        }));
    for (auto& f : workers) f.get();
    return rows;
}

// ---------------------------------------------------------------------------

struct FrontierResult {
    bool reachable = false;
    double lambda_star = 0.0;
    double success_at_star = 0.0;
};

inline constexpr double kLambdaMin = 0.1;
inline constexpr double kLambdaMax = 1000.0;

// Central success with lambda applied to every base rate and to syndrome
// extraction.
inline double success_at(const ApplicationSpec& app, Scenario s, double lambda) {
    s = app_scenario(app, s);
    s.improvements = {lambda, lambda};
    const auto counts = code_qubit_counts(s.code_distance);
    const auto routing = routing_metrics(s.architecture.kind, counts, s.n_logical);
    const auto sched = schedule(s);
    const auto tr = transversal_gate_error(s, sched, routing);
    const auto& fit = fit_params(s.architecture.kind, s.code_distance);
    return success_rate(app, logical_error(fit, tr.p_trans, lambda).central, logical_error(fit, 0.0, lambda).central);
}

// Rounds a positive value up to `digits` significant figures.
inline double ceil_sig(double x, int digits) {
    if (x <= 0.0) return x;
    double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(x))));
    return std::ceil(x * mag - 1e-9) / mag;
}

inline FrontierResult min_improvement_for_target(const ApplicationSpec& app, ArchKind arch, int d,
                                                 double target = 0.90, Scenario base = {}) {
    if (!(target >= 0.0 && target < 1.0)) throw DomainError("target must lie in [0, 1)");
    base.architecture.kind = arch;
    if (arch != ArchKind::SDQC) base.architecture.purification_enabled = false;
    base.code_distance = d;

    constexpr int kSamples = 25;
    double prev_lam = 0.0, prev = -1.0;
    for (int i = 0; i < kSamples; ++i) {
        double lam = kLambdaMin * std::pow(kLambdaMax / kLambdaMin, static_cast<double>(i) / (kSamples - 1));
        double v = success_at(app, base, lam);
        if (v + 1e-12 < prev)
            throw DomainError("success not monotone in lambda: " + std::to_string(prev) + " at " +
                              std::to_string(prev_lam) + " > " + std::to_string(v) + " at " + std::to_string(lam));
        prev = v;
        prev_lam = lam;
    }

    FrontierResult r;
    double lo_s = success_at(app, base, kLambdaMin);
    if (lo_s >= target) return {true, kLambdaMin, lo_s};
    double hi_s = success_at(app, base, kLambdaMax);
    if (hi_s < target) return {false, kLambdaMax, hi_s};

    double lo = std::log(kLambdaMin), hi = std::log(kLambdaMax);
    while (hi - lo > 1e-5) {
        double mid = 0.5 * (lo + hi);
        if (success_at(app, base, std::exp(mid)) >= target) hi = mid;
        else lo = mid;
    }
    r.reachable = true;
    r.lambda_star = ceil_sig(std::exp(hi), 3);
    r.success_at_star = success_at(app, base, r.lambda_star);
    return r;
}

} // namespace sdqc
