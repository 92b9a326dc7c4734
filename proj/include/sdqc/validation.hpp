#pragma once

// Reference-value validation. Each case records what was expected, how close
// the computed value has to be, and whether it got there. Failures are data:
// validate() never throws for a failing check, and an exception inside one
// check is recorded as a failing case.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sdqc/apps.hpp"
#include "sdqc/config.hpp"
#include "sdqc/errors.hpp"
#include "sdqc/layout.hpp"
#include "sdqc/oracles.hpp"
#include "sdqc/schedule.hpp"

namespace sdqc {

enum class Tolerance { Exact, Absolute, Relative, Band, AtMost, AtLeast };

struct ValidationCase {
    int criterion = 0;
    std::string id;
    std::string description;
    double expected = 0.0;
    Tolerance kind = Tolerance::Exact;
    double tol = 0.0;   // Absolute / Relative
    double lo = 0.0;    // Band
    double hi = 0.0;    // Band
    double actual = std::numeric_limits<double>::quiet_NaN();
    bool pass = false;
    std::string citation;
    std::string error; // set when the computation itself threw

    std::string tolerance_text() const {
        switch (kind) {
        case Tolerance::Exact: return "exact";
        case Tolerance::Absolute: return "abs " + report_num(tol);
        case Tolerance::Relative: return "rel " + report_num(tol);
        case Tolerance::Band: return "[" + report_num(lo) + ", " + report_num(hi) + "]";
        case Tolerance::AtMost: return "<= " + report_num(expected);
        case Tolerance::AtLeast: return ">= " + report_num(expected);
        }
        return "";
    }

    void evaluate() {
        if (!error.empty() || std::isnan(actual)) {
            pass = false;
            return;
        }
        switch (kind) {
        case Tolerance::Exact: pass = actual == expected; break;
        case Tolerance::Absolute: pass = std::fabs(actual - expected) <= tol; break;
        case Tolerance::Relative: pass = std::fabs(actual - expected) <= tol * std::fabs(expected); break;
        case Tolerance::Band: pass = actual >= lo && actual <= hi; break;
        case Tolerance::AtMost: pass = actual <= expected; break;
        case Tolerance::AtLeast: pass = actual >= expected; break;
        }
    }

private:
    static std::string report_num(double v) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }
};

struct ValidationOptions {
    std::uint64_t seed = 42;
    long long monte_carlo_trials = 10'000'000;
};

inline const char* criterion_title(int c) {
    switch (c) {
    case 1: return "layout exactness";
    case 2: return "space cost exactness";
    case 3: return "fit-model crossover consistency";
    case 4: return "logical-error floors";
    case 5: return "application success rates";
    case 6: return "execution times and speedups";
    case 7: return "factory throughput and demand";
    case 8: return "loss-probability oracle equivalence";
    case 9: return "property suite";
    case 10: return "headline logical-error ratios";
    }
    return "?";
}

namespace detail {

class CaseBuilder {
public:
    explicit CaseBuilder(std::vector<ValidationCase>& out) : out_(out) {}

    using Fn = std::function<double()>;

    void exact(int c, std::string id, std::string desc, double expected, const Fn& f, std::string cite) {
        push(c, std::move(id), std::move(desc), expected, Tolerance::Exact, 0, 0, 0, f, std::move(cite));
    }
    void absolute(int c, std::string id, std::string desc, double expected, double tol, const Fn& f,
                  std::string cite) {
        push(c, std::move(id), std::move(desc), expected, Tolerance::Absolute, tol, 0, 0, f, std::move(cite));
    }
    void relative(int c, std::string id, std::string desc, double expected, double tol, const Fn& f,
                  std::string cite) {
        push(c, std::move(id), std::move(desc), expected, Tolerance::Relative, tol, 0, 0, f, std::move(cite));
    }
    void band(int c, std::string id, std::string desc, double expected, double lo, double hi, const Fn& f,
              std::string cite) {
        push(c, std::move(id), std::move(desc), expected, Tolerance::Band, 0, lo, hi, f, std::move(cite));
    }
    void at_most(int c, std::string id, std::string desc, double bound, const Fn& f, std::string cite) {
        push(c, std::move(id), std::move(desc), bound, Tolerance::AtMost, 0, 0, 0, f, std::move(cite));
    }
    void at_least(int c, std::string id, std::string desc, double bound, const Fn& f, std::string cite) {
        push(c, std::move(id), std::move(desc), bound, Tolerance::AtLeast, 0, 0, 0, f, std::move(cite));
    }

private:
    void push(int c, std::string id, std::string desc, double expected, Tolerance kind, double tol, double lo,
              double hi, const Fn& f, std::string cite) {
        ValidationCase v;
        v.criterion = c;
        v.id = std::move(id);
        v.description = std::move(desc);
        v.expected = expected;
        v.kind = kind;
        v.tol = tol;
        v.lo = lo;
        v.hi = hi;
        v.citation = std::move(cite);
        try {
            v.actual = f();
        } catch (const std::exception& e) {
            v.error = e.what();
        }
        v.evaluate();
        out_.push_back(std::move(v));
    }

    std::vector<ValidationCase>& out_;
};

inline Scenario scenario_for(ArchKind arch, int d, double lambda, long long n_logical = 2871) {
    Scenario s;
    s.architecture.kind = arch;
    s.code_distance = d;
    s.n_logical = n_logical;
    s.improvements = {lambda, lambda};
    return s;
}

inline std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a * std::pow(b / a, n == 1 ? 0.0 : static_cast<double>(i) / (n - 1)));
    return v;
}

inline LogicalErrorEstimate logical_at(ArchKind arch, int d, double lambda, long long n_logical) {
    auto s = scenario_for(arch, d, lambda, n_logical);
    return logical_error(arch, d, transversal_gate_error(s).p_trans, lambda);
}

// --- criterion 1 ----------------------------------------------------------

struct LayoutReference {
    int d;
    int n_ph, n_d, n_a, n_seg, n_nonseg, n_c;
    std::vector<ChainLoad> chains;
};

inline const std::vector<LayoutReference>& layout_reference() {
    static const std::vector<LayoutReference> ref{
        {3, 13, 7, 6, 0, 6, 1, {{7, 6, 0}}},
        {5, 37, 19, 18, 0, 18, 1, {{19, 18, 0}}},
        {7, 73, 37, 36, 10, 26, 2, {{15, 10, 5}, {22, 16, 5}}},
        {9, 121, 61, 60, 22, 38, 3, {{15, 10, 5}, {24, 12, 11}, {22, 16, 6}}},
        {11, 181, 91, 90, 38, 52, 4, {{15, 10, 5}, {25, 12, 13}, {29, 14, 14}, {22, 16, 6}}},
        {13, 253, 127, 126, 74, 52, 6,
         {{15, 10, 5}, {25, 12, 13}, {17, 0, 17}, {19, 0, 18}, {29, 14, 15}, {22, 16, 6}}},
    };
    return ref;
}

inline void layout_cases(CaseBuilder& b) {
    const std::string cite = "ref:layout-table";
    for (const auto& r : layout_reference()) {
        const std::string p = "1.layout.d" + std::to_string(r.d) + ".";
        const std::string dd = " at d=" + std::to_string(r.d);
        b.exact(1, p + "n_ph", "physical qubits per logical qubit" + dd, r.n_ph,
                [&] { return code_qubit_counts(r.d).n_ph; }, cite);
        b.exact(1, p + "n_d", "data qubits" + dd, r.n_d, [&] { return code_qubit_counts(r.d).n_d; }, cite);
        b.exact(1, p + "n_a", "syndrome qubits" + dd, r.n_a, [&] { return code_qubit_counts(r.d).n_a; }, cite);
        b.exact(1, p + "n_seg", "segmented syndrome qubits" + dd, r.n_seg,
                [&] { return code_qubit_counts(r.d).n_seg; }, cite);
        b.exact(1, p + "n_nonseg", "non-segmented syndrome qubits" + dd, r.n_nonseg,
                [&] { return code_qubit_counts(r.d).n_nonseg; }, cite);
        b.exact(1, p + "n_c", "chains per logical qubit" + dd, r.n_c, [&] { return code_qubit_counts(r.d).n_c; },
                cite);
        b.exact(1, p + "cells", "mismatching chain-mapping cells" + dd, 0,
                [&] {
                    auto l = chain_mapping(ArchKind::SDQC, r.d);
                    if (l.chains.size() != r.chains.size()) return 1e9;
                    int bad = 0;
                    for (std::size_t i = 0; i < r.chains.size(); ++i) {
                        bad += l.chains[i].data != r.chains[i].data;
                        bad += l.chains[i].nonseg != r.chains[i].nonseg;
                        bad += l.chains[i].seg != r.chains[i].seg;
                    }
                    return static_cast<double>(bad);
                },
                cite);
    }
    b.exact(1, "1.layout.d13.max_chain", "largest chain at d=13", 58,
            [] { return chain_mapping(ArchKind::SDQC, 13).max_occupancy(); }, cite);
}

// --- criterion 2 ----------------------------------------------------------

inline void space_cases(CaseBuilder& b) {
    const std::string cite = "ref:space-cost-table";
    struct Row {
        const ApplicationSpec* app;
        ArchKind arch;
        long long spare;
        long long data, se, gt, total;
    };
    const std::vector<Row> rows{
        {&fermi_hubbard(), ArchKind::SDQC, 9, 16764, 33264, 11424, 61452},
        {&fermi_hubbard(), ArchKind::QCCD, 0, 16764, 33264, 0, 50028},
        {&fermi_hubbard(), ArchKind::PhotonicDQC, 0, 16764, 52800, 10668, 80232},
        {&ecdlp(), ArchKind::SDQC, 13, 364617, 723492, 96040, 1184149},
        {&ecdlp(), ArchKind::QCCD, 0, 364617, 723492, 0, 1088109},
        {&ecdlp(), ArchKind::PhotonicDQC, 0, 364617, 1148400, 87122, 1600139},
    };
    for (const auto& r : rows) {
        const std::string p = "2.space." + r.app->name + "." + std::string(to_string(r.arch)) + ".";
        const std::string dd = " (" + r.app->name + ", " + std::string(to_string(r.arch)) + ", d=13)";
        auto cost = [r] { return space_cost(r.arch, *r.app, code_qubit_counts(13), r.spare); };
        b.exact(2, p + "data", "data qubits" + dd, r.data, [&] { return cost().data; }, cite);
        b.exact(2, p + "syndrome", "syndrome-extraction qubits" + dd, r.se,
                [&] { return cost().syndrome_extraction; }, cite);
        b.exact(2, p + "teleportation", "gate-teleportation qubits" + dd, r.gt,
                [&] { return cost().gate_teleportation; }, cite);
        b.exact(2, p + "total", "total qubits" + dd, r.total, [&] { return cost().total; }, cite);
    }
    auto sized = [](const ApplicationSpec& app, double lambda) {
        auto r = evaluate(app, scenario_for(ArchKind::SDQC, 13, lambda));
        if (!r.loss) throw DomainError(r.note);
        return static_cast<double>(r.loss->n_spare);
    };
    b.absolute(2, "2.spares.fermi-hubbard", "sized spares, Fermi-Hubbard, SDQC, d=13, lambda=1", 9, 4,
               [&] { return sized(fermi_hubbard(), 1.0); }, cite);
    b.absolute(2, "2.spares.ecdlp", "sized spares, ECDLP, SDQC, d=13, lambda=10", 13, 4,
               [&] { return sized(ecdlp(), 10.0); }, cite);
}

// --- criteria 3, 4 --------------------------------------------------------

inline void fit_cases(CaseBuilder& b) {
    for (const auto& f : fit_dataset()) {
        const std::string tag = std::string(to_string(f.arch)) + ".d" + std::to_string(f.d);
        b.relative(3, "3.crossover." + tag, "crossover p* at lambda_SE=1, " + tag, f.p_star_at_lambda1, 0.02,
                   [&] { return crossover(f, 1.0); }, "ref:fit-table");
    }
    struct Floor {
        ArchKind arch;
        double expected, lo, hi;
    };
    for (const auto& fl : {Floor{ArchKind::SDQC, 6.89e-15, 5.34e-15, 8.82e-15},
                           Floor{ArchKind::QCCD, 5.41e-15, 4.13e-15, 7.03e-15},
                           Floor{ArchKind::PhotonicDQC, 6.36e-7, 5.34e-7, 7.55e-7}}) {
        b.band(4, "4.floor." + std::string(to_string(fl.arch)),
               "p_L at p_trans=0, lambda_SE=10, d=13, " + std::string(to_string(fl.arch)), fl.expected, fl.lo, fl.hi,
               [&] { return logical_error(fl.arch, 13, 0.0, 10.0).central; }, "ref:floor-bands");
    }
}

// --- criterion 5 ----------------------------------------------------------

inline void success_cases(CaseBuilder& b) {
    const std::string cite = "ref:success-table";
    auto succ = [](const ApplicationSpec& app, ArchKind arch, double lambda) {
        return evaluate(app, scenario_for(arch, 13, lambda)).success;
    };
    b.absolute(5, "5.success.fermi-hubbard.sdqc", "success, Fermi-Hubbard, SDQC, d=13, lambda=1", 0.9891, 0.0015,
               [&] { return succ(fermi_hubbard(), ArchKind::SDQC, 1).central; }, cite);
    b.absolute(5, "5.success.fermi-hubbard.qccd", "success, Fermi-Hubbard, QCCD, d=13, lambda=1", 0.9890, 0.0015,
               [&] { return succ(fermi_hubbard(), ArchKind::QCCD, 1).central; }, cite);
    b.band(5, "5.success.ecdlp.sdqc", "success, ECDLP, SDQC, d=13, lambda=10", 0.9962, 0.990, 0.998,
           [&] { return succ(ecdlp(), ArchKind::SDQC, 10).central; }, cite);
    b.at_most(5, "5.success.fermi-hubbard.photonic", "success, Fermi-Hubbard, Photonic, d=13, lambda=1", 1e-6,
              [&] { return succ(fermi_hubbard(), ArchKind::PhotonicDQC, 1).central; }, cite);
    b.at_most(5, "5.success.ecdlp.photonic", "success, ECDLP, Photonic, d=13, lambda=1", 1e-6,
              [&] { return succ(ecdlp(), ArchKind::PhotonicDQC, 1).central; }, cite);

    // The reference 90.44% pins down a logical error rate once p_idle is
    // fixed. Compare ours with it on a log10 scale.
    b.band(5, "5.success.ecdlp.qccd.magnitude",
           "log10(p_L / implied p_L), ECDLP, QCCD, d=13, lambda=10", 0.0, -1.0, 1.0,
           [] {
               const auto& app = ecdlp();
               auto r = evaluate(app, scenario_for(ArchKind::QCCD, 13, 10));
               double log1m = (std::log(0.9044) - app.n_idle * std::log1p(-r.p_idle_logical.central)) / app.n_gate;
               double implied = -std::expm1(log1m) / 2.0;
               return std::log10(r.p_logical.central / implied);
           },
           cite);
    b.at_least(5, "5.success.ecdlp.qccd.band",
               "overlap of success band with [0.646, 0.938], ECDLP, QCCD, d=13, lambda=10", 0.0,
               [&] {
                   auto s = succ(ecdlp(), ArchKind::QCCD, 10);
                   return std::min(s.upper, 0.938) - std::max(s.lower, 0.646);
               },
               cite);
}

// --- criterion 6 ----------------------------------------------------------

inline void time_cases(CaseBuilder& b) {
    const std::string cite = "ref:exec-time-table";
    auto days = [](const ApplicationSpec& app, ArchKind arch, int d) {
        auto s = app_scenario(app, scenario_for(arch, d, 1.0));
        return execution_time(app, schedule(s)).days();
    };
    struct Row {
        const ApplicationSpec* app;
        ArchKind arch;
        double expected, tol;
    };
    for (const auto& r : {Row{&fermi_hubbard(), ArchKind::QCCD, 108, 0.03}, Row{&ecdlp(), ArchKind::QCCD, 473, 0.03},
                          Row{&fermi_hubbard(), ArchKind::SDQC, 78, 0.15}, Row{&ecdlp(), ArchKind::SDQC, 168, 0.15},
                          Row{&fermi_hubbard(), ArchKind::PhotonicDQC, 78, 0.15},
                          Row{&ecdlp(), ArchKind::PhotonicDQC, 168, 0.15}}) {
        b.relative(6, "6.days." + r.app->name + "." + std::string(to_string(r.arch)),
                   "execution days, " + r.app->name + ", " + std::string(to_string(r.arch)) + ", d=13", r.expected,
                   r.tol, [&] { return days(*r.app, r.arch, 13); }, cite);
    }
    b.relative(6, "6.speedup.clock.d13", "QCCD/SDQC logical clock ratio, n_L=2871, d=13", 2.82, 0.15,
               [] {
                   return schedule(scenario_for(ArchKind::QCCD, 13, 1)).t_logical_clock /
                          schedule(scenario_for(ArchKind::SDQC, 13, 1)).t_logical_clock;
               },
               cite);
    b.relative(6, "6.speedup.fermi-hubbard.d3", "QCCD/SDQC execution-time ratio, Fermi-Hubbard, d=3", 4.82, 0.15,
               [&] { return days(fermi_hubbard(), ArchKind::QCCD, 3) / days(fermi_hubbard(), ArchKind::SDQC, 3); },
               cite);
    b.relative(6, "6.speedup.ecdlp.d3", "QCCD/SDQC execution-time ratio, ECDLP, d=3", 9.66, 0.15,
               [&] { return days(ecdlp(), ArchKind::QCCD, 3) / days(ecdlp(), ArchKind::SDQC, 3); }, cite);
}

// --- criterion 7 ----------------------------------------------------------

inline void throughput_cases(CaseBuilder& b) {
    const std::string cite = "ref:throughput";
    b.relative(7, "7.factory.capacity60", "factory throughput at chain capacity 60 (Hz)", 39958, 1e-3,
               [] { return factory_throughput_hz(60, OperationTimes{}); }, cite);
    constexpr double kCycleUs = 77100.0;
    struct Row {
        const char* id;
        double pairs, expected;
    };
    for (const auto& r : {Row{"7.demand.198", 198, 2568}, Row{"7.demand.276", 276, 3580},
                          Row{"7.demand.185", 185, 2399}}) {
        b.relative(7, r.id, "peak demand for " + std::to_string(static_cast<int>(r.pairs)) + " pairs per 77.1 ms (Hz)",
                   r.expected, 0.01, [&] { return peak_demand_hz(r.pairs, kCycleUs); }, cite);
    }
}

// --- criterion 8 ----------------------------------------------------------

inline void oracle_cases(CaseBuilder& b, const ValidationOptions& opt) {
    b.at_most(8, "8.enumeration", "max |closed form - exhaustive enumeration|, n_required + n_spare <= 12", 1e-12,
              [] {
                  double worst = 0.0;
                  for (double p : {0.0, 1e-4, 5.366e-3, 0.05, 0.2, 0.45, 0.7})
                      for (int n = 0; n <= 12; ++n)
                          for (int req = 0; req <= n; ++req) {
                              double a = gate_loss_probability(p, req, n - req);
                              double e = oracle::gate_loss_exhaustive(p, req, n - req);
                              worst = std::max(worst, std::fabs(a - e));
                          }
                  return worst;
              },
              "oracle:enumeration");
    b.at_most(8, "8.monte-carlo",
              "|z| of seeded Monte Carlo vs closed form at (5.366e-3, 127, 9), " +
                  std::to_string(opt.monte_carlo_trials) + " trials",
              3.0,
              [&] {
                  double p = gate_loss_probability(5.366e-3, 127, 9);
                  auto mc = oracle::gate_loss_monte_carlo(5.366e-3, 127, 9, opt.monte_carlo_trials, opt.seed);
                  return std::fabs(mc.p_hat - p) / mc.standard_error(p);
              },
              "oracle:monte-carlo");
}

// --- criterion 9 ----------------------------------------------------------

inline void property_cases(CaseBuilder& b) {
    const std::string cite = "property";
    b.at_most(9, "9.mean-distance", "max relative gap, closed form vs pairwise sum, n_L in [2,500], n_c in 1..6",
              1e-12,
              [] {
                  double worst = 0.0;
                  for (int nc = 1; nc <= 6; ++nc)
                      for (long long nl = 2; nl <= 500; ++nl) {
                          double a = sdqc_mean_distance(nc, nl);
                          double e = oracle::sdqc_mean_distance_pairs(nc, nl);
                          worst = std::max(worst, std::fabs(a - e) / e);
                      }
                  return worst;
              },
              cite);

    b.exact(9, "9.monotone.p_trans", "violations of p_L nondecreasing in p_trans, all fit rows", 0,
            [] {
                int bad = 0;
                auto grid = log_grid(1e-7, 0.2, 40);
                for (const auto& f : fit_dataset())
                    for (double se : {1.0, 10.0, 100.0}) {
                        LogicalErrorEstimate prev = logical_error(f, 0.0, se);
                        for (double p : grid) {
                            auto cur = logical_error(f, p, se);
                            bad += cur.central < prev.central || cur.lower < prev.lower || cur.upper < prev.upper;
                            prev = cur;
                        }
                    }
                return static_cast<double>(bad);
            },
            cite);
    b.exact(9, "9.monotone.lambda_se", "violations of p_L nonincreasing in lambda_SE, all fit rows", 0,
            [] {
                int bad = 0;
                auto grid = log_grid(0.1, 1000, 40);
                for (const auto& f : fit_dataset())
                    for (double p : {0.0, 1e-4, 1e-3, 1e-2}) {
                        auto prev = logical_error(f, p, grid.front());
                        for (double se : grid) {
                            auto cur = logical_error(f, p, se);
                            bad += cur.central > prev.central || cur.lower > prev.lower || cur.upper > prev.upper;
                            prev = cur;
                        }
                    }
                return static_cast<double>(bad);
            },
            cite);
    b.exact(9, "9.monotone.success", "violations of success nondecreasing in lambda, both apps, all archs and d", 0,
            [] {
                int bad = 0;
                auto grid = log_grid(0.1, 1000, 15);
                for (const ApplicationSpec* app : {&fermi_hubbard(), &ecdlp()})
                    for (auto arch : kAllArchs)
                        for (int d = 3; d <= 13; d += 2) {
                            Scenario s = scenario_for(arch, d, 1.0);
                            double prev = -1.0;
                            for (double lam : grid) {
                                double cur = success_at(*app, s, lam);
                                bad += cur + 1e-15 < prev;
                                prev = cur;
                            }
                        }
                return static_cast<double>(bad);
            },
            cite);
    b.exact(9, "9.pipelining", "cases where the pipelined schedule is slower than the unpipelined one", 0,
            [] {
                int bad = 0;
                for (auto arch : kAllArchs)
                    for (int d = 3; d <= 13; d += 2)
                        for (long long nl : {2LL, 132LL, 2871LL, 100000LL}) {
                            auto s = scenario_for(arch, d, 1.0, nl);
                            auto p = schedule(s, true);
                            auto u = schedule(s, false);
                            bad += p.t_remote_tq > u.t_remote_tq || p.t_se_round > u.t_se_round ||
                                   p.t_logical_clock > u.t_logical_clock;
                        }
                return static_cast<double>(bad);
            },
            cite);
    b.at_most(9, "9.photonic.scale-free", "max relative spread of Photonic p_trans over n_L in {2..1e5}", 1e-12,
              [] {
                  double worst = 0.0;
                  for (int d = 3; d <= 13; d += 2) {
                      double lo = 1e300, hi = -1e300;
                      for (long long nl : {2LL, 132LL, 2871LL, 100000LL}) {
                          double p = transversal_gate_error(scenario_for(ArchKind::PhotonicDQC, d, 1.0, nl)).p_trans;
                          lo = std::min(lo, p);
                          hi = std::max(hi, p);
                      }
                      worst = std::max(worst, (hi - lo) / lo);
                  }
                  return worst;
              },
              cite);
    b.band(9, "9.purification", "p_trans ratio without/with purification, SDQC, n_L=2, d=13", 1.325, 1.25, 1.40,
           [] {
               auto s = scenario_for(ArchKind::SDQC, 13, 1.0, 2);
               double plain = transversal_gate_error(s).p_trans;
               s.architecture.purification_enabled = true;
               return plain / transversal_gate_error(s).p_trans;
           },
           cite);
}

// --- criterion 10 ---------------------------------------------------------

inline void ratio_cases(CaseBuilder& b) {
    const std::string cite = "ref:headline-ratio";
    b.band(10, "10.ratio.sdqc-photonic", "p_L ratio SDQC/Photonic, n_L=2871, d=13, lambda=10", 1.20e-8, 0.75e-8,
           2.14e-8,
           [] {
               return logical_at(ArchKind::SDQC, 13, 10, 2871).central /
                      logical_at(ArchKind::PhotonicDQC, 13, 10, 2871).central;
           },
           cite);
    b.at_least(10, "10.ratio.sdqc-qccd.band",
               "overlap of SDQC/QCCD p_L ratio band with [0.95e-3, 8.88e-3], n_L=2871, d=13, lambda=10", 0.0,
               [] {
                   auto s = logical_at(ArchKind::SDQC, 13, 10, 2871);
                   auto q = logical_at(ArchKind::QCCD, 13, 10, 2871);
                   double lo = s.lower / q.upper, hi = s.upper / q.lower;
                   return std::min(hi, 8.88e-3) - std::max(lo, 0.95e-3);
               },
               cite);
}

} // namespace detail

// Runs every check in a fixed order. Only the Monte Carlo case consumes the
// seed.
inline std::vector<ValidationCase> validate(const ValidationOptions& opt = {}) {
    std::vector<ValidationCase> cases;
    detail::CaseBuilder b(cases);
    detail::layout_cases(b);
    detail::space_cases(b);
    detail::fit_cases(b);
    detail::success_cases(b);
    detail::time_cases(b);
    detail::throughput_cases(b);
    detail::oracle_cases(b, opt);
    detail::property_cases(b);
    detail::ratio_cases(b);
    return cases;
}

} // namespace sdqc
