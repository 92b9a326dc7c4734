#pragma once

// Remote-gate error budgets, ion-loss combinatorics and the fitted two-regime
// logical error model.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "sdqc/config.hpp"
#include "sdqc/error.hpp"
#include "sdqc/layout.hpp"
#include "sdqc/schedule.hpp"

namespace sdqc {

struct TransversalErrorBreakdown {
    double p_o = 0.0;              // active operations
    double junction_term = 0.0;    // junctions counted in the budget times per-junction error
    double junctions_counted = 0.0;
    double decoherence_term = 0.0; // exposure (ms) times idle error per ms
    double exposure_ms = 0.0;
    double p_trans = 0.0;
    bool saturated = false;
};

// `sched` must come from the pipelined schedule of the same scenario.
inline TransversalErrorBreakdown transversal_gate_error(const Scenario& s, const ScheduleResult& sched,
                                                        const RoutingMetrics& routing) {
    const ErrorRates e = effective_errors(s);
    const double t_remote = sched.pipelined ? sched.t_remote_tq : sched.t_remote_tq - sched.t_ed;
    TransversalErrorBreakdown b;
    switch (s.architecture.kind) {
    case ArchKind::SDQC:
        b.p_o = 3 * e.p_tq + 2 * e.p_meas + 3 * e.p_sq;
        if (s.architecture.purification_enabled) b.p_o -= e.p_tq + e.p_sq;
        // Distribution-path losses are absorbed by spare pairs.
        b.junctions_counted = routing.mean_junctions_detection;
        b.exposure_ms = (2 * sched.t_ed + 4 * t_remote) / 1000.0;
        break;
    case ArchKind::PhotonicDQC:
        b.p_o = e.p_pe + 2 * e.p_tq + 2 * e.p_meas + 3 * e.p_sq;
        b.junctions_counted = routing.mean_junctions_detection;
        b.exposure_ms = (2 * sched.t_ed + 4 * t_remote) / 1000.0;
        break;
    case ArchKind::QCCD:
        b.p_o = e.p_tq;
        b.junctions_counted = routing.total_junctions();
        b.exposure_ms = 2 * t_remote / 1000.0;
        break;
    }
    b.junction_term = b.junctions_counted * e.p_junction;
    b.decoherence_term = b.exposure_ms * e.p_idle_per_ms;
    b.p_trans = b.p_o + b.junction_term + b.decoherence_term;
    b.saturated = b.p_o >= 1 || b.junction_term >= 1 || b.decoherence_term >= 1 || b.p_trans >= 1;
    return b;
}

inline TransversalErrorBreakdown transversal_gate_error(const Scenario& s) {
    const auto counts = code_qubit_counts(s.code_distance);
    return transversal_gate_error(s, schedule(s), routing_metrics(s.architecture.kind, counts, s.n_logical));
}

// ---------------------------------------------------------------------------
// Ion loss

inline double pair_loss_probability(double eps_junction, double n_junctions) {
    if (!(eps_junction >= 0.0 && eps_junction < 1.0)) throw DomainError("junction loss must lie in [0, 1)");
    if (n_junctions < 0) throw DomainError("junction count must be nonnegative");
    if (n_junctions == 0 || eps_junction == 0) return 0.0;
    return -std::expm1(n_junctions * std::log1p(-eps_junction));
}

// P[more than n_spare of n_required + n_spare pairs are lost], each lost
// independently with probability p_pair. Summed over the upper tail in the
// log domain.
inline double gate_loss_probability(double p_pair, long long n_required, long long n_spare) {
    if (!(p_pair >= 0.0 && p_pair < 1.0)) throw DomainError("pair loss probability must lie in [0, 1)");
    if (n_required < 0 || n_spare < 0) throw DomainError("counts must be nonnegative");
    const long long n = n_required + n_spare;
    if (p_pair == 0.0 || n_required == 0) return 0.0;

    const double lp = std::log(p_pair);
    const double lq = std::log1p(-p_pair);
    const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
    auto log_pmf = [&](long long k) {
        return lgn - std::lgamma(static_cast<double>(k) + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0) +
               static_cast<double>(k) * lp + static_cast<double>(n - k) * lq;
    };

    double peak = -std::numeric_limits<double>::infinity();
    for (long long k = n_spare + 1; k <= n; ++k) peak = std::max(peak, log_pmf(k));
    double acc = 0.0;
    for (long long k = n_spare + 1; k <= n; ++k) acc += std::exp(log_pmf(k) - peak);
    return std::min(1.0, std::exp(peak) * acc);
}

inline constexpr long long kMaxSpareSearch = 100000;

// Smallest spare count whose gate loss probability falls below `threshold`.
inline long long size_spares(double p_pair, long long n_required, double threshold) {
    if (!(threshold > 0.0)) throw DomainError("spare threshold must be positive");
    if (p_pair >= 1.0) throw DomainError("every pair is lost (p_pair = 1); no spare count suffices");
    if (p_pair >= 0.5)
        throw DomainError("pair loss probability >= 0.5: loss of more than n_spare pairs does not vanish");
    for (long long s = 0; s <= kMaxSpareSearch; ++s)
        if (gate_loss_probability(p_pair, n_required, s) < threshold) return s;
    throw DomainError("spare search exceeded " + std::to_string(kMaxSpareSearch));
}

struct LossModel {
    double junctions = 0.0; // full path, distribution + detection
    double p_loss_per_pair = 0.0;
    long long n_pairs_required = 0;
    long long n_spare = 0;
    double p_loss_per_gate = 0.0;
    double threshold = 0.0;
};

// Spares sized to keep loss below `fraction` of p_trans. Only SDQC carries
// spares; the other architectures report zero.
inline LossModel loss_model(const Scenario& s, const RoutingMetrics& routing, double p_trans,
                            double fraction = 0.01) {
    const ErrorRates e = effective_errors(s);
    const auto counts = code_qubit_counts(s.code_distance);
    LossModel m;
    m.junctions = routing.total_junctions();
    m.p_loss_per_pair = pair_loss_probability(e.p_junction, m.junctions);
    m.n_pairs_required = counts.n_d;
    m.threshold = fraction * p_trans;
    if (s.architecture.kind == ArchKind::SDQC) m.n_spare = size_spares(m.p_loss_per_pair, m.n_pairs_required, m.threshold);
    m.p_loss_per_gate = gate_loss_probability(m.p_loss_per_pair, m.n_pairs_required, m.n_spare);
    return m;
}

// ---------------------------------------------------------------------------
// Logical error model: p_L = A p_trans^(alpha d) + B (1/lambda_SE)^(beta d)

struct Uncertain {
    double value = 0.0;
    double sigma = 0.0;
};

// Parses the compact notation "5.29(16)", "6.56(1.23)e2", "9.81(101)e-3".
// Digits in parentheses apply to the last digits of the mantissa unless they
// carry their own decimal point.
inline Uncertain parse_uncertain(std::string_view text) {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw DatasetError("malformed uncertain value '" + std::string(text) + "'");
    std::string mantissa(text.substr(0, open));
    std::string unc(text.substr(open + 1, close - open - 1));
    std::string_view rest = text.substr(close + 1);
    double scale = 1.0;
    if (!rest.empty()) {
        if (rest.front() != 'e' && rest.front() != 'E')
            throw DatasetError("malformed exponent in '" + std::string(text) + "'");
        scale = std::pow(10.0, std::stod(std::string(rest.substr(1))));
    }
    Uncertain u;
    u.value = std::stod(mantissa) * scale;
    if (unc.find('.') != std::string::npos) {
        u.sigma = std::stod(unc) * scale;
    } else {
        auto dot = mantissa.find('.');
        int decimals = dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
        u.sigma = std::stod(unc) * std::pow(10.0, -decimals) * scale;
    }
    return u;
}

struct FitParams {
    ArchKind arch;
    int d;
    Uncertain A, B, alpha, beta;
    double r_squared;
    double p_star_at_lambda1;
};

namespace detail {

struct FitRowText {
    ArchKind arch;
    int d;
    const char* A;
    const char* B;
    const char* alpha;
    const char* beta;
    double r2;
    double p_star;
};

inline constexpr std::array<FitRowText, 18> kFitRows{{
    {ArchKind::SDQC, 3, "5.29(16)", "5.48(20)e-5", "0.624(2)", "0.674(9)", 0.9977, 2.17e-3},
    {ArchKind::SDQC, 5, "3.40(15)e1", "3.10(7)e-5", "0.557(2)", "0.436(4)", 0.9929, 6.78e-3},
    {ArchKind::SDQC, 7, "1.80(16)e2", "5.29(17)e-6", "0.511(3)", "0.412(4)", 0.9922, 7.84e-3},
    {ArchKind::SDQC, 9, "6.56(1.23)e2", "5.94(36)e-7", "0.460(6)", "0.453(6)", 0.9876, 6.54e-3},
    {ArchKind::SDQC, 11, "3.98(89)e3", "7.02(51)e-8", "0.449(7)", "0.454(6)", 0.9853, 6.65e-3},
    {ArchKind::SDQC, 13, "2.08(51)e4", "7.33(61)e-9", "0.437(6)", "0.464(6)", 0.9713, 6.43e-3},
    {ArchKind::QCCD, 3, "5.31(20)", "6.07(24)e-5", "0.624(3)", "0.677(10)", 0.9979, 2.29e-3},
    {ArchKind::QCCD, 5, "3.27(32)e1", "3.52(11)e-5", "0.553(6)", "0.438(7)", 0.9926, 6.94e-3},
    {ArchKind::QCCD, 7, "1.76(17)e2", "6.06(20)e-6", "0.510(4)", "0.412(4)", 0.9926, 8.12e-3},
    {ArchKind::QCCD, 9, "6.00(1.16)e2", "6.47(39)e-7", "0.456(7)", "0.456(7)", 0.9875, 6.53e-3},
    {ArchKind::QCCD, 11, "2.51(57)e3", "6.95(61)e-8", "0.430(7)", "0.465(7)", 0.9834, 5.86e-3},
    {ArchKind::QCCD, 13, "1.67(41)e4", "7.37(68)e-9", "0.428(6)", "0.472(6)", 0.9729, 6.02e-3},
    {ArchKind::PhotonicDQC, 3, "5.44(20)", "5.63(25)e-5", "0.627(3)", "0.673(11)", 0.9973, 2.24e-3},
    {ArchKind::PhotonicDQC, 5, "3.40(34)e1", "3.07(10)e-5", "0.556(6)", "0.447(7)", 0.9910, 6.70e-3},
    {ArchKind::PhotonicDQC, 7, "1.22(24)e2", "9.81(101)e-3", "0.483(9)", "0.401(4)", 0.9773, 6.15e-2},
    {ArchKind::PhotonicDQC, 9, "2.44(85)e2", "1.43(11)e-2", "0.409(13)", "0.427(7)", 0.8787, 7.08e-2},
    {ArchKind::PhotonicDQC, 11, "7.16(2.33)e2", "3.03(16)e-2", "0.372(10)", "0.426(5)", 0.9118, 8.54e-2},
    {ArchKind::PhotonicDQC, 13, "1.63(74)e3", "7.62(35)e-2", "0.339(14)", "0.391(4)", 0.9420, 1.04e-1},
}};

} // namespace detail

inline const std::vector<FitParams>& fit_dataset() {
    static const std::vector<FitParams> rows = [] {
        std::vector<FitParams> v;
        for (const auto& r : detail::kFitRows)
            v.push_back({r.arch, r.d, parse_uncertain(r.A), parse_uncertain(r.B), parse_uncertain(r.alpha),
                         parse_uncertain(r.beta), r.r2, r.p_star});
        return v;
    }();
    return rows;
}

inline const FitParams& fit_params(ArchKind arch, int d) {
    for (const auto& f : fit_dataset())
        if (f.arch == arch && f.d == d) return f;
    throw DatasetError("no logical error fit for " + std::string(to_string(arch)) + " d=" + std::to_string(d));
}

enum class Regime { TransversalDominated, SyndromeDominated };

inline std::string_view to_string(Regime r) {
    return r == Regime::TransversalDominated ? "transversal-dominated" : "syndrome-dominated";
}

struct LogicalErrorEstimate {
    double central = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    Regime regime = Regime::SyndromeDominated;
    double transversal_term = 0.0;
    double syndrome_term = 0.0;
};

inline double crossover(const FitParams& f, double lambda_se) {
    if (!(lambda_se > 0)) throw DomainError("lambda_se must be positive");
    const double d = f.d;
    return std::pow(f.B.value / (f.A.value * std::pow(lambda_se, f.beta.value * d)), 1.0 / (f.alpha.value * d));
}

inline double crossover(ArchKind arch, int d, double lambda_se) { return crossover(fit_params(arch, d), lambda_se); }

namespace detail {

// coeff * base^(exponent * d), pushed to its extreme over the exponent's
// +-sigma interval in the requested direction.
inline double corner_term(double coeff, double base, const Uncertain& exponent, double d, bool upper) {
    if (coeff <= 0.0 || base == 0.0) return 0.0;
    double a = coeff * std::pow(base, (exponent.value - exponent.sigma) * d);
    double b = coeff * std::pow(base, (exponent.value + exponent.sigma) * d);
    return upper ? std::max(a, b) : std::min(a, b);
}

} // namespace detail

inline LogicalErrorEstimate logical_error(const FitParams& f, double p_trans, double lambda_se) {
    if (!(p_trans >= 0.0)) throw DomainError("p_trans must be nonnegative");
    if (!(lambda_se > 0.0)) throw DomainError("lambda_se must be positive");
    const double d = f.d;
    const double syn_base = 1.0 / lambda_se;
    LogicalErrorEstimate est;
    est.transversal_term = p_trans == 0.0 ? 0.0 : f.A.value * std::pow(p_trans, f.alpha.value * d);
    est.syndrome_term = f.B.value * std::pow(syn_base, f.beta.value * d);
    est.central = est.transversal_term + est.syndrome_term;
    est.upper = detail::corner_term(f.A.value + f.A.sigma, p_trans, f.alpha, d, true) +
                detail::corner_term(f.B.value + f.B.sigma, syn_base, f.beta, d, true);
    est.lower = detail::corner_term(f.A.value - f.A.sigma, p_trans, f.alpha, d, false) +
                detail::corner_term(f.B.value - f.B.sigma, syn_base, f.beta, d, false);
    est.regime = p_trans > crossover(f, lambda_se) ? Regime::TransversalDominated : Regime::SyndromeDominated;
    return est;
}

inline LogicalErrorEstimate logical_error(ArchKind arch, int d, double p_trans, double lambda_se) {
    return logical_error(fit_params(arch, d), p_trans, lambda_se);
}

} // namespace sdqc
