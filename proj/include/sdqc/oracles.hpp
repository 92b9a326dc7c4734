#pragma once

// Independent reference computations used by the validation harness and the
// test suites. Nothing in the cost model calls into this header.

#include <cmath>
#include <cstdint>
#include <future>
#include <random>
#include <vector>

namespace sdqc::oracle {

// Mean |i - j| over all unordered pairs of n_logical nodes laid out on a
// line, times the 2 * n_chains unit distances separating adjacent logical
// qubits. Direct double sum over pairs.
inline double sdqc_mean_distance_pairs(int n_chains, long long n_logical) {
    double sum = 0.0;
    double pairs = 0.0;
    for (long long i = 0; i < n_logical; ++i)
        for (long long j = i + 1; j < n_logical; ++j) {
            sum += static_cast<double>(j - i);
            pairs += 1.0;
        }
    return 2.0 * n_chains * sum / pairs;
}

// Same quantity via the distance-multiplicity sum k (n - k).
inline double sdqc_mean_distance_sum(int n_chains, long long n_logical) {
    double num = 0.0;
    for (long long k = 1; k < n_logical; ++k) num += static_cast<double>(k) * static_cast<double>(n_logical - k);
    double pairs = 0.5 * static_cast<double>(n_logical) * static_cast<double>(n_logical - 1);
    return 2.0 * n_chains * num / pairs;
}

// Enumerates every loss pattern of n = n_required + n_spare pairs and sums
// the probability of those losing more than n_spare. Exponential in n.
inline double gate_loss_exhaustive(double p, int n_required, int n_spare) {
    const int n = n_required + n_spare;
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int lost = 0;
        double prob = 1.0;
        for (int b = 0; b < n; ++b) {
            if (mask & (1u << b)) {
                ++lost;
                prob *= p;
            } else {
                prob *= 1.0 - p;
            }
        }
        if (lost > n_spare) total += prob;
    }
    return total;
}

struct MonteCarloEstimate {
    double p_hat = 0.0;
    long long hits = 0;
    long long trials = 0;

    double standard_error(double p_ref) const { return std::sqrt(p_ref * (1.0 - p_ref) / static_cast<double>(trials)); }
};

// Seeded Monte Carlo of P[Bin(n_required + n_spare, p) > n_spare]. Work is
// split into fixed substreams seeded from (seed, stream index), so the result
// is independent of how many run concurrently.
inline MonteCarloEstimate gate_loss_monte_carlo(double p, int n_required, int n_spare, long long trials,
                                                std::uint64_t seed, int streams = 16) {
    const int n = n_required + n_spare;
    std::vector<std::future<long long>> parts;
    const long long per = trials / streams;
    for (int s = 0; s < streams; ++s) {
        long long count = per + (s < trials % streams ? 1 : 0);
        parts.push_back(std::async(std::launch::async, [=] {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(s)};
            std::mt19937_64 rng(seq);
            std::binomial_distribution<int> draw(n, p);
            long long hits = 0;
            for (long long t = 0; t < count; ++t)
                if (draw(rng) > n_spare) ++hits;
            return hits;
        }));
    }
    MonteCarloEstimate est;
    est.trials = trials;
    for (auto& f : parts) est.hits += f.get();
    est.p_hat = static_cast<double>(est.hits) / static_cast<double>(trials);
    return est;
}

// Success probability by direct powers, no log-space rearrangement. Extended
// precision keeps the rounding of (1 - p) from being amplified by the
// exponent.
inline double success_direct(double n_gate, double n_idle, double p_l, double p_idle) {
    using L = long double;
    return static_cast<double>(std::pow(L(1) - L(2) * L(p_l), L(n_gate)) * std::pow(L(1) - L(p_idle), L(n_idle)));
}

} // namespace sdqc::oracle
