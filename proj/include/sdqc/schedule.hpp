#pragma once

// Operation sequences, routing metrics and critical-path latencies.
//
// A sequence is a list of counted unit operations. Entries flagged
// `pipelined` run off the critical path (entanglement distribution, or
// syndrome readout in DQC architectures); they still matter for decoherence
// exposure and loss, and they count in the unpipelined latency.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sdqc/config.hpp"
#include "sdqc/error.hpp"
#include "sdqc/layout.hpp"

namespace sdqc {

enum class OpKind {
    TwoQubitGate,
    SingleQubitGate,
    Cooling,
    Merge,
    Split,
    Detection,
    Swap,
    PhotonicEntangling,
    StableTransport,
    FastTransport,
};

inline constexpr std::array<OpKind, 10> kAllOpKinds{
    OpKind::TwoQubitGate, OpKind::SingleQubitGate, OpKind::Cooling,           OpKind::Merge,
    OpKind::Split,        OpKind::Detection,       OpKind::Swap,              OpKind::PhotonicEntangling,
    OpKind::StableTransport, OpKind::FastTransport};

inline std::string_view to_string(OpKind k) {
    switch (k) {
    case OpKind::TwoQubitGate: return "two_qubit_gate";
    case OpKind::SingleQubitGate: return "single_qubit_gate";
    case OpKind::Cooling: return "cooling";
    case OpKind::Merge: return "merge";
    case OpKind::Split: return "split";
    case OpKind::Detection: return "detection";
    case OpKind::Swap: return "swap";
    case OpKind::PhotonicEntangling: return "photonic_entangling";
    case OpKind::StableTransport: return "stable_transport";
    case OpKind::FastTransport: return "fast_transport";
    }
    return "?";
}

enum class SequenceRole { RemoteGate, SyndromeRound, EntanglementDistribution };

// Scale-dependent part of a count.
enum class ScaleTerm { None, MeanDistance, MeanSwaps };

// Which chain the two-qubit gate of an entry runs in; picks N for the gate time.
enum class GateChain {
    NotApplicable,
    Factory,   // Bell preparation in an entanglement factory
    Processor, // remote gate step inside a processor node
    Syndrome,  // data-syndrome gates during a round
    Pairwise,  // two-ion zone (QCCD)
};

struct SequenceEntry {
    OpKind kind;
    double constant = 0.0;
    ScaleTerm scale = ScaleTerm::None; // count = constant + scale term
    bool pipelined = false;
    GateChain chain = GateChain::NotApplicable;
};

struct RoutingMetrics {
    double mean_distance = 0.0; // unit distances
    double mean_swaps = 0.0;    // QCCD only
    double mean_junctions_distribution = 0.0;
    double mean_junctions_detection = 0.0;

    double total_junctions() const { return mean_junctions_distribution + mean_junctions_detection; }
};

struct OperationSequence {
    ArchKind arch;
    int d;
    SequenceRole role;
    std::vector<SequenceEntry> entries;

    double count(OpKind kind, const RoutingMetrics& r = {}, bool include_pipelined = true) const {
        double n = 0.0;
        for (const auto& e : entries) {
            if (e.kind != kind || (e.pipelined && !include_pipelined)) continue;
            n += resolve(e, r);
        }
        return n;
    }

    static double resolve(const SequenceEntry& e, const RoutingMetrics& r) {
        switch (e.scale) {
        case ScaleTerm::None: return e.constant;
        case ScaleTerm::MeanDistance: return e.constant + r.mean_distance;
        case ScaleTerm::MeanSwaps: return e.constant + r.mean_swaps;
        }
        return e.constant;
    }
};

struct ScheduleResult {
    double t_remote_tq = 0.0; // us
    double t_ed = 0.0;        // us, entanglement distribution (0 for QCCD)
    double t_se_round = 0.0;  // us
    double t_logical_clock = 0.0; // us, remote gate + d rounds
    bool pipelined = true;
    std::map<OpKind, double> breakdown; // us per kind along one logical clock
};

struct ThroughputReport {
    double pairs_per_factory_per_cycle = 0.0;
    double photonic_pairs_per_cycle = 0.0;
    double peak_demand_hz = 0.0;
    double factory_throughput_hz = 0.0;
    double photonic_only_demand_hz = 0.0;
    double photonic_interface_rate_hz = 0.0;
    bool feasible = false;
};

// ---------------------------------------------------------------------------

inline double tq_gate_time(int n_resident, const OperationTimes& t) {
    if (n_resident < 2) throw DomainError("two-qubit gate needs at least 2 ions, got " + std::to_string(n_resident));
    return std::max(t.tq_slope * n_resident - t.tq_offset, t.tq_floor);
}

inline double unit_time(OpKind kind, const OperationTimes& t) {
    switch (kind) {
    case OpKind::SingleQubitGate: return t.single_qubit_gate;
    case OpKind::Cooling: return t.cooling;
    case OpKind::Merge: return t.merge;
    case OpKind::Split: return t.split;
    case OpKind::Detection: return t.measurement;
    case OpKind::Swap: return t.physical_swap;
    case OpKind::PhotonicEntangling: return t.photonic_entangling_mean;
    case OpKind::StableTransport: return t.stable_transport_per_unit;
    case OpKind::FastTransport: return t.fast_transport_per_unit;
    case OpKind::TwoQubitGate: break;
    }
    throw DomainError("two-qubit gate time depends on chain occupancy");
}

// Mean inter-node distance for SDQC gate teleportation, closed form.
inline double sdqc_mean_distance(int n_chains, long long n_logical) {
    if (n_logical < 2) throw DomainError("SDQC mean distance needs at least 2 logical qubits");
    return 2.0 * n_chains * static_cast<double>(n_logical + 1) / 3.0;
}

inline RoutingMetrics routing_metrics(ArchKind arch, const CodeCounts& counts, long long n_logical) {
    RoutingMetrics r;
    switch (arch) {
    case ArchKind::SDQC:
        if (counts.n_c <= 0) throw DomainError("chain count unknown for code distance " + std::to_string(counts.d));
        r.mean_distance = sdqc_mean_distance(counts.n_c, n_logical);
        r.mean_junctions_distribution = 4.0 + r.mean_distance;
        r.mean_junctions_detection = 2.0;
        break;
    case ArchKind::PhotonicDQC:
        r.mean_junctions_distribution = 4.0;
        r.mean_junctions_detection = 2.0;
        break;
    case ArchKind::QCCD: {
        if (n_logical < 1) throw DomainError("n_logical must be >= 1");
        double s = std::sqrt(static_cast<double>(counts.n_ph) * static_cast<double>(n_logical));
        r.mean_distance = 1.3 * s + 2.0;
        r.mean_swaps = 0.23 * s + 0.1;
        r.mean_junctions_distribution = 2.0 * (0.4 * s + 2.0);
        r.mean_junctions_detection = 0.0;
        break;
    }
    }
    return r;
}

inline OperationSequence operation_sequence(ArchKind arch, int d, SequenceRole role, bool pipeline_readout = true) {
    using K = OpKind;
    using S = ScaleTerm;
    using G = GateChain;
    OperationSequence seq{arch, d, role, {}};
    auto& e = seq.entries;

    if (role == SequenceRole::EntanglementDistribution) {
        for (const auto& entry : operation_sequence(arch, d, SequenceRole::RemoteGate).entries)
            if (entry.pipelined) e.push_back(entry);
        return seq;
    }

    if (role == SequenceRole::RemoteGate) {
        switch (arch) {
        case ArchKind::SDQC:
            e = {{K::TwoQubitGate, 1, S::None, false, G::Processor},
                 {K::TwoQubitGate, 1, S::None, true, G::Factory},
                 {K::SingleQubitGate, 1, S::None, false},
                 {K::SingleQubitGate, 1, S::None, true},
                 {K::Cooling, 1},
                 {K::Merge, 1},
                 {K::Split, 1, S::None, false},
                 {K::Split, 1, S::None, true},
                 {K::Detection, 1},
                 {K::StableTransport, 3, S::MeanDistance, true},
                 {K::FastTransport, 2}};
            break;
        case ArchKind::PhotonicDQC:
            e = {{K::TwoQubitGate, 1, S::None, false, G::Processor},
                 {K::SingleQubitGate, 1},
                 {K::Cooling, 1},
                 {K::Merge, 1},
                 {K::Split, 1},
                 {K::Detection, 1},
                 {K::PhotonicEntangling, 1, S::None, true},
                 {K::StableTransport, 3, S::None, true},
                 {K::FastTransport, 2}};
            break;
        case ArchKind::QCCD:
            e = {{K::TwoQubitGate, 1, S::None, false, G::Pairwise},
                 {K::Cooling, 1},
                 {K::Merge, 0, S::MeanSwaps},
                 {K::Split, 0, S::MeanSwaps},
                 {K::Swap, 0, S::MeanSwaps},
                 {K::StableTransport, 0, S::MeanDistance}};
            break;
        }
        return seq;
    }

    // Syndrome round. Segmented stabilizers (d >= 7) add a cooling and a split.
    const bool segmented = d >= 7;
    switch (arch) {
    case ArchKind::SDQC:
    case ArchKind::PhotonicDQC:
        e = {{K::TwoQubitGate, 7, S::None, false, G::Syndrome},
             {K::SingleQubitGate, 1},
             {K::Cooling, segmented ? 2.0 : 1.0},
             {K::Merge, 1},
             {K::Split, segmented ? 2.0 : 1.0},
             {K::Detection, 1, S::None, pipeline_readout},
             {K::FastTransport, 2, S::None, pipeline_readout}};
        break;
    case ArchKind::QCCD:
        e = {{K::TwoQubitGate, 7, S::None, false, G::Pairwise},
             {K::SingleQubitGate, 1},
             {K::Cooling, 7},
             {K::Merge, 7},
             {K::Split, 6},
             {K::Detection, 1},
             {K::StableTransport, 20}};
        break;
    }
    return seq;
}

namespace detail {

struct GateOccupancies {
    int factory;
    int processor;
    int syndrome;
};

inline GateOccupancies gate_occupancies(const Scenario& s, const ChainLayout& layout) {
    const auto& a = s.architecture;
    int working = max_gate_chain_size(layout);
    int processor = a.remote_gate_occupancy == RemoteGateOccupancy::Working ? working : a.chain_capacity;
    return {a.chain_capacity, processor, working};
}

inline double entry_unit_time(const SequenceEntry& e, const OperationTimes& t, const GateOccupancies& occ) {
    if (e.kind != OpKind::TwoQubitGate) return unit_time(e.kind, t);
    switch (e.chain) {
    case GateChain::Factory: return tq_gate_time(occ.factory, t);
    case GateChain::Processor: return tq_gate_time(occ.processor, t);
    case GateChain::Syndrome: return tq_gate_time(occ.syndrome, t);
    case GateChain::Pairwise:
    case GateChain::NotApplicable: break;
    }
    return tq_gate_time(2, t);
}

// Sums one sequence. `which`: 0 critical path only, 1 pipelined only, 2 both.
inline double sequence_time(const OperationSequence& seq, const RoutingMetrics& r, const OperationTimes& t,
                            const GateOccupancies& occ, int which, std::map<OpKind, double>* breakdown = nullptr,
                            double weight = 1.0) {
    double total = 0.0;
    for (const auto& e : seq.entries) {
        if (which == 0 && e.pipelined) continue;
        if (which == 1 && !e.pipelined) continue;
        double dt = OperationSequence::resolve(e, r) * entry_unit_time(e, t, occ);
        total += dt;
        if (breakdown) (*breakdown)[e.kind] += weight * dt;
    }
    return total;
}

} // namespace detail

inline ScheduleResult schedule(const Scenario& s, bool pipelined = true) {
    const ArchKind arch = s.architecture.kind;
    const int d = s.code_distance;
    const auto counts = code_qubit_counts(d);
    const auto layout = chain_mapping(arch, d);
    check_capacity(layout, s.architecture.chain_capacity);
    const auto occ = detail::gate_occupancies(s, layout);
    const auto routing = routing_metrics(arch, counts, s.n_logical);

    const bool readout_pipelined = pipelined && s.architecture.pipeline_syndrome_readout;
    const auto remote = operation_sequence(arch, d, SequenceRole::RemoteGate);
    const auto round = operation_sequence(arch, d, SequenceRole::SyndromeRound, readout_pipelined);

    ScheduleResult out;
    out.pipelined = pipelined;
    const int mode = pipelined ? 0 : 2;
    out.t_ed = detail::sequence_time(remote, routing, s.times, occ, 1);
    out.t_remote_tq = detail::sequence_time(remote, routing, s.times, occ, mode, &out.breakdown);
    out.t_se_round = detail::sequence_time(round, routing, s.times, occ, mode, &out.breakdown, d);
    out.t_logical_clock = out.t_remote_tq + d * out.t_se_round;
    return out;
}

inline double peak_demand_hz(double pairs_per_cycle, double t_logical_clock_us) {
    return pairs_per_cycle / (t_logical_clock_us * 1e-6);
}

// Bell pairs one factory chain can emit per second: capacity/2 pairs per
// Bell-preparation step (one two-qubit gate plus one single-qubit gate).
inline double factory_throughput_hz(int chain_capacity, const OperationTimes& t) {
    double step = tq_gate_time(chain_capacity, t) + t.single_qubit_gate;
    return (chain_capacity / 2) / (step * 1e-6);
}

// `t_logical_clock_us` <= 0 means: use the scenario's own schedule.
// `photonic_pairs` is the photonically heralded share of the per-cycle pairs.
inline ThroughputReport throughput_check(const Scenario& s, double pairs_per_factory, double photonic_pairs = 0.0,
                                         double t_logical_clock_us = 0.0, double photonic_rate_hz = 0.0) {
    if (!(pairs_per_factory > 0)) throw DomainError("pairs_per_factory must be positive");
    if (s.architecture.chain_capacity % 2 != 0) throw DomainError("chain capacity must be even");
    if (t_logical_clock_us <= 0.0) t_logical_clock_us = schedule(s).t_logical_clock;
    if (photonic_rate_hz <= 0.0) photonic_rate_hz = 1e6 / s.times.photonic_entangling_mean;

    ThroughputReport r;
    r.pairs_per_factory_per_cycle = pairs_per_factory;
    r.photonic_pairs_per_cycle = photonic_pairs;
    r.factory_throughput_hz = factory_throughput_hz(s.architecture.chain_capacity, s.times);
    r.peak_demand_hz = peak_demand_hz(pairs_per_factory, t_logical_clock_us);
    r.photonic_interface_rate_hz = photonic_rate_hz;
    r.feasible = r.factory_throughput_hz >= r.peak_demand_hz;
    if (s.architecture.kind == ArchKind::PhotonicDQC) {
        r.photonic_only_demand_hz = peak_demand_hz(photonic_pairs, t_logical_clock_us);
        r.feasible = r.feasible && photonic_rate_hz >= r.photonic_only_demand_hz;
    }
    return r;
}

// Approximate per-factory pair count for one FT cycle: each round refills the
// busiest chain's syndrome pairs, and the transversal gate needs one pair per
// data qubit of that chain.
inline double estimate_pairs_per_factory(const ChainLayout& layout) {
    int syn = 0;
    int data = 0;
    for (const auto& c : layout.chains) {
        syn = std::max(syn, c.nonseg + c.seg);
        data = std::max(data, c.data);
    }
    return layout.d * std::ceil(syn / 2.0) + data;
}

// Probability that heralded photonic entanglement has succeeded within t_us.
// Geometric attempts; informational only, cost paths use the mean.
inline double photonic_heralding_cdf(double t_us, double attempt_rate_mhz = 1.0, double success_prob = 2.5e-4) {
    if (t_us <= 0) return 0.0;
    double attempts = std::floor(t_us * attempt_rate_mhz);
    return -std::expm1(attempts * std::log1p(-success_prob));
}

} // namespace sdqc
