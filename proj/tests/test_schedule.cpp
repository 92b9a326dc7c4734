#include <cmath>

#include <gtest/gtest.h>

#include "sdqc/oracles.hpp"
#include "sdqc/schedule.hpp"

using namespace sdqc;

namespace {

Scenario make(ArchKind arch, int d, long long n_logical) {
    Scenario s;
    s.architecture.kind = arch;
    s.code_distance = d;
    s.n_logical = n_logical;
    return s;
}

} // namespace

TEST(GateTime, Examples) {
    OperationTimes t;
    EXPECT_DOUBLE_EQ(tq_gate_time(2, t), 100.0);
    EXPECT_NEAR(tq_gate_time(58, t), 719.14, 1e-9);
    EXPECT_NEAR(tq_gate_time(60, t), 745.8, 1e-9);
    EXPECT_THROW(tq_gate_time(1, t), DomainError);
    EXPECT_THROW(unit_time(OpKind::TwoQubitGate, t), DomainError);
}

TEST(GateTime, NondecreasingInOccupancy) {
    OperationTimes t;
    for (int n = 2; n < 200; ++n) EXPECT_LE(tq_gate_time(n, t), tq_gate_time(n + 1, t));
}

TEST(Routing, SdqcMeanDistance) {
    auto c13 = code_qubit_counts(13);
    EXPECT_NEAR(routing_metrics(ArchKind::SDQC, c13, 2871).mean_distance, 11488.0, 1e-9);
    auto c3 = code_qubit_counts(3);
    EXPECT_DOUBLE_EQ(routing_metrics(ArchKind::SDQC, c3, 2).mean_distance, 2.0);
    EXPECT_THROW(sdqc_mean_distance(6, 1), DomainError);
}

TEST(Routing, ClosedFormMatchesPairSums) {
    for (int nc = 1; nc <= 6; ++nc)
        for (long long nl : {2LL, 3LL, 7LL, 64LL, 131LL, 500LL}) {
            double closed = sdqc_mean_distance(nc, nl);
            EXPECT_NEAR(closed, oracle::sdqc_mean_distance_pairs(nc, nl), 1e-12 * closed);
            EXPECT_NEAR(closed, oracle::sdqc_mean_distance_sum(nc, nl), 1e-12 * closed);
        }
}

TEST(Routing, Qccd) {
    auto r = routing_metrics(ArchKind::QCCD, code_qubit_counts(13), 2871);
    EXPECT_NEAR(r.mean_distance, 1109.95, 0.01);
    EXPECT_NEAR(r.mean_swaps, 196.12, 0.01);
    EXPECT_DOUBLE_EQ(r.mean_junctions_detection, 0.0);
}

TEST(Routing, Photonic) {
    auto r = routing_metrics(ArchKind::PhotonicDQC, code_qubit_counts(13), 2871);
    EXPECT_DOUBLE_EQ(r.total_junctions(), 6.0);
    EXPECT_DOUBLE_EQ(r.mean_distance, 0.0);
}

TEST(Sequence, SdqcSyndromeRound) {
    auto seq = operation_sequence(ArchKind::SDQC, 13, SequenceRole::SyndromeRound);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::TwoQubitGate), 7);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::SingleQubitGate), 1);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Cooling), 2);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Merge), 1);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Split), 2);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Detection), 1);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::FastTransport), 2);
    // readout overlaps the next round by default
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Detection, {}, false), 0);
    auto literal = operation_sequence(ArchKind::SDQC, 13, SequenceRole::SyndromeRound, false);
    EXPECT_DOUBLE_EQ(literal.count(OpKind::Detection, {}, false), 1);

    auto small = operation_sequence(ArchKind::SDQC, 5, SequenceRole::SyndromeRound);
    EXPECT_DOUBLE_EQ(small.count(OpKind::Cooling), 1);
    EXPECT_DOUBLE_EQ(small.count(OpKind::Split), 1);
}

TEST(Sequence, QccdSyndromeRound) {
    auto seq = operation_sequence(ArchKind::QCCD, 13, SequenceRole::SyndromeRound);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::TwoQubitGate), 7);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::SingleQubitGate), 1);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Cooling), 7);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Merge), 7);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Split), 6);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::Detection), 1);
    EXPECT_DOUBLE_EQ(seq.count(OpKind::StableTransport), 20);
}

TEST(Sequence, PhotonicDistribution) {
    for (int d : {3, 9, 13}) {
        auto seq = operation_sequence(ArchKind::PhotonicDQC, d, SequenceRole::EntanglementDistribution);
        EXPECT_DOUBLE_EQ(seq.count(OpKind::PhotonicEntangling), 1);
        EXPECT_DOUBLE_EQ(seq.count(OpKind::StableTransport), 3);
        for (const auto& e : seq.entries) EXPECT_TRUE(e.pipelined);
    }
}

TEST(Sequence, SdqcDistributionScalesWithDistance) {
    auto seq = operation_sequence(ArchKind::SDQC, 13, SequenceRole::EntanglementDistribution);
    RoutingMetrics r;
    r.mean_distance = 100;
    EXPECT_DOUBLE_EQ(seq.count(OpKind::StableTransport, r), 103);
}

TEST(Schedule, QccdReference) {
    auto r = schedule(make(ArchKind::QCCD, 13, 2871));
    EXPECT_NEAR(r.t_remote_tq / 1000, 141.9, 0.1);
    EXPECT_NEAR(r.t_se_round, 5807.0, 1e-6);
    EXPECT_NEAR(r.t_logical_clock / 1000, 217.4, 0.1);
    EXPECT_DOUBLE_EQ(r.t_ed, 0.0);
}

TEST(Schedule, SdqcRemoteGateIsScaleFree) {
    for (long long nl : {2LL, 132LL, 2871LL, 100000LL}) {
        auto r = schedule(make(ArchKind::SDQC, 13, nl));
        EXPECT_NEAR(r.t_remote_tq, 1716.0, 1e-9) << nl;
    }
}

TEST(Schedule, SdqcUnpipelinedAddsDistribution) {
    auto s = make(ArchKind::SDQC, 13, 2871);
    auto p = schedule(s, true);
    auto u = schedule(s, false);
    EXPECT_NEAR(p.t_ed / 1000, 539.8, 0.1);
    EXPECT_NEAR(u.t_remote_tq - p.t_remote_tq, p.t_ed, 1e-6);
    EXPECT_FALSE(u.pipelined);
}

TEST(Schedule, PhotonicDistribution) {
    auto r = schedule(make(ArchKind::PhotonicDQC, 13, 2871));
    EXPECT_NEAR(r.t_ed, 4140.7, 1e-9);
    EXPECT_NEAR(r.t_remote_tq, 1716.0, 1e-9);
}

TEST(Schedule, LogicalClockDefinition) {
    for (auto arch : kAllArchs)
        for (int d = 3; d <= 13; d += 2) {
            auto r = schedule(make(arch, d, 132));
            EXPECT_NEAR(r.t_logical_clock, r.t_remote_tq + d * r.t_se_round, 1e-9);
        }
}

TEST(Schedule, PipeliningNeverSlower) {
    for (auto arch : kAllArchs)
        for (int d = 3; d <= 13; d += 2)
            for (long long nl : {2LL, 500LL, 20000LL}) {
                auto s = make(arch, d, nl);
                EXPECT_LE(schedule(s, true).t_logical_clock, schedule(s, false).t_logical_clock);
                s.architecture.pipeline_syndrome_readout = false;
                EXPECT_LE(schedule(s, true).t_logical_clock, schedule(s, false).t_logical_clock);
            }
}

TEST(Schedule, BreakdownSumsToClock) {
    for (auto arch : kAllArchs) {
        auto r = schedule(make(arch, 13, 2871));
        double sum = 0;
        for (const auto& [k, v] : r.breakdown) sum += v;
        EXPECT_NEAR(sum, r.t_logical_clock, 1e-6 * r.t_logical_clock);
    }
}

TEST(Schedule, CapacityChecked) {
    auto s = make(ArchKind::SDQC, 13, 132);
    s.architecture.chain_capacity = 50;
    EXPECT_THROW(schedule(s), CapacityError);
}

TEST(Schedule, WorkingOccupancyIsFaster) {
    auto s = make(ArchKind::SDQC, 3, 132);
    double cap = schedule(s).t_remote_tq;
    s.architecture.remote_gate_occupancy = RemoteGateOccupancy::Working;
    EXPECT_LT(schedule(s).t_remote_tq, cap);
}

TEST(Throughput, FactoryRate) {
    OperationTimes t;
    EXPECT_NEAR(factory_throughput_hz(60, t), 39958, 40);
    EXPECT_NEAR(peak_demand_hz(198, 77100), 2568, 26);
}

TEST(Throughput, Check) {
    auto s = make(ArchKind::SDQC, 13, 2871);
    auto r = throughput_check(s, 198, 0, 77100);
    EXPECT_TRUE(r.feasible);
    EXPECT_NEAR(r.peak_demand_hz, 2568, 26);

    auto p = make(ArchKind::PhotonicDQC, 13, 2871);
    auto pr = throughput_check(p, 276, 185, 77100);
    EXPECT_NEAR(pr.photonic_only_demand_hz, 2399, 24);
    EXPECT_NEAR(pr.photonic_interface_rate_hz, 250, 1e-9);
    EXPECT_FALSE(pr.feasible); // 250 Hz of heralded links cannot carry 2399 Hz

    EXPECT_THROW(throughput_check(s, 0), DomainError);
    s.architecture.chain_capacity = 59;
    EXPECT_THROW(throughput_check(s, 10, 0, 77100), DomainError);
}

TEST(Throughput, HeraldingCdf) {
    EXPECT_DOUBLE_EQ(photonic_heralding_cdf(0), 0.0);
    EXPECT_LT(photonic_heralding_cdf(100), photonic_heralding_cdf(10000));
    EXPECT_NEAR(photonic_heralding_cdf(4000), 1 - std::exp(-1.0), 1e-3);
}
