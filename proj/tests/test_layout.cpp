#include <numeric>

#include <gtest/gtest.h>

#include "sdqc/layout.hpp"

using namespace sdqc;

TEST(CodeCounts, Examples) {
    auto c3 = code_qubit_counts(3);
    EXPECT_EQ(c3, (CodeCounts{3, 13, 7, 6, 0, 6, 1}));
    auto c13 = code_qubit_counts(13);
    EXPECT_EQ(c13, (CodeCounts{13, 253, 127, 126, 74, 52, 6}));
    auto c1 = code_qubit_counts(1);
    EXPECT_EQ(c1.n_ph, 1);
    EXPECT_EQ(c1.n_d, 1);
    EXPECT_EQ(c1.n_a, 0);
}

TEST(CodeCounts, RejectsBadDistance) {
    EXPECT_THROW(code_qubit_counts(4), DomainError);
    EXPECT_THROW(code_qubit_counts(0), DomainError);
    EXPECT_THROW(code_qubit_counts(-3), DomainError);
}

TEST(CodeCounts, ClosedForms) {
    for (int d = 3; d <= 41; d += 2) {
        auto c = code_qubit_counts(d);
        EXPECT_EQ(c.n_d, (3 * d * d + 1) / 4) << d;
        EXPECT_EQ(c.n_a, c.n_d - 1) << d;
        EXPECT_EQ(c.n_ph, c.n_d + c.n_a) << d;
        EXPECT_EQ(c.n_seg + c.n_nonseg, c.n_a) << d;
    }
}

TEST(ChainMapping, ColumnSumsMatchCounts) {
    for (int d = 3; d <= 13; d += 2) {
        auto c = code_qubit_counts(d);
        auto l = chain_mapping(ArchKind::SDQC, d);
        ASSERT_EQ(static_cast<int>(l.chains.size()), c.n_c);
        int data = 0, nonseg = 0, seg = 0;
        for (const auto& ch : l.chains) {
            data += ch.data;
            nonseg += ch.nonseg;
            seg += ch.seg;
        }
        EXPECT_EQ(data, c.n_d);
        EXPECT_EQ(nonseg, c.n_nonseg);
        EXPECT_EQ(seg, c.n_seg);
    }
}

TEST(ChainMapping, Examples) {
    auto l = chain_mapping(ArchKind::SDQC, 13);
    std::vector<int> totals;
    for (const auto& c : l.chains) totals.push_back(c.total());
    EXPECT_EQ(totals, (std::vector<int>{30, 50, 34, 37, 58, 44}));
    EXPECT_EQ(max_gate_chain_size(l), 58);

    auto l3 = chain_mapping(ArchKind::SDQC, 3);
    ASSERT_EQ(l3.chains.size(), 1u);
    EXPECT_EQ(l3.chains[0], (ChainLoad{7, 6, 0}));
    EXPECT_EQ(max_gate_chain_size(l3), 13);

    EXPECT_EQ(chain_mapping(ArchKind::PhotonicDQC, 13).chains, l.chains);
}

TEST(ChainMapping, Qccd) {
    for (int d : {3, 13, 21}) {
        auto l = chain_mapping(ArchKind::QCCD, d);
        EXPECT_EQ(static_cast<int>(l.chains.size()), code_qubit_counts(d).n_ph);
        EXPECT_EQ(l.max_occupancy(), 1);
        EXPECT_EQ(max_gate_chain_size(l), 2);
    }
}

TEST(ChainMapping, Untabulated) {
    EXPECT_THROW(chain_mapping(ArchKind::SDQC, 15), DomainError);
    EXPECT_FALSE(mapping_tabulated(15));
    EXPECT_TRUE(mapping_tabulated(13));
}

TEST(Capacity, Enforced) {
    auto l = chain_mapping(ArchKind::SDQC, 13);
    EXPECT_NO_THROW(check_capacity(l, 60));
    EXPECT_NO_THROW(check_capacity(l, 58));
    try {
        check_capacity(l, 57);
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.chain(), 4u);
    }
    EXPECT_NO_THROW(check_capacity(chain_mapping(ArchKind::QCCD, 13), 2));
}
