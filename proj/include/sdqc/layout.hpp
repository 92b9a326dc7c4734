#pragma once

// Superdense color-code qubit inventories and their placement on ion chains.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "sdqc/config.hpp"
#include "sdqc/error.hpp"

namespace sdqc {

struct CodeCounts {
    int d = 0;
    int n_ph = 0;     // physical qubits per logical qubit
    int n_d = 0;      // data
    int n_a = 0;      // syndrome extraction, total
    int n_seg = 0;    // syndrome extraction serving segmented stabilizers
    int n_nonseg = 0; // the rest
    int n_c = 0;      // chains per logical qubit (DQC mapping)

    friend bool operator==(const CodeCounts&, const CodeCounts&) = default;
};

struct ChainLoad {
    int data = 0;
    int nonseg = 0;
    int seg = 0;

    int total() const { return data + nonseg + seg; }
    friend bool operator==(const ChainLoad&, const ChainLoad&) = default;
};

struct ChainLayout {
    ArchKind kind = ArchKind::SDQC;
    int d = 0;
    // DQC: one entry per ion chain. QCCD: one entry per operation zone, each
    // holding a single qubit.
    std::vector<ChainLoad> chains;

    int max_occupancy() const {
        int m = 0;
        for (const auto& c : chains) m = std::max(m, c.total());
        return m;
    }
};

namespace detail {

struct TabulatedMapping {
    int d;
    std::vector<ChainLoad> chains;
};

// Per-chain mapping for SDQC and Photonic DQC, d = 3..13.
inline const std::array<TabulatedMapping, 6>& chain_table() {
    static const std::array<TabulatedMapping, 6> table{{
        {3, {{7, 6, 0}}},
        {5, {{19, 18, 0}}},
        {7, {{15, 10, 5}, {22, 16, 5}}},
        {9, {{15, 10, 5}, {24, 12, 11}, {22, 16, 6}}},
        {11, {{15, 10, 5}, {25, 12, 13}, {29, 14, 14}, {22, 16, 6}}},
        {13, {{15, 10, 5}, {25, 12, 13}, {17, 0, 17}, {19, 0, 18}, {29, 14, 15}, {22, 16, 6}}},
    }};
    return table;
}

inline const TabulatedMapping* find_tabulated(int d) {
    for (const auto& row : chain_table())
        if (row.d == d) return &row;
    return nullptr;
}

} // namespace detail

inline bool mapping_tabulated(int d) { return detail::find_tabulated(d) != nullptr; }

inline CodeCounts code_qubit_counts(int d) {
    if (d < 1 || d % 2 == 0) throw DomainError("code distance must be odd and positive, got " + std::to_string(d));
    CodeCounts c;
    c.d = d;
    c.n_ph = (3 * d * d - 1) / 2;
    c.n_d = (3 * d * d + 1) / 4;
    c.n_a = 3 * (d * d - 1) / 4;
    if (const auto* row = detail::find_tabulated(d)) {
        c.n_c = static_cast<int>(row->chains.size());
        for (const auto& ch : row->chains) c.n_seg += ch.seg;
    } else {
        // Fits a single chain only up to d = 5; larger untabulated codes have
        // an unknown segmentation.
        c.n_c = d <= 5 ? 1 : 0;
    }
    c.n_nonseg = c.n_a - c.n_seg;
    return c;
}

inline ChainLayout chain_mapping(ArchKind kind, int d) {
    ChainLayout layout;
    layout.kind = kind;
    layout.d = d;
    if (kind == ArchKind::QCCD) {
        auto c = code_qubit_counts(d);
        layout.chains.reserve(static_cast<std::size_t>(c.n_ph));
        // data on transverse paths, syndrome qubits on longitudinal paths
        for (int i = 0; i < c.n_d; ++i) layout.chains.push_back({1, 0, 0});
        for (int i = 0; i < c.n_a; ++i) layout.chains.push_back({0, 1, 0});
        return layout;
    }
    const auto* row = detail::find_tabulated(d);
    if (!row) throw DomainError("chain mapping not tabulated for code distance " + std::to_string(d));
    layout.chains = row->chains;
    return layout;
}

// The N entering the two-qubit gate time during a syndrome round.
inline int max_gate_chain_size(const ChainLayout& layout) {
    if (layout.kind == ArchKind::QCCD) return 2;
    return layout.max_occupancy();
}

inline void check_capacity(const ChainLayout& layout, int capacity) {
    if (layout.kind == ArchKind::QCCD) return;
    for (std::size_t i = 0; i < layout.chains.size(); ++i) {
        int occ = layout.chains[i].total();
        if (occ > capacity)
            throw CapacityError(i, static_cast<std::size_t>(occ), static_cast<std::size_t>(capacity));
    }
}

} // namespace sdqc
