#pragma once

// CSV and JSON rendering. Numbers go through std::to_chars so output never
// depends on the C locale.

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sdqc/apps.hpp"
#include "sdqc/config.hpp"
#include "sdqc/errors.hpp"
#include "sdqc/layout.hpp"
#include "sdqc/schedule.hpp"

namespace sdqc::report {

using json = nlohmann::json;

inline std::string num(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string num(long long v) { return std::to_string(v); }
inline std::string num(int v) { return std::to_string(v); }

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << csv_field(cells[i]);
        }
        os_ << '\n';
    }

private:
    std::ostream& os_;
};

// ---------------------------------------------------------------------------
// layout

inline const std::vector<std::string>& layout_columns() {
    static const std::vector<std::string> c{"arch", "d", "chain", "data", "nonsegmented", "segmented", "chain_total"};
    return c;
}

inline void layout_rows(CsvWriter& w, const ChainLayout& l) {
    for (std::size_t i = 0; i < l.chains.size(); ++i) {
        const auto& c = l.chains[i];
        w.row({std::string(to_string(l.kind)), num(l.d), num(static_cast<long long>(i + 1)), num(c.data),
               num(c.nonseg), num(c.seg), num(c.total())});
    }
}

inline json to_json(const CodeCounts& c) {
    return {{"d", c.d},       {"n_physical", c.n_ph},      {"n_data", c.n_d},      {"n_syndrome", c.n_a},
            {"n_segmented", c.n_seg}, {"n_nonsegmented", c.n_nonseg}, {"n_chains", c.n_c}};
}

inline json to_json(const ChainLayout& l) {
    json chains = json::array();
    for (const auto& c : l.chains)
        chains.push_back({{"data", c.data}, {"nonsegmented", c.nonseg}, {"segmented", c.seg}, {"total", c.total()}});
    return {{"arch", std::string(to_string(l.kind))},
            {"d", l.d},
            {"max_occupancy", l.max_occupancy()},
            {"chains", chains}};
}

// ---------------------------------------------------------------------------
// timing

inline const std::vector<std::string>& timing_columns() {
    static const std::vector<std::string> c{"arch",          "n_logical",      "d",
                                            "t_remote_tq_us", "t_ed_us",       "t_se_round_us",
                                            "t_logical_clock_ms", "pipelined"};
    return c;
}

inline std::vector<std::string> timing_cells(const Scenario& s, const ScheduleResult& r) {
    return {std::string(to_string(s.architecture.kind)),
            num(s.n_logical),
            num(s.code_distance),
            num(r.t_remote_tq),
            num(r.t_ed),
            num(r.t_se_round),
            num(r.t_logical_clock / 1000.0),
            r.pipelined ? "true" : "false"};
}

inline json to_json(const ScheduleResult& r) {
    json breakdown = json::object();
    for (const auto& [k, v] : r.breakdown) breakdown[std::string(to_string(k))] = v;
    return {{"t_remote_tq_us", r.t_remote_tq},
            {"t_ed_us", r.t_ed},
            {"t_se_round_us", r.t_se_round},
            {"t_logical_clock_ms", r.t_logical_clock / 1000.0},
            {"pipelined", r.pipelined},
            {"breakdown_us", breakdown}};
}

// ---------------------------------------------------------------------------
// errors

inline const std::vector<std::string>& error_columns() {
    static const std::vector<std::string> c{"mode",      "arch",      "d",           "n_logical",    "lambda",
                                            "lambda_se", "p_trans",   "p_logical",   "p_logical_lo", "p_logical_hi",
                                            "crossover", "regime"};
    return c;
}

// `mode` is "n_logical" when p_trans was derived from the scenario, or
// "p_trans" when it was supplied directly (n_logical then left blank).
inline std::vector<std::string> error_cells(std::string_view mode, const Scenario& s, double p_trans,
                                            const LogicalErrorEstimate& e, double p_star) {
    return {std::string(mode),
            std::string(to_string(s.architecture.kind)),
            num(s.code_distance),
            mode == "p_trans" ? std::string() : num(s.n_logical),
            num(s.improvements.lambda),
            num(s.improvements.lambda_se),
            num(p_trans),
            num(e.central),
            num(e.lower),
            num(e.upper),
            num(p_star),
            std::string(to_string(e.regime))};
}

inline json to_json(const LogicalErrorEstimate& e) {
    return {{"central", e.central},
            {"lower", e.lower},
            {"upper", e.upper},
            {"regime", std::string(to_string(e.regime))},
            {"transversal_term", e.transversal_term},
            {"syndrome_term", e.syndrome_term}};
}

inline json to_json(const TransversalErrorBreakdown& b) {
    return {{"p_trans", b.p_trans},
            {"p_o", b.p_o},
            {"junction_term", b.junction_term},
            {"junctions_counted", b.junctions_counted},
            {"decoherence_term", b.decoherence_term},
            {"exposure_ms", b.exposure_ms},
            {"saturated", b.saturated}};
}

// ---------------------------------------------------------------------------
// evaluate / sweep

inline const std::vector<std::string>& eval_columns() {
    static const std::vector<std::string> c{"app",          "arch",         "d",          "lambda",    "space_total",
                                            "n_spare",      "p_trans",      "p_logical",  "p_logical_lo",
                                            "p_logical_hi", "success",      "success_lo", "success_hi",
                                            "t_exec_days",  "note"};
    return c;
}

inline std::vector<std::string> eval_cells(const EvalResult& r) {
    const auto& s = r.scenario;
    return {r.app,
            std::string(to_string(s.architecture.kind)),
            num(s.code_distance),
            num(s.improvements.lambda),
            r.space ? num(r.space->total) : std::string(),
            r.space ? num(r.space->n_spare_used) : std::string(),
            num(r.transversal.p_trans),
            num(r.p_logical.central),
            num(r.p_logical.lower),
            num(r.p_logical.upper),
            num(r.success.central),
            num(r.success.lower),
            num(r.success.upper),
            num(r.t_exec.days()),
            r.note};
}

// Row that failed outright: identifying columns, blanks, error in `note`.
inline std::vector<std::string> failed_cells(const std::string& app, const SweepRow& row) {
    std::vector<std::string> cells(eval_columns().size());
    cells[0] = app;
    cells[1] = std::string(to_string(row.arch));
    cells[2] = num(row.d);
    cells[3] = num(row.lambda);
    cells.back() = "error: " + row.error;
    return cells;
}

inline json to_json(const EvalResult& r) {
    json j = {{"app", r.app},
              {"scenario", sdqc::to_json(r.scenario)},
              {"counts", to_json(r.counts)},
              {"routing",
               {{"mean_distance", r.routing.mean_distance},
                {"mean_swaps", r.routing.mean_swaps},
                {"mean_junctions_distribution", r.routing.mean_junctions_distribution},
                {"mean_junctions_detection", r.routing.mean_junctions_detection}}},
              {"schedule", to_json(r.schedule)},
              {"transversal", to_json(r.transversal)},
              {"p_logical", to_json(r.p_logical)},
              {"p_idle_logical", to_json(r.p_idle_logical)},
              {"success",
               {{"central", r.success.central},
                {"lower", r.success.lower},
                {"upper", r.success.upper},
                {"saturated", r.success.saturated}}},
              {"t_exec_days", r.t_exec.days()},
              {"note", r.note}};
    if (r.space)
        j["space"] = {{"data", r.space->data},
                      {"syndrome_extraction", r.space->syndrome_extraction},
                      {"gate_teleportation", r.space->gate_teleportation},
                      {"total", r.space->total},
                      {"n_spare", r.space->n_spare_used}};
    else
        j["space"] = nullptr;
    if (r.loss)
        j["loss"] = {{"junctions", r.loss->junctions},
                     {"p_loss_per_pair", r.loss->p_loss_per_pair},
                     {"n_pairs_required", r.loss->n_pairs_required},
                     {"n_spare", r.loss->n_spare},
                     {"p_loss_per_gate", r.loss->p_loss_per_gate},
                     {"threshold", r.loss->threshold}};
    return j;
}

inline json to_json(const std::string& app, const SweepRow& row) {
    if (row.result) return to_json(*row.result);
    return {{"app", app},
            {"arch", std::string(to_string(row.arch))},
            {"d", row.d},
            {"lambda", row.lambda},
            {"error", row.error}};
}

// ---------------------------------------------------------------------------
// frontier

inline const std::vector<std::string>& frontier_columns() {
    static const std::vector<std::string> c{"app", "arch", "d", "target", "reachable", "lambda_star", "success_at_star"};
    return c;
}

} // namespace sdqc::report
