#pragma once

// Physical parameters, improvement factors, architecture descriptors and
// scenario loading.
//
// Durations are microseconds unless a name says otherwise; error rates are
// dimensionless probabilities (idle error is per millisecond of exposure).

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sdqc/error.hpp"

namespace sdqc {

using json = nlohmann::json;

struct OperationTimes {
    double single_qubit_gate = 5.0;
    double tq_slope = 13.33; // per ion resident in the chain
    double tq_offset = 54.0;
    double tq_floor = 100.0;
    double measurement = 400.0;
    double cooling = 300.0;
    double photonic_entangling_mean = 4000.0;
    double stable_transport_per_unit = 46.9;
    double fast_transport_per_unit = 4.6;
    double split = 128.0;
    double merge = 128.0;
    double physical_swap = 200.0;
    double unit_distance_um = 375.0;

    friend bool operator==(const OperationTimes&, const OperationTimes&) = default;
};

struct ErrorRates {
    double p_sq = 1.5e-7;
    double p_tq = 3.0e-4;
    double p_meas = 9.0e-5;
    double p_pe = 2.85e-2;
    double p_junction = 1.0e-5;
    double p_idle_per_ms = 3.7e-6;

    friend bool operator==(const ErrorRates&, const ErrorRates&) = default;
};

struct ImprovementFactors {
    double lambda = 1.0;    // global, applied to every base rate
    double lambda_se = 1.0; // syndrome extraction only, inside the logical error model

    friend bool operator==(const ImprovementFactors&, const ImprovementFactors&) = default;
};

enum class ArchKind { SDQC, QCCD, PhotonicDQC };

inline constexpr std::array<ArchKind, 3> kAllArchs{ArchKind::SDQC, ArchKind::QCCD, ArchKind::PhotonicDQC};

inline std::string_view to_string(ArchKind k) {
    switch (k) {
    case ArchKind::SDQC: return "sdqc";
    case ArchKind::QCCD: return "qccd";
    case ArchKind::PhotonicDQC: return "photonic";
    }
    return "?";
}

inline std::optional<ArchKind> parse_arch(std::string_view s) {
    if (s == "sdqc" || s == "SDQC") return ArchKind::SDQC;
    if (s == "qccd" || s == "QCCD") return ArchKind::QCCD;
    if (s == "photonic" || s == "pdqc" || s == "PhotonicDQC") return ArchKind::PhotonicDQC;
    return std::nullopt;
}

inline bool is_dqc(ArchKind k) { return k != ArchKind::QCCD; }

// Which chain occupancy sets the two-qubit gate time of a DQC remote gate.
enum class RemoteGateOccupancy {
    Capacity, // full node capacity
    Working,  // the chain's syndrome-round occupancy (max_gate_chain_size)
};

struct ArchitectureSpec {
    ArchKind kind = ArchKind::SDQC;
    bool purification_enabled = false;
    int chain_capacity = 60;
    RemoteGateOccupancy remote_gate_occupancy = RemoteGateOccupancy::Capacity;
    // DQC only: Bell-basis readout of syndrome qubits (transport to the
    // detector plus detection) overlaps the next round.
    bool pipeline_syndrome_readout = true;

    friend bool operator==(const ArchitectureSpec&, const ArchitectureSpec&) = default;
};

struct Scenario {
    ArchitectureSpec architecture;
    int code_distance = 13;
    long long n_logical = 2871;
    ImprovementFactors improvements;
    OperationTimes times;
    ErrorRates errors;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline ErrorRates apply_improvement(const ErrorRates& r, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("improvement factor must be positive, got " + std::to_string(lambda));
    return {r.p_sq / lambda, r.p_tq / lambda, r.p_meas / lambda,
            r.p_pe / lambda, r.p_junction / lambda, r.p_idle_per_ms / lambda};
}

// Base rates with the scenario's global improvement applied.
inline ErrorRates effective_errors(const Scenario& s) { return apply_improvement(s.errors, s.improvements.lambda); }

inline bool valid_code_distance(int d) { return d >= 3 && d % 2 == 1; }

inline void validate(const Scenario& s) {
    auto positive = [](const char* field, double v) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(field, "must be strictly positive");
    };
    const auto& t = s.times;
    positive("times.single_qubit_gate", t.single_qubit_gate);
    positive("times.tq_slope", t.tq_slope);
    positive("times.tq_offset", t.tq_offset);
    if (!(t.tq_floor >= 0.0)) throw ConfigError("times.tq_floor", "must be nonnegative");
    positive("times.measurement", t.measurement);
    positive("times.cooling", t.cooling);
    positive("times.photonic_entangling_mean", t.photonic_entangling_mean);
    positive("times.stable_transport_per_unit", t.stable_transport_per_unit);
    positive("times.fast_transport_per_unit", t.fast_transport_per_unit);
    positive("times.split", t.split);
    positive("times.merge", t.merge);
    positive("times.physical_swap", t.physical_swap);
    positive("times.unit_distance_um", t.unit_distance_um);

    auto probability = [](const char* field, double v) {
        if (!(v >= 0.0 && v < 1.0)) throw ConfigError(field, "must lie in [0, 1)");
    };
    const auto& e = s.errors;
    probability("errors.p_sq", e.p_sq);
    probability("errors.p_tq", e.p_tq);
    probability("errors.p_meas", e.p_meas);
    probability("errors.p_pe", e.p_pe);
    probability("errors.p_junction", e.p_junction);
    probability("errors.p_idle_per_ms", e.p_idle_per_ms);

    positive("sweep.lambda", s.improvements.lambda);
    positive("sweep.lambda_se", s.improvements.lambda_se);

    if (!valid_code_distance(s.code_distance))
        throw ConfigError("sweep.code_distance", "must be odd and >= 3, got " + std::to_string(s.code_distance));
    if (s.n_logical < 1) throw ConfigError("sweep.n_logical", "must be >= 1");
    if (s.architecture.chain_capacity < 2) throw ConfigError("architecture.chain_capacity", "must be >= 2");
    if (s.architecture.purification_enabled && s.architecture.kind != ArchKind::SDQC)
        throw ConfigError("architecture.purification", "only meaningful for SDQC");
}

// ---------------------------------------------------------------------------
// JSON mapping
//
// Document layout:
//   { "times": {...}, "errors": {...},
//     "architecture": { "kind": "sdqc" | ["sdqc","qccd"], "purification": false,
//                       "chain_capacity": 60, "remote_gate_occupancy": "capacity",
//                       "pipeline_syndrome_readout": true },
//     "sweep": { "code_distance": 13 | [..], "n_logical": 2871 | [..],
//                "lambda": 1 | [..], "lambda_se": [..] } }
// Every key is optional; unknown keys are rejected.

namespace detail {

template <class T>
void read_field(const json& obj, std::string_view section, const char* key, T& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    try {
        out = it->template get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string(section) + "." + key, "wrong type: " + it->dump());
    }
}

inline void reject_unknown(const json& obj, std::string_view section, std::initializer_list<std::string_view> known) {
    if (!obj.is_object()) throw ConfigError(std::string(section), "must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool found = false;
        for (auto k : known) found = found || k == it.key();
        if (!found) throw ConfigError(std::string(section) + "." + it.key(), "unknown key");
    }
}

// Scalar or array, returned as a list.
template <class T>
std::vector<T> read_list(const json& obj, std::string_view section, const char* key, std::vector<T> dflt) {
    auto it = obj.find(key);
    if (it == obj.end()) return dflt;
    std::string field = std::string(section) + "." + key;
    try {
        if (it->is_array()) {
            auto v = it->template get<std::vector<T>>();
            if (v.empty()) throw ConfigError(field, "list must not be empty");
            return v;
        }
        return {it->template get<T>()};
    } catch (const json::exception&) {
        throw ConfigError(field, "wrong type: " + it->dump());
    }
}

} // namespace detail

inline json to_json(const OperationTimes& t) {
    return {{"single_qubit_gate", t.single_qubit_gate},
            {"tq_slope", t.tq_slope},
            {"tq_offset", t.tq_offset},
            {"tq_floor", t.tq_floor},
            {"measurement", t.measurement},
            {"cooling", t.cooling},
            {"photonic_entangling_mean", t.photonic_entangling_mean},
            {"stable_transport_per_unit", t.stable_transport_per_unit},
            {"fast_transport_per_unit", t.fast_transport_per_unit},
            {"split", t.split},
            {"merge", t.merge},
            {"physical_swap", t.physical_swap},
            {"unit_distance_um", t.unit_distance_um}};
}

inline OperationTimes times_from_json(const json& j) {
    detail::reject_unknown(j, "times",
                           {"single_qubit_gate", "tq_slope", "tq_offset", "tq_floor", "measurement", "cooling",
                            "photonic_entangling_mean", "stable_transport_per_unit", "fast_transport_per_unit",
                            "split", "merge", "physical_swap", "unit_distance_um"});
    OperationTimes t;
    detail::read_field(j, "times", "single_qubit_gate", t.single_qubit_gate);
    detail::read_field(j, "times", "tq_slope", t.tq_slope);
    detail::read_field(j, "times", "tq_offset", t.tq_offset);
    detail::read_field(j, "times", "tq_floor", t.tq_floor);
    detail::read_field(j, "times", "measurement", t.measurement);
    detail::read_field(j, "times", "cooling", t.cooling);
    detail::read_field(j, "times", "photonic_entangling_mean", t.photonic_entangling_mean);
    detail::read_field(j, "times", "stable_transport_per_unit", t.stable_transport_per_unit);
    detail::read_field(j, "times", "fast_transport_per_unit", t.fast_transport_per_unit);
    detail::read_field(j, "times", "split", t.split);
    detail::read_field(j, "times", "merge", t.merge);
    detail::read_field(j, "times", "physical_swap", t.physical_swap);
    detail::read_field(j, "times", "unit_distance_um", t.unit_distance_um);
    return t;
}

inline json to_json(const ErrorRates& e) {
    return {{"p_sq", e.p_sq},   {"p_tq", e.p_tq},             {"p_meas", e.p_meas},
            {"p_pe", e.p_pe},   {"p_junction", e.p_junction}, {"p_idle_per_ms", e.p_idle_per_ms}};
}

inline ErrorRates errors_from_json(const json& j) {
    detail::reject_unknown(j, "errors", {"p_sq", "p_tq", "p_meas", "p_pe", "p_junction", "p_idle_per_ms"});
    ErrorRates e;
    detail::read_field(j, "errors", "p_sq", e.p_sq);
    detail::read_field(j, "errors", "p_tq", e.p_tq);
    detail::read_field(j, "errors", "p_meas", e.p_meas);
    detail::read_field(j, "errors", "p_pe", e.p_pe);
    detail::read_field(j, "errors", "p_junction", e.p_junction);
    detail::read_field(j, "errors", "p_idle_per_ms", e.p_idle_per_ms);
    return e;
}

inline json to_json(const Scenario& s) {
    const auto& a = s.architecture;
    return {{"times", to_json(s.times)},
            {"errors", to_json(s.errors)},
            {"architecture",
             {{"kind", std::string(to_string(a.kind))},
              {"purification", a.purification_enabled},
              {"chain_capacity", a.chain_capacity},
              {"remote_gate_occupancy", a.remote_gate_occupancy == RemoteGateOccupancy::Working ? "working" : "capacity"},
              {"pipeline_syndrome_readout", a.pipeline_syndrome_readout}}},
            {"sweep",
             {{"code_distance", s.code_distance},
              {"n_logical", s.n_logical},
              {"lambda", s.improvements.lambda},
              {"lambda_se", s.improvements.lambda_se}}}};
}

// Resolves a config document into the cartesian product of its list-valued
// fields, ordered architecture, code distance, n_logical, lambda, lambda_se.
inline std::vector<Scenario> scenarios_from_json(const json& doc) {
    if (doc.is_null()) return scenarios_from_json(json::object());
    detail::reject_unknown(doc, "", {"times", "errors", "architecture", "sweep"});

    Scenario base;
    if (auto it = doc.find("times"); it != doc.end()) base.times = times_from_json(*it);
    if (auto it = doc.find("errors"); it != doc.end()) base.errors = errors_from_json(*it);

    std::vector<ArchKind> kinds{ArchKind::SDQC};
    if (auto it = doc.find("architecture"); it != doc.end()) {
        const json& a = *it;
        detail::reject_unknown(a, "architecture",
                               {"kind", "purification", "chain_capacity", "remote_gate_occupancy",
                                "pipeline_syndrome_readout"});
        auto names = detail::read_list<std::string>(a, "architecture", "kind", {"sdqc"});
        kinds.clear();
        for (const auto& n : names) {
            if (n == "all") {
                kinds.assign(kAllArchs.begin(), kAllArchs.end());
                continue;
            }
            auto k = parse_arch(n);
            if (!k) throw ConfigError("architecture.kind", "unknown architecture '" + n + "'");
            kinds.push_back(*k);
        }
        detail::read_field(a, "architecture", "purification", base.architecture.purification_enabled);
        detail::read_field(a, "architecture", "chain_capacity", base.architecture.chain_capacity);
        detail::read_field(a, "architecture", "pipeline_syndrome_readout", base.architecture.pipeline_syndrome_readout);
        std::string occ = "capacity";
        detail::read_field(a, "architecture", "remote_gate_occupancy", occ);
        if (occ == "capacity") base.architecture.remote_gate_occupancy = RemoteGateOccupancy::Capacity;
        else if (occ == "working") base.architecture.remote_gate_occupancy = RemoteGateOccupancy::Working;
        else throw ConfigError("architecture.remote_gate_occupancy", "expected 'capacity' or 'working'");
    }

    json sweep = json::object();
    if (auto it = doc.find("sweep"); it != doc.end()) sweep = *it;
    detail::reject_unknown(sweep, "sweep", {"code_distance", "n_logical", "lambda", "lambda_se"});
    auto ds = detail::read_list<int>(sweep, "sweep", "code_distance", {13});
    auto nls = detail::read_list<long long>(sweep, "sweep", "n_logical", {2871});
    auto lams = detail::read_list<double>(sweep, "sweep", "lambda", {1.0});
    std::optional<std::vector<double>> lam_se;
    if (sweep.contains("lambda_se")) lam_se = detail::read_list<double>(sweep, "sweep", "lambda_se", {});

    std::vector<Scenario> out;
    for (auto kind : kinds)
        for (int d : ds)
            for (auto nl : nls)
                for (double lam : lams) {
                    std::vector<double> ses = lam_se ? *lam_se : std::vector<double>{lam};
                    for (double se : ses) {
                        Scenario s = base;
                        s.architecture.kind = kind;
                        if (kind != ArchKind::SDQC) s.architecture.purification_enabled = false;
                        s.code_distance = d;
                        s.n_logical = nl;
                        s.improvements = {lam, se};
                        validate(s);
                        out.push_back(s);
                    }
                }
    return out;
}

inline Scenario scenario_from_json(const json& j) {
    auto v = scenarios_from_json(j);
    if (v.size() != 1) throw ConfigError("", "document describes " + std::to_string(v.size()) + " scenarios, expected 1");
    return v.front();
}

// Applies a `a.b.c=value` override. The value is parsed as JSON when
// possible, otherwise taken as a string.
inline void apply_override(json& doc, std::string_view assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError(std::string(assignment), "override must look like key.path=value");
    std::string path(assignment.substr(0, eq));
    std::string raw(assignment.substr(eq + 1));
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;

    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        auto dot = path.find('.', start);
        std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (key.empty()) throw ConfigError(path, "empty path component");
        if (node->is_null()) *node = json::object();
        if (!node->is_object()) throw ConfigError(path, "cannot descend into a non-object");
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

inline json parse_config_text(const std::string& text, const std::string& origin = "<config>") {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line number
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ConfigError("", origin + ":" + std::to_string(line) + ": " + e.what());
    }
}

inline constexpr const char* kConfigEnvVar = "SDQC_CONFIG";

// Path resolution: explicit argument, else $SDQC_CONFIG, else none.
inline std::optional<std::string> resolve_config_path(const std::string& explicit_path) {
    if (!explicit_path.empty()) return explicit_path;
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) return std::string(env);
    return std::nullopt;
}

inline json read_config_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

inline std::vector<Scenario> load_config(const std::string& path, const std::vector<std::string>& overrides = {}) {
    json doc = read_config_document(path);
    for (const auto& o : overrides) apply_override(doc, o);
    return scenarios_from_json(doc);
}

} // namespace sdqc
