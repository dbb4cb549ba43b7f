#pragma once

/*
 * Text output: atom tables as CSV/JSON keyed by antichain text, lattices
 * as JSON, rank-check reports as JSON.  Numbers are written at 12
 * significant digits so identical inputs yield identical bytes.
 */

#include <cstdio>
#include <string>

#include "json.hpp"

#include "pidlat/decomposition.hpp"

namespace pidlat {

inline std::string format_g12(double v) {
    if (v == 0.0) return "0"; // fold the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Round through the 12-digit text form so JSON numbers match the CSV ones.
inline double round12(double v) {
    return std::strtod(format_g12(v).c_str(), nullptr);
}

inline std::string atom_table_csv(const DecompositionResult& result, bool include_split) {
    const Lattice& lattice = *result.lattice;
    std::string out = include_split ? "node,atom,atom_plus,atom_minus,measure_value\n"
                                    : "node,atom,measure_value\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        out += to_string(lattice.antichain_of(static_cast<int>(i)));
        out += "," + format_g12(result.averaged.values[i]);
        if (include_split) {
            out += "," + format_g12(result.averaged_plus.values[i]);
            out += "," + format_g12(result.averaged_minus.values[i]);
        }
        out += "," + format_g12(result.measure_values[i]) + "\n";
    }
    return out;
}

// Pointwise tables, one row per (realization, node).
inline std::string pointwise_table_csv(const DecompositionResult& result, const JointDistribution& dist,
                                       bool include_split) {
    const Lattice& lattice = *result.lattice;
    const int n = dist.source_count();
    std::string out;
    for (int i = 1; i <= n; ++i) out += "s" + std::to_string(i) + ",";
    out += include_split ? "t,node,atom,atom_plus,atom_minus,measure_value\n" : "t,node,atom,measure_value\n";
    for (const auto& pw : result.pointwise) {
        std::string prefix;
        for (int i = 0; i < n; ++i)
            prefix += dist.value_name(i, pw.realization.source_codes[static_cast<std::size_t>(i)]) + ",";
        prefix += dist.value_name(n, pw.realization.target_code) + ",";
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            out += prefix + to_string(lattice.antichain_of(static_cast<int>(i)));
            out += "," + format_g12(pw.atoms.values[i]);
            if (include_split) {
                out += "," + format_g12(pw.atoms_plus.values[i]);
                out += "," + format_g12(pw.atoms_minus.values[i]);
            }
            out += "," + format_g12(pw.measure_values.values[i]) + "\n";
        }
    }
    return out;
}

inline nlohmann::json realization_json(const JointDistribution& dist, const Realization& r) {
    nlohmann::json j;
    j["s"] = nlohmann::json::array();
    for (int i = 0; i < dist.source_count(); ++i)
        j["s"].push_back(dist.value_name(i, r.source_codes[static_cast<std::size_t>(i)]));
    j["t"] = dist.value_name(dist.source_count(), r.target_code);
    return j;
}

inline nlohmann::json atom_table_json(const DecompositionResult& result, const JointDistribution& dist,
                                      bool include_split, bool include_pointwise) {
    const Lattice& lattice = *result.lattice;
    nlohmann::json j;
    j["measure"] = to_string(result.measure);
    j["n"] = lattice.n();
    j["atoms"] = nlohmann::json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        nlohmann::json entry;
        entry["node"] = to_string(lattice.antichain_of(static_cast<int>(i)));
        entry["atom"] = round12(result.averaged.values[i]);
        if (include_split) {
            entry["atom_plus"] = round12(result.averaged_plus.values[i]);
            entry["atom_minus"] = round12(result.averaged_minus.values[i]);
        }
        entry["measure_value"] = round12(result.measure_values[i]);
        j["atoms"].push_back(std::move(entry));
    }
    j["consistency"] = {{"max_residual", round12(result.diagnostics.max_abs_residual)},
                        {"tolerance", result.diagnostics.tolerance},
                        {"pass", result.diagnostics.pass},
                        {"worst_collection", to_string(result.diagnostics.worst)}};
    if (include_pointwise) {
        j["pointwise"] = nlohmann::json::array();
        for (const auto& pw : result.pointwise) {
            nlohmann::json entry;
            entry["realization"] = realization_json(dist, pw.realization);
            entry["mass"] = round12(pw.mass);
            entry["atoms"] = nlohmann::json::array();
            for (std::size_t i = 0; i < lattice.size(); ++i) {
                nlohmann::json node;
                node["node"] = to_string(lattice.antichain_of(static_cast<int>(i)));
                node["atom"] = round12(pw.atoms.values[i]);
                if (include_split) {
                    node["atom_plus"] = round12(pw.atoms_plus.values[i]);
                    node["atom_minus"] = round12(pw.atoms_minus.values[i]);
                }
                node["measure_value"] = round12(pw.measure_values.values[i]);
                entry["atoms"].push_back(std::move(node));
            }
            j["pointwise"].push_back(std::move(entry));
        }
    }
    return j;
}

inline nlohmann::json lattice_json(const Lattice& lattice) {
    nlohmann::json j;
    j["n"] = lattice.n();
    j["node_count"] = lattice.size();
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const int idx = static_cast<int>(i);
        nlohmann::json node;
        node["index"] = idx;
        node["bits"] = bitstring(lattice.node(idx));
        node["antichain"] = to_string(lattice.antichain_of(idx));
        node["statement"] = to_string(lattice.statement_of(idx));
        j["nodes"].push_back(std::move(node));
    }
    j["edges"] = nlohmann::json::array(); // child -> parent pairs
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (int c : lattice.children_of(static_cast<int>(i)))
            j["edges"].push_back({c, static_cast<int>(i)});
    return j;
}

inline nlohmann::json rank_check_json(const RankCheckReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["columns"] = report.node_count;
    j["rows"] = report.node_count;
    j["rank"] = report.rank;
    j["zero_rows"] = report.zero_rows;
    j["unique_pid_possible"] = report.unique_pid_possible;
    j["duplicate_rows"] = nlohmann::json::array();
    for (const auto& dup : report.duplicates) j["duplicate_rows"].push_back({dup.first, dup.second});
    if (report.witness)
        j["witness"] = {report.witness->first, report.witness->second};
    else
        j["witness"] = nullptr;
    return j;
}

inline std::string consistency_summary(const ConsistencyReport& report) {
    std::string out = "consistency: max residual " + format_g12(report.max_abs_residual) + " at " +
                      to_string(report.worst) + " over " + std::to_string(report.residuals.size()) +
                      " collections (tolerance " + format_g12(report.tolerance) + "): " +
                      (report.pass ? "PASS" : "FAIL");
    return out;
}

} // namespace pidlat
