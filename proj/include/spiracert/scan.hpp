#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spiracert/parallel.hpp"
#include "spiracert/theorems.hpp"

namespace spiracert {

/// Round-trip-safe decimal rendering (17 significant digits).
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// A rectangular (c, kappa) region scan for one or more conditions.
struct ScanSpec {
    double c_lo = -1.0, c_hi = -0.1;          // hi < 0
    double kappa_lo = 0.5, kappa_hi = 2.0;    // lo > 0
    int steps = 2;                            // per axis, >= 2
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<ConditionId> conditions;
    std::optional<RtauParams> rtau;
    enum class Format { Csv, Json } format = Format::Csv;

    void validate() const {
        if (!(c_lo <= c_hi && c_hi < 0.0))
            throw std::invalid_argument("scan: require c_lo <= c_hi < 0");
        if (!(0.0 < kappa_lo && kappa_lo <= kappa_hi))
            throw std::invalid_argument("scan: require 0 < kappa_lo <= kappa_hi");
        if (steps < 2) throw std::invalid_argument("scan: require steps >= 2");
        if (conditions.empty()) throw std::invalid_argument("scan: no conditions requested");
        SpiralParams check(alpha, beta);  // throws InvalidSpiralParams
        (void)check;
        for (ConditionId id : conditions) {
            switch (id) {
                case ConditionId::T1_HH:
                case ConditionId::T2_Q:
                case ConditionId::T3_GH:
                case ConditionId::T4_66:
                case ConditionId::T6_G_HH:
                case ConditionId::T8_G_66:
                    break;
                case ConditionId::T5_D3:
                case ConditionId::T7_D3EXP:
                    if (!rtau)
                        throw InvalidRtauParams("scan: " + to_string(id) +
                                                " requires A, B, tau");
                    break;
                default:
                    throw std::invalid_argument("scan: condition " + to_string(id) +
                                                " is not scannable");
            }
        }
    }
};

namespace detail {

inline double grid_value(double lo, double hi, int steps, int i) {
    return lo + (hi - lo) * i / (steps - 1);
}

}  // namespace detail

/// Runs the scan and renders the whole output as one string. Rows are
/// c-major ascending; every row is computed into its own slot, so the bytes
/// do not depend on the worker count.
inline std::string run_scan(const ScanSpec& spec, int threads = 0) {
    spec.validate();
    const SpiralParams s(spec.alpha, spec.beta);
    const long rows = static_cast<long>(spec.steps) * spec.steps;

    struct Cell {
        double lhs, margin;
        bool holds;
    };
    struct Row {
        double c, kappa;
        std::vector<Cell> cells;
    };
    std::vector<Row> table(static_cast<size_t>(rows));
    parallel_for(
        rows,
        [&](long idx) {
            const int i = static_cast<int>(idx / spec.steps);   // c index (major)
            const int j = static_cast<int>(idx % spec.steps);   // kappa index
            Row& row = table[static_cast<size_t>(idx)];
            row.c = detail::grid_value(spec.c_lo, spec.c_hi, spec.steps, i);
            row.kappa = detail::grid_value(spec.kappa_lo, spec.kappa_hi, spec.steps, j);
            const BesselParams p(row.c, row.kappa);
            row.cells.reserve(spec.conditions.size());
            for (ConditionId id : spec.conditions) {
                const Certificate cert = evaluate_condition(id, p, s, spec.rtau);
                row.cells.push_back({cert.lhs, cert.margin, cert.holds});
            }
        },
        threads);

    if (spec.format == ScanSpec::Format::Json) {
        nlohmann::json rows_json = nlohmann::json::array();
        for (const Row& row : table) {
            nlohmann::json obj{{"c", row.c}, {"kappa", row.kappa}};
            for (size_t k = 0; k < spec.conditions.size(); ++k) {
                obj[to_string(spec.conditions[k])] = {{"lhs", row.cells[k].lhs},
                                                      {"margin", row.cells[k].margin},
                                                      {"holds", row.cells[k].holds}};
            }
            rows_json.push_back(std::move(obj));
        }
        nlohmann::json doc{{"alpha", spec.alpha}, {"beta", spec.beta}, {"rows", rows_json}};
        return doc.dump() + "\n";
    }

    std::string out = "c,kappa";
    for (ConditionId id : spec.conditions) {
        const std::string name = to_string(id);
        out += "," + name + "_lhs," + name + "_margin," + name + "_holds";
    }
    out += "\n";
    for (const Row& row : table) {
        out += format_double(row.c) + "," + format_double(row.kappa);
        for (const Cell& cell : row.cells) {
            out += "," + format_double(cell.lhs) + "," + format_double(cell.margin) + "," +
                   (cell.holds ? "1" : "0");
        }
        out += "\n";
    }
    return out;
}

}  // namespace spiracert
