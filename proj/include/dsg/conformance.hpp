#pragma once

// Runs exhaustive computation and closed-form predictions side by side,
// classifies agreement, and renders deterministic reports.
//
// Statuses: match / mismatch / skipped(<cap reason>) / exempt(<registry id>).
// The exemption registry is closed: single-vertex-diameter,
// single-vertex-eulerian, noninteger-upper-chromatic-bound. Anything else
// that disagrees surfaces as a mismatch (a finding, not a tool error).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsg/invariants.hpp"

namespace dsg {

enum class CheckId {
    order,
    size,
    degree_class,
    diameter,
    girth,
    min_degree,
    edge_connectivity,
    eulerian,
    triangulated,
    domination,
    upper_domination,
    independence,
    clique_number,
    clique_census,
    chromatic_bounds,
    completeness,
};

inline constexpr int kCheckCount = 16;

const char* check_name(CheckId id);
std::optional<CheckId> check_from_name(std::string_view name);
std::vector<CheckId> all_checks();

enum class CheckStatus { match, mismatch, skipped, exempt };

struct CheckResult {
    CheckId id{};
    SpaceParams params;
    std::string predicted;
    std::string computed;
    CheckStatus status = CheckStatus::match;
    std::string note; // skip reason, exemption id, case label, or diagnostics
};

// full status text as it appears in reports, e.g. "skipped(order 576
// exceeds clique order cap 300)" or "exempt(single-vertex-eulerian)"
std::string status_text(const CheckResult& r);

struct GridSpec {
    std::vector<std::uint64_t> q_values = {2, 3, 5};
    int r_lo = 1, r_hi = 4;
    int s_lo = 1, s_hi = 4;
    bool canonical_only = false;              // restrict to r <= s
    std::optional<std::uint64_t> order_bound; // points above appear as skipped
};

// q in {2,3,5}, 1 <= r <= s <= 4, order <= 1000
GridSpec default_grid();

struct SweepReport {
    GridSpec grid;
    Caps caps;
    std::vector<CheckResult> results; // canonical order: (q, r, s, check)
    std::uint64_t matches = 0, mismatches = 0, skipped = 0, exempt = 0;
};

// Results come back in canonical check order regardless of selection order.
std::vector<CheckResult> run_checks(const SpaceParams& p,
                                    const std::vector<CheckId>& selection,
                                    const Caps& caps = {});

SweepReport sweep_grid(const GridSpec& grid, const Caps& caps = {},
                       const std::vector<CheckId>& selection = all_checks());

// single-parameter-point report, for rendering verify results
SweepReport single_point_report(const SpaceParams& p, const Caps& caps,
                                std::vector<CheckResult> results);

enum class ReportFormat { table, json, csv };

void render_report(const SweepReport& report, ReportFormat fmt, std::ostream& out);
std::string render_report_string(const SweepReport& report, ReportFormat fmt);

} // namespace dsg
