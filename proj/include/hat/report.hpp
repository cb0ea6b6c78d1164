#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hat/action.hpp"
#include "hat/five_cycles.hpp"
#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

inline constexpr const char* kToolVersion = "hat 1.0";
inline constexpr const char* kReportSchema = "hatreport/1";

struct AnalyzeOptions {
    std::optional<std::pair<int, int>> orientation_seed; // default: least arc
    std::uint64_t max_group_enum = 100000;
};

// Full analysis record for one (graph, group) pair.
struct HatReport {
    int order = 0;
    int edge_count = 0;
    int girth = 0;
    TransitivityReport transitivity;
    std::pair<int, int> orientation_seed{0, 0};
    AltCycleReport alternating;
    FiveCycleReport five_cycles;
    ConsistentCycleReport consistent;
    ReachabilityReport reach;
    std::int64_t timing_ms = 0; // envelope only, excluded from the report body

    // Deterministic JSON (sorted keys, integers only); timing lives in the
    // "envelope" object.
    std::string to_json() const;
};

// The composite pipeline: action check, transitivity, induced orientation,
// alternating cycles, 5-cycle classification, consistent cycles,
// reachability. Requires a tetravalent graph and a half-arc-transitive
// action; classification-theorem violations abort with named E_THEOREM_*
// failures.
HatReport analyze(const Graph& g, const PermGroup& G, const AnalyzeOptions& opt = {});

} // namespace hat
