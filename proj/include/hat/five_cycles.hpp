#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "hat/action.hpp"
#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// A 5-cycle classified by its longest directed subpath: types 2, 3 and 4 are
// undirected (the cycle contains a vertex that heads or tails both of its
// cycle edges), type 5 is a directed 5-cycle. For types 2..4 s_arc is the
// unique maximal directed subpath, written along its arcs.
struct FiveCycleRecord {
    Cycle cycle;
    int type = 0;
    std::vector<int> s_arc;
};

struct FiveCycleIncidence {
    std::map<std::pair<int, int>, int> per_edge;       // u < v
    std::map<std::array<int, 3>, int> per_two_arc;     // directed 2-arcs of the orientation
    std::map<std::array<int, 4>, int> per_three_arc;   // undirected 3-paths, lex-min of the two readings
    std::map<int, int> totals;                         // type -> count
    int per_edge_min = 0;
    int per_edge_max = 0;
};

struct FiveCycleReport {
    std::vector<FiveCycleRecord> records;
    FiveCycleIncidence incidence;
};

// Classifies every 5-cycle of g with respect to o. Errors when girth < 5.
// The classification does not depend on which of the two paired orientations
// is supplied.
FiveCycleReport classify_five_cycles(const Graph& g, const Orientation& o);

// True iff no record has type 2.
bool assert_no_type2(const std::vector<FiveCycleRecord>& records);

// Number of forward arcs minus number of backward arcs along the walk.
int walk_weight(const Orientation& o, const std::vector<int>& walk);

// A cycle together with a group element rotating it one step.
struct ConsistentCycleRecord {
    Cycle cycle;
    Permutation shunt;
    int orbit_id = -1;
};

struct ConsistentCycleOrbit {
    int orbit_id = 0;
    int cycle_length = 0;
    std::uint64_t orbit_size = 0;
    std::vector<Cycle> cycles; // the whole orbit, sorted
};

struct ConsistentCycleReport {
    std::vector<ConsistentCycleRecord> records; // representatives through the seed arc
    std::vector<ConsistentCycleOrbit> orbits;
    std::pair<int, int> seed_arc{0, 0};

    std::vector<int> orbit_lengths() const; // multiset of cycle lengths, one per orbit
    bool cycle_is_consistent(const Cycle& c) const;
};

// Finds the consistent cycles of a half-arc-transitive action: for the least
// arc (u,v) of the orientation and each out-neighbor w of v, every element
// mapping (u,v) to (v,w) is a candidate shunt and its vertex trajectory from
// u closes into a consistent cycle. Orbits are computed under G.
ConsistentCycleReport consistent_cycles(const PermGroup& G, const Graph& g, const Orientation& o,
                                        std::uint64_t max_group_enum = 100000);

// Classes of the reachability relation: u and v are related when a walk of
// total weight zero joins them whose prefix weights stay nonnegative.
struct ReachabilityReport {
    std::vector<int> class_of; // class ids numbered by least member
    int alter_perimeter = 0;
    bool alter_complete = false;
    int stabilization_depth = 0; // prefix-weight cap at which the partition stopped changing
};

// Iterative deepening on the prefix-weight cap; errors if the partition has
// not stabilized by cap 2|V|.
ReachabilityReport reachability(const Orientation& o);

} // namespace hat
