#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// An orientation of a graph: exactly one arc per edge. For orientations
// induced by a half-arc-transitive action on a tetravalent graph every
// vertex has two out-arcs and two in-arcs.
class Orientation {
public:
    // Validates that arcs select exactly one direction for every edge of g.
    static Orientation from_arcs(const Graph& g, const std::vector<std::pair<int, int>>& arcs);

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return arcs_; }
    bool has_arc(int u, int v) const;
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    std::vector<std::pair<int, int>> arcs() const; // sorted

    Orientation reversed() const;
    bool is_two_in_two_out() const;

private:
    int arcs_ = 0;
    std::vector<std::vector<int>> out_, in_; // sorted
};

struct TransitivityReport {
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    bool half_arc_transitive = false; // vertex && edge && !arc
    std::uint64_t vertex_stabilizer_order = 0;
};

// G-alternating cycle decomposition. Every edge lies on exactly one
// alternating cycle; all cycles share one even length (twice the radius) and
// all nonempty pairwise intersections share one size (the attachment number).
struct AltCycleReport {
    std::vector<Cycle> cycles;
    int radius = 0;
    int attachment = 0;
    bool tightly_attached = false;
    std::vector<int> pairwise_intersection_sizes; // sorted multiset, nonempty intersections only
};

// True iff every generator of G maps edges of g to edges.
bool check_action(const PermGroup& G, const Graph& g);

TransitivityReport transitivity(const PermGroup& G, const Graph& g);

// The orientation whose arc set is the G-orbit of seed_arc. Requires a
// half-arc-transitive action; fails if the orbit contains both arcs of some
// edge or misses an edge.
Orientation induced_orientation(const PermGroup& G, const Graph& g, std::pair<int, int> seed_arc);

// Least arc of g in lexicographic order, the default orientation seed.
std::pair<int, int> least_arc(const Graph& g);

// True iff no element of G maps any arc to its reverse (checked on one
// representative per arc orbit).
bool no_adjacent_swap(const PermGroup& G, const Graph& g);

AltCycleReport alternating_cycles(const Graph& g, const Orientation& o);

} // namespace hat
