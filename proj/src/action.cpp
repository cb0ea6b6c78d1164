#include "hat/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "hat/error.hpp"

namespace hat {

Orientation Orientation::from_arcs(const Graph& g, const std::vector<std::pair<int, int>>& arcs) {
    const int n = g.vertex_count();
    Orientation o;
    o.out_.assign(n, {});
    o.in_.assign(n, {});
    std::set<std::pair<int, int>> chosen;
    for (auto [u, v] : arcs) {
        require(u >= 0 && u < n && v >= 0 && v < n && g.adjacent(u, v), "E_BAD_ARC",
                "arc (" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc of the graph");
        require(!chosen.count({v, u}), "E_BOTH_ARCS",
                "both arcs of edge {" + std::to_string(u) + "," + std::to_string(v) + "} selected");
        if (!chosen.insert({u, v}).second) continue;
        o.out_[u].push_back(v);
        o.in_[v].push_back(u);
    }
    require(static_cast<int>(chosen.size()) == g.edge_count(), "E_PARTIAL_ORIENTATION",
            "orientation misses some edges of the graph");
    for (auto& nb : o.out_) std::sort(nb.begin(), nb.end());
    for (auto& nb : o.in_) std::sort(nb.begin(), nb.end());
    o.arcs_ = static_cast<int>(chosen.size());
    return o;
}

bool Orientation::has_arc(int u, int v) const {
    const auto& nb = out_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arcs_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u]) out.emplace_back(u, v);
    return out;
}

Orientation Orientation::reversed() const {
    Orientation o;
    o.arcs_ = arcs_;
    o.out_ = in_;
    o.in_ = out_;
    return o;
}

bool Orientation::is_two_in_two_out() const {
    for (int v = 0; v < vertex_count(); ++v)
        if (out_[v].size() != 2 || in_[v].size() != 2) return false;
    return true;
}

bool check_action(const PermGroup& G, const Graph& g) {
    require(G.degree() == g.vertex_count(), "E_DEGREE", "group degree differs from the vertex count");
    for (const auto& s : G.generators())
        for (auto [u, v] : g.edges())
            if (!g.adjacent(s.apply(u), s.apply(v))) return false;
    return true;
}

namespace {

// Orbit of one arc under the generators, as a set of ordered pairs.
std::set<std::pair<int, int>> arc_orbit(const PermGroup& G, std::pair<int, int> seed) {
    std::set<std::pair<int, int>> seen{seed};
    std::deque<std::pair<int, int>> queue{seed};
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (const auto& s : G.generators()) {
            std::pair<int, int> img{s.apply(u), s.apply(v)};
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return seen;
}

} // namespace

TransitivityReport transitivity(const PermGroup& G, const Graph& g) {
    require(check_action(G, g), "E_NOT_AUTOMORPHISMS", "the group does not act on the graph");
    TransitivityReport r;
    r.vertex_transitive = G.is_transitive();
    auto orbit = arc_orbit(G, least_arc(g));
    std::set<std::pair<int, int>> unordered;
    for (auto [u, v] : orbit) unordered.insert(std::minmax(u, v));
    r.edge_transitive = static_cast<int>(unordered.size()) == g.edge_count();
    r.arc_transitive = static_cast<int>(orbit.size()) == 2 * g.edge_count();
    r.half_arc_transitive = r.vertex_transitive && r.edge_transitive && !r.arc_transitive;
    r.vertex_stabilizer_order = G.stabilizer(0).order();
    return r;
}

std::pair<int, int> least_arc(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!g.neighbors(u).empty()) return {u, g.neighbors(u)[0]};
    fail("E_EMPTY_GRAPH", "graph has no edges");
}

Orientation induced_orientation(const PermGroup& G, const Graph& g, std::pair<int, int> seed_arc) {
    require(check_action(G, g), "E_NOT_AUTOMORPHISMS", "the group does not act on the graph");
    require(g.adjacent(seed_arc.first, seed_arc.second), "E_BAD_ARC", "seed is not an arc of the graph");
    auto orbit = arc_orbit(G, seed_arc);
    for (auto [u, v] : orbit)
        require(!orbit.count({v, u}), "E_ARC_TRANSITIVE",
                "the arc orbit contains both arcs of an edge; the action is not half-arc-transitive");
    return Orientation::from_arcs(g, {orbit.begin(), orbit.end()});
}

bool no_adjacent_swap(const PermGroup& G, const Graph& g) {
    require(check_action(G, g), "E_NOT_AUTOMORPHISMS", "the group does not act on the graph");
    // One representative per arc orbit.
    std::set<std::pair<int, int>> remaining;
    for (auto [u, v] : g.edges()) {
        remaining.insert({u, v});
        remaining.insert({v, u});
    }
    while (!remaining.empty()) {
        auto rep = *remaining.begin();
        for (auto arc : arc_orbit(G, rep)) remaining.erase(arc);
        if (G.find_element({{rep.first, rep.second}, {rep.second, rep.first}}).has_value()) return false;
    }
    return true;
}

AltCycleReport alternating_cycles(const Graph& g, const Orientation& o) {
    require(o.is_two_in_two_out(), "E_NOT_2IN2OUT", "orientation is not 2-in/2-out at every vertex");
    const int n = g.vertex_count();

    // Walk with alternating arc directions. State: the current edge as the
    // ordered pair (prev, cur) plus the direction in which the walk traversed
    // it relative to the orientation. At a vertex entered along an in-arc the
    // walk leaves along the other in-arc (traversed backwards), and dually.
    std::set<std::pair<int, int>> unused_edges;
    for (auto e : g.edges()) unused_edges.insert(e);

    AltCycleReport report;
    while (!unused_edges.empty()) {
        auto [a, b] = *unused_edges.begin();
        int u = a, v = b;
        bool forward = o.has_arc(u, v); // direction of traversal u->v vs the orientation
        std::vector<int> walk{u};
        int cur_u = u, cur_v = v;
        bool cur_forward = forward;
        while (true) {
            walk.push_back(cur_v);
            unused_edges.erase(std::minmax(cur_u, cur_v));
            // Arrived at cur_v. If the edge was traversed along its arc
            // (tail to head), leave backwards along the other in-arc of
            // cur_v; otherwise leave forwards along the other out-arc.
            int next = -1;
            if (cur_forward) {
                for (int w : o.in_neighbors(cur_v))
                    if (w != cur_u) next = w;
                require(next >= 0, "E_ALT_WALK", "missing alternating continuation");
                cur_u = cur_v;
                cur_v = next;
                cur_forward = false; // edge (next -> cur) traversed against its arc
            } else {
                for (int w : o.out_neighbors(cur_v))
                    if (w != cur_u) next = w;
                require(next >= 0, "E_ALT_WALK", "missing alternating continuation");
                cur_u = cur_v;
                cur_v = next;
                cur_forward = true;
            }
            if (cur_u == u && cur_v == v && cur_forward == forward) break;
            require(walk.size() <= static_cast<std::size_t>(2 * g.edge_count() + 2), "E_ALT_WALK",
                    "alternating walk failed to close");
        }
        walk.pop_back(); // the closing vertex equals the start
        std::set<int> uniq(walk.begin(), walk.end());
        require(uniq.size() == walk.size(), "E_ALT_NOT_SIMPLE",
                "an alternating walk revisits a vertex; the action is not half-arc-transitive");
        report.cycles.push_back(Cycle::canonical(walk));
    }
    std::sort(report.cycles.begin(), report.cycles.end());

    const std::size_t len = report.cycles.front().vertices.size();
    for (const auto& c : report.cycles)
        require(c.vertices.size() == len, "E_ALT_LENGTHS",
                "alternating cycles of different lengths; the action is not half-arc-transitive");
    require(len % 2 == 0, "E_ALT_LENGTHS", "alternating cycles must have even length");
    report.radius = static_cast<int>(len / 2);

    // Attachment: all nonempty pairwise intersections must agree. Each vertex
    // lies on exactly two alternating cycles, so collect cycle ids per vertex.
    std::vector<std::vector<int>> cycles_at(n);
    for (std::size_t ci = 0; ci < report.cycles.size(); ++ci)
        for (int v : report.cycles[ci].vertices) cycles_at[v].push_back(static_cast<int>(ci));
    std::map<std::pair<int, int>, int> inter;
    for (int v = 0; v < n; ++v) {
        const auto& ids = cycles_at[v];
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (ids[i] != ids[j]) ++inter[{ids[i], ids[j]}];
    }
    if (report.cycles.size() < 2) {
        report.attachment = report.radius;
    } else {
        require(!inter.empty(), "E_ALT_DISJOINT", "no two alternating cycles intersect");
        report.attachment = inter.begin()->second;
        for (const auto& [pair, size] : inter) {
            (void)pair;
            require(size == report.attachment, "E_ALT_ATTACHMENT",
                    "intersecting alternating cycles disagree on the intersection size");
            report.pairwise_intersection_sizes.push_back(size);
        }
        std::sort(report.pairwise_intersection_sizes.begin(), report.pairwise_intersection_sizes.end());
    }
    report.tightly_attached = report.attachment == report.radius;
    return report;
}

} // namespace hat
