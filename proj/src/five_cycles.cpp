#include "hat/five_cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hat/error.hpp"

namespace hat {

namespace {

// Cyclic run structure of the +-1 direction sequence around a 5-cycle.
struct RunInfo {
    int max_run = 0;
    int max_run_count = 0;
    int max_run_start = 0; // edge index where the maximal run begins
    bool all_equal = false;
};

RunInfo cyclic_runs(const std::vector<int>& dirs) {
    const int k = static_cast<int>(dirs.size());
    RunInfo info;
    if (std::all_of(dirs.begin(), dirs.end(), [&](int d) { return d == dirs[0]; })) {
        info.all_equal = true;
        info.max_run = k;
        return info;
    }
    // Scan runs starting at positions where a run begins.
    for (int s = 0; s < k; ++s) {
        if (dirs[(s + k - 1) % k] == dirs[s]) continue; // not a run start
        int len = 1;
        while (dirs[(s + len) % k] == dirs[s]) ++len;
        if (len > info.max_run) {
            info.max_run = len;
            info.max_run_count = 1;
            info.max_run_start = s;
        } else if (len == info.max_run) {
            ++info.max_run_count;
        }
    }
    return info;
}

} // namespace

FiveCycleReport classify_five_cycles(const Graph& g, const Orientation& o) {
    require(o.vertex_count() == g.vertex_count(), "E_DEGREE", "orientation does not match the graph");
    auto girth = g.girth();
    require(!girth || *girth >= 5, "E_GIRTH", "5-cycle classification needs girth at least 5");

    FiveCycleReport report;
    for (int t : {2, 3, 4, 5}) report.incidence.totals[t] = 0;
    for (auto e : g.edges()) report.incidence.per_edge[e] = 0;

    for (const auto& cycle : cycles_of_length(g, 5)) {
        const auto& v = cycle.vertices;
        std::vector<int> dirs(5);
        for (int i = 0; i < 5; ++i) dirs[i] = o.has_arc(v[i], v[(i + 1) % 5]) ? 1 : -1;
        RunInfo runs = cyclic_runs(dirs);

        FiveCycleRecord rec;
        rec.cycle = cycle;
        if (runs.all_equal) {
            rec.type = 5;
        } else {
            rec.type = runs.max_run;
            require(rec.type >= 2 && rec.type <= 4, "E_INTERNAL", "impossible 5-cycle run length");
            require(runs.max_run_count == 1, "E_INTERNAL", "maximal directed subpath is not unique");
            int s = runs.max_run_start;
            if (dirs[s] == 1) {
                for (int i = 0; i <= rec.type; ++i) rec.s_arc.push_back(v[(s + i) % 5]);
            } else {
                for (int i = rec.type; i >= 0; --i) rec.s_arc.push_back(v[(s + i) % 5]);
            }
        }
        ++report.incidence.totals[rec.type];

        for (int i = 0; i < 5; ++i) {
            int a = v[i], b = v[(i + 1) % 5], c = v[(i + 2) % 5], d = v[(i + 3) % 5];
            ++report.incidence.per_edge[std::minmax(a, b)];
            if (o.has_arc(a, b) && o.has_arc(b, c)) ++report.incidence.per_two_arc[{a, b, c}];
            if (o.has_arc(c, b) && o.has_arc(b, a)) ++report.incidence.per_two_arc[{c, b, a}];
            std::array<int, 4> path{a, b, c, d};
            std::array<int, 4> rev{d, c, b, a};
            ++report.incidence.per_three_arc[std::min(path, rev)];
        }
        report.records.push_back(std::move(rec));
    }

    bool first = true;
    for (const auto& [edge, count] : report.incidence.per_edge) {
        (void)edge;
        if (first) {
            report.incidence.per_edge_min = report.incidence.per_edge_max = count;
            first = false;
        } else {
            report.incidence.per_edge_min = std::min(report.incidence.per_edge_min, count);
            report.incidence.per_edge_max = std::max(report.incidence.per_edge_max, count);
        }
    }
    return report;
}

bool assert_no_type2(const std::vector<FiveCycleRecord>& records) {
    return std::none_of(records.begin(), records.end(),
                        [](const FiveCycleRecord& r) { return r.type == 2; });
}

int walk_weight(const Orientation& o, const std::vector<int>& walk) {
    require(walk.size() >= 2, "E_NOT_WALK", "a walk needs at least two vertices");
    int weight = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (o.has_arc(walk[i], walk[i + 1]))
            ++weight;
        else if (o.has_arc(walk[i + 1], walk[i]))
            --weight;
        else
            fail("E_NOT_WALK", "consecutive walk vertices " + std::to_string(walk[i]) + "," +
                                   std::to_string(walk[i + 1]) + " are not adjacent");
    }
    return weight;
}

std::vector<int> ConsistentCycleReport::orbit_lengths() const {
    std::vector<int> lengths;
    for (const auto& o : orbits) lengths.push_back(o.cycle_length);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool ConsistentCycleReport::cycle_is_consistent(const Cycle& c) const {
    for (const auto& orbit : orbits)
        if (std::binary_search(orbit.cycles.begin(), orbit.cycles.end(), c)) return true;
    return false;
}

ConsistentCycleReport consistent_cycles(const PermGroup& G, const Graph& g, const Orientation& o,
                                        std::uint64_t max_group_enum) {
    require(o.is_two_in_two_out(), "E_NOT_2IN2OUT", "orientation is not 2-in/2-out");
    require(check_action(G, g), "E_NOT_AUTOMORPHISMS", "the group does not act on the graph");
    require(G.order() <= max_group_enum, "E_GROUP_TOO_LARGE",
            "group order exceeds the consistent-cycle enumeration bound");

    // Every consistent cycle of a G-invariant orientation is a directed
    // cycle, so some traversal of it passes the seed arc forwards; searching
    // the two out-continuations of the seed arc reaches every orbit.
    ConsistentCycleReport report;
    auto arcs = o.arcs();
    require(!arcs.empty(), "E_EMPTY_GRAPH", "orientation has no arcs");
    report.seed_arc = *std::min_element(arcs.begin(), arcs.end());
    const auto [u, v] = report.seed_arc;

    std::set<Cycle> seen_cycles;
    for (int w : o.out_neighbors(v)) {
        for (const auto& shunt : G.elements_mapping({{u, v}, {v, w}}, max_group_enum)) {
            std::vector<int> trajectory{u};
            int x = shunt.apply(u);
            while (x != u) {
                trajectory.push_back(x);
                x = shunt.apply(x);
            }
            require(trajectory.size() >= 3, "E_INTERNAL", "shunt trajectory shorter than a cycle");
            Cycle cycle = Cycle::canonical(trajectory);
            if (seen_cycles.insert(cycle).second)
                report.records.push_back({cycle, shunt, -1});
        }
    }

    // Group the found cycles into G-orbits.
    std::vector<std::set<Cycle>> orbit_sets;
    for (auto& rec : report.records) {
        int found = -1;
        for (std::size_t i = 0; i < orbit_sets.size() && found < 0; ++i)
            if (orbit_sets[i].count(rec.cycle)) found = static_cast<int>(i);
        if (found < 0) {
            std::set<Cycle> orbit{rec.cycle};
            std::deque<Cycle> queue{rec.cycle};
            while (!queue.empty()) {
                Cycle c = std::move(queue.front());
                queue.pop_front();
                for (const auto& s : G.generators()) {
                    std::vector<int> img(c.vertices.size());
                    for (std::size_t i = 0; i < c.vertices.size(); ++i) img[i] = s.apply(c.vertices[i]);
                    Cycle ic = Cycle::canonical(img);
                    if (orbit.insert(ic).second) queue.push_back(std::move(ic));
                }
            }
            found = static_cast<int>(orbit_sets.size());
            orbit_sets.push_back(std::move(orbit));
        }
        rec.orbit_id = found;
    }
    for (std::size_t i = 0; i < orbit_sets.size(); ++i) {
        ConsistentCycleOrbit orbit;
        orbit.orbit_id = static_cast<int>(i);
        orbit.cycle_length = orbit_sets[i].begin()->length();
        orbit.orbit_size = orbit_sets[i].size();
        orbit.cycles.assign(orbit_sets[i].begin(), orbit_sets[i].end());
        report.orbits.push_back(std::move(orbit));
    }
    return report;
}

namespace {

// Partition of the vertices under the capped relation: reachable by a walk of
// total weight zero whose prefix weights stay in [0, cap].
std::vector<int> reachability_partition(const Orientation& o, int cap) {
    const int n = o.vertex_count();
    std::vector<int> comp(n, -1);
    int next_id = 0;
    std::vector<char> visited(static_cast<std::size_t>(n) * (cap + 1));
    for (int source = 0; source < n; ++source) {
        if (comp[source] >= 0) continue;
        std::fill(visited.begin(), visited.end(), 0);
        std::deque<std::pair<int, int>> queue{{source, 0}};
        visited[static_cast<std::size_t>(source) * (cap + 1)] = 1;
        while (!queue.empty()) {
            auto [x, w] = queue.front();
            queue.pop_front();
            auto push = [&](int y, int wy) {
                std::size_t key = static_cast<std::size_t>(y) * (cap + 1) + wy;
                if (!visited[key]) {
                    visited[key] = 1;
                    queue.emplace_back(y, wy);
                }
            };
            if (w + 1 <= cap)
                for (int y : o.out_neighbors(x)) push(y, w + 1);
            if (w - 1 >= 0)
                for (int y : o.in_neighbors(x)) push(y, w - 1);
        }
        for (int x = 0; x < n; ++x)
            if (visited[static_cast<std::size_t>(x) * (cap + 1)]) {
                require(comp[x] < 0, "E_INTERNAL", "capped reachability is not an equivalence");
                comp[x] = next_id;
            }
        ++next_id;
    }
    return comp;
}

} // namespace

ReachabilityReport reachability(const Orientation& o) {
    const int n = o.vertex_count();
    const int hard_cap = 2 * n;
    ReachabilityReport report;
    std::vector<int> prev = reachability_partition(o, 0);
    for (int cap = 1; cap <= hard_cap; ++cap) {
        std::vector<int> cur = reachability_partition(o, cap);
        if (cur == prev) {
            report.class_of = std::move(cur);
            report.stabilization_depth = cap;
            report.alter_perimeter = 1 + *std::max_element(report.class_of.begin(), report.class_of.end());
            report.alter_complete = report.alter_perimeter == 1;
            return report;
        }
        prev = std::move(cur);
    }
    fail("E_UNSTABLE", "reachability partition did not stabilize below the cap " + std::to_string(hard_cap));
}

} // namespace hat
