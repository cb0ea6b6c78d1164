#include "doctest.h"

#include <set>

#include "hat/action.hpp"
#include "hat/error.hpp"
#include "hat/families.hpp"
#include "hat/five_cycles.hpp"

using namespace hat;

namespace {

Graph pentagon() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

Orientation r12_orientation(const R12Package& pkg, const std::vector<Permutation>& gens) {
    PermGroup group(24, gens);
    return induced_orientation(group, pkg.graph, least_arc(pkg.graph));
}

} // namespace

TEST_CASE("type classification on the tightly-attached families") {
    XoParams dh{3, 9, 4};
    Graph dh_graph = xo(dh);
    FiveCycleReport dh_rep = classify_five_cycles(dh_graph, xo_orientation(dh));
    CHECK(dh_rep.records.size() == 54);
    CHECK(dh_rep.incidence.totals.at(4) == 54);
    CHECK(dh_rep.incidence.totals.at(2) == 0);
    CHECK(dh_rep.incidence.totals.at(3) == 0);
    CHECK(dh_rep.incidence.totals.at(5) == 0);
    CHECK(dh_rep.incidence.per_edge_min == 5);
    CHECK(dh_rep.incidence.per_edge_max == 5);
    for (const auto& rec : dh_rep.records) {
        REQUIRE(rec.s_arc.size() == 5);
        // the 4-arc really is a directed path
        Orientation o = xo_orientation(dh);
        for (int i = 0; i + 1 < 5; ++i) CHECK(o.has_arc(rec.s_arc[i], rec.s_arc[i + 1]));
    }

    XoParams p{5, 11, 3};
    FiveCycleReport rep = classify_five_cycles(xo(p), xo_orientation(p));
    CHECK(rep.records.size() == 22);
    CHECK(rep.incidence.totals.at(5) == 22);
    CHECK(rep.incidence.per_edge_min == 1);
    CHECK(rep.incidence.per_edge_max == 1);
}

TEST_CASE("R12 types: all 4 under G1, all 3 under G2, five per edge") {
    R12Package pkg = r12_special_package();
    FiveCycleReport r1 = classify_five_cycles(pkg.graph, r12_orientation(pkg, pkg.g1_gens));
    CHECK(r1.records.size() == 48);
    CHECK(r1.incidence.totals.at(4) == 48);
    CHECK(r1.incidence.per_edge_min == 5);
    CHECK(r1.incidence.per_edge_max == 5);

    FiveCycleReport r2 = classify_five_cycles(pkg.graph, r12_orientation(pkg, pkg.g2_gens));
    CHECK(r2.records.size() == 48);
    CHECK(r2.incidence.totals.at(3) == 48);
    for (const auto& rec : r2.records) CHECK(rec.s_arc.size() == 4);
}

TEST_CASE("classification is invariant under the paired orientation") {
    R12Package pkg = r12_special_package();
    Orientation o = r12_orientation(pkg, pkg.g2_gens);
    FiveCycleReport a = classify_five_cycles(pkg.graph, o);
    FiveCycleReport b = classify_five_cycles(pkg.graph, o.reversed());
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].cycle == b.records[i].cycle);
        CHECK(a.records[i].type == b.records[i].type);
    }
}

TEST_CASE("girth guard") {
    Graph k5 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                     {2, 3}, {2, 4}, {3, 4}});
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : k5.edges()) arcs.emplace_back(u, v);
    Orientation o = Orientation::from_arcs(k5, arcs);
    CHECK_THROWS_WITH_AS(static_cast<void>(classify_five_cycles(k5, o)), doctest::Contains("E_GIRTH"),
                         Error);
}

TEST_CASE("an adversarial orientation produces a type-2 cycle") {
    Graph p = pentagon();
    Orientation o = Orientation::from_arcs(p, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {0, 4}});
    FiveCycleReport rep = classify_five_cycles(p, o);
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].type == 2);
    CHECK(!assert_no_type2(rep.records));
    CHECK(assert_no_type2({}));

    // and a directed pentagon is type 5
    Orientation directed = Orientation::from_arcs(p, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    FiveCycleReport drep = classify_five_cycles(p, directed);
    REQUIRE(drep.records.size() == 1);
    CHECK(drep.records[0].type == 5);
    CHECK(assert_no_type2(drep.records));
}

TEST_CASE("closed neighborhood of every 5-cycle has 15 vertices at girth 5") {
    XoParams p{5, 11, 3};
    Graph g = xo(p);
    for (const auto& rec : classify_five_cycles(g, xo_orientation(p)).records) {
        std::set<int> closed(rec.cycle.vertices.begin(), rec.cycle.vertices.end());
        for (int v : rec.cycle.vertices)
            for (int w : g.neighbors(v)) closed.insert(w);
        CHECK(closed.size() == 15);
    }
}

TEST_CASE("types are constant on group orbits") {
    R12Package pkg = r12_special_package();
    Orientation o = r12_orientation(pkg, pkg.g1_gens);
    FiveCycleReport rep = classify_five_cycles(pkg.graph, o);
    std::map<Cycle, int> type_of;
    for (const auto& rec : rep.records) type_of[rec.cycle] = rec.type;
    for (const auto& rec : rep.records)
        for (const auto& s : pkg.g1_gens) {
            std::vector<int> img;
            for (int v : rec.cycle.vertices) img.push_back(s.apply(v));
            CHECK(type_of.at(Cycle::canonical(img)) == rec.type);
        }
}

TEST_CASE("walk weight") {
    XoParams p{5, 11, 3};
    Orientation o = xo_orientation(p);
    int u00 = xo_vertex(p, 0, 0), u11 = xo_vertex(p, 1, 1), u24 = xo_vertex(p, 2, 4);
    // forward path: weight counts the arcs
    CHECK(walk_weight(o, {u00, u11, u24}) == 2);
    CHECK(walk_weight(o, {u24, u11, u00}) == -2);
    // alternating 4-walk: zero
    int u12 = xo_vertex(p, 1, 10); // wait below
    (void)u12;
    int other_up = xo_vertex(p, 1, 10);
    CHECK(walk_weight(o, {u00, u11, u00, other_up, u00}) == 0);
    CHECK_THROWS_WITH_AS(static_cast<void>(walk_weight(o, {u00, u24})), doctest::Contains("E_NOT_WALK"),
                         Error);

    // any traversal of a type-5 cycle has weight +-5
    FiveCycleReport rep = classify_five_cycles(xo(p), o);
    for (const auto& rec : rep.records) {
        std::vector<int> closed = rec.cycle.vertices;
        closed.push_back(rec.cycle.vertices[0]);
        int w = walk_weight(o, closed);
        CHECK((w == 5 || w == -5));
    }
}

TEST_CASE("walk weight of closed alternating walks is zero and reversal negates") {
    XoParams p{5, 11, 3};
    Graph g = xo(p);
    Orientation o = xo_orientation(p);
    AltCycleReport alt = alternating_cycles(g, o);
    for (const auto& c : alt.cycles) {
        std::vector<int> closed = c.vertices;
        closed.push_back(c.vertices[0]);
        CHECK(walk_weight(o, closed) == 0);
        std::vector<int> reversed(closed.rbegin(), closed.rend());
        CHECK(walk_weight(o, reversed) == 0);
    }
    std::vector<int> path{xo_vertex(p, 0, 0), xo_vertex(p, 1, 1), xo_vertex(p, 2, 4)};
    std::vector<int> rpath(path.rbegin(), path.rend());
    CHECK(walk_weight(o, path) == -walk_weight(o, rpath));
}

TEST_CASE("consistent cycles of xo(5,11;3)") {
    XoParams p{5, 11, 3};
    Graph g = xo(p);
    PermGroup G(g.vertex_count(), xo_hat_generators(p));
    Orientation o = induced_orientation(G, g, {xo_vertex(p, 0, 0), xo_vertex(p, 1, 1)});
    ConsistentCycleReport rep = consistent_cycles(G, g, o);

    CHECK(rep.orbits.size() == 2);
    CHECK(rep.orbit_lengths() == std::vector<int>{5, 10});
    for (const auto& rec : rep.records) {
        CHECK(G.contains(rec.shunt));
        // the shunt rotates its cycle by one step
        const auto& verts = rec.cycle.vertices;
        std::set<int> vert_set(verts.begin(), verts.end());
        for (std::size_t i = 0; i < verts.size(); ++i) CHECK(vert_set.count(rec.shunt.apply(verts[i])));
    }

    // every 5-cycle of the graph is consistent
    for (const auto& c : cycles_of_length(g, 5)) CHECK(rep.cycle_is_consistent(c));

    // only 22 five-cycles exist and they form a single orbit
    for (const auto& orbit : rep.orbits)
        if (orbit.cycle_length == 5) CHECK(orbit.orbit_size == 22);
}

TEST_CASE("the exceptional graphs have no consistent 5-cycles") {
    XoParams dh{3, 9, 4};
    Graph dh_graph = xo(dh);
    PermGroup dh_group(dh_graph.vertex_count(), xo_hat_generators(dh));
    Orientation dh_o = induced_orientation(dh_group, dh_graph, {xo_vertex(dh, 0, 0), xo_vertex(dh, 1, 1)});
    ConsistentCycleReport dh_rep = consistent_cycles(dh_group, dh_graph, dh_o);
    CHECK(dh_rep.orbits.size() == 2);
    CHECK(dh_rep.orbit_lengths() == std::vector<int>{6, 9});

    R12Package pkg = r12_special_package();
    PermGroup g1(24, pkg.g1_gens), g2(24, pkg.g2_gens);
    Orientation o1 = r12_orientation(pkg, pkg.g1_gens);
    Orientation o2 = r12_orientation(pkg, pkg.g2_gens);
    CHECK(consistent_cycles(g1, pkg.graph, o1).orbit_lengths() == std::vector<int>{6, 12});
    CHECK(consistent_cycles(g2, pkg.graph, o2).orbit_lengths() == std::vector<int>{6, 8});
}

TEST_CASE("reachability on small directed cycles") {
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Orientation o = Orientation::from_arcs(c4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    ReachabilityReport rep = reachability(o);
    CHECK(rep.alter_perimeter == 4);
    CHECK(!rep.alter_complete);
}

TEST_CASE("reachability of the families") {
    XoParams p{5, 11, 3};
    ReachabilityReport rep = reachability(xo_orientation(p));
    CHECK(rep.alter_perimeter == 5);
    CHECK(!rep.alter_complete);
    // each class is one level of the construction
    for (int i = 0; i < p.m; ++i)
        for (int j = 1; j < p.r; ++j)
            CHECK(rep.class_of[xo_vertex(p, i, j)] == rep.class_of[xo_vertex(p, i, 0)]);

    R12Package pkg = r12_special_package();
    ReachabilityReport r2 = reachability(r12_orientation(pkg, pkg.g2_gens));
    CHECK(r2.alter_complete);

    // classes are blocks of the acting group
    ReachabilityReport r1 = reachability(r12_orientation(pkg, pkg.g1_gens));
    for (const auto& s : pkg.g1_gens) {
        std::map<int, int> image;
        for (int v = 0; v < 24; ++v) {
            auto [it, inserted] = image.try_emplace(r1.class_of[v], r1.class_of[s.apply(v)]);
            CHECK((inserted || it->second == r1.class_of[s.apply(v)]));
        }
    }
}
