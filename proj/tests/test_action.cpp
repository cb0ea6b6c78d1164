#include "doctest.h"

#include <set>

#include "hat/action.hpp"
#include "hat/error.hpp"
#include "hat/families.hpp"

using namespace hat;

namespace {

Graph pentagon() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

} // namespace

TEST_CASE("orientation construction and validation") {
    Graph p = pentagon();
    Orientation o = Orientation::from_arcs(p, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(o.arc_count() == 5);
    CHECK(o.has_arc(0, 1));
    CHECK(!o.has_arc(1, 0));
    CHECK(o.reversed().has_arc(1, 0));

    CHECK_THROWS_WITH_AS(
        static_cast<void>(Orientation::from_arcs(p, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})),
        doctest::Contains("E_BOTH_ARCS"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(Orientation::from_arcs(p, {{0, 1}})),
                         doctest::Contains("E_PARTIAL_ORIENTATION"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(Orientation::from_arcs(p, {{0, 2}})),
                         doctest::Contains("E_BAD_ARC"), Error);
}

TEST_CASE("check_action") {
    Graph p = pentagon();
    PermGroup identity_group(5, {Permutation::identity(5)});
    CHECK(check_action(identity_group, p));

    PermGroup rotation(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    CHECK(check_action(rotation, p));

    PermGroup bad(5, {Permutation::from_cycles(5, {{0, 1}})}); // not an automorphism of C5
    CHECK(!check_action(bad, p));

    R12Package pkg = r12_special_package();
    PermGroup aut(24, pkg.aut_gens);
    CHECK(check_action(aut, pkg.graph));

    // a transposition of two vertices at different distances from the rest
    Graph dh = xo({3, 9, 4});
    PermGroup swap_group(27, {Permutation::from_cycles(27, {{0, 1}})});
    CHECK(!check_action(swap_group, dh));
}

TEST_CASE("transitivity classification") {
    R12Package pkg = r12_special_package();
    PermGroup aut(24, pkg.aut_gens);
    PermGroup g1(24, pkg.g1_gens);

    auto tr_aut = transitivity(aut, pkg.graph);
    CHECK(tr_aut.vertex_transitive);
    CHECK(tr_aut.edge_transitive);
    CHECK(tr_aut.arc_transitive);
    CHECK(!tr_aut.half_arc_transitive);
    CHECK(tr_aut.vertex_stabilizer_order == 4);

    auto tr1 = transitivity(g1, pkg.graph);
    CHECK(tr1.half_arc_transitive);
    CHECK(tr1.vertex_stabilizer_order == 2);

    // rotation on the pentagon: vertex- but not edge-transitive is impossible
    // for C5 (it is edge-transitive); use a path-like action instead
    PermGroup rotation(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    auto tr_rot = transitivity(rotation, pentagon());
    CHECK(tr_rot.vertex_transitive);
    CHECK(tr_rot.edge_transitive);
    CHECK(!tr_rot.arc_transitive);
    CHECK(tr_rot.half_arc_transitive); // C5 with the rotation group only
}

TEST_CASE("induced orientation") {
    XoParams p{5, 11, 3};
    Graph g = xo(p);
    PermGroup hat_group(g.vertex_count(), xo_hat_generators(p));

    // seed with an upward arc: the orbit is the canonical orientation
    std::pair<int, int> seed{xo_vertex(p, 0, 0), xo_vertex(p, 1, 1)};
    Orientation o = induced_orientation(hat_group, g, seed);
    CHECK(o.is_two_in_two_out());
    Orientation canonical = xo_orientation(p);
    for (auto [u, v] : canonical.arcs()) CHECK(o.has_arc(u, v));

    // G-invariance of the orientation
    for (const auto& s : hat_group.generators())
        for (auto [u, v] : o.arcs()) CHECK(o.has_arc(s.apply(u), s.apply(v)));

    // seeding with the reversed arc yields the paired orientation
    Orientation rev = induced_orientation(hat_group, g, {seed.second, seed.first});
    for (auto [u, v] : o.arcs()) CHECK(rev.has_arc(v, u));

    // arc-transitive actions are rejected
    R12Package pkg = r12_special_package();
    PermGroup aut(24, pkg.aut_gens);
    CHECK_THROWS_WITH_AS(static_cast<void>(induced_orientation(aut, pkg.graph, least_arc(pkg.graph))),
                         doctest::Contains("E_ARC_TRANSITIVE"), Error);
}

TEST_CASE("no_adjacent_swap") {
    R12Package pkg = r12_special_package();
    PermGroup g1(24, pkg.g1_gens);
    PermGroup aut(24, pkg.aut_gens);
    CHECK(no_adjacent_swap(g1, pkg.graph));
    CHECK(!no_adjacent_swap(aut, pkg.graph));
}

TEST_CASE("alternating cycles of the xo family") {
    XoParams p{5, 11, 3};
    Graph g = xo(p);
    AltCycleReport rep = alternating_cycles(g, xo_orientation(p));
    CHECK(rep.cycles.size() == 5);
    CHECK(rep.radius == 11);
    CHECK(rep.attachment == 11);
    CHECK(rep.tightly_attached);

    // Doyle-Holt graph: radius equals the odd radius parameter r = 9
    XoParams dh{3, 9, 4};
    AltCycleReport dhrep = alternating_cycles(xo(dh), xo_orientation(dh));
    CHECK(dhrep.cycles.size() == 3);
    CHECK(dhrep.radius == 9);
    CHECK(dhrep.attachment == 9);
    CHECK(dhrep.tightly_attached);

    // every edge lies on exactly one alternating cycle
    std::size_t total = 0;
    for (const auto& c : rep.cycles) total += c.vertices.size();
    CHECK(total == static_cast<std::size_t>(g.edge_count()));
}

TEST_CASE("alternating cycles of the R12 subgroups match the structure theory") {
    R12Package pkg = r12_special_package();
    PermGroup g1(24, pkg.g1_gens);
    PermGroup g2(24, pkg.g2_gens);

    Orientation o1 = induced_orientation(g1, pkg.graph, least_arc(pkg.graph));
    AltCycleReport r1 = alternating_cycles(pkg.graph, o1);
    CHECK(r1.cycles.size() == 6);
    CHECK(r1.radius == 4);
    CHECK(r1.attachment == 2);
    CHECK(!r1.tightly_attached);

    Orientation o2 = induced_orientation(g2, pkg.graph, least_arc(pkg.graph));
    AltCycleReport r2 = alternating_cycles(pkg.graph, o2);
    CHECK(r2.cycles.size() == 4);
    CHECK(r2.radius == 6);
    CHECK(r2.attachment == 4);
    CHECK(!r2.tightly_attached);
}

TEST_CASE("alternating cycle report rejects non 2-in/2-out orientations") {
    Graph p = pentagon();
    Orientation o = Orientation::from_arcs(p, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_THROWS_WITH_AS(static_cast<void>(alternating_cycles(p, o)), doctest::Contains("E_NOT_2IN2OUT"),
                         Error);
}
