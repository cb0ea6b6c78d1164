#include "hat/report.hpp"

#include <chrono>
#include <map>
#include <set>
#include <string>

#include "json.hpp"

#include "hat/error.hpp"

namespace hat {

namespace {

// Classification statements that hold for every half-arc-transitive action
// analyzed here; a violation signals an implementation bug and aborts.
void run_theorem_assertions(const Graph& g, const PermGroup& G, const HatReport& report) {
    const auto& inc = report.five_cycles.incidence;

    require(inc.totals.at(2) == 0, "E_THEOREM_NO_TYPE2",
            "found a type-2 5-cycle under a half-arc-transitive action");

    for (const auto& [path, count] : inc.per_three_arc) {
        (void)path;
        require(count <= 1, "E_THEOREM_3ARC", "a 3-arc lies on more than one 5-cycle at girth 5");
    }

    // Closed neighborhood of every 5-cycle has 15 vertices at girth 5.
    for (const auto& rec : report.five_cycles.records) {
        std::set<int> closed(rec.cycle.vertices.begin(), rec.cycle.vertices.end());
        for (int v : rec.cycle.vertices)
            for (int w : g.neighbors(v)) closed.insert(w);
        require(closed.size() == 15, "E_THEOREM_NC15",
                "closed neighborhood of a 5-cycle does not have 15 vertices");
    }

    // Types are constant on orbits of the acting group.
    std::map<Cycle, int> type_of;
    for (const auto& rec : report.five_cycles.records) type_of[rec.cycle] = rec.type;
    for (const auto& rec : report.five_cycles.records)
        for (const auto& s : G.generators()) {
            std::vector<int> img(rec.cycle.vertices.size());
            for (std::size_t i = 0; i < img.size(); ++i) img[i] = s.apply(rec.cycle.vertices[i]);
            auto it = type_of.find(Cycle::canonical(img));
            require(it != type_of.end() && it->second == rec.type, "E_THEOREM_TYPE_ORBIT",
                    "5-cycle types are not constant on group orbits");
        }

    const bool all_directed =
        inc.totals.at(5) > 0 && inc.totals.at(2) == 0 && inc.totals.at(3) == 0 && inc.totals.at(4) == 0;
    if (all_directed) {
        for (const auto& [arc, count] : inc.per_two_arc) {
            (void)arc;
            require(count <= 1, "E_THEOREM_2ARC",
                    "a 2-arc lies on more than one directed 5-cycle");
        }
        require(inc.per_edge_max <= 2, "E_THEOREM_EDGE2",
                "an edge lies on more than two directed 5-cycles");
        require(report.transitivity.vertex_stabilizer_order <= 4, "E_THEOREM_STAB4",
                "vertex stabilizer exceeds order 4 with directed 5-cycles");
    }

    require(report.consistent.orbits.size() == 2, "E_THEOREM_TWO_ORBITS",
            "a half-arc-transitive action must have exactly two orbits of consistent cycles");

    // Alternating cycles partition the edge set.
    std::size_t alt_edges = 0;
    for (const auto& c : report.alternating.cycles) alt_edges += c.vertices.size();
    require(alt_edges == static_cast<std::size_t>(g.edge_count()), "E_THEOREM_ALT_PARTITION",
            "alternating cycles do not partition the edge set");

    // Reachability classes form a block system of the action.
    for (const auto& s : G.generators()) {
        std::map<int, int> image_class;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int from = report.reach.class_of[v];
            int to = report.reach.class_of[s.apply(v)];
            auto [it, inserted] = image_class.try_emplace(from, to);
            require(inserted || it->second == to, "E_THEOREM_RPLUS_BLOCKS",
                    "reachability classes are not blocks of the action");
        }
    }
}

} // namespace

HatReport analyze(const Graph& g, const PermGroup& G, const AnalyzeOptions& opt) {
    const auto started = std::chrono::steady_clock::now();
    require(g.is_regular(4), "E_NOT_TETRAVALENT", "analysis requires a tetravalent graph");
    require(g.is_connected(), "E_DISCONNECTED", "analysis requires a connected graph");
    require(check_action(G, g), "E_NOT_AUTOMORPHISMS", "the group does not act on the graph");

    HatReport report;
    report.order = g.vertex_count();
    report.edge_count = g.edge_count();
    auto girth = g.girth();
    require(girth.has_value(), "E_INTERNAL", "a tetravalent graph always has cycles");
    report.girth = *girth;

    report.transitivity = transitivity(G, g);
    require(report.transitivity.half_arc_transitive, "E_NOT_HALF_ARC_TRANSITIVE",
            "the action is not half-arc-transitive on the graph");

    report.orientation_seed = opt.orientation_seed ? *opt.orientation_seed : least_arc(g);
    Orientation o = induced_orientation(G, g, report.orientation_seed);
    require(o.is_two_in_two_out(), "E_NOT_2IN2OUT", "induced orientation is not 2-in/2-out");

    report.alternating = alternating_cycles(g, o);
    report.five_cycles = classify_five_cycles(g, o);
    report.consistent = consistent_cycles(G, g, o, opt.max_group_enum);
    report.reach = reachability(o);

    run_theorem_assertions(g, G, report);

    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    return report;
}

std::string HatReport::to_json() const {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["graph"] = {{"order", order}, {"edges", edge_count}, {"girth", girth}, {"regular", 4}};
    j["vertex_transitive"] = transitivity.vertex_transitive;
    j["edge_transitive"] = transitivity.edge_transitive;
    j["arc_transitive"] = transitivity.arc_transitive;
    j["half_arc_transitive"] = transitivity.half_arc_transitive;
    j["stabilizer_order"] = transitivity.vertex_stabilizer_order;
    j["orientation_seed"] = {orientation_seed.first, orientation_seed.second};
    j["radius"] = alternating.radius;
    j["attachment"] = alternating.attachment;
    j["tightly_attached"] = alternating.tightly_attached;
    j["alternating_cycle_count"] = alternating.cycles.size();
    nlohmann::json types;
    for (const auto& [t, count] : five_cycles.incidence.totals) types[std::to_string(t)] = count;
    j["five_cycle_types"] = types;
    j["five_cycles_per_edge"] = {{"min", five_cycles.incidence.per_edge_min},
                                 {"max", five_cycles.incidence.per_edge_max}};
    j["five_cycle_total"] = five_cycles.records.size();
    j["consistent_cycle_lengths"] = consistent.orbit_lengths();
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& orbit : consistent.orbits)
        orbits.push_back({{"length", orbit.cycle_length}, {"size", orbit.orbit_size}});
    j["consistent_cycle_orbits"] = orbits;
    j["alter_perimeter"] = reach.alter_perimeter;
    j["alter_complete"] = reach.alter_complete;
    j["stabilization_depth"] = reach.stabilization_depth;
    j["envelope"] = {{"timing_ms", timing_ms}, {"tool_version", kToolVersion}};
    return j.dump(2) + "\n";
}

} // namespace hat
