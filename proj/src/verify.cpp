#include "hat/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hat/autsearch.hpp"
#include "hat/error.hpp"
#include "hat/families.hpp"
#include "hat/psl2.hpp"

namespace hat {

namespace {

int mod_mul(int a, int b, int r) { return static_cast<int>((static_cast<long long>(a) * b) % r); }

// Fast local test for a 3- or 4-cycle: some vertex has two neighbors that
// are adjacent or share a second common neighbor.
bool has_short_cycle(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (g.adjacent(u, w)) return true;
                const auto& nu = g.neighbors(u);
                const auto& nw = g.neighbors(w);
                int common = 0;
                std::size_t x = 0, y = 0;
                while (x < nu.size() && y < nw.size()) {
                    if (nu[x] < nw[y])
                        ++x;
                    else if (nu[x] > nw[y])
                        ++y;
                    else {
                        ++common;
                        ++x;
                        ++y;
                    }
                }
                if (common > 1) return true;
            }
    }
    return false;
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << '}';
    return out.str();
}

} // namespace

TaSearchResult ta_search(int m, int r_bound) {
    require(m == 3 || m == 5, "E_PARAM", "only m = 3 and m = 5 are supported");
    require(r_bound >= 3 && r_bound <= 1000000, "E_PARAM", "r bound must lie in [3, 10^6]");
    TaSearchResult result;
    result.m = m;
    result.r_bound = r_bound;
    const int terms = m - 1; // number of signed powers q..q^{m-1}
    const int lead = m == 3 ? 3 : 1;
    for (int r = 3; r <= r_bound; r += 2) {
        for (int q = 2; q <= r - 2; ++q) {
            // powers q^1..q^{m-1} and the order condition q^m = 1
            std::vector<int> pow(m + 1, 1);
            for (int e = 1; e <= m; ++e) pow[e] = mod_mul(pow[e - 1], q, r);
            if (pow[m] != 1) continue;
            TaSolution sol;
            sol.r = r;
            sol.q = q;
            for (int mask = 0; mask < (1 << terms); ++mask) {
                int sum = lead % r;
                for (int e = 1; e <= terms; ++e) {
                    int term = pow[e];
                    sum = (mask >> (e - 1)) & 1 ? (sum + r - term) % r : (sum + term) % r;
                }
                if (sum != 0) continue;
                std::ostringstream pat;
                pat << lead;
                for (int e = 1; e <= terms; ++e) pat << (((mask >> (e - 1)) & 1) ? '-' : '+') << 'q' << '^' << e;
                sol.patterns.push_back(pat.str());
                if (mask == 0) sol.all_plus = true;
            }
            if (!sol.patterns.empty()) result.solutions.push_back(std::move(sol));
        }
    }
    return result;
}

void VerifyReport::check(const std::string& name, bool ok, const std::string& expected,
                         const std::string& actual, const std::string& provenance) {
    assertions.push_back({name, ok, expected, actual, provenance});
    if (!ok) pass = false;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["operation"] = operation;
    j["pass"] = pass;
    if (!note.empty()) j["note"] = note;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : assertions)
        arr.push_back({{"name", a.name},
                       {"pass", a.pass},
                       {"expected", a.expected},
                       {"actual", a.actual},
                       {"provenance", a.provenance}});
    j["assertions"] = arr;
    return j.dump(2) + "\n";
}

VerifyReport verify_ta(int m, int r_bound) {
    VerifyReport report;
    report.operation = "ta";
    report.note = "exhaustive modular scan, verified up to r <= " + std::to_string(r_bound);
    TaSearchResult result = ta_search(m, r_bound);

    std::ostringstream sols;
    for (const auto& s : result.solutions) sols << "(" << s.r << "," << s.q << ")";
    if (m == 3) {
        bool exact = result.solutions.size() == 2 && result.solutions[0].r == 9 &&
                     result.solutions[0].q == 4 && result.solutions[1].r == 9 && result.solutions[1].q == 7;
        report.check("m3-solution-set", exact || r_bound < 9, "{(9,4),(9,7)}", sols.str(),
                     "tightly-attached girth-5 graphs with type-4 5-cycles exist only at r = 9, q in {4, 7}");
    } else {
        bool reduction = true;
        for (const auto& s : result.solutions)
            if (!s.all_plus) reduction = false;
        report.check("m5-all-plus-reduction", reduction, "every solution satisfies the all-plus identity",
                     reduction ? "holds" : "violated",
                     "the only sign pattern avoiding q = +-1 is 1+q+q^2+q^3+q^4 = 0");
    }
    for (const auto& s : result.solutions) {
        bool not_unit = s.q != 1 && s.q != s.r - 1;
        report.check("q-not-unit-r" + std::to_string(s.r) + "-q" + std::to_string(s.q), not_unit,
                     "q != +-1", not_unit ? "ok" : "q = +-1", "q = +-1 would force girth at most 4");
    }
    return report;
}

namespace {

struct FiveCycleTypeSummary {
    int total = 0;
    std::map<int, int> by_type;
};

FiveCycleTypeSummary type_summary(const HatReport& r) {
    FiveCycleTypeSummary s;
    for (const auto& [t, count] : r.five_cycles.incidence.totals) {
        s.by_type[t] = count;
        s.total += count;
    }
    return s;
}

std::string types_to_string(const FiveCycleTypeSummary& s) {
    std::ostringstream out;
    for (const auto& [t, count] : s.by_type)
        if (count) out << "type" << t << ":" << count << " ";
    if (s.total == 0) out << "none";
    return out.str();
}

} // namespace

VerifyReport verify_undirected_classification() {
    VerifyReport report;
    report.operation = "undirected";

    // Doyle-Holt graph with its full automorphism group.
    XoParams dh{3, 9, 4};
    Graph dh_graph = xo(dh);
    AutResult dh_aut = automorphism_group(dh_graph);
    report.check("doyle-holt-aut-order", dh_aut.order == 54, "54", std::to_string(dh_aut.order),
                 "the Doyle-Holt graph is half-arc-transitive with vertex stabilizers of order 2");
    PermGroup dh_group(dh_graph.vertex_count(), dh_aut.generators);
    HatReport dh_report = analyze(dh_graph, dh_group);
    auto dh_types = type_summary(dh_report);
    report.check("doyle-holt-all-type4",
                 dh_types.total > 0 && dh_types.by_type[4] == dh_types.total, "all 5-cycles type 4",
                 types_to_string(dh_types), "tightly-attached with m = 3 forces type-4 5-cycles");

    // R_12(5,2) with its two half-arc-transitive subgroups.
    R12Package pkg = r12_special_package();
    PermGroup g1(pkg.graph.vertex_count(), pkg.g1_gens);
    PermGroup g2(pkg.graph.vertex_count(), pkg.g2_gens);
    HatReport r1 = analyze(pkg.graph, g1);
    HatReport r2 = analyze(pkg.graph, g2);

    auto t1 = type_summary(r1);
    auto t2 = type_summary(r2);
    report.check("r12-g1-all-type4", t1.total > 0 && t1.by_type[4] == t1.total, "all 5-cycles type 4",
                 types_to_string(t1), "the first half-arc-transitive subgroup induces type-4 5-cycles");
    report.check("r12-g2-all-type3", t2.total > 0 && t2.by_type[3] == t2.total, "all 5-cycles type 3",
                 types_to_string(t2), "the second half-arc-transitive subgroup induces type-3 5-cycles");
    report.check("no-type2", dh_types.by_type[2] == 0 && t1.by_type[2] == 0 && t2.by_type[2] == 0,
                 "zero type-2 5-cycles", "checked on all three analyses",
                 "no half-arc-transitive action yields a type-2 5-cycle");
    report.check("r12-g1-hat", r1.transitivity.half_arc_transitive, "half-arc-transitive", "checked",
                 "G1 acts half-arc-transitively on R_12(5,2)");
    report.check("r12-g2-hat", r2.transitivity.half_arc_transitive, "half-arc-transitive", "checked",
                 "G2 acts half-arc-transitively on R_12(5,2)");

    bool distinct = false;
    for (const auto& gen : g1.generators())
        if (!g2.contains(gen)) distinct = true;
    for (const auto& gen : g2.generators())
        if (!g1.contains(gen)) distinct = true;
    report.check("g1-differs-from-g2", distinct, "G1 != G2", distinct ? "distinct" : "equal",
                 "the two half-arc-transitive subgroups of R_12(5,2) differ");
    return report;
}

std::vector<TableRowExpectation> builtin_table_rows() {
    std::vector<TableRowExpectation> rows;
    {
        TableRowExpectation row;
        row.name = "HAT[55,1]";
        row.family = "xo";
        row.params = {5, 11, 3};
        row.radius = 11;
        row.attachment = 11;
        row.consistent_lengths = {5, 10};
        row.alter_complete = false;
        row.stabilizer_order = 2;
        row.cayley = true;
        row.solvable = true;
        row.five_cycles_per_edge = 1;
        rows.push_back(row);
    }
    {
        TableRowExpectation row;
        row.name = "HAT[605,7]";
        row.family = "xo";
        row.params = {5, 121, 3};
        row.radius = 121;
        row.attachment = 121;
        row.consistent_lengths = {5, 10};
        row.alter_complete = false;
        row.stabilizer_order = 2;
        row.five_cycles_per_edge = 1;
        rows.push_back(row);
    }
    {
        TableRowExpectation row;
        row.name = "PSL2[11]";
        row.family = "psl2";
        row.params = {11};
        row.radius = 5;     // regression snapshot of the first verified run
        row.attachment = 2; // regression snapshot of the first verified run
        row.consistent_lengths = {5, 5};
        row.alter_complete = true; // regression snapshot of the first verified run
        row.stabilizer_order = 2;
        row.five_cycles_per_edge = 2;
        row.graph_arc_transitive = true;
        rows.push_back(row);
    }
    return rows;
}

std::optional<TableRowExpectation> find_table_row(const std::string& name) {
    for (const auto& row : builtin_table_rows())
        if (row.name == name) return row;
    return std::nullopt;
}

VerifyReport verify_table_row(const TableRowExpectation& row) {
    VerifyReport report;
    report.operation = "table:" + row.name;
    report.note = "census identification of " + row.name + " is a derived identification";

    Graph graph;
    std::vector<Permutation> group_gens;
    if (row.family == "xo") {
        require(row.params.size() == 3, "E_PARAM", "xo rows need parameters {m, r, q}");
        XoParams p{row.params[0], row.params[1], row.params[2]};
        graph = xo(p);
        group_gens = xo_hat_generators(p);
    } else if (row.family == "psl2") {
        require(row.params.size() == 1, "E_PARAM", "psl2 rows need parameter {p}");
        CosetGraph cg = coset_graph(row.params[0]);
        graph = cg.graph;
        group_gens = cg.action_gens;
    } else {
        fail("E_PARAM", "unknown table family " + row.family);
    }

    PermGroup group(graph.vertex_count(), group_gens);
    HatReport analysis = analyze(graph, group);

    report.check("radius", analysis.alternating.radius == row.radius, std::to_string(row.radius),
                 std::to_string(analysis.alternating.radius), "alternating-cycle radius for " + row.name);
    report.check("attachment", analysis.alternating.attachment == row.attachment,
                 std::to_string(row.attachment), std::to_string(analysis.alternating.attachment),
                 "attachment number for " + row.name);
    auto lengths = analysis.consistent.orbit_lengths();
    report.check("consistent-cycles", lengths == row.consistent_lengths, join_ints(row.consistent_lengths),
                 join_ints(lengths), "consistent-cycle orbit lengths for " + row.name);
    report.check("alter-complete", analysis.reach.alter_complete == row.alter_complete,
                 row.alter_complete ? "yes" : "no", analysis.reach.alter_complete ? "yes" : "no",
                 "alter-completeness of the induced orientation for " + row.name);
    if (row.stabilizer_order)
        report.check("stabilizer-order", analysis.transitivity.vertex_stabilizer_order == *row.stabilizer_order,
                     std::to_string(*row.stabilizer_order),
                     std::to_string(analysis.transitivity.vertex_stabilizer_order),
                     "vertex stabilizer order of the half-arc-transitive action");
    if (row.five_cycles_per_edge)
        report.check("five-cycles-per-edge",
                     analysis.five_cycles.incidence.per_edge_min == *row.five_cycles_per_edge &&
                         analysis.five_cycles.incidence.per_edge_max == *row.five_cycles_per_edge,
                     std::to_string(*row.five_cycles_per_edge),
                     std::to_string(analysis.five_cycles.incidence.per_edge_min) + ".." +
                         std::to_string(analysis.five_cycles.incidence.per_edge_max),
                     "number of 5-cycles through each edge");

    if (row.cayley && row.family == "xo") {
        // The regular subgroup reproduces the graph as a Cayley graph.
        XoParams p{row.params[0], row.params[1], row.params[2]};
        PermGroup regular(graph.vertex_count(), xo_regular_generators(p));
        std::vector<int> connection;
        auto elems = regular.enumerate_elements();
        int v0 = 0;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (graph.adjacent(v0, elems[i].apply(v0))) connection.push_back(static_cast<int>(i));
        Graph cay = cayley({regular, connection, PermGroup::kDefaultEnumBound});
        bool iso = canonical_form(cay) == canonical_form(graph);
        report.check("cayley", iso == *row.cayley, *row.cayley ? "Cayley" : "not Cayley",
                     iso ? "Cayley" : "not Cayley",
                     "the regular subgroup turns the graph into a Cayley graph");
    }
    if (row.solvable) {
        AutResult aut = automorphism_group(graph);
        PermGroup aut_group(graph.vertex_count(), aut.generators);
        bool solv = is_solvable(aut_group);
        report.check("solvable-aut", solv == *row.solvable, *row.solvable ? "solvable" : "not solvable",
                     solv ? "solvable" : "not solvable", "solvability of the full automorphism group");
    }
    if (row.graph_arc_transitive) {
        HatGraphReport hg = is_half_arc_transitive_graph(graph);
        report.check("graph-arc-transitive", hg.transitivity.arc_transitive == *row.graph_arc_transitive,
                     *row.graph_arc_transitive ? "arc-transitive" : "not arc-transitive",
                     hg.transitivity.arc_transitive ? "arc-transitive" : "not arc-transitive",
                     "transitivity class of the full automorphism group");
    }
    return report;
}

VerifyReport verify_xiv_nonexistence(int n_bound) {
    require(n_bound >= 3 && n_bound <= 60, "E_PARAM", "the sweep bound must lie in [3, 60]");
    VerifyReport report;
    report.operation = "xiv";

    long long swept = 0;
    int girth5 = 0;
    int hat_found = 0;
    std::vector<std::string> girth5_params;
    for (int n = 3; n <= n_bound; ++n) {
        for (int r = 0; r < n; ++r) {
            if (fp::pow(r, 5, n) != 1 % n) continue;
            for (int t = 0; t < n; ++t) {
                if (std::gcd(t, n) == 1) continue;
                if ((static_cast<long long>(t) * (r - 1)) % n != 0) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (std::gcd(std::gcd(a, b), std::gcd(t, n)) != 1) continue;
                        XivParams params{5, n, r, t, a, b, 1, 2};
                        XivGraph xg = xiv(params);
                        ++swept;
                        if (!xg.graph.is_connected()) continue;
                        if (has_short_cycle(xg.graph)) continue;
                        auto girth = xg.graph.girth();
                        if (!girth || *girth != 5) continue;
                        ++girth5;
                        std::ostringstream ps;
                        ps << "(5," << n << ";" << r << "," << t << ";1," << a << ";2," << b << ")";
                        girth5_params.push_back(ps.str());
                        HatGraphReport hg = is_half_arc_transitive_graph(xg.graph);
                        if (hg.half_arc_transitive) ++hat_found;
                    }
            }
        }
    }
    std::ostringstream note;
    note << "swept " << swept << " parameter tuples, " << girth5 << " of girth 5";
    if (!girth5_params.empty()) {
        note << ": ";
        for (std::size_t i = 0; i < girth5_params.size() && i < 20; ++i)
            note << (i ? " " : "") << girth5_params[i];
    }
    report.note = note.str();
    report.check("no-girth5-half-arc-transitive", hat_found == 0, "0", std::to_string(hat_found),
                 "no Class IV weak metacirculant is both of girth 5 and half-arc-transitive");
    return report;
}

} // namespace hat
