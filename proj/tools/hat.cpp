// Command-line surface: build family graphs, analyze (graph, group) pairs,
// compute automorphism groups and canonical certificates, run the
// verification suites, export DOT.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hat/autsearch.hpp"
#include "hat/error.hpp"
#include "hat/families.hpp"
#include "hat/io.hpp"
#include "hat/psl2.hpp"
#include "hat/report.hpp"
#include "hat/verify.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        hat::require(out.good(), "E_IO", "cannot write " + out_path);
        out << text;
    }
}

std::pair<int, int> parse_arc(const std::string& text) {
    auto comma = text.find(',');
    hat::require(comma != std::string::npos, "E_PARSE", "expected an arc of the form u,v");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

void write_bundle(const std::string& prefix, const hat::Graph& graph, const json& sidecar) {
    hat::write_hatgraph_file(graph, prefix + ".hatgraph");
    emit(sidecar.dump(2) + "\n", prefix + ".json");
    std::cout << "wrote " << prefix << ".hatgraph (" << graph.vertex_count() << " vertices, "
              << graph.edge_count() << " edges)\n";
}

int run(int argc, char** argv) {
    CLI::App app{"tetravalent graph families and half-arc-transitive action analysis"};
    app.require_subcommand(1);

    // ------------------------------------------------------------------ build
    auto* build = app.add_subcommand("build", "construct a family graph and write it to files");
    build->require_subcommand(1);
    std::string out_prefix = "out";

    auto* bxo = build->add_subcommand("xo", "odd-radius tightly-attached family");
    int xo_m = 3, xo_r = 9, xo_q = 4;
    bxo->add_option("--m", xo_m)->required();
    bxo->add_option("--r", xo_r)->required();
    bxo->add_option("--q", xo_q)->required();
    bxo->add_option("-o,--out", out_prefix);

    auto* brw = build->add_subcommand("rw", "rose window graph");
    int rw_n = 12, rw_a = 5, rw_r = 2;
    brw->add_option("--n", rw_n)->required();
    brw->add_option("--a", rw_a)->required();
    brw->add_option("--r", rw_r)->required();
    brw->add_option("-o,--out", out_prefix);

    auto* br12 = build->add_subcommand("r12", "R_12(5,2) with its generator package");
    br12->add_option("-o,--out", out_prefix);

    auto* bpsl = build->add_subcommand("psl2", "PSL(2,p) double coset graph");
    int psl_p = 11, psl_max_p = 31;
    bpsl->add_option("--p", psl_p)->required();
    bpsl->add_option("--max-p", psl_max_p, "prime size guard");
    bpsl->add_option("-o,--out", out_prefix);

    auto* bxiv = build->add_subcommand("xiv", "Class IV weak metacirculant");
    hat::XivParams xiv_params;
    bxiv->add_option("--m", xiv_params.m)->required();
    bxiv->add_option("--n", xiv_params.n)->required();
    bxiv->add_option("--r", xiv_params.r)->required();
    bxiv->add_option("--t", xiv_params.t)->required();
    bxiv->add_option("--a", xiv_params.a)->required();
    bxiv->add_option("--b", xiv_params.b)->required();
    bxiv->add_option("--p", xiv_params.p)->required();
    bxiv->add_option("--q", xiv_params.q)->required();
    bxiv->add_option("-o,--out", out_prefix);

    auto* bcay = build->add_subcommand("cayley", "Cayley graph of a group given by a HATPERMS file");
    std::string cay_group_file;
    std::vector<int> cay_connection;
    bcay->add_option("--group", cay_group_file)->required();
    bcay->add_option("--connection", cay_connection, "indices into the element enumeration")->required();
    bcay->add_option("-o,--out", out_prefix);

    // ---------------------------------------------------------------- analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "full half-arc-transitive analysis of a (graph, group) pair");
    std::string an_graph, an_perms, an_out, an_seed;
    std::uint64_t an_enum = 100000;
    analyze_cmd->add_option("graph", an_graph, "HATGRAPH file")->required();
    analyze_cmd->add_option("perms", an_perms, "HATPERMS file with group generators")->required();
    analyze_cmd->add_option("--orientation-seed", an_seed, "seed arc u,v for the induced orientation");
    analyze_cmd->add_option("--max-group-enum", an_enum);
    analyze_cmd->add_option("-o,--out", an_out);

    // -------------------------------------------------------------- aut/canon
    auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a graph");
    std::string aut_graph, aut_perms_out;
    aut_cmd->add_option("graph", aut_graph)->required();
    aut_cmd->add_option("--perms-out", aut_perms_out, "write generators as HATPERMS");

    auto* canon_cmd = app.add_subcommand("canon", "canonical-form certificate of a graph");
    std::string canon_graph;
    canon_cmd->add_option("graph", canon_graph)->required();

    // ----------------------------------------------------------------- verify
    auto* verify_cmd = app.add_subcommand("verify", "mechanical verification suites");
    verify_cmd->require_subcommand(1);
    std::string verify_out;

    auto* vta = verify_cmd->add_subcommand("ta", "tightly-attached parameter search");
    int ta_m = 3, ta_bound = 1000;
    vta->add_option("--m", ta_m)->required();
    vta->add_option("--bound", ta_bound)->required();
    vta->add_option("-o,--out", verify_out);

    auto* vund = verify_cmd->add_subcommand("undirected", "classification of undirected 5-cycles");
    vund->add_option("-o,--out", verify_out);

    auto* vtable = verify_cmd->add_subcommand("table", "census-row property check");
    std::string table_row;
    vtable->add_option("--row", table_row)->required();
    vtable->add_option("-o,--out", verify_out);

    auto* vxiv = verify_cmd->add_subcommand("xiv", "Class IV girth-5 nonexistence sweep");
    int xiv_nbound = 40;
    vxiv->add_option("--nbound", xiv_nbound)->required();
    vxiv->add_option("-o,--out", verify_out);

    // ------------------------------------------------------------- export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "DOT export, optionally with an induced orientation");
    std::string dot_graph, dot_perms, dot_out, dot_seed;
    dot_cmd->add_option("graph", dot_graph)->required();
    dot_cmd->add_option("--perms", dot_perms, "HATPERMS file; orients the output");
    dot_cmd->add_option("--orientation-seed", dot_seed);
    dot_cmd->add_option("-o,--out", dot_out);

    CLI11_PARSE(app, argc, argv);

    if (bxo->parsed()) {
        hat::XoParams p{xo_m, xo_r, xo_q};
        hat::Graph g = hat::xo(p);
        json labeling = json::object();
        for (int i = 0; i < p.m; ++i)
            for (int j = 0; j < p.r; ++j)
                labeling["u_" + std::to_string(i) + "^" + std::to_string(j)] = hat::xo_vertex(p, i, j);
        json sidecar{{"family", "xo"},
                     {"params", {{"m", p.m}, {"r", p.r}, {"q", p.q}}},
                     {"labeling", labeling},
                     {"groups", {{"hat", out_prefix + ".hat.hatperms"}}}};
        write_bundle(out_prefix, g, sidecar);
        hat::write_hatperms_file(hat::xo_hat_generators(p), out_prefix + ".hat.hatperms");
        return 0;
    }
    if (brw->parsed()) {
        hat::RoseWindowParams p{rw_n, rw_a, rw_r};
        hat::Graph g = hat::rose_window(p);
        json labeling = json::object();
        for (int i = 0; i < p.n; ++i) {
            labeling["x_" + std::to_string(i)] = i;
            labeling["y_" + std::to_string(i)] = p.n + i;
        }
        write_bundle(out_prefix, g,
                     json{{"family", "rw"}, {"params", {{"n", p.n}, {"a", p.a}, {"r", p.r}}}, {"labeling", labeling}});
        return 0;
    }
    if (br12->parsed()) {
        hat::R12Package pkg = hat::r12_special_package();
        json labeling = json::object();
        for (int i = 0; i < 12; ++i) {
            labeling["x_" + std::to_string(i)] = i;
            labeling["y_" + std::to_string(i)] = 12 + i;
        }
        json sidecar{{"family", "r12"},
                     {"labeling", labeling},
                     {"groups",
                      {{"aut", out_prefix + ".aut.hatperms"},
                       {"g1", out_prefix + ".g1.hatperms"},
                       {"g2", out_prefix + ".g2.hatperms"}}}};
        write_bundle(out_prefix, pkg.graph, sidecar);
        hat::write_hatperms_file(pkg.aut_gens, out_prefix + ".aut.hatperms");
        hat::write_hatperms_file(pkg.g1_gens, out_prefix + ".g1.hatperms");
        hat::write_hatperms_file(pkg.g2_gens, out_prefix + ".g2.hatperms");
        return 0;
    }
    if (bpsl->parsed()) {
        hat::CosetGraph cg = hat::coset_graph(psl_p, psl_max_p);
        json sidecar{{"family", "psl2"},
                     {"params", {{"p", psl_p}, {"xi", cg.params.xi}}},
                     {"vertices", "cosets of <A> ordered by their least element"},
                     {"groups", {{"action", out_prefix + ".action.hatperms"}}}};
        write_bundle(out_prefix, cg.graph, sidecar);
        hat::write_hatperms_file(cg.action_gens, out_prefix + ".action.hatperms");
        return 0;
    }
    if (bxiv->parsed()) {
        hat::XivGraph xg = hat::xiv(xiv_params);
        json p_edges = json::array(), q_edges = json::array();
        for (auto [u, v] : xg.p_edges) p_edges.push_back({u, v});
        for (auto [u, v] : xg.q_edges) q_edges.push_back({u, v});
        json sidecar{{"family", "xiv"},
                     {"params",
                      {{"m", xiv_params.m},
                       {"n", xiv_params.n},
                       {"r", xiv_params.r},
                       {"t", xiv_params.t},
                       {"a", xiv_params.a},
                       {"b", xiv_params.b},
                       {"p", xiv_params.p},
                       {"q", xiv_params.q}}},
                     {"labeling", "u_i^j -> i*n + j"},
                     {"p_edges", p_edges},
                     {"q_edges", q_edges}};
        write_bundle(out_prefix, xg.graph, sidecar);
        return 0;
    }
    if (bcay->parsed()) {
        auto gens = hat::read_hatperms_file(cay_group_file);
        hat::PermGroup group(gens.front().degree(), gens);
        hat::Graph g = hat::cayley({group, cay_connection, hat::PermGroup::kDefaultEnumBound});
        write_bundle(out_prefix, g,
                     json{{"family", "cayley"},
                          {"group_order", group.order()},
                          {"connection", cay_connection},
                          {"labeling", "vertices follow the element enumeration order"}});
        return 0;
    }

    if (analyze_cmd->parsed()) {
        hat::Graph g = hat::read_hatgraph_file(an_graph);
        auto gens = hat::read_hatperms_file(an_perms);
        hat::PermGroup group(gens.front().degree(), gens);
        hat::AnalyzeOptions opt;
        opt.max_group_enum = an_enum;
        if (!an_seed.empty()) opt.orientation_seed = parse_arc(an_seed);
        hat::HatReport report = hat::analyze(g, group, opt);
        emit(report.to_json(), an_out);
        return 0;
    }

    if (aut_cmd->parsed()) {
        hat::Graph g = hat::read_hatgraph_file(aut_graph);
        hat::AutResult aut = hat::automorphism_group(g);
        hat::PermGroup group(g.vertex_count(), aut.generators);
        hat::TransitivityReport tr = hat::transitivity(group, g);
        std::cout << "order " << aut.order;
        if (tr.arc_transitive)
            std::cout << ", arc-transitive";
        else if (tr.half_arc_transitive)
            std::cout << ", half-arc-transitive";
        std::cout << "\n";
        if (!aut_perms_out.empty()) hat::write_hatperms_file(aut.generators, aut_perms_out);
        return 0;
    }

    if (canon_cmd->parsed()) {
        hat::Graph g = hat::read_hatgraph_file(canon_graph);
        std::cout << hat::certificate_digest_hex(hat::canonical_form(g)) << "\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        hat::VerifyReport report;
        if (vta->parsed())
            report = hat::verify_ta(ta_m, ta_bound);
        else if (vund->parsed())
            report = hat::verify_undirected_classification();
        else if (vtable->parsed()) {
            auto row = hat::find_table_row(table_row);
            hat::require(row.has_value(), "E_PARAM", "unknown table row " + table_row);
            report = hat::verify_table_row(*row);
        } else if (vxiv->parsed())
            report = hat::verify_xiv_nonexistence(xiv_nbound);
        emit(report.to_json(), verify_out);
        return report.pass ? 0 : 1;
    }

    if (dot_cmd->parsed()) {
        hat::Graph g = hat::read_hatgraph_file(dot_graph);
        if (dot_perms.empty()) {
            emit(hat::write_dot(g), dot_out);
        } else {
            auto gens = hat::read_hatperms_file(dot_perms);
            hat::PermGroup group(gens.front().degree(), gens);
            auto seed = dot_seed.empty() ? hat::least_arc(g) : parse_arc(dot_seed);
            emit(hat::write_dot(g, hat::induced_orientation(group, g, seed)), dot_out);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hat::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "E_UNEXPECTED: " << e.what() << "\n";
        return 2;
    }
}
