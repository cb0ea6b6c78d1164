#include "hat/io.hpp"

#include <fstream>
#include <sstream>

#include "hat/error.hpp"

namespace hat {

namespace {

std::string read_header_line(std::istream& in, const std::string& expected) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "E_PARSE", "missing header line");
    require(line == expected, "E_PARSE", "bad header, expected \"" + expected + "\"");
    return line;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "E_IO", "cannot open " + path);
    return in;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "E_IO", "cannot write " + path);
    out << text;
}

} // namespace

std::string write_hatgraph(const Graph& g) {
    std::ostringstream out;
    out << "HATGRAPH v1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_hatgraph(std::istream& in) {
    read_header_line(in, "HATGRAPH v1");
    int n = 0, m = 0;
    require(static_cast<bool>(in >> n >> m), "E_PARSE", "missing vertex/edge counts");
    require(n > 0 && m >= 0, "E_PARSE", "bad vertex/edge counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        require(static_cast<bool>(in >> u >> v), "E_PARSE", "missing edge line");
        require(u < v, "E_PARSE", "edge lines must satisfy u < v");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph read_hatgraph_string(const std::string& text) {
    std::istringstream in(text);
    return read_hatgraph(in);
}

Graph read_hatgraph_file(const std::string& path) {
    auto in = open_input(path);
    return read_hatgraph(in);
}

void write_hatgraph_file(const Graph& g, const std::string& path) {
    write_file(path, write_hatgraph(g));
}

std::string write_hatperms(const std::vector<Permutation>& perms) {
    require(!perms.empty(), "E_EMPTY", "no permutations to write");
    const int n = perms.front().degree();
    std::ostringstream out;
    out << "HATPERMS v1\n" << n << '\n';
    for (const auto& p : perms) {
        require(p.degree() == n, "E_DEGREE", "permutations of mixed degree");
        for (int i = 0; i < n; ++i) out << (i ? " " : "") << p.apply(i);
        out << '\n';
    }
    return out.str();
}

std::vector<Permutation> read_hatperms(std::istream& in) {
    read_header_line(in, "HATPERMS v1");
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "E_PARSE", "missing degree line");
    int n = 0;
    {
        std::istringstream ss(line);
        require(static_cast<bool>(ss >> n) && n > 0, "E_PARSE", "bad degree line");
    }
    std::vector<Permutation> perms;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i)
            require(static_cast<bool>(ss >> img[i]), "E_PARSE", "short permutation line");
        int extra;
        require(!(ss >> extra), "E_PARSE", "trailing data on permutation line");
        perms.push_back(Permutation(std::move(img)));
    }
    require(!perms.empty(), "E_PARSE", "no permutations in file");
    return perms;
}

std::vector<Permutation> read_hatperms_string(const std::string& text) {
    std::istringstream in(text);
    return read_hatperms(in);
}

std::vector<Permutation> read_hatperms_file(const std::string& path) {
    auto in = open_input(path);
    return read_hatperms(in);
}

void write_hatperms_file(const std::vector<Permutation>& perms, const std::string& path) {
    write_file(path, write_hatperms(perms));
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string write_dot(const Graph& g, const Orientation& o) {
    require(o.vertex_count() == g.vertex_count(), "E_DEGREE", "orientation does not match the graph");
    std::ostringstream out;
    out << "digraph G {\n";
    for (auto [u, v] : o.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace hat
