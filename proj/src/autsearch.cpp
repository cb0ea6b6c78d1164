#include "hat/autsearch.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hat/error.hpp"

namespace hat {

namespace {

using Cells = std::vector<std::vector<int>>;

// Worklist-driven equitable refinement: split cells by neighbor counts into
// the splitter until stable. Subcells are ordered by count, which keeps the
// ordered partition invariant under relabeling.
class Refiner {
public:
    explicit Refiner(const Graph& g) : g_(g), cnt_(g.vertex_count(), 0) {}

    void refine(Cells& cells) {
        std::deque<std::vector<int>> work(cells.begin(), cells.end());
        while (!work.empty()) {
            std::vector<int> splitter = std::move(work.front());
            work.pop_front();
            for (int v : splitter)
                for (int w : g_.neighbors(v)) ++cnt_[w];

            rebuild_cell_of(cells);
            std::set<int> touched;
            for (int v : splitter)
                for (int w : g_.neighbors(v)) touched.insert(cell_of_[w]);

            Cells next;
            next.reserve(cells.size());
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
                if (!touched.count(ci) || cells[ci].size() == 1) {
                    next.push_back(std::move(cells[ci]));
                    continue;
                }
                std::map<int, std::vector<int>> by_count;
                for (int v : cells[ci]) by_count[cnt_[v]].push_back(v);
                if (by_count.size() == 1) {
                    next.push_back(std::move(cells[ci]));
                    continue;
                }
                for (auto& [key, sub] : by_count) {
                    (void)key;
                    work.push_back(sub);
                    next.push_back(std::move(sub));
                }
            }
            cells = std::move(next);

            for (int v : splitter)
                for (int w : g_.neighbors(v)) cnt_[w] = 0;
        }
    }

private:
    void rebuild_cell_of(const Cells& cells) {
        cell_of_.assign(g_.vertex_count(), -1);
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
            for (int v : cells[ci]) cell_of_[v] = ci;
    }

    const Graph& g_;
    std::vector<int> cnt_;
    std::vector<int> cell_of_;
};

bool is_discrete(const Cells& cells) {
    for (const auto& c : cells)
        if (c.size() != 1) return false;
    return true;
}

// First cell of minimal size >= 2.
int target_cell(const Cells& cells) {
    int best = -1;
    std::size_t best_size = 0;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        std::size_t s = cells[ci].size();
        if (s >= 2 && (best < 0 || s < best_size)) {
            best = ci;
            best_size = s;
        }
    }
    return best;
}

struct Searcher {
    const Graph& g;
    Refiner refiner;
    std::vector<Permutation> gens;
    std::set<Permutation> gen_set;

    bool have_first = false;
    std::vector<int> first_labeling; // vertex -> position
    std::vector<int> first_inverse;  // position -> vertex
    std::vector<int> first_path;
    std::string first_cert;

    std::string best_cert;
    std::vector<int> best_labeling;

    // When a leaf matches the first leaf, jump back to the deepest common
    // ancestor with the first path.
    std::size_t jump_target = SIZE_MAX;

    explicit Searcher(const Graph& graph) : g(graph), refiner(graph) {}

    std::string leaf_certificate(const std::vector<int>& labeling) const {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(g.edge_count());
        for (auto [u, v] : g.edges()) {
            int a = labeling[u], b = labeling[v];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        std::ostringstream out;
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto [a, b] : edges) out << a << ' ' << b << '\n';
        return out.str();
    }

    void add_automorphism(const std::vector<int>& labeling, const std::vector<int>& other_inverse) {
        std::vector<int> img(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) img[v] = other_inverse[labeling[v]];
        Permutation gamma(std::move(img));
        if (gamma.is_identity() || gen_set.count(gamma)) return;
        for (auto [u, v] : g.edges())
            require(g.adjacent(gamma.apply(u), gamma.apply(v)), "E_INTERNAL",
                    "derived map is not an automorphism");
        gen_set.insert(gamma);
        gens.push_back(std::move(gamma));
    }

    void handle_leaf(const Cells& cells, const std::vector<int>& path) {
        std::vector<int> labeling(g.vertex_count());
        for (int pos = 0; pos < static_cast<int>(cells.size()); ++pos) labeling[cells[pos][0]] = pos;
        std::string cert = leaf_certificate(labeling);

        if (!have_first) {
            have_first = true;
            first_labeling = labeling;
            first_inverse.assign(g.vertex_count(), 0);
            for (int v = 0; v < g.vertex_count(); ++v) first_inverse[labeling[v]] = v;
            first_path = path;
            first_cert = cert;
            best_cert = std::move(cert);
            best_labeling = std::move(labeling);
            return;
        }
        if (cert == first_cert) {
            add_automorphism(labeling, first_inverse);
            std::size_t common = 0;
            while (common < path.size() && common < first_path.size() && path[common] == first_path[common])
                ++common;
            jump_target = common;
        }
        if (cert < best_cert) {
            best_cert = std::move(cert);
            best_labeling = std::move(labeling);
        } else if (cert == best_cert && cert != first_cert) {
            std::vector<int> best_inverse(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) best_inverse[best_labeling[v]] = v;
            add_automorphism(labeling, best_inverse);
        }
    }

    // Orbits of the subgroup generated by the discovered automorphisms that
    // fix the whole path pointwise.
    std::vector<int> path_orbits(const std::vector<int>& path) const {
        std::vector<int> root(g.vertex_count());
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& gamma : gens) {
            bool fixes = true;
            for (int p : path)
                if (gamma.apply(p) != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < g.vertex_count(); ++v) {
                int a = find(v), b = find(gamma.apply(v));
                if (a != b) root[a] = b;
            }
        }
        for (int v = 0; v < g.vertex_count(); ++v) root[v] = find(v);
        return root;
    }

    void search(const Cells& cells, std::vector<int>& path) {
        if (is_discrete(cells)) {
            handle_leaf(cells, path);
            return;
        }
        int target = target_cell(cells);
        const std::vector<int> children = cells[target];

        std::vector<int> processed;
        std::size_t gens_seen = SIZE_MAX;
        std::vector<int> orbit_root;
        for (int v : children) {
            if (jump_target < path.size()) return;
            if (!processed.empty()) {
                if (gens_seen != gens.size()) {
                    orbit_root = path_orbits(path);
                    gens_seen = gens.size();
                }
                bool skip = false;
                for (int u : processed)
                    if (orbit_root[u] == orbit_root[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }

            Cells child;
            child.reserve(cells.size() + 1);
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
                if (ci == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[ci])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[ci]);
                }
            }
            refiner.refine(child);
            path.push_back(v);
            search(child, path);
            path.pop_back();
            if (jump_target < path.size()) return;
            if (jump_target == path.size()) jump_target = SIZE_MAX; // consumed at this node
            processed.push_back(v);
        }
    }
};

} // namespace

AutResult automorphism_group(const Graph& g, int max_vertices) {
    require(g.vertex_count() <= max_vertices, "E_SIZE_GUARD",
            "graph larger than the automorphism search guard");
    require(g.is_connected(), "E_DISCONNECTED", "automorphism search expects a connected graph");

    Searcher searcher(g);
    Cells cells{std::vector<int>(g.vertex_count())};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    searcher.refiner.refine(cells);
    std::vector<int> path;
    searcher.search(cells, path);

    AutResult result;
    result.generators = searcher.gens;
    if (result.generators.empty()) result.generators.push_back(Permutation::identity(g.vertex_count()));
    PermGroup group(g.vertex_count(), result.generators);
    result.order = group.order();
    result.canonical_labeling = Permutation(searcher.best_labeling);
    std::ostringstream cert;
    cert << "HATCANON v1\n" << searcher.best_cert;
    result.certificate = cert.str();
    return result;
}

std::string canonical_form(const Graph& g, int max_vertices) {
    return automorphism_group(g, max_vertices).certificate;
}

std::string certificate_digest_hex(const std::string& cert) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : cert) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xF);
    return out.str();
}

HatGraphReport is_half_arc_transitive_graph(const Graph& g, int max_vertices) {
    HatGraphReport report;
    report.aut = automorphism_group(g, max_vertices);
    PermGroup aut(g.vertex_count(), report.aut.generators);
    report.transitivity = transitivity(aut, g);
    report.half_arc_transitive = report.transitivity.half_arc_transitive;
    return report;
}

} // namespace hat
