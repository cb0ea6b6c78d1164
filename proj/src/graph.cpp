#include "hat/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hat/error.hpp"

namespace hat {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    require(n > 0, "E_RANGE", "vertex count must be positive");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, "E_RANGE",
                "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        require(u != v, "E_LOOP", "loop at vertex " + std::to_string(u));
        std::pair<int, int> key = std::minmax(u, v);
        require(seen.insert(key).second, "E_DUPLICATE_EDGE",
                "duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<int>(seen.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == n_;
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::optional<int> Graph::girth() const {
    int best = -1;
    std::vector<int> dist(n_), parent(n_);
    for (int root = 0; root < n_; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best > 0 && 2 * dist[u] + 1 >= best) break;
            for (int v : adj_[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && dist[v] >= dist[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
        if (best == 3) break;
    }
    if (best < 0) return std::nullopt;
    return best;
}

Cycle Cycle::canonical(const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    require(k >= 3, "E_RANGE", "a cycle needs at least 3 vertices");
    {
        std::set<int> uniq(vertices.begin(), vertices.end());
        require(static_cast<int>(uniq.size()) == k, "E_RANGE", "cycle vertices repeat");
    }
    std::vector<int> best;
    for (int start = 0; start < k; ++start) {
        for (int dir : {1, -1}) {
            std::vector<int> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = vertices[((start + dir * i) % k + k) % k];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return Cycle{std::move(best)};
}

namespace {

void cycle_dfs(const Graph& g, int k, std::vector<int>& path, std::vector<char>& in_path,
               std::vector<Cycle>& out) {
    const int root = path[0];
    if (static_cast<int>(path.size()) == k) {
        if (g.adjacent(path.back(), root) && path[1] < path.back()) out.push_back(Cycle{path});
        return;
    }
    for (int w : g.neighbors(path.back())) {
        if (w <= root || in_path[w]) continue;
        path.push_back(w);
        in_path[w] = 1;
        cycle_dfs(g, k, path, in_path, out);
        in_path[w] = 0;
        path.pop_back();
    }
}

} // namespace

std::vector<Cycle> cycles_of_length(const Graph& g, int k) {
    require(k >= 3 && k <= 8, "E_RANGE", "cycle length must be between 3 and 8");
    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<char> in_path(g.vertex_count(), 0);
    for (int root = 0; root < g.vertex_count(); ++root) {
        path.assign(1, root);
        in_path[root] = 1;
        cycle_dfs(g, k, path, in_path, out);
        in_path[root] = 0;
    }
    // Rooted ascending DFS already emits each cycle once in canonical form,
    // lexicographically sorted.
    return out;
}

} // namespace hat
