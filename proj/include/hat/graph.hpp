#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hat {

// Finite simple undirected graph on {0..n-1} with sorted adjacency lists.
// Immutable after construction; every query is pure.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_regular(int k) const;
    std::vector<int> degrees() const; // sorted multiset

    // Length of a shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Cycle in canonical form: of the 2k rotations/reflections of the vertex
// sequence, the lexicographically least one.
struct Cycle {
    std::vector<int> vertices;

    static Cycle canonical(const std::vector<int>& vertices);
    int length() const { return static_cast<int>(vertices.size()); }

    bool operator==(const Cycle& o) const { return vertices == o.vertices; }
    bool operator<(const Cycle& o) const { return vertices < o.vertices; }
};

// Every cycle of length k exactly once, canonical, sorted. 3 <= k <= 8.
std::vector<Cycle> cycles_of_length(const Graph& g, int k);

} // namespace hat
