#include "doctest.h"

#include <algorithm>
#include <set>

#include "hat/error.hpp"
#include "hat/graph.hpp"

using namespace hat;

namespace {

Graph pentagon() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

// Independent 5-cycle count: scan all 5-subsets and all cyclic arrangements.
int naive_five_cycle_count(const Graph& g) {
    const int n = g.vertex_count();
    int count = 0;
    std::vector<int> idx(5);
    // choose v0 < v1 < v2 < v3 < v4, then arrangements fixing the least first
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (subset.size() == 5) {
            std::vector<int> rest(subset.begin() + 1, subset.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest[0] > rest[3]) continue; // reflection representative
                bool ok = g.adjacent(subset[0], rest[0]) && g.adjacent(rest[0], rest[1]) &&
                          g.adjacent(rest[1], rest[2]) && g.adjacent(rest[2], rest[3]) &&
                          g.adjacent(rest[3], subset[0]);
                if (ok) ++count;
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int v = start; v < n; ++v) {
            subset.push_back(v);
            rec(v + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return count;
}

} // namespace

TEST_CASE("from_edges validation") {
    Graph p = pentagon();
    CHECK(p.vertex_count() == 5);
    CHECK(p.edge_count() == 5);
    CHECK(p.degrees() == std::vector<int>{2, 2, 2, 2, 2});

    CHECK_THROWS_WITH_AS(static_cast<void>(Graph::from_edges(3, {{0, 0}})),
                         doctest::Contains("E_LOOP"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(Graph::from_edges(3, {{0, 1}, {1, 0}})),
                         doctest::Contains("E_DUPLICATE_EDGE"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(Graph::from_edges(3, {{0, 5}})),
                         doctest::Contains("E_RANGE"), Error);
}

TEST_CASE("connectivity and degrees") {
    CHECK(pentagon().is_connected());
    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(!two_triangles.is_connected());
    CHECK(two_triangles.degrees() == std::vector<int>{2, 2, 2, 2, 2, 2});
}

TEST_CASE("girth") {
    CHECK(pentagon().girth() == 5);
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.girth() == 3);
    Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(c6.girth() == 6);
    Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!path.girth().has_value());
    // Petersen
    Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(petersen.girth() == 5);
}

TEST_CASE("cycle canonical form") {
    Cycle c = Cycle::canonical({3, 1, 2, 4, 0});
    // rotations and reflections all map to the same representative
    CHECK(Cycle::canonical({1, 2, 4, 0, 3}) == c);
    CHECK(Cycle::canonical({0, 4, 2, 1, 3}) == c);
    CHECK(c.vertices[0] == 0);
    CHECK(c.vertices[1] < c.vertices.back());
    CHECK_THROWS_AS(Cycle::canonical({0, 1}), Error);
    CHECK_THROWS_AS(Cycle::canonical({0, 1, 1}), Error);
}

TEST_CASE("cycles_of_length basics") {
    auto cycles = cycles_of_length(pentagon(), 5);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(cycles_of_length(pentagon(), 3).empty());
    CHECK_THROWS_AS(cycles_of_length(pentagon(), 2), Error);
    CHECK_THROWS_AS(cycles_of_length(pentagon(), 9), Error);

    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(cycles_of_length(k4, 3).size() == 4);
    CHECK(cycles_of_length(k4, 4).size() == 3);

    Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(cycles_of_length(petersen, 5).size() == 12);
    CHECK(cycles_of_length(petersen, 6).size() == 10);
}

TEST_CASE("cycles_of_length against the naive quintuple scan") {
    std::vector<Graph> fixtures;
    fixtures.push_back(pentagon());
    fixtures.push_back(Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}));
    // 4-dimensional hypercube: plenty of structure, no 5-cycles
    {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < 16; ++v)
            for (int bit = 0; bit < 4; ++bit)
                if (v < (v ^ (1 << bit))) edges.emplace_back(v, v ^ (1 << bit));
        fixtures.push_back(Graph::from_edges(16, edges));
    }
    // circulant C13(1,5)
    {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < 13; ++v)
            for (int s : {1, 5}) edges.emplace_back(v, (v + s) % 13);
        std::vector<std::pair<int, int>> dedup;
        std::set<std::pair<int, int>> seen;
        for (auto [u, w] : edges) {
            std::pair<int, int> key = std::minmax(u, w);
            if (seen.insert(key).second) dedup.push_back(key);
        }
        fixtures.push_back(Graph::from_edges(13, dedup));
    }
    for (const auto& g : fixtures) {
        int naive = naive_five_cycle_count(g);
        CHECK(static_cast<int>(cycles_of_length(g, 5).size()) == naive);
    }
}

TEST_CASE("girth agrees with first nonempty cycle length") {
    std::vector<Graph> fixtures;
    fixtures.push_back(pentagon());
    fixtures.push_back(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    fixtures.push_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
    for (const auto& g : fixtures) {
        auto girth = g.girth();
        REQUIRE(girth.has_value());
        for (int k = 3; k <= 8; ++k) {
            bool nonempty = !cycles_of_length(g, k).empty();
            CHECK(nonempty == (k == *girth ? true : (k < *girth ? false : nonempty)));
            if (k < *girth) CHECK(!nonempty);
            if (k == *girth) CHECK(nonempty);
        }
    }
}

TEST_CASE("recanonicalization is stable") {
    Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    for (const auto& c : cycles_of_length(petersen, 6)) {
        std::vector<int> rotated(c.vertices.begin() + 2, c.vertices.end());
        rotated.insert(rotated.end(), c.vertices.begin(), c.vertices.begin() + 2);
        CHECK(Cycle::canonical(rotated) == c);
        std::vector<int> reflected(c.vertices.rbegin(), c.vertices.rend());
        CHECK(Cycle::canonical(reflected) == c);
    }
}
