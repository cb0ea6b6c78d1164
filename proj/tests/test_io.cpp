#include "doctest.h"

#include "hat/error.hpp"
#include "hat/io.hpp"

using namespace hat;

TEST_CASE("hatgraph round trip is byte identical") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    std::string text = write_hatgraph(g);
    CHECK(text == "HATGRAPH v1\n5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    Graph parsed = read_hatgraph_string(text);
    CHECK(write_hatgraph(parsed) == text);
}

TEST_CASE("hatgraph parse errors") {
    CHECK_THROWS_WITH_AS(static_cast<void>(read_hatgraph_string("WRONG\n1 0\n")),
                         doctest::Contains("E_PARSE"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(read_hatgraph_string("HATGRAPH v1\n3 1\n1 0\n")),
                         doctest::Contains("E_PARSE"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(read_hatgraph_string("HATGRAPH v1\n3 2\n0 1\n")),
                         doctest::Contains("E_PARSE"), Error);
}

TEST_CASE("hatperms round trip is byte identical") {
    std::vector<Permutation> perms{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                   Permutation::from_cycles(4, {{0, 1}})};
    std::string text = write_hatperms(perms);
    CHECK(text == "HATPERMS v1\n4\n1 2 3 0\n1 0 2 3\n");
    auto parsed = read_hatperms_string(text);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0] == perms[0]);
    CHECK(parsed[1] == perms[1]);
    CHECK(write_hatperms(parsed) == text);
}

TEST_CASE("hatperms parse errors") {
    CHECK_THROWS_AS(static_cast<void>(read_hatperms_string("HATPERMS v1\n3\n0 1\n")), Error);
    CHECK_THROWS_AS(static_cast<void>(read_hatperms_string("HATPERMS v1\n3\n0 1 2 0\n")), Error);
    CHECK_THROWS_AS(static_cast<void>(read_hatperms_string("HATPERMS v1\n3\n0 1 1\n")), Error);
}

TEST_CASE("dot export") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(write_dot(g) == "graph G {\n  0 -- 1;\n  1 -- 2;\n}\n");
    Orientation o = Orientation::from_arcs(g, {{1, 0}, {1, 2}});
    CHECK(write_dot(g, o) == "digraph G {\n  1 -> 0;\n  1 -> 2;\n}\n");
}
