#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hat/report.hpp"

namespace hat {

// One solution of the tight-attachment girth-5 identity: q of multiplicative
// order dividing m in Z_r, q != +-1, with some sign pattern of the defining
// identity vanishing. `patterns` lists the satisfied sign patterns.
struct TaSolution {
    int r = 0;
    int q = 0;
    std::vector<std::string> patterns;
    bool all_plus = false; // the all-plus pattern holds
};

struct TaSearchResult {
    int m = 0;
    int r_bound = 0;
    std::vector<TaSolution> solutions;
};

// Exhaustive scan over odd r <= r_bound and q in Z_r. For m = 3 the identity
// is 3 +- q +- q^2 = 0 with q^3 = 1; for m = 5 it is 1 +- q +- q^2 +- q^3 +- q^4 = 0
// with q^5 = 1. Only m in {3, 5} is supported.
TaSearchResult ta_search(int m, int r_bound);

struct Assertion {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string provenance; // which statement is being checked, in words
};

struct VerifyReport {
    std::string operation;
    bool pass = true;
    std::vector<Assertion> assertions;
    std::string note;

    void check(const std::string& name, bool ok, const std::string& expected, const std::string& actual,
               const std::string& provenance);
    std::string to_json() const;
};

// Runs ta_search and verifies the classification facts about its output.
VerifyReport verify_ta(int m, int r_bound);

// The two graphs with undirected 5-cycles: all 5-cycles of the Doyle-Holt
// graph are type 4 under Aut, all 5-cycles of R_12(5,2) are type 4 under G1
// and type 3 under G2, no type 2 anywhere, and G1 != G2 are both
// half-arc-transitive.
VerifyReport verify_undirected_classification();

// Expected properties of a constructible census row. Identifications of
// census labels with constructor parameters are derived, not quoted.
struct TableRowExpectation {
    std::string name;
    std::string family; // "xo" or "psl2"
    std::vector<int> params;
    int radius = 0;
    int attachment = 0;
    std::vector<int> consistent_lengths; // sorted multiset of orbit lengths
    bool alter_complete = false;
    std::optional<std::uint64_t> stabilizer_order;
    std::optional<bool> cayley;
    std::optional<bool> solvable;
    std::optional<int> five_cycles_per_edge;
    std::optional<bool> graph_arc_transitive; // full automorphism group
};

std::vector<TableRowExpectation> builtin_table_rows();
std::optional<TableRowExpectation> find_table_row(const std::string& name);
VerifyReport verify_table_row(const TableRowExpectation& row);

// Sweeps the Class IV family with m = 5, p = 1, q = 2 over n <= n_bound and
// asserts no output is both girth-5 and half-arc-transitive.
VerifyReport verify_xiv_nonexistence(int n_bound);

} // namespace hat
