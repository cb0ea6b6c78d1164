#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hat/action.hpp"
#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

struct AutResult {
    std::vector<Permutation> generators; // generate the full automorphism group
    std::uint64_t order = 1;
    Permutation canonical_labeling; // vertex -> canonical position
    std::string certificate;        // equal byte strings iff isomorphic
};

// Full automorphism group and canonical form via equitable-partition
// refinement with individualization and orbit pruning. Deterministic.
AutResult automorphism_group(const Graph& g, int max_vertices = 10000);

// Canonical certificate only (same search).
std::string canonical_form(const Graph& g, int max_vertices = 10000);

// Short stable digest of a certificate for display (FNV-1a, 64 bit).
std::string certificate_digest_hex(const std::string& cert);

struct HatGraphReport {
    bool half_arc_transitive = false;
    AutResult aut;
    TransitivityReport transitivity;
};

// Computes Aut and classifies its action.
HatGraphReport is_half_arc_transitive_graph(const Graph& g, int max_vertices = 10000);

} // namespace hat
