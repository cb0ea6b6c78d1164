#pragma once

#include <cstdint>
#include <vector>

#include "hat/action.hpp"
#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// Tightly-attached odd-radius family: vertices u_i^j for i in Z_m, j in Z_r,
// with u_i^j adjacent to u_{i+1}^{j +- q^i}. Canonical vertex numbering
// u_i^j <-> i*r + j is part of the public contract.
struct XoParams {
    int m = 0; // >= 3
    int r = 0; // odd, >= 3
    int q = 0; // element of Z_r with q^m = +-1
};

Graph xo(const XoParams& p);
int xo_vertex(const XoParams& p, int i, int j);

// The orientation with every arc pointing from subscript i to i+1.
Orientation xo_orientation(const XoParams& p);

// Generators of the canonical vertex- and edge-transitive group:
// rho adds 1 to the superscript, sigma shifts the subscript and multiplies
// the superscript by q, tau negates the superscript.
std::vector<Permutation> xo_hat_generators(const XoParams& p);

// Generators of the regular subgroup <rho, sigma>.
std::vector<Permutation> xo_regular_generators(const XoParams& p);

// Rose window graph R_n(a, r): rim x_i ~ x_{i+1}, hub y_i ~ y_{i+r},
// spokes x_i ~ y_i and x_i ~ y_{i-a}. Numbering: x_i <-> i, y_i <-> n + i.
struct RoseWindowParams {
    int n = 0; // >= 3
    int a = 0; // 1 <= a <= n-1
    int r = 0; // 1 <= r < n/2
};

Graph rose_window(const RoseWindowParams& p);

// The R_12(5,2) graph together with the generator package of its
// automorphism group and the two half-arc-transitive subgroups.
struct R12Package {
    Graph graph;
    Permutation rho, mu, sigma;
    std::vector<Permutation> aut_gens; // {rho, mu, sigma}, arc-regular
    std::vector<Permutation> g1_gens;  // {rho, sigma}
    std::vector<Permutation> g2_gens;  // {rho^2, sigma*rho, mu}
};

R12Package r12_special_package();

// Cayley graph of an enumerable permutation group. The connection set is
// given as indices into enumerate_elements(); it must be inverse-closed and
// identity-free.
struct CayleyParams {
    PermGroup group;
    std::vector<int> connection; // indices into the element enumeration
    std::uint64_t enum_bound = PermGroup::kDefaultEnumBound;
};

Graph cayley(const CayleyParams& p);

// Weak metacirculant family of Class IV: vertices u_i^j for i in Z_m,
// j in Z_n, with p-edges u_i^j ~ u_{i+p}^{...} and q-edges u_i^j ~ u_{i+q}^{...}
// following the three index-range cases. Numbering: u_i^j <-> i*n + j.
struct XivParams {
    int m = 0, n = 0;
    int r = 0, t = 0, a = 0, b = 0; // elements of Z_n
    int p = 0, q = 0;               // 1 <= p < q < m/2
};

struct XivGraph {
    Graph graph;
    std::vector<std::pair<int, int>> p_edges;
    std::vector<std::pair<int, int>> q_edges;
};

void validate_xiv_params(const XivParams& p);
XivGraph xiv(const XivParams& p);
int xiv_vertex(const XivParams& p, int i, int j);

} // namespace hat
