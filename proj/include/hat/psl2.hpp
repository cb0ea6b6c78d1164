#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// Arithmetic in Z_p for an odd prime p.
namespace fp {
long long normalize(long long x, long long p);
long long add(long long a, long long b, long long p);
long long sub(long long a, long long b, long long p);
long long mul(long long a, long long b, long long p);
long long pow(long long a, long long e, long long p);
long long inv(long long a, long long p);
} // namespace fp

bool is_prime(int n);

// Raw 2x2 matrix over Z_p, row-major entries (a b / c d). Used for SL- and
// PGL-level checks where the PSL normalization would get in the way.
struct Mat2 {
    long long p = 0;
    std::array<long long, 4> e{0, 0, 0, 0};

    static Mat2 identity(long long p);
    long long det() const;
    Mat2 adjugate() const;
    bool operator==(const Mat2& o) const { return p == o.p && e == o.e; }
    // True when the two matrices differ by a scalar factor.
    bool proportional_to(const Mat2& o) const;
};

Mat2 mat_mul(const Mat2& m, const Mat2& n);
Mat2 mat_neg(const Mat2& m);
Mat2 mat_scale(const Mat2& m, long long s);

// Element of PSL(2,p): a determinant-one matrix stored as the representative
// of {M, -M} whose first nonzero entry in row-major order lies in [1, p/2].
class Psl2Element {
public:
    Psl2Element() = default;
    // Normalizes; requires determinant one.
    explicit Psl2Element(const Mat2& m);

    const Mat2& mat() const { return m_; }
    long long modulus() const { return m_.p; }
    bool is_identity() const;

    bool operator==(const Psl2Element& o) const { return m_ == o.m_; }
    bool operator<(const Psl2Element& o) const;

private:
    Mat2 m_;
};

Psl2Element psl2_mul(const Psl2Element& m, const Psl2Element& n);
Psl2Element psl2_inverse(const Psl2Element& m);

struct Psl2Params {
    int p = 0;  // prime, p = 1 (mod 10)
    int xi = 0; // fifth root of unity in Z_p
};

// Least xi in [2, p-1] with xi^5 = 1; errors unless p is prime and
// p = 1 (mod 10).
int fifth_root(int p);
Psl2Params make_psl2_params(int p);

// A = (0 1 / -1 0), B = (xi, xi + xi^-1 / 0, xi^-1).
std::pair<Psl2Element, Psl2Element> standard_generators(const Psl2Params& params);

int element_order(const Psl2Element& m);

// Faithful action on the projective line: points 0..p-1 plus p for infinity.
// Point x maps to (a x + c) / (b x + d); the row convention makes the map a
// homomorphism under left-to-right composition.
Permutation as_projective_permutation(const Psl2Element& m);

// Double coset graph on the cosets of H = <A> with connection {B, B^-1},
// together with the right-multiplication action of PSL(2,p).
struct CosetGraph {
    int p = 0;
    Psl2Params params;
    Psl2Element a, b;
    Graph graph;
    std::vector<Psl2Element> elements; // sorted enumeration of PSL(2,p)
    std::vector<int> coset_of_element; // element index -> coset id
    std::vector<int> coset_rep;        // coset id -> least element index
    std::vector<Permutation> action_gens; // right multiplication by a and b

    int element_index(const Psl2Element& m) const;
    int coset_of(const Psl2Element& m) const;
    Permutation right_multiplication(const Psl2Element& m) const;
};

CosetGraph coset_graph(int p, int max_p = 31);

// Element of PGL(2,p): matrix mod scalars, scaled so the first nonzero entry
// is one.
struct PglElement {
    Mat2 m;
    static PglElement from_mat(const Mat2& m);
    bool operator==(const PglElement& o) const { return m == o.m; }
};

bool pgl_is_involution(const PglElement& g);

// The arc-reversing matrix C = (1, -1-2xi-2xi^2 / -1-2xi-2xi^2, -1), checked
// invertible. Conjugation by it is an automorphism of the coset graph fixing
// the trivial coset and swapping the cosets of B and B^-1.
PglElement arc_reversing_witness(int p);

// The permutation of the cosets induced by conjugation with c.
Permutation conjugation_action(const CosetGraph& cg, const PglElement& c);

} // namespace hat
