#include "hat/psl2.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "hat/error.hpp"

namespace hat {

namespace fp {

long long normalize(long long x, long long p) {
    long long r = x % p;
    return r < 0 ? r + p : r;
}

long long add(long long a, long long b, long long p) { return normalize(a + b, p); }
long long sub(long long a, long long b, long long p) { return normalize(a - b, p); }
long long mul(long long a, long long b, long long p) { return normalize(normalize(a, p) * normalize(b, p), p); }

long long pow(long long a, long long e, long long p) {
    long long acc = 1 % p, base = normalize(a, p);
    while (e > 0) {
        if (e & 1) acc = mul(acc, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

long long inv(long long a, long long p) {
    a = normalize(a, p);
    require(a != 0, "E_DIV_ZERO", "inverse of zero mod " + std::to_string(p));
    return pow(a, p - 2, p); // p prime
}

} // namespace fp

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Mat2 Mat2::identity(long long p) { return Mat2{p, {1, 0, 0, 1}}; }

long long Mat2::det() const { return fp::sub(fp::mul(e[0], e[3], p), fp::mul(e[1], e[2], p), p); }

Mat2 Mat2::adjugate() const { return Mat2{p, {e[3], fp::sub(0, e[1], p), fp::sub(0, e[2], p), e[0]}}; }

bool Mat2::proportional_to(const Mat2& o) const {
    if (p != o.p) return false;
    // find a nonzero entry of o to solve for the scalar
    for (int i = 0; i < 4; ++i)
        if (o.e[i] != 0) {
            long long s = fp::mul(e[i], fp::inv(o.e[i], p), p);
            if (s == 0) return false;
            return *this == mat_scale(o, s);
        }
    return *this == o;
}

Mat2 mat_mul(const Mat2& m, const Mat2& n) {
    require(m.p == n.p, "E_MODULUS", "matrix moduli differ");
    const long long p = m.p;
    return Mat2{p,
                {fp::add(fp::mul(m.e[0], n.e[0], p), fp::mul(m.e[1], n.e[2], p), p),
                 fp::add(fp::mul(m.e[0], n.e[1], p), fp::mul(m.e[1], n.e[3], p), p),
                 fp::add(fp::mul(m.e[2], n.e[0], p), fp::mul(m.e[3], n.e[2], p), p),
                 fp::add(fp::mul(m.e[2], n.e[1], p), fp::mul(m.e[3], n.e[3], p), p)}};
}

Mat2 mat_neg(const Mat2& m) { return mat_scale(m, m.p - 1); }

Mat2 mat_scale(const Mat2& m, long long s) {
    Mat2 out = m;
    for (auto& x : out.e) x = fp::mul(x, s, m.p);
    return out;
}

Psl2Element::Psl2Element(const Mat2& m) : m_(m) {
    for (auto& x : m_.e) x = fp::normalize(x, m_.p);
    require(m_.det() == 1, "E_DETERMINANT", "matrix is not in SL(2,p)");
    for (int i = 0; i < 4; ++i) {
        if (m_.e[i] == 0) continue;
        if (m_.e[i] > (m_.p - 1) / 2) m_ = mat_neg(m_);
        break;
    }
}

bool Psl2Element::is_identity() const { return m_ == Mat2::identity(m_.p); }

bool Psl2Element::operator<(const Psl2Element& o) const { return m_.e < o.m_.e; }

Psl2Element psl2_mul(const Psl2Element& m, const Psl2Element& n) {
    return Psl2Element(mat_mul(m.mat(), n.mat()));
}

Psl2Element psl2_inverse(const Psl2Element& m) { return Psl2Element(m.mat().adjugate()); }

int fifth_root(int p) {
    require(is_prime(p), "E_NOT_PRIME", std::to_string(p) + " is not prime");
    require(p % 10 == 1, "E_PARAM", "fifth roots of unity need p = 1 (mod 10)");
    for (int xi = 2; xi < p; ++xi)
        if (fp::pow(xi, 5, p) == 1) return xi;
    fail("E_INTERNAL", "no fifth root of unity found");
}

Psl2Params make_psl2_params(int p) { return Psl2Params{p, fifth_root(p)}; }

std::pair<Psl2Element, Psl2Element> standard_generators(const Psl2Params& params) {
    const long long p = params.p;
    const long long xi = params.xi;
    const long long xi_inv = fp::inv(xi, p);
    Psl2Element a(Mat2{p, {0, 1, p - 1, 0}});
    Psl2Element b(Mat2{p, {xi, fp::add(xi, xi_inv, p), 0, xi_inv}});
    return {a, b};
}

int element_order(const Psl2Element& m) {
    const int cap = static_cast<int>(2 * m.modulus() + 2);
    Psl2Element acc = m;
    for (int k = 1; k <= cap; ++k) {
        if (acc.is_identity()) return k;
        acc = psl2_mul(acc, m);
    }
    fail("E_INTERNAL", "element order exceeded the cap");
}

Permutation as_projective_permutation(const Psl2Element& m) {
    const long long p = m.modulus();
    const auto& e = m.mat().e;
    std::vector<int> img(p + 1);
    for (long long x = 0; x < p; ++x) {
        long long num = fp::add(fp::mul(e[0], x, p), e[2], p);
        long long den = fp::add(fp::mul(e[1], x, p), e[3], p);
        img[x] = den == 0 ? static_cast<int>(p) : static_cast<int>(fp::mul(num, fp::inv(den, p), p));
    }
    // infinity: (1 : 0) -> (a : b)
    img[p] = e[1] == 0 ? static_cast<int>(p) : static_cast<int>(fp::mul(e[0], fp::inv(e[1], p), p));
    return Permutation(std::move(img));
}

int CosetGraph::element_index(const Psl2Element& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    require(it != elements.end() && *it == m, "E_INTERNAL", "element missing from the PSL table");
    return static_cast<int>(it - elements.begin());
}

int CosetGraph::coset_of(const Psl2Element& m) const { return coset_of_element[element_index(m)]; }

Permutation CosetGraph::right_multiplication(const Psl2Element& m) const {
    std::vector<int> img(coset_rep.size());
    for (std::size_t c = 0; c < coset_rep.size(); ++c)
        img[c] = coset_of(psl2_mul(elements[coset_rep[c]], m));
    return Permutation(std::move(img));
}

CosetGraph coset_graph(int p, int max_p) {
    require(p <= max_p, "E_SIZE_GUARD",
            "p = " + std::to_string(p) + " exceeds the prime bound " + std::to_string(max_p));
    CosetGraph cg;
    cg.p = p;
    cg.params = make_psl2_params(p);
    auto [a, b] = standard_generators(cg.params);
    cg.a = a;
    cg.b = b;

    // Enumerate PSL(2,p) as normalized determinant-one matrices.
    std::vector<Psl2Element> elems;
    const long long lp = p;
    for (long long av = 0; av < lp; ++av)
        for (long long bv = 0; bv < lp; ++bv)
            for (long long cv = 0; cv < lp; ++cv) {
                if (av != 0) {
                    long long dv = fp::mul(fp::add(1, fp::mul(bv, cv, lp), lp), fp::inv(av, lp), lp);
                    elems.push_back(Psl2Element(Mat2{lp, {av, bv, cv, dv}}));
                } else {
                    if (bv == 0 || fp::mul(bv, cv, lp) != lp - 1) continue;
                    for (long long dv = 0; dv < lp; ++dv)
                        elems.push_back(Psl2Element(Mat2{lp, {av, bv, cv, dv}}));
                }
            }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const std::uint64_t group_order =
        static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1) / 2;
    require(elems.size() == group_order, "E_INTERNAL", "PSL(2,p) enumeration has the wrong size");
    cg.elements = std::move(elems);

    // Cosets Hg = {g, ag}; ids ordered by least element index.
    const int count = static_cast<int>(cg.elements.size());
    cg.coset_of_element.assign(count, -1);
    for (int i = 0; i < count; ++i) {
        if (cg.coset_of_element[i] >= 0) continue;
        int mate = cg.element_index(psl2_mul(cg.a, cg.elements[i]));
        int id = static_cast<int>(cg.coset_rep.size());
        cg.coset_of_element[i] = id;
        cg.coset_of_element[mate] = id;
        cg.coset_rep.push_back(i);
    }

    // Neighbors of Hg are H b g, H b^-1 g, H b a g and H b^-1 a g.
    const Psl2Element b_inv = psl2_inverse(cg.b);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t c = 0; c < cg.coset_rep.size(); ++c) {
        const Psl2Element& g = cg.elements[cg.coset_rep[c]];
        const Psl2Element ag = psl2_mul(cg.a, g);
        for (const Psl2Element& s : {cg.b, b_inv}) {
            for (const Psl2Element& base : {g, ag}) {
                int other = cg.coset_of(psl2_mul(s, base));
                std::pair<int, int> key = std::minmax(static_cast<int>(c), other);
                if (key.first != key.second && seen.insert(key).second) edges.push_back(key);
            }
        }
    }
    cg.graph = Graph::from_edges(static_cast<int>(cg.coset_rep.size()), edges);
    require(cg.graph.is_regular(4), "E_INTERNAL", "coset graph is not tetravalent");
    require(cg.graph.is_connected(), "E_INTERNAL", "coset graph is not connected");

    cg.action_gens = {cg.right_multiplication(cg.a), cg.right_multiplication(cg.b)};
    PermGroup action(cg.graph.vertex_count(), cg.action_gens);
    require(action.order() == group_order, "E_INTERNAL",
            "the coset action is not faithful of full PSL order");
    return cg;
}

PglElement PglElement::from_mat(const Mat2& m) {
    require(m.det() != 0, "E_DETERMINANT", "matrix is singular");
    Mat2 scaled = m;
    for (auto& x : scaled.e) x = fp::normalize(x, m.p);
    for (int i = 0; i < 4; ++i)
        if (scaled.e[i] != 0) {
            scaled = mat_scale(scaled, fp::inv(scaled.e[i], m.p));
            break;
        }
    return PglElement{scaled};
}

bool pgl_is_involution(const PglElement& g) {
    Mat2 sq = mat_mul(g.m, g.m);
    return sq.proportional_to(Mat2::identity(g.m.p)) && !g.m.proportional_to(Mat2::identity(g.m.p));
}

PglElement arc_reversing_witness(int p) {
    Psl2Params params = make_psl2_params(p);
    const long long lp = p;
    const long long xi = params.xi;
    // z = -1 - 2 xi - 2 xi^2
    long long z = fp::sub(0, fp::add(1, fp::add(fp::mul(2, xi, lp), fp::mul(2, fp::mul(xi, xi, lp), lp), lp), lp), lp);
    Mat2 c{lp, {1, z, z, lp - 1}};
    require(c.det() != 0, "E_INCONSISTENT",
            "the arc-reversing matrix is singular, contradicting its defining identity");
    return PglElement::from_mat(c);
}

Permutation conjugation_action(const CosetGraph& cg, const PglElement& c) {
    // Hx -> H(c^-1 x c). The adjugate serves as the projective inverse; the
    // product is rescaled back to determinant one before normalizing.
    const long long p = c.m.p;
    const long long det = c.m.det();
    std::vector<int> img(cg.coset_rep.size());
    for (std::size_t i = 0; i < cg.coset_rep.size(); ++i) {
        const Mat2& x = cg.elements[cg.coset_rep[i]].mat();
        Mat2 conj = mat_mul(mat_mul(c.m.adjugate(), x), c.m);
        // det(conj) = det(c)^2; dividing by det(c) lands in SL.
        conj = mat_scale(conj, fp::inv(det, p));
        img[i] = cg.coset_of(Psl2Element(conj));
    }
    return Permutation(std::move(img));
}

} // namespace hat
