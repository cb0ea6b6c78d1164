#include "hat/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "hat/error.hpp"

namespace hat {

namespace {

int mod(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// q^e mod r
int powmod(int q, int e, int r) {
    long long acc = 1, base = mod(q, r);
    for (int i = 0; i < e; ++i) acc = (acc * base) % r;
    return static_cast<int>(acc);
}

int gcd_all(std::initializer_list<int> xs) {
    int g = 0;
    for (int x : xs) g = std::gcd(g, x);
    return g;
}

} // namespace

static void validate_xo_params(const XoParams& p) {
    require(p.m >= 3, "E_PARAM", "xo requires m >= 3");
    require(p.r >= 3 && p.r % 2 == 1, "E_PARAM", "xo requires odd r >= 3");
    require(p.q >= 0 && p.q < p.r, "E_PARAM", "xo requires q in Z_r");
    int qm = powmod(p.q, p.m, p.r);
    require(qm == 1 || qm == p.r - 1, "E_PARAM", "xo requires q^m = +-1 in Z_r");
}

int xo_vertex(const XoParams& p, int i, int j) {
    return mod(i, p.m) * p.r + mod(j, p.r);
}

Graph xo(const XoParams& p) {
    validate_xo_params(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.m; ++i) {
        int qi = powmod(p.q, i, p.r);
        for (int j = 0; j < p.r; ++j) {
            edges.emplace_back(xo_vertex(p, i, j), xo_vertex(p, i + 1, j + qi));
            edges.emplace_back(xo_vertex(p, i, j), xo_vertex(p, i + 1, j - qi));
        }
    }
    Graph g = Graph::from_edges(p.m * p.r, edges);
    require(g.is_regular(4), "E_PARAM", "xo output is not tetravalent");
    require(g.is_connected(), "E_PARAM", "xo output is not connected");
    return g;
}

Orientation xo_orientation(const XoParams& p) {
    validate_xo_params(p);
    Graph g = xo(p);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < p.m; ++i) {
        int qi = powmod(p.q, i, p.r);
        for (int j = 0; j < p.r; ++j) {
            arcs.emplace_back(xo_vertex(p, i, j), xo_vertex(p, i + 1, j + qi));
            arcs.emplace_back(xo_vertex(p, i, j), xo_vertex(p, i + 1, j - qi));
        }
    }
    return Orientation::from_arcs(g, arcs);
}

std::vector<Permutation> xo_hat_generators(const XoParams& p) {
    auto gens = xo_regular_generators(p);
    const int n = p.m * p.r;
    std::vector<int> tau(n);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.r; ++j) tau[xo_vertex(p, i, j)] = xo_vertex(p, i, -j);
    gens.push_back(Permutation(std::move(tau)));
    return gens;
}

std::vector<Permutation> xo_regular_generators(const XoParams& p) {
    validate_xo_params(p);
    const int n = p.m * p.r;
    std::vector<int> rho(n), sigma(n);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.r; ++j) {
            rho[xo_vertex(p, i, j)] = xo_vertex(p, i, j + 1);
            sigma[xo_vertex(p, i, j)] = xo_vertex(p, i + 1, static_cast<int>((static_cast<long long>(j) * p.q) % p.r));
        }
    return {Permutation(std::move(rho)), Permutation(std::move(sigma))};
}

Graph rose_window(const RoseWindowParams& p) {
    require(p.n >= 3, "E_PARAM", "rose window requires n >= 3");
    require(p.a != 0 && mod(p.a, p.n) != 0, "E_DEGENERATE", "a = 0 collapses the two spoke families");
    require(p.a >= 1 && p.a <= p.n - 1, "E_PARAM", "rose window requires 1 <= a <= n-1");
    require(mod(2 * p.r, p.n) != 0, "E_DEGENERATE", "2r = 0 (mod n) collapses hub edges to multi-edges");
    require(p.r >= 1 && 2 * p.r < p.n, "E_PARAM", "rose window requires 1 <= r < n/2");
    std::vector<std::pair<int, int>> edges;
    auto x = [&](int i) { return mod(i, p.n); };
    auto y = [&](int i) { return p.n + mod(i, p.n); };
    for (int i = 0; i < p.n; ++i) {
        edges.emplace_back(x(i), x(i + 1));     // rim
        edges.emplace_back(y(i), y(i + p.r));   // hub
        edges.emplace_back(x(i), y(i));         // spoke
        edges.emplace_back(x(i), y(i - p.a));   // spoke
    }
    return Graph::from_edges(2 * p.n, edges);
}

R12Package r12_special_package() {
    const int n = 12;
    R12Package pkg;
    pkg.graph = rose_window({12, 5, 2});
    auto x = [&](int i) { return mod(i, n); };
    auto y = [&](int i) { return n + mod(i, n); };

    std::vector<int> rho(2 * n), mu(2 * n);
    for (int i = 0; i < n; ++i) {
        rho[x(i)] = x(i + 1);
        rho[y(i)] = y(i + 1);
        mu[x(i)] = x(-i);
        mu[y(i)] = y(-i - 5);
    }
    pkg.rho = Permutation(std::move(rho));
    pkg.mu = Permutation(std::move(mu));
    pkg.sigma = Permutation::from_cycles(
        2 * n, {{x(1), y(0)}, {x(2), y(10)}, {x(4), y(3)}, {x(5), y(1)}, {x(7), y(6)}, {x(8), y(4)},
                {x(10), y(9)}, {x(11), y(7)}, {y(2), y(8)}, {y(5), y(11)}});

    for (const auto* g : {&pkg.rho, &pkg.mu, &pkg.sigma})
        for (auto [u, v] : pkg.graph.edges())
            require(pkg.graph.adjacent(g->apply(u), g->apply(v)), "E_INTERNAL",
                    "generator is not an automorphism of R_12(5,2)");

    pkg.aut_gens = {pkg.rho, pkg.mu, pkg.sigma};
    pkg.g1_gens = {pkg.rho, pkg.sigma};
    // sigma*rho applies sigma first, then rho.
    pkg.g2_gens = {compose(pkg.rho, pkg.rho), compose(pkg.sigma, pkg.rho), pkg.mu};
    return pkg;
}

Graph cayley(const CayleyParams& p) {
    auto elems = p.group.enumerate_elements(p.enum_bound);
    const int count = static_cast<int>(elems.size());
    std::map<Permutation, int> index;
    for (int i = 0; i < count; ++i) index[elems[i]] = i;

    std::set<int> connection(p.connection.begin(), p.connection.end());
    require(connection.size() == p.connection.size(), "E_PARAM", "connection set repeats an element");
    for (int s : connection) {
        require(s >= 0 && s < count, "E_RANGE", "connection index out of range");
        require(!elems[s].is_identity(), "E_IDENTITY_IN_S", "connection set contains the identity");
        int inv = index.at(elems[s].inverse());
        require(connection.count(inv), "E_NOT_INVERSE_CLOSED",
                "connection set is not closed under inversion");
    }
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int h = 0; h < count; ++h)
        for (int s : connection) {
            int sh = index.at(compose(elems[s], elems[h]));
            std::pair<int, int> key = std::minmax(h, sh);
            if (seen.insert(key).second) edges.push_back(key);
        }
    return Graph::from_edges(count, edges);
}

void validate_xiv_params(const XivParams& p) {
    require(p.m >= 5, "E_PARAM", "xiv requires m >= 5");
    require(p.n >= 3, "E_PARAM", "xiv requires n >= 3");
    require(p.p >= 1 && p.p < p.q && 2 * p.q < p.m, "E_PARAM", "xiv requires 1 <= p < q < m/2");
    for (int v : {p.r, p.t, p.a, p.b})
        require(v >= 0 && v < p.n, "E_PARAM", "xiv requires r,t,a,b in Z_n");
    require(gcd_all({p.p, p.q, p.m}) == 1, "E_PARAM", "xiv requires gcd(p,q,m) = 1");
    require(gcd_all({p.a, p.b, p.t, p.n}) == 1, "E_PARAM", "xiv requires gcd(a,b,t,n) = 1");
    require(std::gcd(p.t, p.n) != 1, "E_PARAM", "xiv requires gcd(t,n) != 1");
    require(powmod(p.r, p.m, p.n) == 1 % p.n, "E_PARAM", "xiv requires r^m = 1 in Z_n");
    require(mod(static_cast<long long>(p.t) * (p.r - 1), p.n) == 0, "E_PARAM",
            "xiv requires t(r-1) = 0 in Z_n");
}

int xiv_vertex(const XivParams& p, int i, int j) {
    return mod(i, p.m) * p.n + mod(j, p.n);
}

XivGraph xiv(const XivParams& p) {
    validate_xiv_params(p);
    XivGraph out;
    for (int i = 0; i < p.m; ++i) {
        long long ri = powmod(p.r, i, p.n);
        long long pshift = static_cast<long long>(p.a) * ri;
        long long qshift = static_cast<long long>(p.b) * ri;
        if (i >= p.m - p.q) qshift += p.t;
        if (i >= p.m - p.p) pshift += p.t;
        for (int j = 0; j < p.n; ++j) {
            out.p_edges.emplace_back(xiv_vertex(p, i, j), xiv_vertex(p, i + p.p, j + static_cast<int>(pshift % p.n)));
            out.q_edges.emplace_back(xiv_vertex(p, i, j), xiv_vertex(p, i + p.q, j + static_cast<int>(qshift % p.n)));
        }
    }
    std::vector<std::pair<int, int>> edges = out.p_edges;
    edges.insert(edges.end(), out.q_edges.begin(), out.q_edges.end());
    out.graph = Graph::from_edges(p.m * p.n, edges);
    return out;
}

} // namespace hat
