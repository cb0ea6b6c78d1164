#include "hat/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "hat/error.hpp"

namespace hat {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    require(n > 0, "E_DEGREE", "permutation degree must be positive");
    std::vector<char> seen(n, 0);
    for (int x : images_) {
        require(x >= 0 && x < n, "E_NOT_BIJECTION", "image out of range");
        require(!seen[x], "E_NOT_BIJECTION", "image table repeats the value " + std::to_string(x));
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    require(degree > 0, "E_DEGREE", "permutation degree must be positive");
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            int b = cyc[(i + 1) % cyc.size()];
            require(a >= 0 && a < degree && b >= 0 && b < degree, "E_RANGE", "cycle entry out of range");
            require(p.images_[a] == a, "E_NOT_BIJECTION", "cycles are not disjoint");
            p.images_[a] = b;
        }
    }
    // Disjointness of full cycles is enforced entry by entry above; a point
    // may still be listed twice inside one cycle.
    std::vector<char> seen(degree, 0);
    for (int x : p.images_) {
        require(!seen[x], "E_NOT_BIJECTION", "cycle notation repeats a point");
        seen[x] = 1;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int Permutation::smallest_moved_point() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return i;
    return -1;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    require(p.degree() == q.degree(), "E_DEGREE", "composing permutations of different degrees");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = q.apply(p.apply(i));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
    return compose(compose(h.inverse(), g), h);
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, const std::vector<int>& base_prefix)
    : degree_(degree), input_gens_(std::move(generators)) {
    require(degree_ > 0, "E_DEGREE", "group degree must be positive");
    require(!input_gens_.empty(), "E_NO_GENERATORS", "a group needs at least one generator");
    for (const auto& g : input_gens_)
        require(g.degree() == degree_, "E_DEGREE", "generator degree mismatch");
    for (int b : base_prefix)
        require(b >= 0 && b < degree_, "E_RANGE", "base point out of range");
    build(base_prefix);
}

void PermGroup::build(const std::vector<int>& base_prefix) {
    for (int b : base_prefix) {
        Level lv;
        lv.point = b;
        levels_.push_back(std::move(lv));
        base_.push_back(b);
    }
    for (const auto& g : input_gens_)
        if (!g.is_identity()) insert_generator(g, 0);

    // Deterministic Schreier-Sims: walk the chain bottom-up, sift every
    // Schreier generator, and restart at the level where a new strong
    // generator lands.
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        rebuild_level(static_cast<std::size_t>(i));
        Level& lv = levels_[static_cast<std::size_t>(i)];
        bool restarted = false;
        for (std::size_t oi = 0; oi < lv.orbit.size() && !restarted; ++oi) {
            const Permutation& u = lv.transversal[oi];
            for (std::size_t si = 0; si < lv.gens.size() && !restarted; ++si) {
                const Permutation& s = lv.gens[si];
                int y = s.apply(lv.orbit[oi]);
                Permutation schreier = compose(compose(u, s), lv.transversal[lv.slot[y]].inverse());
                auto [residue, level] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
                if (!residue.is_identity()) {
                    std::size_t landed = insert_generator(residue, static_cast<std::size_t>(i) + 1);
                    i = static_cast<int>(landed);
                    restarted = true;
                }
                (void)level;
            }
        }
        if (!restarted) --i;
    }

    order_ = 1;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        rebuild_level(l);
        order_ *= static_cast<std::uint64_t>(levels_[l].orbit.size());
    }
}

void PermGroup::rebuild_level(std::size_t i) {
    Level& lv = levels_[i];
    lv.orbit.clear();
    lv.slot.assign(degree_, -1);
    lv.transversal.clear();
    lv.orbit.push_back(lv.point);
    lv.slot[lv.point] = 0;
    lv.transversal.push_back(Permutation::identity(degree_));
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        int x = lv.orbit[head];
        for (const auto& s : lv.gens) {
            int y = s.apply(x);
            if (lv.slot[y] < 0) {
                lv.slot[y] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(y);
                lv.transversal.push_back(compose(lv.transversal[head], s));
            }
        }
    }
}

std::size_t PermGroup::insert_generator(const Permutation& g, std::size_t min_level) {
    std::size_t l = min_level;
    while (true) {
        if (l == levels_.size()) {
            Level lv;
            lv.point = g.smallest_moved_point();
            levels_.push_back(std::move(lv));
            base_.push_back(levels_.back().point);
        }
        levels_[l].gens.push_back(g);
        if (g.apply(levels_[l].point) != levels_[l].point) return l;
        ++l;
    }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        int x = g.apply(lv.point);
        if (lv.slot.empty() || lv.slot[x] < 0) return {std::move(g), l};
        g = compose(g, lv.transversal[lv.slot[x]].inverse());
    }
    return {std::move(g), levels_.size()};
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::set<Permutation> seen;
    std::vector<Permutation> out;
    for (const auto& lv : levels_)
        for (const auto& g : lv.gens)
            if (seen.insert(g).second) out.push_back(g);
    return out;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = strip(g, 0);
    return level == levels_.size() && residue.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
    require(point >= 0 && point < degree_, "E_RANGE", "orbit point out of range");
    std::vector<char> seen(degree_, 0);
    std::vector<int> out;
    std::deque<int> queue{point};
    seen[point] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        out.push_back(x);
        for (const auto& s : input_gens_) {
            int y = s.apply(x);
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool PermGroup::is_transitive() const {
    return static_cast<int>(orbit(0).size()) == degree_;
}

PermGroup PermGroup::stabilizer(int point) const {
    require(point >= 0 && point < degree_, "E_RANGE", "stabilizer point out of range");
    return pointwise_stabilizer({point});
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
    PermGroup rebased(degree_, input_gens_, points);
    std::vector<Permutation> gens;
    std::set<Permutation> seen;
    for (std::size_t l = points.size(); l < rebased.levels_.size(); ++l)
        for (const auto& g : rebased.levels_[l].gens)
            if (seen.insert(g).second) gens.push_back(g);
    if (gens.empty()) gens.push_back(Permutation::identity(degree_));
    return PermGroup(degree_, std::move(gens));
}

void PermGroup::validate_constraint(const PointTupleConstraint& c) const {
    require(c.sources.size() == c.targets.size(), "E_BAD_CONSTRAINT",
            "constraint source and target lists differ in length");
    require(!c.sources.empty(), "E_BAD_CONSTRAINT", "constraint is empty");
    for (std::size_t i = 0; i < c.sources.size(); ++i) {
        require(c.sources[i] >= 0 && c.sources[i] < degree_, "E_BAD_CONSTRAINT", "source point out of range");
        require(c.targets[i] >= 0 && c.targets[i] < degree_, "E_BAD_CONSTRAINT", "target point out of range");
        for (std::size_t j = i + 1; j < c.sources.size(); ++j) {
            require(c.sources[i] != c.sources[j], "E_BAD_CONSTRAINT", "source points repeat");
            require(c.targets[i] != c.targets[j], "E_BAD_CONSTRAINT", "target points repeat");
        }
    }
}

std::optional<Permutation> PermGroup::find_element(const PointTupleConstraint& c) const {
    validate_constraint(c);
    PermGroup rebased(degree_, input_gens_, c.sources);
    // Walk the chain: at level i the accumulated tail already sends the
    // chosen transversal images onto targets[<i]; the next transversal
    // element must send sources[i] to targets[i] pulled back through it.
    Permutation tail = Permutation::identity(degree_);
    Permutation tail_inv = tail;
    for (std::size_t i = 0; i < c.sources.size(); ++i) {
        const Level& lv = rebased.levels_[i];
        int want = tail_inv.apply(c.targets[i]);
        if (lv.slot[want] < 0) return std::nullopt;
        const Permutation& u = lv.transversal[lv.slot[want]];
        tail = compose(u, tail);
        tail_inv = compose(tail_inv, u.inverse());
    }
    return tail;
}

std::vector<Permutation> PermGroup::elements_mapping(const PointTupleConstraint& c,
                                                     std::uint64_t stabilizer_bound) const {
    auto g0 = find_element(c);
    if (!g0) return {};
    PermGroup stab = pointwise_stabilizer(c.sources);
    require(stab.order() <= stabilizer_bound, "E_ENUM_BOUND",
            "pointwise stabilizer larger than the enumeration bound");
    std::vector<Permutation> out;
    for (const auto& h : stab.enumerate_elements(stabilizer_bound)) out.push_back(compose(h, *g0));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> PermGroup::enumerate_elements(std::uint64_t bound) const {
    require(order_ <= bound, "E_ENUM_BOUND",
            "group order " + std::to_string(order_) + " exceeds the enumeration bound " + std::to_string(bound));
    std::vector<Permutation> elems{Permutation::identity(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
        std::vector<Permutation> next;
        next.reserve(elems.size() * levels_[l].transversal.size());
        for (const auto& u : levels_[l].transversal)
            for (const auto& h : elems) next.push_back(compose(h, u));
        elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

PermGroup derived_subgroup(const PermGroup& g) {
    const int n = g.degree();
    std::vector<Permutation> gens;
    std::set<Permutation> seen;
    auto add = [&](const Permutation& p) {
        if (!p.is_identity() && seen.insert(p).second) {
            gens.push_back(p);
            return true;
        }
        return false;
    };
    for (const auto& a : g.generators())
        for (const auto& b : g.generators())
            add(compose(compose(a.inverse(), b.inverse()), compose(a, b)));
    if (gens.empty()) return PermGroup(n, {Permutation::identity(n)});

    // Normal closure: conjugate by the generators of g until stable.
    PermGroup closure(n, gens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> current = gens;
        for (const auto& d : current)
            for (const auto& s : g.generators()) {
                Permutation c = conjugate(d, s);
                if (!closure.contains(c) && add(c)) grew = true;
            }
        if (grew) closure = PermGroup(n, gens);
    }
    return closure;
}

bool is_solvable(const PermGroup& g) {
    PermGroup current = g;
    while (current.order() > 1) {
        PermGroup next = derived_subgroup(current);
        if (next.order() == current.order()) return false;
        current = std::move(next);
    }
    return true;
}

} // namespace hat
