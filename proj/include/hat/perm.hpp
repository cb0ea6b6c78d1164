#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hat {

// Permutation of {0..n-1}; entry i of the image table is the image of i.
//
// Products read left to right everywhere in this library: compose(p, q)
// applies p first and q second, matching the exponent convention
// v^(pq) = (v^p)^q.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    // Disjoint-cycle input; points not mentioned are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    int smallest_moved_point() const; // -1 for the identity
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

// p then q.
Permutation compose(const Permutation& p, const Permutation& q);

// Conjugate of g by h: h^-1 g h.
Permutation conjugate(const Permutation& g, const Permutation& h);

// Ordered pointwise mapping requirement: look for g with
// sources[i]^g = targets[i] for every i.
struct PointTupleConstraint {
    std::vector<int> sources;
    std::vector<int> targets;
};

// Permutation group given by generators, backed by a stabilizer chain built
// with the deterministic Schreier-Sims procedure. Base points are chosen
// greedily as the smallest point moved by a remaining generator, so identical
// inputs give identical chains and identical reports. Immutable after
// construction.
class PermGroup {
public:
    static constexpr std::uint64_t kDefaultEnumBound = 1000000;

    PermGroup(int degree, std::vector<Permutation> generators);
    // base_prefix forces the first base points (kept even when redundant);
    // used for point stabilizers and element searches.
    PermGroup(int degree, std::vector<Permutation> generators, const std::vector<int>& base_prefix);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return input_gens_; }
    std::vector<Permutation> strong_generators() const;
    const std::vector<int>& base() const { return base_; }

    std::uint64_t order() const { return order_; }
    bool contains(const Permutation& g) const;

    // Orbit of a point, ascending.
    std::vector<int> orbit(int point) const;
    bool is_transitive() const;

    PermGroup stabilizer(int point) const;
    PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

    // First element (in the fixed transversal-walk order) satisfying the
    // constraint, or nullopt when no element of the group does.
    std::optional<Permutation> find_element(const PointTupleConstraint& c) const;

    // The full set of elements satisfying the constraint: a coset of the
    // pointwise stabilizer of the sources. The stabilizer must have order
    // at most stabilizer_bound.
    std::vector<Permutation> elements_mapping(const PointTupleConstraint& c,
                                              std::uint64_t stabilizer_bound = kDefaultEnumBound) const;

    // All elements exactly once, sorted lexicographically by image sequence.
    // Refuses groups larger than bound.
    std::vector<Permutation> enumerate_elements(std::uint64_t bound = kDefaultEnumBound) const;

private:
    struct Level {
        int point = -1;
        std::vector<Permutation> gens; // generators of this level's subgroup
        std::vector<int> orbit;        // BFS discovery order
        std::vector<int> slot;         // point -> index into transversal, -1 if outside orbit
        std::vector<Permutation> transversal; // transversal[slot[x]] maps `point` to x
    };

    void build(const std::vector<int>& base_prefix);
    void rebuild_level(std::size_t i);
    std::size_t insert_generator(const Permutation& g, std::size_t min_level);
    // Sift g through levels starting at `from`; returns the residue and the
    // level at which sifting stopped (levels_.size() when it ran through).
    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
    void validate_constraint(const PointTupleConstraint& c) const;

    int degree_ = 0;
    std::vector<Permutation> input_gens_;
    std::vector<Level> levels_;
    std::vector<int> base_;
    std::uint64_t order_ = 1;
};

// Derived subgroup [G,G], as a PermGroup on the same points.
PermGroup derived_subgroup(const PermGroup& g);

// Solvability via the derived series.
bool is_solvable(const PermGroup& g);

} // namespace hat
