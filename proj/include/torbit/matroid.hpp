#pragma once

#include "torbit/numeric.hpp"
#include "torbit/weights.hpp"

#include <vector>

namespace torbit {

/// A flat: a subset of the ground set closed under span intersection,
/// together with its rank.
struct Flat {
    std::vector<int> indices;
    int flat_rank = 0;
    bool operator==(const Flat& other) const = default;
};

/**
 * The linear matroid of a weight system over Q.
 *
 * Weights enter as rational lines: each vector is scaled to its primitive
 * sign-normalized representative, since magnitudes never affect linear
 * (in)dependence. Zero vectors (loops) are rejected; the weight-system layer
 * folds those into the trivial part before the matroid is built.
 *
 * Queries are read-only after construction. All enumerations return
 * deterministic lexicographically sorted output.
 */
class LinearMatroid {
public:
    explicit LinearMatroid(const WeightSystem& ws);
    static LinearMatroid from_vectors(std::vector<std::vector<Int>> vectors);

    int size() const { return static_cast<int>(vectors_.size()); }
    int rank() const { return rank_; }
    const std::vector<std::vector<Int>>& vectors() const { return vectors_; }

    bool is_independent(const std::vector<int>& subset) const;
    int matroid_rank(const std::vector<int>& subset) const;

    /// The smallest flat containing the subset: all indices whose vectors
    /// lie in the span of the subset.
    std::vector<int> closure(const std::vector<int>& subset) const;

    /// All minimal dependent subsets, each sorted, the list sorted
    /// lexicographically.
    std::vector<std::vector<int>> circuits() const;

    /// Every flat, graded by rank, including the empty flat and the full
    /// ground set.
    std::vector<Flat> flats() const;

    /// Finest partition of the ground set over which the matroid is a direct
    /// sum: transitive closure of "share a circuit", with coloops (elements
    /// in no circuit) as singleton parts. Parts sorted by smallest element.
    std::vector<std::vector<int>> connected_components() const;

    /// Maximal independent subsets; these are the facets of the independence
    /// complex, all of size rank().
    std::vector<std::vector<int>> bases() const;

    /// Independent subsets of the given size, sorted lexicographically.
    std::vector<std::vector<int>> independent_sets_of_size(int size) const;

private:
    LinearMatroid() = default;
    void init();
    int rank_of_mask(unsigned mask) const;

    std::vector<std::vector<Int>> vectors_;  // primitive, sign-normalized
    int dim_ = 0;                            // ambient dimension
    int rank_ = 0;
};

}  // namespace torbit
