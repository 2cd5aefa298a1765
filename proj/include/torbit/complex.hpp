#pragma once

#include "torbit/numeric.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace torbit {

/**
 * A simplicial complex stored by its facet list on labeled vertices.
 *
 * Vertices that appear in no facet are ghost vertices: they belong to the
 * complex but carry no simplex (the label exists, the simplex {v} does not).
 * The complex containing only the empty simplex is represented by the single
 * facet {}; that is the boundary of a 0-dimensional simplex, so every vertex
 * of such a complex is ghost.
 *
 * Construction normalizes: facets are sorted, deduplicated, and non-maximal
 * faces are dropped.
 */
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<int> vertices, std::vector<std::vector<int>> facets);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// Labels contained in no facet.
    std::vector<int> ghost_vertices() const;

    bool is_pure() const;

    /// Dimension of the largest facet; -1 for the empty-simplex complex.
    int dimension() const;

    /// All faces of the given dimension, sorted lexicographically.
    /// Dimension -1 yields the empty simplex.
    std::vector<std::vector<int>> faces_of_dimension(int d) const;

    bool operator==(const SimplicialComplex& other) const = default;

private:
    std::vector<int> vertices_;
    std::vector<std::vector<int>> facets_;
};

enum class PseudomanifoldStatus { Closed, WithBoundary, Neither };

/// A ridge (codimension-one face of a pure complex) with the number of
/// facets containing it.
struct RidgeReport {
    std::vector<int> ridge;
    int containing_facet_count = 0;
    bool operator==(const RidgeReport& other) const = default;
};

struct PseudomanifoldReport {
    PseudomanifoldStatus status = PseudomanifoldStatus::Neither;
    /// For Neither: the lexicographically first ridge with facet count
    /// outside {1, 2}.
    std::optional<RidgeReport> witness;
};

/**
 * Closed iff every ridge lies in exactly two facets; WithBoundary iff every
 * ridge lies in one or two with at least one boundary ridge; Neither
 * otherwise. Throws on non-pure input.
 */
PseudomanifoldReport pseudomanifold_status(const SimplicialComplex& k);

/// Join: facets are all unions of a facet of each factor; ghost sets unite.
/// Throws on vertex label collision.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// All proper subsets of the label set. On one label this is the ghost
/// complex on that label.
SimplicialComplex boundary_of_simplex(const std::vector<int>& labels);

/// The full simplex on the label set.
SimplicialComplex full_simplex(const std::vector<int>& labels);

/// One reduced homology group: free rank plus torsion orders (> 1, in the
/// divisibility order produced by the Smith normal form).
struct HomologyGroup {
    int degree = 0;
    long long free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const HomologyGroup& other) const = default;
};

/// Reduced simplicial homology with integer coefficients in every degree
/// from -1 through dim K, computed exactly from boundary matrices via the
/// Smith normal form.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k);

nlohmann::json serialize(const std::vector<HomologyGroup>& groups);

}  // namespace torbit
