#pragma once

#include "torbit/exact_linalg.hpp"
#include "torbit/numeric.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace torbit {

/**
 * A torus representation, given by the rank k of the weight lattice, the
 * multiset of nonzero integer weight vectors (the 2-dimensional summands),
 * and the number of trivial real dimensions.
 *
 * Construction canonicalizes: zero weight vectors are removed and each adds
 * 2 to trivial_dim (a zero weight is a trivial 2-dimensional summand), and
 * every weight is sign-normalized so its first nonzero entry is positive
 * (weights are only defined up to sign). Weight magnitudes are preserved:
 * divisibility data matters for the complexity-zero canonical form, so
 * weights are NOT scaled to primitive vectors here. The matroid layer takes
 * a lines-only view separately.
 */
struct WeightSystem {
    int lattice_rank = 0;
    std::vector<std::vector<Int>> weights;
    int trivial_dim = 0;

    WeightSystem() = default;
    WeightSystem(int lattice_rank, std::vector<std::vector<Int>> weights, int trivial_dim);

    int count() const { return static_cast<int>(weights.size()); }

    /// k x r matrix whose columns are the weights.
    IntMatrix weight_matrix() const;

    /// Per weight: do its entries have gcd 1? Recorded, never forced.
    std::vector<bool> primitive_flags() const;

    bool operator==(const WeightSystem& other) const = default;
};

/// Parses {"lattice_rank": k, "weights": [[...],...], "trivial_dim": l}.
/// Entries may be JSON integers or exact rational strings like "3/2";
/// rational entries are cleared to integers by the lcm of the denominators
/// of their vector.
WeightSystem parse_weights(const nlohmann::json& doc);
WeightSystem parse_weights_text(const std::string& text);

/// Canonicalized echo of the input schema plus {"complexity", "effective"}.
nlohmann::json serialize(const WeightSystem& ws);

/// Number of weights minus the rank of the weight matrix; always >= 0.
int complexity(const WeightSystem& ws);

/// Do the weights span Q^k?
bool is_effective(const WeightSystem& ws);

struct EffectiveReduction {
    WeightSystem system;
    int noneffective_dim = 0;  // k - rank(weights)
    bool was_effective = true;
};

/**
 * Re-expresses the weights in a lattice basis of the saturation of their
 * integer span, dropping the noneffective directions. Identity transform on
 * systems that already span. Complexity and trivial_dim are preserved.
 */
EffectiveReduction effective_reduction(const WeightSystem& ws);

/**
 * For an effective complexity-zero system: the positive Smith diagonal
 * (d_1, ..., d_k) of the weight matrix, with d_1 | d_2 | ... | d_k. This is
 * a complete invariant of the system up to weak equivalence (unimodular
 * lattice change and weight permutation). Throws on positive complexity or
 * noneffective input.
 */
std::vector<Int> snf_canonical_form(const WeightSystem& ws);

/**
 * Decomposition certificate for a representation whose orbit space is a
 * manifold: a complexity-zero block of size d, complexity-one blocks in
 * general position of sizes n_1..n_s, and l trivial real dimensions.
 *
 * assignment[i] is the block of weight i: 0 for the complexity-zero block,
 * 1..s for the general-position blocks (labeled in order of their smallest
 * weight index). blocks[b-1] is the size of block b.
 */
struct LeontiefType {
    int d = 0;
    std::vector<int> blocks;
    int l = 0;
    std::vector<int> assignment;

    int block_count() const { return static_cast<int>(blocks.size()); }

    /// Folds degenerate size-1 blocks into the trivial part (2 real
    /// dimensions each); serialized blocks always satisfy n_i >= 2. Members
    /// of folded blocks get assignment -1 (trivial summand).
    LeontiefType canonicalized() const;

    bool operator==(const LeontiefType& other) const = default;
};

nlohmann::json serialize(const LeontiefType& lt);

}  // namespace torbit
