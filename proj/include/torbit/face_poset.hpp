#pragma once

#include "torbit/matroid.hpp"
#include "torbit/weights.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torbit {

/**
 * The face poset of a representation: the geometric lattice of flats of its
 * weight matroid, graded by flat rank. Elements are sorted by (rank, indices)
 * and carry an explicit cover list.
 */
struct GradedPoset {
    std::vector<std::vector<int>> elements;
    std::vector<int> ranks;
    std::vector<std::pair<int, int>> covers;  // (lower, upper) element indices

    int size() const { return static_cast<int>(elements.size()); }
    bool operator==(const GradedPoset& other) const = default;
};

GradedPoset face_poset(const WeightSystem& ws);

/// Per-flat string encoding (A_0, A_1, ..., A_s): the intersections of the
/// flat with the complexity-zero block and with each general-position block.
struct FlatEncoding {
    std::vector<std::vector<int>> parts;
    bool operator==(const FlatEncoding& other) const = default;
};

struct ProductStructureResult {
    bool ok = false;
    std::string reason;
    /// Aligned with face_poset(ws).elements when ok.
    std::vector<FlatEncoding> encodings;
};

/**
 * Checks that the lattice of flats is the product of a Boolean lattice of
 * rank d and, for each general-position block of size n, the lattice of
 * subsets of [n] of cardinality != n-1, via the explicit string encoding
 * induced by the certificate's block assignment. Fails with a reason rather
 * than silently: a failure would falsify the classifier's certificate.
 */
ProductStructureResult product_structure_check(const WeightSystem& ws, const LeontiefType& lt);

/**
 * Decomposition type of the face submanifold attached to a flat: blocks
 * fully contained in the flat survive; blocks meeting it in at most n_i - 2
 * elements contribute those elements to the complexity-zero part (meeting in
 * exactly n_i - 1 elements is impossible for a flat). The trivial dimension
 * is inherited. The returned assignment indexes weights by their position in
 * the flat.
 */
LeontiefType face_leontief_type(const WeightSystem& ws, const LeontiefType& lt,
                                const std::vector<int>& flat);

/// 2^d * prod(2^{n_i} - n_i): the number of faces of a representation with
/// the given decomposition type.
unsigned long long poset_cardinality(const LeontiefType& lt);

nlohmann::json serialize(const GradedPoset& poset,
                         const std::optional<std::vector<FlatEncoding>>& encodings = std::nullopt);

}  // namespace torbit
