#pragma once

#include "torbit/complex.hpp"
#include "torbit/matroid.hpp"
#include "torbit/weights.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torbit {

enum class OrbitKind { ClosedManifold, ManifoldWithBoundary, NotManifold };

std::string to_string(OrbitKind kind);

/// Local obstruction for a NotManifold verdict: a ridge of the independence
/// complex contained in a number of facets outside {1, 2}, together with the
/// flat closure of the ridge (the weights lying in its span).
struct ObstructionWitness {
    std::vector<int> ridge;
    int facet_count = 0;
    std::vector<int> flat;
    bool operator==(const ObstructionWitness& other) const = default;
};

/**
 * Verdict on the orbit space V/T:
 *   - ClosedManifold: homeomorphic to R^m, m = model_dim; the certificate is
 *     a totally Leontief type (d = 0).
 *   - ManifoldWithBoundary: a half-space of dimension model_dim; certificate
 *     has d >= 1.
 *   - NotManifold: not a topological manifold, with or without boundary (not
 *     even a homology manifold); witness present, no certificate.
 * model_dim is always the dimension of V/T.
 */
struct OrbitVerdict {
    OrbitKind kind = OrbitKind::NotManifold;
    int model_dim = 0;
    bool boundary = false;
    std::optional<LeontiefType> leontief;
    std::optional<ObstructionWitness> witness;
};

nlohmann::json serialize(const OrbitVerdict& verdict);

/// Homeomorphism-type text for the human-readable rendering, e.g. a closed
/// verdict of dimension 4 prints as "ℝ⁴".
std::string describe_model(const OrbitVerdict& verdict);

/**
 * Structural route: decompose the matroid of the weight system into
 * connected components. A component is either a coloop (contributes to the
 * complexity-zero block), a spanning circuit (a complexity-one block in
 * general position), or an obstruction. Noneffective input is auto-reduced.
 */
OrbitVerdict classify_structural(const WeightSystem& ws);

/**
 * Pseudomanifold route: build the independence complex K of the weights,
 * decide by the ridge-count census, and recover the certificate by factoring
 * K as a join of simplex boundaries and a simplex (computed from the minimal
 * non-faces of the facet list). Noneffective input is auto-reduced.
 */
OrbitVerdict classify_pseudomanifold(const WeightSystem& ws);

/// Orbit space of a circle representation with the given nonzero exponents:
/// one exponent gives a half-line, two give R^3, three or more give a space
/// that is not a homology manifold. Zero exponents are rejected.
enum class CircleOrbitSpace { HalfLine, R3, NotHomologyManifold };
CircleOrbitSpace circle_classify(const std::vector<Int>& exponents);

/**
 * Charge of an isolated fixed point of a circle action on an oriented
 * 4-manifold, from its oriented tangent weight pair (k, l), defined up to
 * simultaneous sign change: +1 for the Hopf cone {(1,1), (-1,-1)}, -1 for
 * the inverse Hopf cone {(1,-1), (-1,1)}; any other nonzero pair has
 * disconnected stabilizers. Zero entries are rejected.
 */
enum class MonopoleCharge { Plus, Minus, DisconnectedStabilizers };
MonopoleCharge fixed_point_charge(const Int& k, const Int& l);

/// The unique (up to sign) primitive linear relation of a complexity-one
/// block in general position, normalized to positive coefficients by
/// flipping weight signs; flipped[i] records the flips.
struct GeneralPositionRelation {
    std::vector<Int> coefficients;
    std::vector<bool> flipped;
};
GeneralPositionRelation general_position_relation(const WeightSystem& ws);

}  // namespace torbit
