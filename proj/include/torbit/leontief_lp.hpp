#pragma once

#include "torbit/complex.hpp"
#include "torbit/exact_linalg.hpp"
#include "torbit/weights.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace torbit {

/// The linear system A x = b, x >= 0 over the integers (g equations,
/// f unknowns). Whether it is a Leontief substitution system is decided by
/// check_leontief, not at construction.
struct LeontiefSystem {
    IntMatrix a;
    std::vector<Int> b;

    LeontiefSystem(IntMatrix a_, std::vector<Int> b_);
    int equations() const { return a.rows(); }
    int unknowns() const { return a.cols(); }
};

LeontiefSystem parse_system(const nlohmann::json& doc);
nlohmann::json serialize(const LeontiefSystem& sys);

enum class LeontiefClass { Totally, NonTotally, NotLeontief };
std::string to_string(LeontiefClass cls);

struct LeontiefCheck {
    LeontiefClass cls = LeontiefClass::NotLeontief;
    std::string reason;  // set when NotLeontief
};

/**
 * A Leontief substitution system requires b >= 0, at most one positive entry
 * per column of A, and a nonempty solution polyhedron; it is totally
 * Leontief when the polyhedron is bounded (trivial recession cone).
 */
LeontiefCheck check_leontief(const LeontiefSystem& sys);

/// The solution polyhedron P = {A x = b, x >= 0}. P lies in the nonnegative
/// orthant, hence is pointed, hence equals the convex hull of its vertices
/// plus its recession cone.
struct PolyhedronReport {
    bool feasible = false;
    std::vector<RatVector> vertices;  // sorted lexicographically, exact
    bool bounded = false;
    int dim = -1;   // -1 for the empty polyhedron
    bool simple = false;
};

/// Exhaustive basic-solution enumeration over column subsets of size
/// rank(A): exact, deterministic, no pivoting rules. "simple" means every
/// vertex has exactly rank(A) strictly positive coordinates.
PolyhedronReport enumerate_vertices(const LeontiefSystem& sys);

/// Extreme rays of the recession cone {A x = 0, x >= 0}, normalized to the
/// slice sum(x) = 1. Empty iff the polyhedron is bounded.
std::vector<RatVector> recession_rays(const LeontiefSystem& sys);

/**
 * Nerve of the facets of P: vertex i enters when some vertex of P vanishes
 * at coordinate i, and a set of coordinates spans a simplex when some vertex
 * of P vanishes on all of them. Coordinates that vanish nowhere are omitted.
 * Requires a nondegenerate Leontief system; a degenerate one is rejected
 * with the violating vertex in the message.
 */
SimplicialComplex nerve_complex(const LeontiefSystem& sys);

/// The block system with one all-ones row per block (sizes k_list) plus d
/// slack columns, right-hand side all ones. Requires at least one block and
/// every k_i >= 1.
LeontiefSystem block_system(const std::vector<int>& k_list, int d);

/**
 * Weights of the standard torus representation restricted to the subtorus
 * exp(ker A): the images of the coordinate characters in the quotient of the
 * character lattice by the saturated row space of A. The lattice rank is
 * f - rank(A); characters that die become trivial summands.
 */
WeightSystem restrict_standard_weights(const LeontiefSystem& sys);

nlohmann::json serialize(const PolyhedronReport& report);

}  // namespace torbit
