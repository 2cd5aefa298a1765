#include "torbit/classifier.hpp"

#include "torbit/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace torbit {

namespace {

std::string superscript(int n) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    if (n < 0) {
        out += "⁻";
        n = -n;
    }
    const std::string plain = std::to_string(n);
    for (char c : plain) out += digits[c - '0'];
    return out;
}

OrbitVerdict trivial_verdict(int l) {
    OrbitVerdict v;
    v.kind = OrbitKind::ClosedManifold;
    v.model_dim = l;
    v.boundary = false;
    v.leontief = LeontiefType{0, {}, l, {}};
    return v;
}

OrbitVerdict verdict_from_type(LeontiefType lt) {
    OrbitVerdict v;
    int block_dim = 0;
    for (int n : lt.blocks) block_dim += n + 1;
    if (lt.d == 0) {
        v.kind = OrbitKind::ClosedManifold;
        v.model_dim = lt.l + block_dim;
        v.boundary = false;
    } else {
        v.kind = OrbitKind::ManifoldWithBoundary;
        v.model_dim = lt.l + lt.d + block_dim;
        v.boundary = true;
    }
    v.leontief = std::move(lt);
    return v;
}

// Lexicographically first independent (rank-1)-subset contained in a number
// of facets outside {1,2}. Exists whenever the independence complex fails
// the pseudomanifold census.
std::optional<ObstructionWitness> find_bad_ridge(const LinearMatroid& m) {
    for (const auto& ridge : m.independent_sets_of_size(m.rank() - 1)) {
        int count = 0;
        for (int i = 0; i < m.size(); ++i) {
            if (std::binary_search(ridge.begin(), ridge.end(), i)) continue;
            std::vector<int> grown = ridge;
            grown.push_back(i);
            if (m.is_independent(grown)) ++count;
        }
        if (count != 1 && count != 2)
            return ObstructionWitness{ridge, count, m.closure(ridge)};
    }
    return std::nullopt;
}

OrbitVerdict not_manifold_verdict(const LinearMatroid& m, int l,
                                  std::optional<ObstructionWitness> witness) {
    if (!witness) {
        witness = find_bad_ridge(m);
        if (!witness)
            throw std::logic_error(
                "obstructed weight system has no bad ridge; classifier routes contradict");
    }
    OrbitVerdict v;
    v.kind = OrbitKind::NotManifold;
    v.model_dim = 2 * m.size() + l - m.rank();
    v.boundary = false;
    v.witness = std::move(witness);
    return v;
}

}  // namespace

std::string to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::ClosedManifold: return "ClosedManifold";
        case OrbitKind::ManifoldWithBoundary: return "ManifoldWithBoundary";
        case OrbitKind::NotManifold: return "NotManifold";
    }
    return "?";
}

nlohmann::json serialize(const OrbitVerdict& verdict) {
    nlohmann::json leontief;
    if (verdict.leontief) leontief = serialize(*verdict.leontief);
    nlohmann::json witness;
    if (verdict.witness)
        witness = nlohmann::json{{"ridge", verdict.witness->ridge},
                                 {"facet_count", verdict.witness->facet_count},
                                 {"flat", verdict.witness->flat}};
    return nlohmann::json{{"kind", to_string(verdict.kind)},
                          {"model_dim", verdict.model_dim},
                          {"boundary", verdict.boundary},
                          {"leontief", std::move(leontief)},
                          {"witness", std::move(witness)}};
}

std::string describe_model(const OrbitVerdict& verdict) {
    switch (verdict.kind) {
        case OrbitKind::ClosedManifold: return "ℝ" + superscript(verdict.model_dim);
        case OrbitKind::ManifoldWithBoundary:
            if (verdict.model_dim == 1) return "half-space ℝ₊";
            return "half-space ℝ₊×ℝ" + superscript(verdict.model_dim - 1);
        case OrbitKind::NotManifold:
            return "not a topological manifold (not even a homology manifold)";
    }
    return "?";
}

OrbitVerdict classify_structural(const WeightSystem& ws) {
    const WeightSystem sys = effective_reduction(ws).system;
    const int l = sys.trivial_dim;
    if (sys.count() == 0) return trivial_verdict(l);

    const LinearMatroid m(sys);
    LeontiefType lt;
    lt.l = l;
    lt.assignment.assign(m.size(), 0);
    for (const auto& part : m.connected_components()) {
        if (part.size() == 1) {
            ++lt.d;  // coloop
            continue;
        }
        // The component must be one circuit spanning it: n vectors of rank
        // n-1 with every (n-1)-subset independent.
        const int n = static_cast<int>(part.size());
        if (m.matroid_rank(part) != n - 1) return not_manifold_verdict(m, l, std::nullopt);
        bool general_position = true;
        for (int skip : part) {
            std::vector<int> sub;
            for (int i : part)
                if (i != skip) sub.push_back(i);
            if (!m.is_independent(sub)) {
                general_position = false;
                break;
            }
        }
        if (!general_position) return not_manifold_verdict(m, l, std::nullopt);
        lt.blocks.push_back(n);
        for (int i : part) lt.assignment[i] = static_cast<int>(lt.blocks.size());
    }
    return verdict_from_type(std::move(lt));
}

OrbitVerdict classify_pseudomanifold(const WeightSystem& ws) {
    const WeightSystem sys = effective_reduction(ws).system;
    const int l = sys.trivial_dim;
    if (sys.count() == 0) return trivial_verdict(l);

    const LinearMatroid m(sys);
    const int r = m.size();
    std::vector<int> vertices(r);
    std::iota(vertices.begin(), vertices.end(), 0);
    const SimplicialComplex k(vertices, m.bases());

    const PseudomanifoldReport census = pseudomanifold_status(k);
    if (census.status == PseudomanifoldStatus::Neither) {
        ObstructionWitness w{census.witness->ridge, census.witness->containing_facet_count,
                             m.closure(census.witness->ridge)};
        return not_manifold_verdict(m, l, std::move(w));
    }

    // Factor K as (simplex on the cone vertices) * (join of simplex
    // boundaries). The boundary factors are the minimal non-faces of K,
    // read off the facet list alone.
    std::vector<int> free_vertices;
    for (int v = 0; v < r; ++v) {
        bool in_all = true;
        for (const auto& f : k.facets())
            if (!std::binary_search(f.begin(), f.end(), v)) {
                in_all = false;
                break;
            }
        if (in_all) free_vertices.push_back(v);
    }

    auto is_face = [&](const std::vector<int>& s) {
        for (const auto& f : k.facets())
            if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
        return false;
    };
    std::vector<std::vector<int>> nonfaces;
    const int max_size = std::min(r, m.rank() + 1);
    std::vector<int> pick;
    auto scan = [&](auto&& self, int start, int want) -> void {
        if (want == 0) {
            for (const auto& known : nonfaces)
                if (std::includes(pick.begin(), pick.end(), known.begin(), known.end())) return;
            if (!is_face(pick)) nonfaces.push_back(pick);
            return;
        }
        for (int v = start; v <= r - want; ++v) {
            pick.push_back(v);
            self(self, v + 1, want - 1);
            pick.pop_back();
        }
    };
    for (int s = 2; s <= max_size; ++s) scan(scan, 0, s);

    // The factorization is only accepted after an exact facet-set match.
    std::vector<bool> used(r, false);
    for (int v : free_vertices) used[v] = true;
    LeontiefType lt;
    lt.l = l;
    lt.d = static_cast<int>(free_vertices.size());
    lt.assignment.assign(r, 0);
    for (const auto& block : nonfaces) {
        for (int v : block) {
            if (used[v])
                throw std::logic_error(
                    "pseudomanifold independence complex failed join factorization");
            used[v] = true;
        }
        lt.blocks.push_back(static_cast<int>(block.size()));
        for (int v : block) lt.assignment[v] = static_cast<int>(lt.blocks.size());
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw std::logic_error("pseudomanifold independence complex failed join factorization");

    std::vector<std::vector<int>> expected{free_vertices};
    for (const auto& block : nonfaces) {
        std::vector<std::vector<int>> grown;
        for (const auto& partial : expected)
            for (int skip : block) {
                std::vector<int> f = partial;
                for (int v : block)
                    if (v != skip) f.push_back(v);
                std::sort(f.begin(), f.end());
                grown.push_back(std::move(f));
            }
        expected = std::move(grown);
    }
    std::sort(expected.begin(), expected.end());
    if (expected != k.facets())
        throw std::logic_error("pseudomanifold independence complex failed join factorization");

    if ((census.status == PseudomanifoldStatus::Closed) != (lt.d == 0))
        throw std::logic_error("ridge census disagrees with join factorization");
    return verdict_from_type(std::move(lt));
}

CircleOrbitSpace circle_classify(const std::vector<Int>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("circle representation needs at least one exponent");
    for (const Int& e : exponents)
        if (e == 0) throw std::invalid_argument("zero exponent belongs to the trivial part");
    if (exponents.size() == 1) return CircleOrbitSpace::HalfLine;
    if (exponents.size() == 2) return CircleOrbitSpace::R3;
    return CircleOrbitSpace::NotHomologyManifold;
}

MonopoleCharge fixed_point_charge(const Int& k, const Int& l) {
    if (k == 0 || l == 0) throw std::invalid_argument("charge needs nonzero oriented weights");
    if (abs(k) != 1 || abs(l) != 1) return MonopoleCharge::DisconnectedStabilizers;
    return k == l ? MonopoleCharge::Plus : MonopoleCharge::Minus;
}

GeneralPositionRelation general_position_relation(const WeightSystem& ws) {
    const WeightSystem sys = effective_reduction(ws).system;
    if (sys.count() - sys.lattice_rank != 1)
        throw std::invalid_argument(
            "not a complexity-one general-position block (complexity is not one)");
    const std::vector<RatVector> kernel = kernel_basis(sys.weight_matrix());
    if (kernel.size() != 1)
        throw std::logic_error("complexity-one system with kernel dimension != 1");

    GeneralPositionRelation rel;
    rel.coefficients.reserve(sys.count());
    rel.flipped.reserve(sys.count());
    for (const Rat& c : kernel[0].entries) {
        if (c == 0)
            throw std::invalid_argument(
                "not a complexity-one general-position block (a relation coefficient vanishes)");
        rel.flipped.push_back(c < 0);
        rel.coefficients.push_back(abs(numerator(c)));
    }
    return rel;
}

}  // namespace torbit
