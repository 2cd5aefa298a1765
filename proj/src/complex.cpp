#include "torbit/complex.hpp"

#include "torbit/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace torbit {

SimplicialComplex::SimplicialComplex(std::vector<int> vertices,
                                     std::vector<std::vector<int>> facets)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    std::set<std::vector<int>> unique_facets;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                throw std::invalid_argument("facet uses a label outside the vertex set");
        unique_facets.insert(std::move(f));
    }
    if (unique_facets.empty()) unique_facets.insert({});  // the empty simplex

    // Drop non-maximal faces.
    for (const auto& f : unique_facets) {
        bool maximal = true;
        for (const auto& g : unique_facets) {
            if (&f == &g || g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets_.push_back(f);
    }
}

std::vector<int> SimplicialComplex::ghost_vertices() const {
    std::set<int> covered;
    for (const auto& f : facets_) covered.insert(f.begin(), f.end());
    std::vector<int> out;
    for (int v : vertices_)
        if (!covered.count(v)) out.push_back(v);
    return out;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_[0].size()) return false;
    return true;
}

int SimplicialComplex::dimension() const {
    std::size_t best = 0;
    for (const auto& f : facets_) best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dimension(int d) const {
    if (d < -1) throw std::invalid_argument("dimension below -1");
    if (d == -1) return {{}};
    const std::size_t card = static_cast<std::size_t>(d) + 1;
    std::set<std::vector<int>> faces;
    for (const auto& f : facets_) {
        if (f.size() < card) continue;
        // All card-subsets of the facet.
        std::vector<int> pick(card);
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        for (;;) {
            for (std::size_t i = 0; i < card; ++i) pick[i] = f[idx[i]];
            faces.insert(pick);
            std::size_t i = card;
            while (i > 0 && idx[i - 1] == f.size() - card + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {faces.begin(), faces.end()};
}

PseudomanifoldReport pseudomanifold_status(const SimplicialComplex& k) {
    if (!k.is_pure()) throw std::invalid_argument("pseudomanifold check requires a pure complex");
    const int dim = k.dimension();
    if (dim < 0) return {PseudomanifoldStatus::Closed, std::nullopt};  // only the empty simplex

    bool saw_boundary = false;
    for (const auto& ridge : k.faces_of_dimension(dim - 1)) {
        int count = 0;
        for (const auto& f : k.facets())
            if (std::includes(f.begin(), f.end(), ridge.begin(), ridge.end())) ++count;
        if (count != 1 && count != 2)
            return {PseudomanifoldStatus::Neither, RidgeReport{ridge, count}};
        if (count == 1) saw_boundary = true;
    }
    return {saw_boundary ? PseudomanifoldStatus::WithBoundary : PseudomanifoldStatus::Closed,
            std::nullopt};
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    std::vector<int> vertices = k1.vertices();
    for (int v : k2.vertices()) {
        if (std::binary_search(k1.vertices().begin(), k1.vertices().end(), v))
            throw std::invalid_argument("join requires disjoint vertex labels");
        vertices.push_back(v);
    }
    std::vector<std::vector<int>> facets;
    facets.reserve(k1.facets().size() * k2.facets().size());
    for (const auto& f1 : k1.facets())
        for (const auto& f2 : k2.facets()) {
            std::vector<int> u = f1;
            u.insert(u.end(), f2.begin(), f2.end());
            facets.push_back(std::move(u));
        }
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex boundary_of_simplex(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("boundary of the empty label set");
    std::vector<std::vector<int>> facets;
    for (std::size_t skip = 0; skip < labels.size(); ++skip) {
        std::vector<int> f;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (i != skip) f.push_back(labels[i]);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(labels, std::move(facets));
}

SimplicialComplex full_simplex(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("simplex on the empty label set");
    return SimplicialComplex(labels, {labels});
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k) {
    const int dim = k.dimension();

    // Faces per dimension, -1..dim, each list sorted so column/row indices
    // are canonical.
    std::vector<std::vector<std::vector<int>>> faces;
    for (int d = -1; d <= dim; ++d) faces.push_back(k.faces_of_dimension(d));

    // Boundary matrix from dimension d to d-1 (index shift: faces[d+1]).
    auto boundary_matrix = [&](int d) {
        const auto& domain = faces[d + 1];
        const auto& codomain = faces[d];
        std::map<std::vector<int>, int> codomain_index;
        for (std::size_t i = 0; i < codomain.size(); ++i) codomain_index[codomain[i]] = i;
        IntMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
        for (std::size_t j = 0; j < domain.size(); ++j) {
            int s = 1;
            for (std::size_t drop = 0; drop < domain[j].size(); ++drop) {
                std::vector<int> face = domain[j];
                face.erase(face.begin() + drop);
                m(codomain_index.at(face), static_cast<int>(j)) = s;
                s = -s;
            }
        }
        return m;
    };

    // One Smith decomposition per boundary map; rank(d) is the rank of the
    // boundary leaving degree d, torsion_below(d) the torsion it creates in
    // degree d-1.
    std::vector<long long> rank(dim + 2, 0);
    std::vector<std::vector<Int>> torsion_below(dim + 2);
    for (int d = 0; d <= dim; ++d) {
        const SnfResult snf = smith_normal_form(boundary_matrix(d));
        for (const Int& x : snf.diagonal()) {
            if (x == 0) break;
            ++rank[d + 1];
            if (x > 1) torsion_below[d + 1].push_back(x);
        }
    }

    std::vector<HomologyGroup> groups;
    for (int d = -1; d <= dim; ++d) {
        const long long chains = static_cast<long long>(faces[d + 1].size());
        const long long rank_out = d < dim ? rank[d + 2] : 0;
        groups.push_back({d, chains - rank[d + 1] - rank_out,
                          d < dim ? std::move(torsion_below[d + 2]) : std::vector<Int>{}});
    }
    return groups;
}

nlohmann::json serialize(const std::vector<HomologyGroup>& groups) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : groups) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const Int& t : g.torsion) torsion.push_back(to_int64(t));
        out.push_back(nlohmann::json{
            {"degree", g.degree}, {"free_rank", g.free_rank}, {"torsion", std::move(torsion)}});
    }
    return out;
}

}  // namespace torbit
