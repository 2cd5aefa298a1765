#include "torbit/complex.hpp"

#include "torbit/matroid.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <numeric>
#include <random>

using torbit::HomologyGroup;
using torbit::Int;
using torbit::PseudomanifoldStatus;
using torbit::SimplicialComplex;

namespace {

SimplicialComplex on(std::vector<int> vertices, std::vector<std::vector<int>> facets) {
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

// Free ranks indexed from degree -1.
std::vector<long long> free_ranks(const SimplicialComplex& k) {
    std::vector<long long> out;
    for (const auto& g : torbit::reduced_homology(k)) out.push_back(g.free_rank);
    return out;
}

SimplicialComplex independence_complex(const std::vector<oracle::Vec>& vectors) {
    std::vector<std::vector<Int>> lifted;
    for (const auto& v : vectors) lifted.emplace_back(v.begin(), v.end());
    const torbit::LinearMatroid m = torbit::LinearMatroid::from_vectors(std::move(lifted));
    std::vector<int> vertices(m.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    return SimplicialComplex(vertices, m.bases());
}

}  // namespace

TEST_CASE("construction normalizes the facet list") {
    const auto k = on({0, 1, 2, 9}, {{2, 1}, {1, 2}, {1}, {0, 1}});
    CHECK(k.facets() == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(k.ghost_vertices() == std::vector<int>{9});
    CHECK(k.is_pure());
    CHECK(k.dimension() == 1);
    CHECK_THROWS_AS(on({0}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("pseudomanifold census") {
    SUBCASE("triangle boundary is closed") {
        const auto rep = torbit::pseudomanifold_status(on({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}));
        CHECK(rep.status == PseudomanifoldStatus::Closed);
        CHECK(!rep.witness);
    }
    SUBCASE("full triangle has boundary") {
        const auto rep = torbit::pseudomanifold_status(on({0, 1, 2}, {{0, 1, 2}}));
        CHECK(rep.status == PseudomanifoldStatus::WithBoundary);
    }
    SUBCASE("complete graph on four vertices is neither") {
        const std::vector<std::vector<int>> facets{{0, 1}, {0, 2}, {0, 3},
                                                   {1, 2}, {1, 3}, {2, 3}};
        const auto rep = torbit::pseudomanifold_status(on({0, 1, 2, 3}, facets));
        REQUIRE(rep.status == PseudomanifoldStatus::Neither);
        CHECK(rep.witness->ridge == std::vector<int>{0});
        CHECK(rep.witness->containing_facet_count == 3);
        // Recount every ridge with the independent census.
        for (const auto& [ridge, count] : oracle::ridge_census(facets))
            if (ridge == rep.witness->ridge) CHECK(count == rep.witness->containing_facet_count);
    }
    SUBCASE("one-point complexes") {
        CHECK(torbit::pseudomanifold_status(torbit::full_simplex({0})).status ==
              PseudomanifoldStatus::WithBoundary);
        CHECK(torbit::pseudomanifold_status(torbit::boundary_of_simplex({0, 1})).status ==
              PseudomanifoldStatus::Closed);  // two points, the 0-sphere
    }
    SUBCASE("non-pure input is rejected") {
        CHECK_THROWS_AS(torbit::pseudomanifold_status(on({0, 1, 2}, {{0, 1}, {2}})),
                        std::invalid_argument);
    }
}

TEST_CASE("joins") {
    SUBCASE("two 0-spheres make a square") {
        const auto square =
            torbit::join(torbit::boundary_of_simplex({0, 1}), torbit::boundary_of_simplex({2, 3}));
        CHECK(square.facets() ==
              std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        CHECK(torbit::pseudomanifold_status(square).status == PseudomanifoldStatus::Closed);
    }
    SUBCASE("joining a ghost complex only adds the ghost") {
        const auto k = on({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
        const auto ghosted = torbit::join(k, torbit::boundary_of_simplex({7}));
        CHECK(ghosted.facets() == k.facets());
        CHECK(ghosted.ghost_vertices() == std::vector<int>{7});
    }
    SUBCASE("cone over a 0-sphere is a path") {
        const auto path = torbit::join(torbit::full_simplex({0}), torbit::boundary_of_simplex({1, 2}));
        CHECK(path.facets() == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
    }
    SUBCASE("label collisions are rejected") {
        CHECK_THROWS_AS(torbit::join(torbit::full_simplex({0}), torbit::full_simplex({0})),
                        std::invalid_argument);
    }
    SUBCASE("associative up to nothing at all") {
        const auto a = torbit::boundary_of_simplex({0, 1});
        const auto b = torbit::full_simplex({2});
        const auto c = torbit::boundary_of_simplex({3, 4, 5});
        CHECK(torbit::join(torbit::join(a, b), c) == torbit::join(a, torbit::join(b, c)));
    }
}

TEST_CASE("simplex constructors") {
    const auto ghost = torbit::boundary_of_simplex({5});
    CHECK(ghost.facets() == std::vector<std::vector<int>>{{}});
    CHECK(ghost.ghost_vertices() == std::vector<int>{5});
    CHECK(ghost.dimension() == -1);

    CHECK(torbit::boundary_of_simplex({0, 1}).facets() ==
          std::vector<std::vector<int>>{{0}, {1}});
    CHECK(torbit::full_simplex({0, 1, 2}).facets() ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK_THROWS_AS(torbit::boundary_of_simplex({}), std::invalid_argument);
    CHECK_THROWS_AS(torbit::full_simplex({}), std::invalid_argument);
}

TEST_CASE("reduced homology on pinned complexes") {
    SUBCASE("circle") {
        CHECK(free_ranks(on({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}})) ==
              std::vector<long long>{0, 0, 1});
    }
    SUBCASE("complete graph on four vertices is a wedge of three circles") {
        const std::vector<std::vector<int>> facets{{0, 1}, {0, 2}, {0, 3},
                                                   {1, 2}, {1, 3}, {2, 3}};
        CHECK(free_ranks(on({0, 1, 2, 3}, facets)) == std::vector<long long>{0, 0, 3});
        // Cross-check through the reduced Euler characteristic: -rank(H~_1).
        CHECK(oracle::reduced_euler(facets) == -3);
    }
    SUBCASE("cones are acyclic") {
        CHECK(free_ranks(torbit::full_simplex({0, 1, 2})) == std::vector<long long>{0, 0, 0, 0});
    }
    SUBCASE("empty-simplex complex") {
        CHECK(free_ranks(torbit::boundary_of_simplex({0})) == std::vector<long long>{1});
    }
    SUBCASE("torsion is reported: a projective plane") {
        const std::vector<std::vector<int>> facets{{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 3, 4},
                                                   {0, 3, 5}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5},
                                                   {2, 3, 5}, {2, 4, 5}};
        const auto groups = torbit::reduced_homology(on({0, 1, 2, 3, 4, 5}, facets));
        REQUIRE(groups.size() == 4);
        CHECK(groups[2].free_rank == 0);
        CHECK(groups[2].torsion == std::vector<Int>{2});
        CHECK(groups[3].free_rank == 0);
        CHECK(groups[3].torsion.empty());
    }
}

TEST_CASE("joins of sphere boundaries have sphere homology") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            std::vector<int> left(a + 1), right(b + 1);
            std::iota(left.begin(), left.end(), 0);
            std::iota(right.begin(), right.end(), a + 1);
            const auto sphere =
                torbit::join(torbit::boundary_of_simplex(left), torbit::boundary_of_simplex(right));
            const auto ranks = free_ranks(sphere);
            for (std::size_t d = 0; d < ranks.size(); ++d)
                CHECK(ranks[d] == (static_cast<int>(d) == a + b ? 1 : 0));
            // degree index d corresponds to homological degree d-1
        }
}

TEST_CASE("independence complexes are wedges of top-dimensional spheres") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> kdist(1, 4), rdist(1, 8), entry(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = kdist(rng), r = rdist(rng);
        std::vector<oracle::Vec> vectors;
        while (static_cast<int>(vectors.size()) < r) {
            oracle::Vec v(k);
            bool zero = true;
            for (auto& x : v) {
                x = entry(rng);
                if (x != 0) zero = false;
            }
            if (!zero) vectors.push_back(std::move(v));
        }
        const auto complex = independence_complex(vectors);
        const int top = complex.dimension();
        long long chi = 0;
        for (const auto& g : torbit::reduced_homology(complex)) {
            CHECK(g.torsion.empty());
            if (g.degree != top) CHECK(g.free_rank == 0);
            chi += (g.degree % 2 == 0 ? 1 : -1) * g.free_rank;
        }
        CHECK(chi == oracle::reduced_euler(complex.facets()));
    }
}
