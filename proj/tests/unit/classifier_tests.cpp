#include "torbit/classifier.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using torbit::CircleOrbitSpace;
using torbit::Int;
using torbit::MonopoleCharge;
using torbit::OrbitKind;
using torbit::OrbitVerdict;
using torbit::WeightSystem;

namespace {

WeightSystem make(int k, const std::vector<std::vector<long long>>& weights, int l = 0) {
    std::vector<std::vector<Int>> converted;
    for (const auto& w : weights) converted.emplace_back(w.begin(), w.end());
    return WeightSystem(k, std::move(converted), l);
}

std::vector<int> sorted_blocks(const OrbitVerdict& v) {
    auto blocks = v.leontief->blocks;
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

WeightSystem random_system(std::mt19937_64& rng, int max_k, int max_r, int max_abs) {
    std::uniform_int_distribution<int> rank(1, max_k), count(1, max_r), entry(-max_abs, max_abs),
        trivial(0, 2);
    const int k = rank(rng), r = count(rng);
    std::vector<std::vector<Int>> weights(r, std::vector<Int>(k));
    for (auto& w : weights)
        for (Int& x : w) x = entry(rng);
    return WeightSystem(k, std::move(weights), trivial(rng));
}

void check_same_verdict(const OrbitVerdict& a, const OrbitVerdict& b) {
    CHECK(a.kind == b.kind);
    CHECK(a.model_dim == b.model_dim);
    if (a.leontief && b.leontief) {
        CHECK(a.leontief->d == b.leontief->d);
        auto blocks_a = a.leontief->blocks, blocks_b = b.leontief->blocks;
        std::sort(blocks_a.begin(), blocks_a.end());
        std::sort(blocks_b.begin(), blocks_b.end());
        CHECK(blocks_a == blocks_b);
    }
}

}  // namespace

TEST_CASE("structural route on the model cases") {
    SUBCASE("general-position circuit: an open orbit space") {
        const auto v = torbit::classify_structural(make(2, {{1, 0}, {0, 1}, {1, 1}}));
        CHECK(v.kind == OrbitKind::ClosedManifold);
        CHECK(v.model_dim == 4);
        CHECK_FALSE(v.boundary);
        REQUIRE(v.leontief);
        CHECK(v.leontief->d == 0);
        CHECK(v.leontief->blocks == std::vector<int>{3});
        CHECK(v.leontief->assignment == std::vector<int>{1, 1, 1});
    }
    SUBCASE("standard basis: a half-space") {
        const auto v = torbit::classify_structural(make(2, {{1, 0}, {0, 1}}));
        CHECK(v.kind == OrbitKind::ManifoldWithBoundary);
        CHECK(v.model_dim == 2);
        CHECK(v.boundary);
        CHECK(v.leontief->d == 2);
        CHECK(v.leontief->blocks.empty());
    }
    SUBCASE("four lines in the plane: obstructed") {
        const auto v = torbit::classify_structural(make(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
        CHECK(v.kind == OrbitKind::NotManifold);
        REQUIRE(v.witness);
        CHECK(v.witness->facet_count == 3);
        CHECK_FALSE(v.leontief);
        // Every singleton extends to a basis with each of the other three.
        CHECK(v.witness->ridge == std::vector<int>{0});
        CHECK(v.witness->flat == std::vector<int>{0});
    }
}

TEST_CASE("pseudomanifold route on the model cases") {
    CHECK(torbit::classify_pseudomanifold(make(2, {{1, 0}, {0, 1}, {1, 1}})).kind ==
          OrbitKind::ClosedManifold);
    CHECK(torbit::classify_pseudomanifold(make(2, {{1, 0}, {0, 1}})).kind ==
          OrbitKind::ManifoldWithBoundary);
    const auto v = torbit::classify_pseudomanifold(make(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
    CHECK(v.kind == OrbitKind::NotManifold);
    REQUIRE(v.witness);
    CHECK(v.witness->ridge == std::vector<int>{0});
    CHECK(v.witness->facet_count == 3);
}

TEST_CASE("degenerate inputs") {
    SUBCASE("trivial representation") {
        const auto v = torbit::classify_structural(make(0, {}, 5));
        CHECK(v.kind == OrbitKind::ClosedManifold);
        CHECK(v.model_dim == 5);
        CHECK(v.leontief->l == 5);
        check_same_verdict(v, torbit::classify_pseudomanifold(make(0, {}, 5)));
    }
    SUBCASE("zero weights vanish into the trivial part") {
        const auto v = torbit::classify_structural(make(2, {{0, 0}}, 1));
        CHECK(v.kind == OrbitKind::ClosedManifold);
        CHECK(v.model_dim == 3);
    }
    SUBCASE("noneffective input is auto-reduced") {
        const auto v = torbit::classify_structural(make(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
        CHECK(v.kind == OrbitKind::ClosedManifold);
        CHECK(v.model_dim == 4);
    }
}

TEST_CASE("boundary dimension accounting") {
    // One coloop, one 2-circuit, two trivial dimensions.
    const auto v = torbit::classify_structural(make(2, {{1, 0}, {0, 1}, {0, 1}}, 2));
    CHECK(v.kind == OrbitKind::ManifoldWithBoundary);
    CHECK(v.leontief->d == 1);
    CHECK(v.leontief->blocks == std::vector<int>{2});
    CHECK(v.model_dim == 2 + 1 + 3);
}

TEST_CASE("circle representations") {
    CHECK(torbit::circle_classify({Int(5)}) == CircleOrbitSpace::HalfLine);
    CHECK(torbit::circle_classify({Int(1), Int(-1)}) == CircleOrbitSpace::R3);
    CHECK(torbit::circle_classify({Int(1), Int(1), Int(2)}) ==
          CircleOrbitSpace::NotHomologyManifold);
    CHECK_THROWS_AS(torbit::circle_classify({Int(1), Int(0)}), std::invalid_argument);
    CHECK_THROWS_AS(torbit::circle_classify({}), std::invalid_argument);
}

TEST_CASE("circle trichotomy matches the general classifier") {
    // All exponent multisets with up to five entries from [-5,5] without 0.
    std::vector<long long> values;
    for (long long v = -5; v <= 5; ++v)
        if (v != 0) values.push_back(v);
    std::vector<long long> chosen;
    auto run = [&](auto&& self, std::size_t start, int want) -> void {
        if (want == 0) {
            std::vector<Int> exponents(chosen.begin(), chosen.end());
            std::vector<std::vector<long long>> weights;
            for (long long c : chosen) weights.push_back({c});
            const auto circle = torbit::circle_classify(exponents);
            const auto verdict = torbit::classify_structural(make(1, weights));
            switch (circle) {
                case CircleOrbitSpace::HalfLine:
                    CHECK(verdict.kind == OrbitKind::ManifoldWithBoundary);
                    CHECK(verdict.model_dim == 1);
                    break;
                case CircleOrbitSpace::R3:
                    CHECK(verdict.kind == OrbitKind::ClosedManifold);
                    CHECK(verdict.model_dim == 3);
                    break;
                case CircleOrbitSpace::NotHomologyManifold:
                    CHECK(verdict.kind == OrbitKind::NotManifold);
                    break;
            }
            return;
        }
        for (std::size_t i = start; i < values.size(); ++i) {
            chosen.push_back(values[i]);
            self(self, i, want - 1);
            chosen.pop_back();
        }
    };
    for (int n = 1; n <= 5; ++n) run(run, 0, n);
}

TEST_CASE("fixed point charges") {
    CHECK(torbit::fixed_point_charge(1, 1) == MonopoleCharge::Plus);
    CHECK(torbit::fixed_point_charge(-1, -1) == MonopoleCharge::Plus);
    CHECK(torbit::fixed_point_charge(-1, 1) == MonopoleCharge::Minus);
    CHECK(torbit::fixed_point_charge(1, -1) == MonopoleCharge::Minus);
    CHECK(torbit::fixed_point_charge(2, 1) == MonopoleCharge::DisconnectedStabilizers);
    CHECK(torbit::fixed_point_charge(1, -3) == MonopoleCharge::DisconnectedStabilizers);
    CHECK_THROWS_AS(torbit::fixed_point_charge(0, 1), std::invalid_argument);
}

TEST_CASE("general position relation") {
    SUBCASE("triangle weights") {
        const auto rel = torbit::general_position_relation(make(2, {{1, 0}, {0, 1}, {1, 1}}));
        CHECK(rel.coefficients == std::vector<Int>{1, 1, 1});
        CHECK(rel.flipped == std::vector<bool>{false, false, true});
    }
    SUBCASE("parallel pair") {
        const auto rel = torbit::general_position_relation(make(1, {{1}, {1}}));
        CHECK(rel.coefficients == std::vector<Int>{1, 1});
        CHECK(rel.flipped == std::vector<bool>{false, true});
    }
    SUBCASE("rejects complexity zero and higher complexity") {
        CHECK_THROWS_AS(torbit::general_position_relation(make(2, {{1, 0}, {0, 1}})),
                        std::invalid_argument);
        CHECK_THROWS_AS(torbit::general_position_relation(make(1, {{1}, {1}, {1}})),
                        std::invalid_argument);
    }
    SUBCASE("rejects non-general position") {
        // Rank 2, four weights, but the relation misses the coloop.
        CHECK_THROWS_AS(
            torbit::general_position_relation(make(2, {{1, 0}, {1, 0}, {0, 1}})),
            std::invalid_argument);
    }
    SUBCASE("the signed relation annihilates the weights") {
        std::mt19937_64 rng(61);
        std::uniform_int_distribution<int> entry(-4, 4);
        int found = 0;
        while (found < 40) {
            const int n = 2 + static_cast<int>(rng() % 4);
            std::vector<std::vector<long long>> weights(n, std::vector<long long>(n - 1));
            for (auto& w : weights)
                for (auto& x : w) x = entry(rng);
            const WeightSystem ws = make(n - 1, weights);
            if (ws.count() != n || torbit::complexity(ws) != 1) continue;
            try {
                const auto rel = torbit::general_position_relation(ws);
                ++found;
                for (int coord = 0; coord < n - 1; ++coord) {
                    Int sum = 0;
                    for (int i = 0; i < n; ++i) {
                        const Int sign = rel.flipped[i] ? -1 : 1;
                        sum += rel.coefficients[i] * sign * ws.weights[i][coord];
                    }
                    CHECK(sum == 0);
                }
                Int g = 0;
                for (const Int& c : rel.coefficients) {
                    CHECK(c > 0);
                    g = torbit::gcd(g, c);
                }
                CHECK(g == 1);
            } catch (const std::invalid_argument&) {
                // complexity one but not in general position; fine
            }
        }
    }
}

TEST_CASE("routes agree on random systems") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 400; ++trial) {
        const auto ws = random_system(rng, 3, 5, 2);
        check_same_verdict(torbit::classify_structural(ws), torbit::classify_pseudomanifold(ws));
    }
}

TEST_CASE("verdicts are weak-equivalence invariants") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 120; ++trial) {
        const auto ws = random_system(rng, 3, 5, 2);
        const auto u = oracle::random_unimodular(ws.lattice_rank, rng);
        std::vector<std::vector<Int>> transformed;
        for (const auto& w : ws.weights) {
            oracle::Vec v(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i].convert_to<long long>();
            const auto image = oracle::apply(u, v);
            transformed.emplace_back(image.begin(), image.end());
        }
        std::shuffle(transformed.begin(), transformed.end(), rng);
        const WeightSystem moved(ws.lattice_rank, std::move(transformed), ws.trivial_dim);

        check_same_verdict(torbit::classify_structural(ws), torbit::classify_structural(moved));
    }
}

TEST_CASE("direct products multiply the decomposition") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 80; ++trial) {
        const auto a = random_system(rng, 2, 4, 2);
        const auto b = random_system(rng, 2, 4, 2);
        const int ka = a.lattice_rank, kb = b.lattice_rank;
        std::vector<std::vector<Int>> sum;
        for (const auto& w : a.weights) {
            std::vector<Int> v(ka + kb, 0);
            std::copy(w.begin(), w.end(), v.begin());
            sum.push_back(std::move(v));
        }
        for (const auto& w : b.weights) {
            std::vector<Int> v(ka + kb, 0);
            std::copy(w.begin(), w.end(), v.begin() + ka);
            sum.push_back(std::move(v));
        }
        const WeightSystem product(ka + kb, std::move(sum), a.trivial_dim + b.trivial_dim);

        const auto va = torbit::classify_structural(a);
        const auto vb = torbit::classify_structural(b);
        const auto vp = torbit::classify_structural(product);

        if (va.kind == OrbitKind::NotManifold || vb.kind == OrbitKind::NotManifold) {
            CHECK(vp.kind == OrbitKind::NotManifold);
            continue;
        }
        CHECK(vp.leontief->d == va.leontief->d + vb.leontief->d);
        auto expected = va.leontief->blocks;
        expected.insert(expected.end(), vb.leontief->blocks.begin(), vb.leontief->blocks.end());
        std::sort(expected.begin(), expected.end());
        CHECK(sorted_blocks(vp) == expected);
        CHECK((vp.kind == OrbitKind::ClosedManifold) ==
              (va.kind == OrbitKind::ClosedManifold && vb.kind == OrbitKind::ClosedManifold));
    }
}

TEST_CASE("closed verdicts account for every dimension of the orbit space") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ws = random_system(rng, 3, 6, 2);
        const auto reduced = torbit::effective_reduction(ws).system;
        const auto v = torbit::classify_structural(ws);
        CHECK(v.model_dim == 2 * reduced.count() + reduced.trivial_dim - reduced.lattice_rank);
    }
}
