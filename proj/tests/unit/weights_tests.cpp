#include "torbit/weights.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <random>

using torbit::Int;
using torbit::WeightSystem;

namespace {

WeightSystem make(int k, const std::vector<std::vector<long long>>& weights, int l = 0) {
    std::vector<std::vector<Int>> converted;
    for (const auto& w : weights) converted.emplace_back(w.begin(), w.end());
    return WeightSystem(k, std::move(converted), l);
}

WeightSystem random_system(std::mt19937_64& rng, int max_k, int max_r, int max_abs) {
    std::uniform_int_distribution<int> rank(1, max_k), count(0, max_r), entry(-max_abs, max_abs),
        trivial(0, 3);
    const int k = rank(rng), r = count(rng);
    std::vector<std::vector<Int>> weights(r, std::vector<Int>(k));
    for (auto& w : weights)
        for (Int& x : w) x = entry(rng);
    return WeightSystem(k, std::move(weights), trivial(rng));
}

}  // namespace

TEST_CASE("parsing canonicalizes signs") {
    const auto ws = torbit::parse_weights_text(
        R"({"lattice_rank":2,"weights":[[1,0],[0,1],[-1,-1]],"trivial_dim":0})");
    CHECK(ws.lattice_rank == 2);
    CHECK(ws.trivial_dim == 0);
    CHECK(ws.weights == std::vector<std::vector<Int>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("zero weights fold into the trivial part") {
    const auto ws =
        torbit::parse_weights_text(R"({"lattice_rank":1,"weights":[[0],[2]],"trivial_dim":1})");
    CHECK(ws.weights == std::vector<std::vector<Int>>{{2}});
    CHECK(ws.trivial_dim == 3);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(torbit::parse_weights_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(
        torbit::parse_weights_text(R"({"lattice_rank":2,"weights":[[1,0],[0,1,1]],"trivial_dim":0})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        torbit::parse_weights_text(R"({"lattice_rank":1,"weights":[[1]],"trivial_dim":-1})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        torbit::parse_weights_text(R"({"lattice_rank":-1,"weights":[],"trivial_dim":0})"),
        std::invalid_argument);
    CHECK_THROWS_AS(torbit::parse_weights_text(R"({"weights":[],"trivial_dim":0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        torbit::parse_weights_text(R"({"lattice_rank":1,"weights":[[1.5]],"trivial_dim":0})"),
        std::invalid_argument);
}

TEST_CASE("rational entries are cleared by the denominator lcm of their vector") {
    const auto ws = torbit::parse_weights_text(
        R"({"lattice_rank":2,"weights":[["1/2","1"],["-1/3","1/6"]],"trivial_dim":0})");
    CHECK(ws.weights == std::vector<std::vector<Int>>{{1, 2}, {2, -1}});
}

TEST_CASE("primitive flags are recorded, not forced") {
    const auto ws = make(2, {{2, 0}, {1, 1}});
    CHECK(ws.primitive_flags() == std::vector<bool>{false, true});
    CHECK(ws.weights[0] == std::vector<Int>{2, 0});  // magnitude preserved
}

TEST_CASE("complexity") {
    CHECK(torbit::complexity(make(2, {{1, 0}, {0, 1}, {1, 1}})) == 1);
    CHECK(torbit::complexity(make(1, {{1}, {1}, {1}})) == 2);
    CHECK(torbit::complexity(make(2, {{1, 0}, {0, 1}})) == 0);
    CHECK(torbit::complexity(make(0, {}, 3)) == 0);
}

TEST_CASE("effective reduction") {
    SUBCASE("rank-deficient system drops to the saturation basis") {
        const auto red = torbit::effective_reduction(make(2, {{1, 0}, {2, 0}}));
        CHECK_FALSE(red.was_effective);
        CHECK(red.noneffective_dim == 1);
        CHECK(red.system.lattice_rank == 1);
        CHECK(red.system.weights == std::vector<std::vector<Int>>{{1}, {2}});
    }
    SUBCASE("effective systems are untouched") {
        const auto ws = make(2, {{1, 0}, {0, 1}});
        const auto red = torbit::effective_reduction(ws);
        CHECK(red.was_effective);
        CHECK(red.system == ws);
    }
    SUBCASE("pure trivial representation is untouched") {
        const auto ws = make(0, {}, 3);
        const auto red = torbit::effective_reduction(ws);
        CHECK(red.was_effective);
        CHECK(red.system == ws);
    }
    SUBCASE("reduction preserves complexity and trivial dimension") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 200; ++trial) {
            const auto ws = random_system(rng, 4, 6, 3);
            const auto red = torbit::effective_reduction(ws);
            CHECK(torbit::complexity(red.system) == torbit::complexity(ws));
            CHECK(red.system.trivial_dim == ws.trivial_dim);
            CHECK(red.system.count() == ws.count());
            CHECK(torbit::is_effective(red.system));
        }
    }
}

TEST_CASE("complexity-zero canonical form") {
    CHECK(torbit::snf_canonical_form(make(2, {{1, 0}, {0, 1}})) == std::vector<Int>{1, 1});
    CHECK(torbit::snf_canonical_form(make(2, {{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
    CHECK_THROWS_AS(torbit::snf_canonical_form(make(2, {{1, 0}, {0, 1}, {1, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(torbit::snf_canonical_form(make(2, {{1, 0}, {2, 0}})),
                    std::invalid_argument);
}

TEST_CASE("serialization round-trips the canonical form") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ws = random_system(rng, 3, 5, 4);
        const auto round = torbit::parse_weights(torbit::serialize(ws));
        CHECK(round == ws);
    }
    const auto doc = torbit::serialize(make(2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(doc["complexity"] == 1);
    CHECK(doc["effective"] == true);
}

TEST_CASE("complexity and canonical form are weak-equivalence invariants") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        auto ws = random_system(rng, 3, 5, 3);
        if (ws.count() == 0) continue;
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

        CHECK(torbit::complexity(moved) == torbit::complexity(ws));
        if (torbit::is_effective(ws) && torbit::complexity(ws) == 0)
            CHECK(torbit::snf_canonical_form(moved) == torbit::snf_canonical_form(ws));
    }
}

TEST_CASE("degenerate certificate blocks fold into the trivial part") {
    torbit::LeontiefType lt;
    lt.d = 1;
    lt.blocks = {1, 3};
    lt.l = 0;
    lt.assignment = {0, 1, 2, 2, 2};
    const auto canonical = lt.canonicalized();
    CHECK(canonical.blocks == std::vector<int>{3});
    CHECK(canonical.l == 2);
    CHECK(canonical.assignment == std::vector<int>{0, -1, 1, 1, 1});
    const auto doc = torbit::serialize(lt);
    CHECK(doc["blocks"] == nlohmann::json::array({3}));
    CHECK(doc["l"] == 2);
    CHECK(!doc["assignment"].contains("1"));
}
