#include "torbit/matroid.hpp"

#include "torbit/detail/combinations.hpp"
#include "torbit/exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace torbit {

using detail::for_each_combination;

namespace {

unsigned to_mask(const std::vector<int>& subset, int size) {
    unsigned mask = 0;
    for (int i : subset) {
        if (i < 0 || i >= size) throw std::out_of_range("matroid index out of range");
        mask |= 1u << i;
    }
    return mask;
}

}  // namespace

LinearMatroid::LinearMatroid(const WeightSystem& ws) {
    vectors_ = ws.weights;
    dim_ = ws.lattice_rank;
    init();
}

LinearMatroid LinearMatroid::from_vectors(std::vector<std::vector<Int>> vectors) {
    LinearMatroid m;
    m.vectors_ = std::move(vectors);
    m.dim_ = m.vectors_.empty() ? 0 : static_cast<int>(m.vectors_[0].size());
    m.init();
    return m;
}

void LinearMatroid::init() {
    if (vectors_.size() > 30) throw std::invalid_argument("ground set too large for enumeration");
    for (auto& v : vectors_) {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("matroid vectors have inconsistent dimension");
        Int g = 0;
        for (const Int& x : v) g = gcd(g, x);
        if (g == 0) throw std::invalid_argument("zero vector (loop) in matroid input");
        int flip = 1;
        for (const Int& x : v)
            if (x != 0) {
                flip = x.sign();
                break;
            }
        if (g != 1 || flip < 0)
            for (Int& x : v) x = flip * x / g;
    }
    rank_ = rank_of_mask(vectors_.empty() ? 0u : (1u << vectors_.size()) - 1u);
}

int LinearMatroid::rank_of_mask(unsigned mask) const {
    std::vector<std::vector<Int>> rows;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1u) rows.push_back(vectors_[i]);
    if (rows.empty()) return 0;
    return rational_rank(IntMatrix::from_rows(rows));
}

bool LinearMatroid::is_independent(const std::vector<int>& subset) const {
    const unsigned mask = to_mask(subset, size());
    return rank_of_mask(mask) == std::popcount(mask);
}

int LinearMatroid::matroid_rank(const std::vector<int>& subset) const {
    return rank_of_mask(to_mask(subset, size()));
}

std::vector<int> LinearMatroid::closure(const std::vector<int>& subset) const {
    const unsigned mask = to_mask(subset, size());
    const int base_rank = rank_of_mask(mask);
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (mask >> i & 1u) {
            out.push_back(i);
            continue;
        }
        if (rank_of_mask(mask | (1u << i)) == base_rank) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<int>> LinearMatroid::circuits() const {
    std::vector<std::vector<int>> result;
    std::vector<unsigned> circuit_masks;
    // A circuit has at most rank+1 elements. Scanning sizes upward means a
    // dependent set containing no previously found circuit is itself one.
    for (int s = 2; s <= std::min(size(), rank_ + 1); ++s) {
        for_each_combination(size(), s, [&](const std::vector<int>& idx) {
            unsigned mask = 0;
            for (int i : idx) mask |= 1u << i;
            for (unsigned c : circuit_masks)
                if ((c & mask) == c) return;
            if (rank_of_mask(mask) < s) {
                circuit_masks.push_back(mask);
                result.push_back(idx);
            }
        });
    }
    return result;
}

std::vector<Flat> LinearMatroid::flats() const {
    std::map<std::vector<int>, int> seen;  // flat indices -> rank
    std::vector<std::vector<int>> frontier{closure({})};
    seen[frontier[0]] = 0;
    int level = 0;
    while (level < rank_) {
        std::vector<std::vector<int>> next;
        for (const auto& flat : frontier) {
            std::vector<bool> inside(size(), false);
            for (int i : flat) inside[i] = true;
            for (int e = 0; e < size(); ++e) {
                if (inside[e]) continue;
                std::vector<int> grown = flat;
                grown.push_back(e);
                std::vector<int> cl = closure(grown);
                if (seen.emplace(cl, level + 1).second) next.push_back(std::move(cl));
            }
        }
        frontier = std::move(next);
        ++level;
    }
    std::vector<Flat> out;
    out.reserve(seen.size());
    for (const auto& [indices, flat_rank] : seen) out.push_back({indices, flat_rank});
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        if (a.flat_rank != b.flat_rank) return a.flat_rank < b.flat_rank;
        return a.indices < b.indices;
    });
    return out;
}

std::vector<std::vector<int>> LinearMatroid::connected_components() const {
    std::vector<int> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& circuit : circuits())
        for (std::size_t i = 1; i < circuit.size(); ++i) {
            const int a = find(circuit[0]);
            const int b = find(circuit[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> parts;
    for (int i = 0; i < size(); ++i) parts[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    for (auto& [root, members] : parts) out.push_back(std::move(members));
    return out;
}

std::vector<std::vector<int>> LinearMatroid::bases() const {
    return independent_sets_of_size(rank_);
}

std::vector<std::vector<int>> LinearMatroid::independent_sets_of_size(int s) const {
    std::vector<std::vector<int>> out;
    if (s == 0) {
        out.push_back({});
        return out;
    }
    for_each_combination(size(), s, [&](const std::vector<int>& idx) {
        unsigned mask = 0;
        for (int i : idx) mask |= 1u << i;
        if (rank_of_mask(mask) == s) out.push_back(idx);
    });
    return out;
}

}  // namespace torbit
