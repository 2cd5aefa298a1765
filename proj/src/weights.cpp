#include "torbit/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace torbit {

namespace {

bool is_zero_vector(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

void sign_normalize(std::vector<Int>& v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        return;
    }
}

std::vector<Int> parse_weight_vector(const nlohmann::json& entry) {
    if (!entry.is_array()) throw std::invalid_argument("weights: each weight must be an array");
    std::vector<Rat> raw;
    raw.reserve(entry.size());
    for (const auto& coord : entry) {
        if (coord.is_number_integer())
            raw.emplace_back(Int(coord.get<long long>()));
        else if (coord.is_string())
            raw.emplace_back(rat_from_string(coord.get<std::string>()));
        else
            throw std::invalid_argument(
                "weights: entries must be integers or exact rational strings");
    }
    Int den_lcm = 1;
    for (const Rat& x : raw) den_lcm = lcm(den_lcm, denominator(x));
    std::vector<Int> cleared;
    cleared.reserve(raw.size());
    for (const Rat& x : raw) cleared.push_back(numerator(x) * (den_lcm / denominator(x)));
    return cleared;
}

}  // namespace

WeightSystem::WeightSystem(int k, std::vector<std::vector<Int>> ws, int l)
    : lattice_rank(k), trivial_dim(l) {
    if (k < 0) throw std::invalid_argument("lattice_rank must be nonnegative");
    if (l < 0) throw std::invalid_argument("trivial_dim must be nonnegative");
    for (auto& w : ws) {
        if (static_cast<int>(w.size()) != k)
            throw std::invalid_argument("inconsistent vector lengths in weight system");
        if (is_zero_vector(w)) {
            trivial_dim += 2;
            continue;
        }
        sign_normalize(w);
        weights.push_back(std::move(w));
    }
}

IntMatrix WeightSystem::weight_matrix() const { return IntMatrix::from_cols(weights); }

std::vector<bool> WeightSystem::primitive_flags() const {
    std::vector<bool> flags;
    flags.reserve(weights.size());
    for (const auto& w : weights) {
        Int g = 0;
        for (const Int& x : w) g = gcd(g, x);
        flags.push_back(g == 1);
    }
    return flags;
}

WeightSystem parse_weights(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("weight system document must be an object");
    for (const char* key : {"lattice_rank", "weights", "trivial_dim"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("weight system document missing '") + key + "'");
    if (!doc["lattice_rank"].is_number_integer() || !doc["trivial_dim"].is_number_integer() ||
        !doc["weights"].is_array())
        throw std::invalid_argument("weight system document has wrong field types");

    const int k = doc["lattice_rank"].get<int>();
    const int l = doc["trivial_dim"].get<int>();
    std::vector<std::vector<Int>> ws;
    ws.reserve(doc["weights"].size());
    for (const auto& entry : doc["weights"]) ws.push_back(parse_weight_vector(entry));
    return WeightSystem(k, std::move(ws), l);
}

WeightSystem parse_weights_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return parse_weights(doc);
}

nlohmann::json serialize(const WeightSystem& ws) {
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : ws.weights) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& x : w) row.push_back(to_int64(x));
        weights.push_back(std::move(row));
    }
    return nlohmann::json{{"lattice_rank", ws.lattice_rank},
                          {"weights", std::move(weights)},
                          {"trivial_dim", ws.trivial_dim},
                          {"complexity", complexity(ws)},
                          {"effective", is_effective(ws)}};
}

int complexity(const WeightSystem& ws) {
    return ws.count() - rational_rank(ws.weight_matrix());
}

bool is_effective(const WeightSystem& ws) {
    return rational_rank(ws.weight_matrix()) == ws.lattice_rank;
}

EffectiveReduction effective_reduction(const WeightSystem& ws) {
    const IntMatrix w = ws.weight_matrix();
    const int rank = rational_rank(w);
    if (rank == ws.lattice_rank) return {ws, 0, true};

    // U * W * V = D with U unimodular: the first `rank` columns of U^{-1}
    // are a lattice basis of the saturation of the span of the weights, and
    // the coordinates of weight i in that basis are the first `rank` entries
    // of U * w_i (the remaining entries vanish).
    const SnfResult snf = smith_normal_form(w);
    const IntMatrix uw = snf.u * w;
    std::vector<std::vector<Int>> reduced;
    reduced.reserve(ws.weights.size());
    for (int j = 0; j < uw.cols(); ++j) {
        std::vector<Int> v(rank);
        for (int i = 0; i < rank; ++i) v[i] = uw(i, j);
        reduced.push_back(std::move(v));
    }
    return {WeightSystem(rank, std::move(reduced), ws.trivial_dim), ws.lattice_rank - rank, false};
}

std::vector<Int> snf_canonical_form(const WeightSystem& ws) {
    if (!is_effective(ws))
        throw std::invalid_argument("canonical form requires an effective weight system");
    if (complexity(ws) != 0)
        throw std::invalid_argument("canonical form requires complexity zero");
    return smith_normal_form(ws.weight_matrix()).diagonal();
}

LeontiefType LeontiefType::canonicalized() const {
    LeontiefType out;
    out.d = d;
    out.l = l;
    // A size-1 block is the degenerate convention for a trivial 2-dimensional
    // summand: fold it into l, relabel the survivors, and mark its members
    // with -1 (they leave the assignment).
    std::vector<int> relabel(blocks.size() + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b] <= 1) {
            out.l += 2;
            relabel[b + 1] = -1;
        } else {
            out.blocks.push_back(blocks[b]);
            relabel[b + 1] = static_cast<int>(out.blocks.size());
        }
    }
    out.assignment.reserve(assignment.size());
    for (int a : assignment) out.assignment.push_back(a == 0 ? 0 : relabel[a]);
    return out;
}

nlohmann::json serialize(const LeontiefType& lt) {
    const LeontiefType c = lt.canonicalized();
    nlohmann::json assignment = nlohmann::json::object();
    for (std::size_t i = 0; i < c.assignment.size(); ++i)
        if (c.assignment[i] >= 0) assignment[std::to_string(i)] = c.assignment[i];
    return nlohmann::json{{"d", c.d},
                          {"blocks", c.blocks},
                          {"l", c.l},
                          {"assignment", std::move(assignment)}};
}

}  // namespace torbit
