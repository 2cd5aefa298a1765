#include "torbit/face_poset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace torbit {

namespace {

// Validates the certificate against the weight count and splits the ground
// set into the complexity-zero part (index 0) and the blocks (1..s).
std::vector<std::vector<int>> split_by_assignment(int count, const LeontiefType& lt) {
    if (static_cast<int>(lt.assignment.size()) != count)
        throw std::invalid_argument("certificate assignment does not match the weight count");
    std::vector<std::vector<int>> parts(lt.blocks.size() + 1);
    for (int i = 0; i < count; ++i) {
        const int label = lt.assignment[i];
        if (label < 0 || label > lt.block_count())
            throw std::invalid_argument("certificate assignment uses an unknown block label");
        parts[label].push_back(i);
    }
    if (static_cast<int>(parts[0].size()) != lt.d)
        throw std::invalid_argument("certificate d does not match its assignment");
    for (int b = 1; b <= lt.block_count(); ++b)
        if (static_cast<int>(parts[b].size()) != lt.blocks[b - 1])
            throw std::invalid_argument("certificate block size does not match its assignment");
    return parts;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

GradedPoset face_poset(const WeightSystem& ws) {
    const WeightSystem sys = effective_reduction(ws).system;
    const LinearMatroid m(sys);
    GradedPoset poset;
    for (const Flat& f : m.flats()) {
        poset.elements.push_back(f.indices);
        poset.ranks.push_back(f.flat_rank);
    }
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j) {
            if (poset.ranks[j] != poset.ranks[i] + 1) continue;
            if (std::includes(poset.elements[j].begin(), poset.elements[j].end(),
                              poset.elements[i].begin(), poset.elements[i].end()))
                poset.covers.emplace_back(i, j);
        }
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

ProductStructureResult product_structure_check(const WeightSystem& ws, const LeontiefType& lt) {
    const WeightSystem sys = effective_reduction(ws).system;
    const auto parts = split_by_assignment(sys.count(), lt);
    const GradedPoset poset = face_poset(sys);

    ProductStructureResult result;
    unsigned long long expected = poset_cardinality(lt);
    if (static_cast<unsigned long long>(poset.size()) != expected) {
        result.reason = "flat count " + std::to_string(poset.size()) +
                        " differs from the product cardinality " + std::to_string(expected);
        return result;
    }
    for (const auto& flat : poset.elements) {
        FlatEncoding enc;
        enc.parts.push_back(intersect_sorted(flat, parts[0]));
        std::size_t total = enc.parts[0].size();
        for (int b = 1; b <= lt.block_count(); ++b) {
            std::vector<int> piece = intersect_sorted(flat, parts[b]);
            if (static_cast<int>(piece.size()) == lt.blocks[b - 1] - 1) {
                result.reason = "a flat meets a general-position block in all but one element";
                result.encodings.clear();
                return result;
            }
            total += piece.size();
            enc.parts.push_back(std::move(piece));
        }
        if (total != flat.size()) {
            result.reason = "a flat has weights outside the certificate's blocks";
            result.encodings.clear();
            return result;
        }
        result.encodings.push_back(std::move(enc));
    }
    // Every flat encodes as a valid string and the counts match, so the
    // encoding is a bijection; inclusion matches componentwise inclusion by
    // construction. That is the claimed product isomorphism.
    result.ok = true;
    return result;
}

LeontiefType face_leontief_type(const WeightSystem& ws, const LeontiefType& lt,
                                const std::vector<int>& flat) {
    const WeightSystem sys = effective_reduction(ws).system;
    const auto parts = split_by_assignment(sys.count(), lt);
    const LinearMatroid m(sys);

    std::vector<int> sorted_flat = flat;
    std::sort(sorted_flat.begin(), sorted_flat.end());
    sorted_flat.erase(std::unique(sorted_flat.begin(), sorted_flat.end()), sorted_flat.end());
    if (m.closure(sorted_flat) != sorted_flat)
        throw std::invalid_argument("the given index set is not a flat of the weight matroid");

    LeontiefType face;
    face.l = lt.l;
    face.d = static_cast<int>(intersect_sorted(sorted_flat, parts[0]).size());
    std::vector<int> labels(sys.count(), 0);
    for (int b = 1; b <= lt.block_count(); ++b) {
        const std::vector<int> piece = intersect_sorted(sorted_flat, parts[b]);
        const int n = lt.blocks[b - 1];
        if (static_cast<int>(piece.size()) == n) {
            face.blocks.push_back(n);
            for (int i : piece) labels[i] = static_cast<int>(face.blocks.size());
        } else if (static_cast<int>(piece.size()) <= n - 2) {
            face.d += static_cast<int>(piece.size());
        } else {
            throw std::logic_error(
                "flat meets a general-position block in all but one element");
        }
    }
    face.assignment.reserve(sorted_flat.size());
    for (int i : sorted_flat) face.assignment.push_back(labels[i]);
    return face;
}

unsigned long long poset_cardinality(const LeontiefType& lt) {
    Int total = Int(1) << lt.d;
    for (int n : lt.blocks) total *= (Int(1) << n) - n;
    if (total > std::numeric_limits<unsigned long long>::max())
        throw std::overflow_error("poset cardinality exceeds 64 bits");
    return total.convert_to<unsigned long long>();
}

nlohmann::json serialize(const GradedPoset& poset,
                         const std::optional<std::vector<FlatEncoding>>& encodings) {
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [lo, hi] : poset.covers) covers.push_back({lo, hi});
    nlohmann::json out{{"elements", poset.elements},
                       {"ranks", poset.ranks},
                       {"covers", std::move(covers)}};
    if (encodings) {
        nlohmann::json enc = nlohmann::json::array();
        for (const auto& e : *encodings) enc.push_back(e.parts);
        out["encoding"] = std::move(enc);
    } else {
        out["encoding"] = nullptr;
    }
    return out;
}

}  // namespace torbit
