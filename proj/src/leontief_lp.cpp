#include "torbit/leontief_lp.hpp"

#include "torbit/detail/combinations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace torbit {

using detail::for_each_combination;

namespace {

std::string vertex_to_string(const RatVector& v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << rat_to_string(v.entries[i]);
    os << ")";
    return os.str();
}

// All points of {A x = rhs, x >= 0} whose support is linearly independent;
// for a pointed polyhedron these are exactly the vertices.
std::vector<RatVector> basic_feasible_solutions(const IntMatrix& a, const std::vector<Int>& rhs) {
    const int f = a.cols();
    const int rank = rational_rank(a);
    RatVector b{std::vector<Rat>(rhs.begin(), rhs.end())};

    std::set<std::vector<Rat>> points;
    for_each_combination(f, rank, [&](const std::vector<int>& basis) {
        std::vector<int> fixed;
        std::vector<bool> in_basis(f, false);
        for (int j : basis) in_basis[j] = true;
        for (int j = 0; j < f; ++j)
            if (!in_basis[j]) fixed.push_back(j);
        const auto solution = solve_affine(a, b, fixed);
        if (!solution) return;
        for (const Rat& x : solution->entries)
            if (x < 0) return;
        points.insert(solution->entries);
    });

    std::vector<RatVector> out;
    out.reserve(points.size());
    for (auto& p : points) out.emplace_back(p);
    return out;
}

int positive_coordinates(const RatVector& v) {
    int count = 0;
    for (const Rat& x : v.entries)
        if (x > 0) ++count;
    return count;
}

}  // namespace

LeontiefSystem::LeontiefSystem(IntMatrix a_, std::vector<Int> b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.rows() < 1 || a.cols() < 1)
        throw std::invalid_argument("system needs at least one equation and one unknown");
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side length does not match the equation count");
}

LeontiefSystem parse_system(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("A") || !doc.contains("b"))
        throw std::invalid_argument("system document needs fields 'A' and 'b'");
    const auto& a_doc = doc["A"];
    const auto& b_doc = doc["b"];
    if (!a_doc.is_array() || a_doc.empty() || !b_doc.is_array())
        throw std::invalid_argument("'A' must be a nonempty array of rows, 'b' an array");
    auto to_int = [](const nlohmann::json& x) -> Int {
        if (x.is_number_integer()) return Int(x.get<long long>());
        if (x.is_string()) return Int(x.get<std::string>());
        throw std::invalid_argument("matrix entries must be integers");
    };
    std::vector<std::vector<Int>> rows;
    for (const auto& row : a_doc) {
        if (!row.is_array()) throw std::invalid_argument("'A' rows must be arrays");
        std::vector<Int> r;
        for (const auto& x : row) r.push_back(to_int(x));
        rows.push_back(std::move(r));
    }
    std::vector<Int> b;
    for (const auto& x : b_doc) b.push_back(to_int(x));
    return LeontiefSystem(IntMatrix::from_rows(rows), std::move(b));
}

nlohmann::json serialize(const LeontiefSystem& sys) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < sys.a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < sys.a.cols(); ++j) row.push_back(to_int64(sys.a(i, j)));
        rows.push_back(std::move(row));
    }
    nlohmann::json b = nlohmann::json::array();
    for (const Int& x : sys.b) b.push_back(to_int64(x));
    return nlohmann::json{{"A", std::move(rows)}, {"b", std::move(b)}};
}

std::string to_string(LeontiefClass cls) {
    switch (cls) {
        case LeontiefClass::Totally: return "Totally";
        case LeontiefClass::NonTotally: return "NonTotally";
        case LeontiefClass::NotLeontief: return "NotLeontief";
    }
    return "?";
}

LeontiefCheck check_leontief(const LeontiefSystem& sys) {
    for (int i = 0; i < sys.equations(); ++i)
        if (sys.b[i] < 0)
            return {LeontiefClass::NotLeontief,
                    "b has a negative entry at row " + std::to_string(i)};
    for (int j = 0; j < sys.unknowns(); ++j) {
        int positives = 0;
        for (int i = 0; i < sys.equations(); ++i)
            if (sys.a(i, j) > 0) ++positives;
        if (positives > 1)
            return {LeontiefClass::NotLeontief,
                    "column " + std::to_string(j) + " has " + std::to_string(positives) +
                        " positive entries"};
    }
    if (basic_feasible_solutions(sys.a, sys.b).empty())
        return {LeontiefClass::NotLeontief, "the solution polyhedron is empty"};
    return {recession_rays(sys).empty() ? LeontiefClass::Totally : LeontiefClass::NonTotally, ""};
}

std::vector<RatVector> recession_rays(const LeontiefSystem& sys) {
    // Rays of {A x = 0, x >= 0}, sliced by sum(x) = 1.
    IntMatrix augmented(sys.equations() + 1, sys.unknowns());
    for (int i = 0; i < sys.equations(); ++i)
        for (int j = 0; j < sys.unknowns(); ++j) augmented(i, j) = sys.a(i, j);
    for (int j = 0; j < sys.unknowns(); ++j) augmented(sys.equations(), j) = 1;
    std::vector<Int> rhs(sys.equations() + 1, 0);
    rhs.back() = 1;
    return basic_feasible_solutions(augmented, rhs);
}

PolyhedronReport enumerate_vertices(const LeontiefSystem& sys) {
    PolyhedronReport report;
    report.vertices = basic_feasible_solutions(sys.a, sys.b);
    report.feasible = !report.vertices.empty();
    const std::vector<RatVector> rays = report.feasible ? recession_rays(sys)
                                                        : std::vector<RatVector>{};
    report.bounded = report.feasible && rays.empty();
    if (!report.feasible) return report;

    // dim P = rank of the differences from one vertex plus the ray
    // directions (P = conv(vertices) + cone(rays), P pointed).
    std::vector<std::vector<Int>> directions;
    const RatVector& origin = report.vertices.front();
    auto push_direction = [&](const std::vector<Rat>& diff) {
        Int den_lcm = 1;
        for (const Rat& x : diff) den_lcm = lcm(den_lcm, denominator(x));
        std::vector<Int> row;
        row.reserve(diff.size());
        for (const Rat& x : diff) row.push_back(numerator(x) * (den_lcm / denominator(x)));
        directions.push_back(std::move(row));
    };
    for (std::size_t i = 1; i < report.vertices.size(); ++i) {
        std::vector<Rat> diff(sys.unknowns());
        for (int j = 0; j < sys.unknowns(); ++j)
            diff[j] = report.vertices[i].entries[j] - origin.entries[j];
        push_direction(diff);
    }
    for (const RatVector& ray : rays) push_direction(ray.entries);
    report.dim = directions.empty() ? 0 : rational_rank(IntMatrix::from_rows(directions));

    const int rank = rational_rank(sys.a);
    report.simple = std::all_of(report.vertices.begin(), report.vertices.end(),
                                [&](const RatVector& v) { return positive_coordinates(v) == rank; });
    return report;
}

SimplicialComplex nerve_complex(const LeontiefSystem& sys) {
    const LeontiefCheck check = check_leontief(sys);
    if (check.cls == LeontiefClass::NotLeontief)
        throw std::invalid_argument("nerve requires a Leontief system: " + check.reason);
    const PolyhedronReport report = enumerate_vertices(sys);
    const int rank = rational_rank(sys.a);
    for (const RatVector& v : report.vertices)
        if (positive_coordinates(v) != rank)
            throw std::invalid_argument("nerve requires a nondegenerate system; vertex " +
                                        vertex_to_string(v) + " has " +
                                        std::to_string(positive_coordinates(v)) +
                                        " positive coordinates, expected " + std::to_string(rank));

    std::set<int> touched;
    std::vector<std::vector<int>> facets;
    for (const RatVector& v : report.vertices) {
        std::vector<int> zero_set;
        for (int j = 0; j < sys.unknowns(); ++j)
            if (v.entries[j] == 0) zero_set.push_back(j);
        touched.insert(zero_set.begin(), zero_set.end());
        facets.push_back(std::move(zero_set));
    }
    return SimplicialComplex({touched.begin(), touched.end()}, std::move(facets));
}

LeontiefSystem block_system(const std::vector<int>& k_list, int d) {
    if (k_list.empty())
        throw std::invalid_argument("block system needs at least one block (g >= 1)");
    if (d < 0) throw std::invalid_argument("slack column count must be nonnegative");
    int f = d;
    for (int k : k_list) {
        if (k < 1) throw std::invalid_argument("block sizes must be >= 1");
        f += k;
    }
    IntMatrix a(static_cast<int>(k_list.size()), f);
    int col = 0;
    for (std::size_t row = 0; row < k_list.size(); ++row)
        for (int j = 0; j < k_list[row]; ++j) a(static_cast<int>(row), col++) = 1;
    return LeontiefSystem(std::move(a), std::vector<Int>(k_list.size(), 1));
}

WeightSystem restrict_standard_weights(const LeontiefSystem& sys) {
    // Characters of the subtorus exp(ker A) form the quotient of Z^f by the
    // saturation of the row space of A. With U * A^t * V = D (U unimodular),
    // that saturation is spanned by the first rank(A) columns of U^{-1}, so
    // the quotient coordinates of the i-th standard character are the last
    // f - rank(A) entries of column i of U.
    const IntMatrix at = sys.a.transposed();
    const SnfResult snf = smith_normal_form(at);
    int rank = 0;
    for (const Int& x : snf.diagonal())
        if (x != 0) ++rank;
    const int f = sys.unknowns();
    std::vector<std::vector<Int>> weights;
    weights.reserve(f);
    for (int i = 0; i < f; ++i) {
        std::vector<Int> w(f - rank);
        for (int row = rank; row < f; ++row) w[row - rank] = snf.u(row, i);
        weights.push_back(std::move(w));
    }
    return WeightSystem(f - rank, std::move(weights), 0);
}

nlohmann::json serialize(const PolyhedronReport& report) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const RatVector& v : report.vertices) {
        nlohmann::json coords = nlohmann::json::array();
        for (const Rat& x : v.entries) coords.push_back(rat_to_string(x));
        vertices.push_back(std::move(coords));
    }
    return nlohmann::json{{"feasible", report.feasible},
                          {"vertices", std::move(vertices)},
                          {"bounded", report.bounded},
                          {"dim", report.dim},
                          {"simple", report.simple}};
}

}  // namespace torbit
