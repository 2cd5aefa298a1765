#include "torbit/selfcheck.hpp"

#include "torbit/classifier.hpp"
#include "torbit/complex.hpp"
#include "torbit/matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace torbit::selfcheck {

namespace {

constexpr int kMaxSweepRank = 4;
constexpr int kMaxSweepSize = 6;  // independence flags of 2^r subsets must fit 64 bits
constexpr std::size_t kMaxFailureMessages = 25;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Integer echelon basis of the span of a subset of lines; entries stay tiny
// (minors of vectors with single-digit entries), so int64 is exact here.
struct Echelon {
    int rank = 0;
    std::array<std::array<std::int64_t, kMaxSweepRank>, kMaxSweepRank> rows{};
};

// Reduces v against the echelon and appends it when it does not vanish.
Echelon extend(const Echelon& base, std::array<std::int64_t, kMaxSweepRank> v, int dim) {
    Echelon out = base;
    for (int r = 0; r < out.rank; ++r) {
        int pivot = -1;
        for (int c = 0; c < dim; ++c)
            if (out.rows[r][c] != 0) {
                pivot = c;
                break;
            }
        if (pivot < 0 || v[pivot] == 0) continue;
        const std::int64_t a = out.rows[r][pivot];
        const std::int64_t b = v[pivot];
        for (int c = 0; c < dim; ++c) v[c] = v[c] * a - out.rows[r][c] * b;
        std::int64_t g = 0;
        for (int c = 0; c < dim; ++c) g = std::gcd(g, v[c]);
        if (g > 1)
            for (int c = 0; c < dim; ++c) v[c] /= g;
    }
    bool zero = true;
    for (int c = 0; c < dim; ++c)
        if (v[c] != 0) {
            zero = false;
            break;
        }
    if (!zero && out.rank < kMaxSweepRank) {
        // Keep rows ordered by pivot position.
        int insert_at = out.rank;
        auto pivot_of = [&](const std::array<std::int64_t, kMaxSweepRank>& row) {
            for (int c = 0; c < dim; ++c)
                if (row[c] != 0) return c;
            return dim;
        };
        const int pv = pivot_of(v);
        for (int r = 0; r < out.rank; ++r)
            if (pivot_of(out.rows[r]) > pv) {
                insert_at = r;
                break;
            }
        for (int r = out.rank; r > insert_at; --r) out.rows[r] = out.rows[r - 1];
        out.rows[insert_at] = v;
        ++out.rank;
    }
    return out;
}

struct ClassOutcome {
    OrbitKind kind_structural{};
    OrbitKind kind_pseudo{};
    int dim_structural = 0;
    int dim_pseudo = 0;
    bool agree = false;
    bool homology_clean = true;
};

void record_failure(CheckResult& result, const std::string& message) {
    if (result.failures.size() < kMaxFailureMessages) result.failures.push_back(message);
}

std::string describe_system(const WeightSystem& ws) {
    std::ostringstream os;
    os << "k=" << ws.lattice_rank << " l=" << ws.trivial_dim << " weights=[";
    for (std::size_t i = 0; i < ws.weights.size(); ++i) {
        os << (i ? "," : "") << "(";
        for (std::size_t j = 0; j < ws.weights[i].size(); ++j)
            os << (j ? "," : "") << ws.weights[i][j];
        os << ")";
    }
    os << "]";
    return os.str();
}

// Runs both production routes and the optional homology checks.
ClassOutcome evaluate_class(const WeightSystem& ws, bool check_homology, CheckResult& result) {
    ClassOutcome out;
    const OrbitVerdict structural = classify_structural(ws);
    const OrbitVerdict pseudo = classify_pseudomanifold(ws);
    out.kind_structural = structural.kind;
    out.kind_pseudo = pseudo.kind;
    out.dim_structural = structural.model_dim;
    out.dim_pseudo = pseudo.model_dim;
    out.agree = structural.kind == pseudo.kind && structural.model_dim == pseudo.model_dim;
    if (out.agree && structural.leontief && pseudo.leontief) {
        auto blocks_a = structural.leontief->blocks;
        auto blocks_b = pseudo.leontief->blocks;
        std::sort(blocks_a.begin(), blocks_a.end());
        std::sort(blocks_b.begin(), blocks_b.end());
        out.agree = structural.leontief->d == pseudo.leontief->d && blocks_a == blocks_b;
    }
    if (!out.agree)
        record_failure(result, "route disagreement on " + describe_system(ws) + ": " +
                                   to_string(structural.kind) + " dim " +
                                   std::to_string(structural.model_dim) + " vs " +
                                   to_string(pseudo.kind) + " dim " +
                                   std::to_string(pseudo.model_dim));
    if (check_homology) {
        const auto violations = homology_violations(ws);
        out.homology_clean = violations.empty();
        for (const auto& v : violations) record_failure(result, v);
    }
    return out;
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    unsigned long long out = 1;
    for (unsigned long long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

std::vector<std::vector<int>> line_table(int k, int bound) {
    std::vector<std::vector<int>> lines;
    std::vector<int> v(k, -bound);
    for (;;) {
        int first_nonzero = -1;
        int g = 0;
        for (int i = 0; i < k; ++i) {
            if (v[i] != 0 && first_nonzero < 0) first_nonzero = i;
            g = std::gcd(g, std::abs(v[i]));
        }
        if (first_nonzero >= 0 && v[first_nonzero] > 0 && g == 1) lines.push_back(v);
        int i = k - 1;
        while (i >= 0 && v[i] == bound) v[i--] = -bound;
        if (i < 0) break;
        ++v[i];
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::vector<std::string> homology_violations(const WeightSystem& ws) {
    std::vector<std::string> out;
    const WeightSystem sys = effective_reduction(ws).system;
    if (sys.count() == 0) return out;

    const LinearMatroid m(sys);
    std::vector<int> vertices(m.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    const SimplicialComplex k(vertices, m.bases());
    const auto homology = reduced_homology(k);
    const int top = m.rank() - 1;

    const OrbitVerdict verdict = classify_structural(sys);
    for (const auto& group : homology) {
        if (!group.torsion.empty())
            out.push_back("torsion in degree " + std::to_string(group.degree) + " for " +
                          describe_system(sys));
        if (group.degree != top && group.free_rank != 0)
            out.push_back("homology outside the top degree (degree " +
                          std::to_string(group.degree) + ") for " + describe_system(sys));
        if (group.degree == top) {
            const long long expected = verdict.kind == OrbitKind::ClosedManifold      ? 1
                                       : verdict.kind == OrbitKind::ManifoldWithBoundary ? 0
                                                                                         : -1;
            if (expected >= 0 && group.free_rank != expected)
                out.push_back("top homology rank " + std::to_string(group.free_rank) +
                              ", expected " + std::to_string(expected) + " for " +
                              describe_system(sys));
        }
    }
    return out;
}

CheckResult route_equivalence_sweep(const SweepOptions& options) {
    if (options.max_k > kMaxSweepRank || options.max_r > kMaxSweepSize)
        throw std::invalid_argument("sweep supports lattice rank <= 4 and at most 6 weights");
    Clock clock;
    CheckResult result;

    unsigned long long total_nodes = 0;
    std::vector<std::vector<std::vector<int>>> tables(options.max_k + 1);
    for (int k = 1; k <= options.max_k; ++k) {
        tables[k] = line_table(k, options.entry_bound);
        for (int r = 1; r <= options.max_r; ++r)
            total_nodes += binomial(tables[k].size() + r - 1, r);
    }

    unsigned long long visited_nodes = 0;
    bool fault_pending = options.inject_fault;
    bool out_of_budget = false;

    for (int k = 1; k <= options.max_k && !out_of_budget; ++k) {
        const auto& lines = tables[k];
        std::unordered_map<std::uint64_t, ClassOutcome> memo[kMaxSweepSize + 1];

        std::array<Echelon, 1u << kMaxSweepSize> state{};
        std::vector<int> chosen;

        auto make_system = [&]() {
            std::vector<std::vector<Int>> ws;
            ws.reserve(chosen.size());
            for (int idx : chosen) {
                std::vector<Int> w(k);
                for (int c = 0; c < k; ++c) w[c] = lines[idx][c];
                ws.push_back(std::move(w));
            }
            return WeightSystem(k, std::move(ws), 0);
        };

        auto process_node = [&]() {
            const int r = static_cast<int>(chosen.size());
            if (state[(1u << r) - 1].rank != k) return;  // not effective at rank k
            ++result.systems_checked;

            std::uint64_t imask = 0;
            for (unsigned m = 0; m < (1u << r); ++m)
                if (state[m].rank == std::popcount(m)) imask |= std::uint64_t(1) << m;

            auto& classes = memo[r];
            auto it = classes.find(imask);
            if (it == classes.end()) {
                ClassOutcome outcome = evaluate_class(make_system(), options.check_homology, result);
                if (fault_pending) {
                    outcome.agree = false;
                    record_failure(result, "injected fault");
                    fault_pending = false;
                }
                it = classes.emplace(imask, outcome).first;
                ++result.distinct_classes;
            }
            if (!it->second.agree) ++result.disagreements;
            if (!it->second.homology_clean) ++result.homology_failures;

            if (options.subsample_stride > 0 &&
                result.systems_checked % options.subsample_stride == 0) {
                ++result.subsample_checked;
                CheckResult scratch;
                const ClassOutcome direct =
                    evaluate_class(make_system(), /*check_homology=*/false, scratch);
                if (direct.kind_structural != it->second.kind_structural ||
                    direct.kind_pseudo != it->second.kind_pseudo ||
                    direct.dim_structural != it->second.dim_structural ||
                    direct.dim_pseudo != it->second.dim_pseudo) {
                    ++result.subsample_mismatches;
                    record_failure(result,
                                   "memoized verdicts differ from direct run on " +
                                       describe_system(make_system()));
                }
            }
        };

        auto dfs = [&](auto&& self, int min_line) -> void {
            if (out_of_budget) return;
            const int depth = static_cast<int>(chosen.size());
            if (depth == options.max_r) return;
            for (int idx = min_line; idx < static_cast<int>(lines.size()); ++idx) {
                if (out_of_budget) return;
                std::array<std::int64_t, kMaxSweepRank> v{};
                for (int c = 0; c < k; ++c) v[c] = lines[idx][c];
                for (unsigned m = 0; m < (1u << depth); ++m)
                    state[m | (1u << depth)] = extend(state[m], v, k);
                chosen.push_back(idx);
                ++visited_nodes;
                process_node();
                if ((visited_nodes & 0xffff) == 0 && clock.elapsed() > options.budget_seconds)
                    out_of_budget = true;
                self(self, idx);
                chosen.pop_back();
            }
        };
        state[0] = Echelon{};
        dfs(dfs, 0);
    }

    result.completed = !out_of_budget;
    result.coverage = total_nodes == 0
                          ? 1.0
                          : static_cast<double>(visited_nodes) / static_cast<double>(total_nodes);
    if (result.completed) result.coverage = 1.0;
    result.seconds = clock.elapsed();
    return result;
}

CheckResult random_systems_check(const RandomOptions& options) {
    Clock clock;
    CheckResult result;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> rank_dist(1, options.max_k);
    std::uniform_int_distribution<int> count_dist(options.min_r, options.max_r);
    std::uniform_int_distribution<int> entry_dist(-options.entry_bound, options.entry_bound);
    std::uniform_int_distribution<int> trivial_dist(0, 2);

    bool fault_pending = options.inject_fault;
    for (int trial = 0; trial < options.count; ++trial) {
        const int k = rank_dist(rng);
        const int r = count_dist(rng);
        std::vector<std::vector<Int>> weights(r, std::vector<Int>(k));
        for (auto& w : weights)
            for (Int& x : w) x = entry_dist(rng);
        const WeightSystem ws(k, std::move(weights), trivial_dist(rng));

        ++result.systems_checked;
        ++result.distinct_classes;
        ClassOutcome outcome = evaluate_class(ws, options.check_homology, result);
        if (fault_pending) {
            outcome.agree = false;
            record_failure(result, "injected fault");
            fault_pending = false;
        }
        if (!outcome.agree) ++result.disagreements;
        if (!outcome.homology_clean) ++result.homology_failures;
    }
    result.seconds = clock.elapsed();
    return result;
}

}  // namespace torbit::selfcheck
