#pragma once

#include "torbit/weights.hpp"

#include <limits>
#include <string>
#include <vector>

namespace torbit::selfcheck {

/**
 * Exhaustive verification that the structural and pseudomanifold
 * classification routes agree, over every effective weight system whose
 * weights have entries in [-entry_bound, entry_bound], lattice rank at most
 * max_k, and at most max_r weights.
 *
 * Weight systems that differ only by scaling individual weights or permuting
 * them produce the same verdicts on both routes, so the enumeration runs
 * over multisets of primitive sign-normalized lines. Both classifiers are
 * functions of the labeled independence structure of the system; sharing one
 * verdict pair per distinct structure is therefore lossless. Every distinct
 * structure is checked through the real classifier implementations once, and
 * a deterministic subsample of the enumerated systems is re-checked directly
 * to pin the memoized results to the implementations.
 */
struct SweepOptions {
    int max_k = 3;
    int max_r = 6;
    int entry_bound = 2;
    double budget_seconds = std::numeric_limits<double>::infinity();
    bool check_homology = false;            // wedge-concentration checks per class
    unsigned long long subsample_stride = 9973;
    bool inject_fault = false;              // corrupts one verdict; for negative tests
};

struct RandomOptions {
    int count = 10000;
    int max_k = 4;
    int max_r = 7;
    int entry_bound = 3;
    unsigned long long seed = 0x5eed5eedULL;
    int min_r = 1;
    bool check_homology = false;
    bool inject_fault = false;
};

struct CheckResult {
    unsigned long long systems_checked = 0;
    unsigned long long distinct_classes = 0;
    unsigned long long disagreements = 0;
    unsigned long long homology_failures = 0;
    unsigned long long subsample_checked = 0;
    unsigned long long subsample_mismatches = 0;
    bool completed = true;   // false when the budget truncated the sweep
    double coverage = 1.0;   // fraction of the enumeration processed
    double seconds = 0.0;
    std::vector<std::string> failures;  // capped; one line per violation

    bool clean() const {
        return disagreements == 0 && homology_failures == 0 && subsample_mismatches == 0;
    }
};

CheckResult route_equivalence_sweep(const SweepOptions& options);

/// Same checks on pseudo-random systems (entries uniform in the bound, zero
/// weights and noneffective systems included on purpose: they exercise the
/// canonicalization and auto-reduction paths).
CheckResult random_systems_check(const RandomOptions& options);

/// Primitive sign-normalized vectors with entries in [-bound, bound],
/// sorted; the line table backing the exhaustive sweep.
std::vector<std::vector<int>> line_table(int k, int bound);

/// Wedge-concentration checks for the independence complex of ws given the
/// verdicts of both routes: reduced homology torsion-free, concentrated in
/// degree rank-1, top rank 1 exactly for a closed verdict, everything zero
/// for a boundary verdict. Returns violation messages (empty when clean).
std::vector<std::string> homology_violations(const WeightSystem& ws);

}  // namespace torbit::selfcheck
