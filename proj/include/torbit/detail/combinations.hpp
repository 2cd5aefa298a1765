#pragma once

#include <numeric>
#include <vector>

namespace torbit::detail {

/// Emits all size-k index subsets of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace torbit::detail
