#pragma once

#include <stdexcept>
#include <vector>

namespace hwv {

/// Exact binomial coefficient. Throws std::overflow_error instead of wrapping.
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        // result * (n - k + i) always divides evenly at this point
        long long numerator = n - k + i;
        if (result > ((long long)9e18) / numerator)
            throw std::overflow_error("binomial coefficient overflow");
        result = result * numerator / i;
    }
    return result;
}

/// All strictly increasing m-element subsets of {1,...,n}, in lexicographic order.
inline std::vector<std::vector<int>> increasing_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n) return out;
    std::vector<int> current(m);
    for (int i = 0; i < m; ++i) current[i] = i + 1;
    while (true) {
        out.push_back(current);
        int i = m - 1;
        while (i >= 0 && current[i] == n - m + i + 1) --i;
        if (i < 0) break;
        ++current[i];
        for (int j = i + 1; j < m; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

}  // namespace hwv
