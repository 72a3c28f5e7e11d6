#include "margincount/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace margincount {

CountsVector counts_vector(std::span<const int> q) {
    int maxv = 0;
    for (int v : q) {
        if (v < 0) throw std::invalid_argument("counts_vector: negative entry");
        maxv = std::max(maxv, v);
    }
    std::vector<int> counts(maxv, 0);
    for (int v : q)
        if (v > 0) ++counts[v - 1];
    return CountsVector(std::move(counts));
}

std::vector<int> conjugate(std::span<const int> r) {
    int maxv = 0;
    for (int v : r) maxv = std::max(maxv, v);
    std::vector<int> result(maxv, 0);
    for (int v : r)
        for (int i = 0; i < v; ++i) ++result[i];
    return result;
}

CountsVector reduce(const CountsVector& r, const Composition& s) {
    const std::size_t len = std::max(r.data().size(), s.size());
    std::vector<int> result(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        int si = i < s.size() ? s[i] : 0;
        int snext = i + 1 < s.size() ? s[i + 1] : 0;
        int v = r.at(static_cast<int>(i) + 1) - si + snext;
        if (v < 0) throw std::invalid_argument("reduce: composition exceeds its bound");
        result[i] = v;
    }
    return CountsVector(std::move(result));
}

long weight(const CountsVector& r) {
    long w = 0;
    for (int i = 1; i <= r.max_value(); ++i) w += static_cast<long>(i) * r.at(i);
    return w;
}

bool gale_ryser_feasible_sorted(std::span<const int> p_desc, const CountsVector& q_counts) {
    const int m = static_cast<int>(p_desc.size());
    const int b = q_counts.max_value();
    // The conjugate q'_i is the suffix sum of the multiplicities, taken as
    // zero beyond b; its prefix sums are compared against those of p.
    long p_prefix = 0;
    long q_prefix = 0;  // sum of q'_1..q'_j == sum over columns of min(q_j, j)
    long suffix = q_counts.total_columns();
    for (int j = 1; j <= m; ++j) {
        p_prefix += p_desc[j - 1];
        q_prefix += suffix;
        if (j <= b) suffix -= q_counts.at(j);
        if (j < m && p_prefix > q_prefix) return false;
    }
    // Equality at m: total row mass matches the truncated conjugate sum, and
    // no column is taller than the number of rows.
    return p_prefix == q_prefix && p_prefix == weight(q_counts);
}

bool gale_ryser_feasible(std::span<const int> p, const CountsVector& q_counts) {
    std::vector<int> sorted(p.begin(), p.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return gale_ryser_feasible_sorted(sorted, q_counts);
}

}  // namespace margincount
