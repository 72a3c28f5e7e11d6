#ifndef MARGINCOUNT_TESTS_COMMON_HPP
#define MARGINCOUNT_TESTS_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "margincount/enumerate.hpp"
#include "margincount/sample.hpp"

namespace margincount::testing {

inline MarginSpec toy_spec() { return MarginSpec{{2, 2, 1, 1}, {3, 2, 1}}; }

/* Random margins with matched sums: draw a random matrix of the requested
 * shape and take its margins, so the instance is always realizable. */
inline MarginSpec random_feasible_spec(std::mt19937& gen, int max_rows, int max_cols,
                                       int max_entry, Mode mode) {
    std::uniform_int_distribution<int> rows_dist(1, max_rows);
    std::uniform_int_distribution<int> cols_dist(1, max_cols);
    const int m = rows_dist(gen);
    const int n = cols_dist(gen);
    std::uniform_int_distribution<int> entry(0, mode == Mode::Binary ? 1 : max_entry);
    MarginSpec spec{std::vector<int>(m, 0), std::vector<int>(n, 0)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const int e = entry(gen);
            spec.row_sums[i] += e;
            spec.col_sums[j] += e;
        }
    return spec;
}

// Arbitrary margins, sums not necessarily matched; entries in [0, max_entry].
inline MarginSpec random_spec(std::mt19937& gen, int max_rows, int max_cols, int max_entry) {
    std::uniform_int_distribution<int> rows_dist(1, max_rows);
    std::uniform_int_distribution<int> cols_dist(1, max_cols);
    std::uniform_int_distribution<int> entry(0, max_entry);
    MarginSpec spec{std::vector<int>(rows_dist(gen), 0), std::vector<int>(cols_dist(gen), 0)};
    for (auto& v : spec.row_sums) v = entry(gen);
    for (auto& v : spec.col_sums) v = entry(gen);
    return spec;
}

// Row-major byte key for matrix identity in frequency maps.
inline std::string matrix_key(const Matrix& m) {
    std::string key;
    for (const auto& row : m)
        for (int v : row) key.push_back(static_cast<char>(v));
    return key;
}

inline bool has_margins(const Matrix& m, const MarginSpec& spec) {
    if (static_cast<int>(m.size()) != spec.rows()) return false;
    std::vector<int> cols(spec.cols(), 0);
    for (int i = 0; i < spec.rows(); ++i) {
        if (static_cast<int>(m[i].size()) != spec.cols()) return false;
        int row = 0;
        for (int j = 0; j < spec.cols(); ++j) {
            if (m[i][j] < 0) return false;
            row += m[i][j];
            cols[j] += m[i][j];
        }
        if (row != spec.row_sums[i]) return false;
    }
    return cols == spec.col_sums;
}

inline double chi_square_statistic(const std::map<std::string, long>& observed, long draws,
                                   std::size_t categories) {
    const double expected = static_cast<double>(draws) / static_cast<double>(categories);
    double stat = 0.0;
    long seen = 0;
    for (const auto& [key, freq] : observed) {
        const double diff = static_cast<double>(freq) - expected;
        stat += diff * diff / expected;
        seen += freq;
    }
    // Categories never observed contribute their full expectation.
    stat += static_cast<double>(categories - observed.size()) * expected;
    (void)seen;
    return stat;
}

/* 0.999 chi-square quantile via the Wilson-Hilferty cube approximation;
 * adequate for the randomized-instance goodness-of-fit checks. */
inline double chi_square_crit_999(int dof) {
    const double z = 3.090232;  // standard normal 0.999 quantile
    const double t = 2.0 / (9.0 * dof);
    const double c = 1.0 - t + z * std::sqrt(t);
    return dof * c * c * c;
}

}  // namespace margincount::testing

#endif
