#ifndef MARGINCOUNT_CORE_HPP
#define MARGINCOUNT_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace margincount {

// Row and column sums prescribing a family of matrices.
struct MarginSpec {
    std::vector<int> row_sums;
    std::vector<int> col_sums;

    long row_total() const { return std::accumulate(row_sums.begin(), row_sums.end(), 0L); }
    long col_total() const { return std::accumulate(col_sums.begin(), col_sums.end(), 0L); }
    int rows() const { return static_cast<int>(row_sums.size()); }
    int cols() const { return static_cast<int>(col_sums.size()); }
};

/* Vector of column-sum multiplicities: at(i) is the number of columns whose
 * current sum equals i (i >= 1). Canonical form trims trailing zeros, so
 * equality and hashing coincide with mathematical identity. */
class CountsVector {
public:
    CountsVector() = default;
    explicit CountsVector(std::vector<int> counts) : counts_(std::move(counts)) { trim(); }

    // 1-based by value; zero outside the stored range.
    int at(int value) const {
        return (value >= 1 && value <= max_value()) ? counts_[value - 1] : 0;
    }
    int max_value() const { return static_cast<int>(counts_.size()); }
    bool empty() const { return counts_.empty(); }
    const std::vector<int>& data() const { return counts_; }

    long total_columns() const { return std::accumulate(counts_.begin(), counts_.end(), 0L); }

    bool operator==(const CountsVector&) const = default;

private:
    void trim() {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    }
    std::vector<int> counts_;
};

struct CountsVectorHash {
    std::size_t operator()(const CountsVector& r) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int c : r.data()) h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(c);
        return h;
    }
};

// A composition: non-negative parts, indexed alongside a CountsVector.
using Composition = std::vector<int>;

// Multiplicity vector of q; zero entries of q contribute to no bucket.
CountsVector counts_vector(std::span<const int> q);

// Partition conjugate: result[i-1] = #{j : r_j >= i}, for i = 1..max(r).
std::vector<int> conjugate(std::span<const int> r);

/* r reduce s = r - s + Ls (L the left shift). Throws std::invalid_argument
 * if any entry of the result would be negative. */
CountsVector reduce(const CountsVector& r, const Composition& s);

// W(r) = sum over i of i * r_i.
long weight(const CountsVector& r);

/* Gale-Ryser: true iff a binary matrix exists with row sums p and column
 * multiplicities q_counts. Sorts its own copy of p descending. */
bool gale_ryser_feasible(std::span<const int> p, const CountsVector& q_counts);

// Same check for p already sorted in non-increasing order.
bool gale_ryser_feasible_sorted(std::span<const int> p_desc, const CountsVector& q_counts);

}  // namespace margincount

#endif
