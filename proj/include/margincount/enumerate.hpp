#ifndef MARGINCOUNT_ENUMERATE_HPP
#define MARGINCOUNT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "margincount/core.hpp"

namespace margincount {

using BigCount = mpz_class;

enum class Mode { Binary, Natural };

// Pascal's triangle up to a fixed n; all arguments the recursion needs stay
// within the number of nonempty columns.
class BinomialTable {
public:
    explicit BinomialTable(int n);
    // C(n, k); zero when k < 0 or k > n.
    const BigCount& operator()(int n, int k) const;
    int limit() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigCount>> rows_;
    BigCount zero_;
};

struct MemoStats {
    std::uint64_t nodes = 0;   // distinct DP states expanded
    std::uint64_t terms = 0;   // recursion terms summed
    std::uint64_t pruned = 0;  // states settled by the Gale-Ryser check
};

/* Cache of the recursion: (rows consumed j, canonical counts vector) -> count
 * of matrices filling the remaining rows. Built once by count(); immutable
 * afterwards and safe for shared concurrent reads. */
class MemoTable {
public:
    MemoTable(std::vector<int> sorted_rows, Mode mode, int n_columns, bool gale_ryser_prune = true);

    Mode mode() const { return mode_; }
    const std::vector<int>& sorted_rows() const { return sorted_rows_; }
    const BinomialTable& binomials() const { return binomials_; }
    bool pruning() const { return prune_; }

    const BigCount* find(int rows_consumed, const CountsVector& state) const;
    const BigCount& store(int rows_consumed, const CountsVector& state, BigCount value);

    MemoStats& stats() { return stats_; }
    const MemoStats& stats() const { return stats_; }
    std::size_t size() const { return map_.size(); }

    void for_each(const std::function<void(int, const CountsVector&, const BigCount&)>& fn) const;

private:
    struct Key {
        int rows_consumed;
        CountsVector state;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return CountsVectorHash{}(k.state) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(k.rows_consumed);
        }
    };
    std::unordered_map<Key, BigCount, KeyHash> map_;
    std::vector<int> sorted_rows_;
    Mode mode_;
    BinomialTable binomials_;
    bool prune_;
    MemoStats stats_;
};

struct CountResult {
    BigCount count;
    std::shared_ptr<const MemoTable> table;  // null when the margin sums differ
    std::vector<int> row_order;  // row_order[j] = input index of the j-th sorted row
};

/* Exact number of binary (or N-valued) matrices with the given margins.
 * Rows are sorted descending internally; the count is permutation invariant.
 * A sum mismatch yields 0, not an error. */
CountResult count(const MarginSpec& spec, Mode mode, bool gale_ryser_prune = true);

// Count for the residual problem (rows j.. of table.sorted_rows(), column
// multiplicities r), memoized in the table.
const BigCount& count_state(int j, const CountsVector& r, MemoTable& table);

/* All s with sum(s) = k and 0 <= s_i <= r_i, in lexicographic order of parts.
 * The sampler's child walk relies on this order. */
void bounded_compositions(const CountsVector& r, int k,
                          const std::function<void(const Composition&)>& fn);

/* All s with sum(s) = k and s_i <= r_i + s_{i+1} (s beyond the end taken as
 * zero). Parts are assigned from the top index downward; the emission order
 * is deterministic and shared with the sampler. */
void shifted_compositions(const CountsVector& r, int k,
                          const std::function<void(const Composition&)>& fn);

// Dispatch on mode: bounded (Binary) or shifted (Natural).
void compositions(const CountsVector& r, int k, Mode mode,
                  const std::function<void(const Composition&)>& fn);

/* Product of per-index binomials: C(r_i, s_i) in Binary mode,
 * C(r_i + s_{i+1}, s_i) in Natural mode. Throws on inadmissible s. */
BigCount coefficient(const CountsVector& r, const Composition& s, Mode mode,
                     const BinomialTable& binomials);

}  // namespace margincount

#endif
