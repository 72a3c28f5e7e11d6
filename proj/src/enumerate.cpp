#include "margincount/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace margincount {

BinomialTable::BinomialTable(int n) : zero_(0) {
    if (n < 0) n = 0;
    rows_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        rows_[i].resize(i + 1);
        rows_[i][0] = 1;
        rows_[i][i] = 1;
        for (int j = 1; j < i; ++j) rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
    }
}

const BigCount& BinomialTable::operator()(int n, int k) const {
    if (k < 0 || k > n) return zero_;
    if (n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("BinomialTable: argument beyond precomputed range");
    return rows_[n][k];
}

MemoTable::MemoTable(std::vector<int> sorted_rows, Mode mode, int n_columns, bool gale_ryser_prune)
    : sorted_rows_(std::move(sorted_rows)),
      mode_(mode),
      binomials_(n_columns),
      prune_(gale_ryser_prune) {}

const BigCount* MemoTable::find(int rows_consumed, const CountsVector& state) const {
    auto it = map_.find(Key{rows_consumed, state});
    return it == map_.end() ? nullptr : &it->second;
}

const BigCount& MemoTable::store(int rows_consumed, const CountsVector& state, BigCount value) {
    return map_.emplace(Key{rows_consumed, state}, std::move(value)).first->second;
}

void MemoTable::for_each(
    const std::function<void(int, const CountsVector&, const BigCount&)>& fn) const {
    for (const auto& [key, value] : map_) fn(key.rows_consumed, key.state, value);
}

void bounded_compositions(const CountsVector& r, int k,
                          const std::function<void(const Composition&)>& fn) {
    if (k < 0) throw std::invalid_argument("bounded_compositions: negative sum");
    const int b = r.max_value();
    // suffix_cap[i] = r_{i+1} + ... + r_b
    std::vector<long> suffix_cap(b + 1, 0);
    for (int i = b - 1; i >= 0; --i) suffix_cap[i] = suffix_cap[i + 1] + r.at(i + 1);
    if (k > suffix_cap[0]) return;

    Composition s(b, 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == b) {
            if (rem == 0) fn(s);
            return;
        }
        const int lo = std::max(0, rem - static_cast<int>(suffix_cap[idx + 1]));
        const int hi = std::min(r.at(idx + 1), rem);
        for (int v = lo; v <= hi; ++v) {
            s[idx] = v;
            self(self, idx + 1, rem - v);
        }
        s[idx] = 0;
    };
    rec(rec, 0, k);
}

void shifted_compositions(const CountsVector& r, int k,
                          const std::function<void(const Composition&)>& fn) {
    if (k < 0) throw std::invalid_argument("shifted_compositions: negative sum");
    const int b = r.max_value();
    if (b == 0) {
        if (k == 0) fn(Composition{});
        return;
    }
    /* Parts are assigned from index b down to 1 so the bound
     * s_i <= r_i + s_{i+1} is available when s_i is chosen. Indices 1..l can
     * absorb at most sum_{i<=l} i*r_i plus l per unit of carry into level l
     * (a carried column of height l holds l units), which makes the pruning
     * bound exact. */
    std::vector<long> max_below(b + 1, 0);
    for (int l = 1; l <= b; ++l)
        max_below[l] = max_below[l - 1] + static_cast<long>(l) * r.at(l);

    Composition s(b, 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        // idx is 1-based; s_idx and everything below remain to be assigned.
        if (idx == 1) {
            const int s2 = b >= 2 ? s[1] : 0;
            if (rem <= r.at(1) + s2) {
                s[0] = rem;
                fn(s);
                s[0] = 0;
            }
            return;
        }
        const int carry = idx < b ? s[idx] : 0;  // s_{idx+1}
        const int hi = std::min(r.at(idx) + carry, rem);
        for (int v = hi; v >= 0; --v) {
            const long rem_next = rem - v;
            if (rem_next > max_below[idx - 1] + static_cast<long>(v) * (idx - 1)) continue;
            s[idx - 1] = v;
            self(self, idx - 1, static_cast<int>(rem_next));
        }
        s[idx - 1] = 0;
    };
    rec(rec, b, k);
}

void compositions(const CountsVector& r, int k, Mode mode,
                  const std::function<void(const Composition&)>& fn) {
    if (mode == Mode::Binary)
        bounded_compositions(r, k, fn);
    else
        shifted_compositions(r, k, fn);
}

BigCount coefficient(const CountsVector& r, const Composition& s, Mode mode,
                     const BinomialTable& binomials) {
    BigCount product = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        const int value = static_cast<int>(i) + 1;
        const int top = mode == Mode::Binary
                            ? r.at(value)
                            : r.at(value) + (i + 1 < s.size() ? s[i + 1] : 0);
        if (s[i] > top) throw std::invalid_argument("coefficient: inadmissible composition");
        product *= binomials(top, s[i]);
    }
    return product;
}

const BigCount& count_state(int j, const CountsVector& r, MemoTable& table) {
    if (const BigCount* cached = table.find(j, r)) return *cached;
    table.stats().nodes += 1;

    const auto& rows = table.sorted_rows();
    const int m = static_cast<int>(rows.size());
    if (j == m) {
        assert(r.empty() && "terminal state must have no remaining column mass");
        return table.store(j, r, 1);
    }
    if (table.mode() == Mode::Binary && table.pruning()) {
        std::span<const int> remaining(rows.data() + j, rows.size() - j);
        if (!gale_ryser_feasible_sorted(remaining, r)) {
            table.stats().pruned += 1;
            return table.store(j, r, 0);
        }
    }

    BigCount sum = 0;
    compositions(r, rows[j], table.mode(), [&](const Composition& s) {
        table.stats().terms += 1;
        CountsVector child = reduce(r, s);
        const BigCount& child_count = count_state(j + 1, child, table);
        if (child_count != 0) sum += coefficient(r, s, table.mode(), table.binomials()) * child_count;
    });
    return table.store(j, r, std::move(sum));
}

CountResult count(const MarginSpec& spec, Mode mode, bool gale_ryser_prune) {
    for (int v : spec.row_sums)
        if (v < 0) throw std::invalid_argument("count: negative row sum");
    for (int v : spec.col_sums)
        if (v < 0) throw std::invalid_argument("count: negative column sum");

    std::vector<int> order(spec.row_sums.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return spec.row_sums[a] > spec.row_sums[b]; });
    std::vector<int> sorted_rows(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) sorted_rows[j] = spec.row_sums[order[j]];

    if (spec.row_total() != spec.col_total())
        return CountResult{BigCount(0), nullptr, std::move(order)};

    const int n0 = static_cast<int>(
        std::count_if(spec.col_sums.begin(), spec.col_sums.end(), [](int v) { return v > 0; }));
    auto table = std::make_shared<MemoTable>(std::move(sorted_rows), mode, n0, gale_ryser_prune);
    BigCount total = count_state(0, counts_vector(spec.col_sums), *table);
    return CountResult{std::move(total), std::move(table), std::move(order)};
}

}  // namespace margincount
