#include "margincount/sample.hpp"

#include <algorithm>
#include <cassert>

namespace margincount {

BigCount uniform_bigint(RandomSource& rng, const BigCount& k) {
    if (k < 1) throw std::invalid_argument("uniform_bigint: k must be at least 1");
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    const std::size_t nwords = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (nwords - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);

    std::vector<std::uint64_t> words(nwords);
    BigCount value;
    for (;;) {
        for (auto& w : words) w = rng.next_word();
        words.back() &= top_mask;
        mpz_import(value.get_mpz_t(), nwords, -1, sizeof(std::uint64_t), 0, 0, words.data());
        if (value < k) return value + 1;
    }
}

int uniform_index(RandomSource& rng, int n) {
    return static_cast<int>(uniform_bigint(rng, BigCount(n)).get_si()) - 1;
}

SamplerContext prepare(const MarginSpec& spec, Mode mode, CountResult counted) {
    if (counted.count == 0)
        throw InfeasibleMarginsError("infeasible margins: no matrix has these row and column sums");
    return SamplerContext{spec, mode, std::move(counted.table), std::move(counted.count),
                          std::move(counted.row_order)};
}

SamplerContext prepare(const MarginSpec& spec, Mode mode) {
    return prepare(spec, mode, count(spec, mode));
}

std::vector<int> ColumnState::bucket(int value) const {
    std::vector<int> indices;
    for (int j = 0; j < static_cast<int>(sums.size()); ++j)
        if (sums[j] == value) indices.push_back(j);
    return indices;
}

Composition select_child(int j, const CountsVector& r, RandomSource& rng,
                         const SamplerContext& ctx) {
    const MemoTable& table = *ctx.table;
    const BigCount* state_count = table.find(j, r);
    assert(state_count && *state_count > 0 && "select_child requires an expanded, feasible state");

    const BigCount target = uniform_bigint(rng, *state_count);
    BigCount cumulative = 0;
    Composition chosen;
    bool found = false;
    compositions(r, table.sorted_rows()[j], table.mode(), [&](const Composition& s) {
        const BigCount* child = table.find(j + 1, reduce(r, s));
        assert(child && "every child of an expanded state is cached");
        if (*child == 0) return;
        cumulative += coefficient(r, s, table.mode(), table.binomials()) * *child;
        if (!found && cumulative >= target) {
            chosen = s;
            found = true;
        }
    });
    // Theorem identity: the child weights partition the state count.
    assert(cumulative == *state_count);
    assert(found);
    return chosen;
}

std::vector<int> reconstruct_row_binary(const ColumnState& vstate, const Composition& s,
                                        RandomSource& rng) {
    std::vector<int> row(vstate.sums.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        std::vector<int> pool = vstate.bucket(static_cast<int>(i) + 1);
        assert(s[i] <= static_cast<int>(pool.size()));
        // Sampling without replacement, one uniform draw per pick.
        for (int picked = 0; picked < s[i]; ++picked) {
            const int at = uniform_index(rng, static_cast<int>(pool.size()));
            row[pool[at]] = 1;
            pool[at] = pool.back();
            pool.pop_back();
        }
    }
    return row;
}

std::vector<int> reconstruct_row_natural(const ColumnState& vstate, const Composition& s,
                                         RandomSource& rng) {
    const CountsVector r = counts_vector(vstate.sums);
    const int d = std::max(r.max_value(), static_cast<int>(s.size()));
    std::vector<int> row(vstate.sums.size(), 0);

    // t_i = number of columns left at sum i after this row.
    std::vector<int> t(d, 0);
    for (int i = 1; i <= d; ++i) {
        const int si = i <= static_cast<int>(s.size()) ? s[i - 1] : 0;
        const int snext = i < static_cast<int>(s.size()) ? s[i] : 0;
        t[i - 1] = r.at(i) - si + snext;
        assert(t[i - 1] >= 0);
    }

    std::vector<int> pool;
    for (int i = d; i >= 1; --i) {
        const auto bucket = vstate.bucket(i);
        pool.insert(pool.end(), bucket.begin(), bucket.end());
        assert(t[i - 1] <= static_cast<int>(pool.size()));
        for (int picked = 0; picked < t[i - 1]; ++picked) {
            const int at = uniform_index(rng, static_cast<int>(pool.size()));
            row[pool[at]] = vstate.sums[pool[at]] - i;  // column left at sum i
            pool[at] = pool.back();
            pool.pop_back();
        }
    }
    // Columns never chosen are consumed entirely.
    for (int j : pool) row[j] = vstate.sums[j];
    return row;
}

Matrix draw(const SamplerContext& ctx, RandomSource& rng) {
    assert(ctx.total > 0 && ctx.table);
    const int m = ctx.spec.rows();
    const int n = ctx.spec.cols();
    Matrix matrix(m, std::vector<int>(n, 0));

    ColumnState vstate{ctx.spec.col_sums};
    for (int j = 0; j < m; ++j) {
        const CountsVector r = counts_vector(vstate.sums);
        const Composition s = select_child(j, r, rng, ctx);
        std::vector<int> row = ctx.mode == Mode::Binary
                                   ? reconstruct_row_binary(vstate, s, rng)
                                   : reconstruct_row_natural(vstate, s, rng);
        for (int col = 0; col < n; ++col) vstate.sums[col] -= row[col];
        assert(counts_vector(vstate.sums) == reduce(r, s));
        matrix[ctx.row_order[j]] = std::move(row);  // back to the caller's row order
    }
    assert(std::all_of(vstate.sums.begin(), vstate.sums.end(), [](int v) { return v == 0; }));
    return matrix;
}

}  // namespace margincount
