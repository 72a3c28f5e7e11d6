#ifndef MARGINCOUNT_SAMPLE_HPP
#define MARGINCOUNT_SAMPLE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "margincount/enumerate.hpp"

namespace margincount {

using Matrix = std::vector<std::vector<int>>;

struct InfeasibleMarginsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Seedable deterministic word generator; a fixed seed reproduces the stream
// bit-for-bit.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed = 0) : gen_(seed) {}
    std::uint64_t next_word() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/* Uniform draw from {1..k} by rejection: ceil(log2 k) fresh bits per round,
 * accepted with probability > 1/2. Throws on k < 1. */
BigCount uniform_bigint(RandomSource& rng, const BigCount& k);

// Uniform draw from {0..n-1}.
int uniform_index(RandomSource& rng, int n);

/* Everything repeated draws need: the completed memo table, the total count,
 * and the permutation taking sorted rows back to input order. Immutable;
 * concurrent draws are fine as long as each owns its RandomSource. */
struct SamplerContext {
    MarginSpec spec;
    Mode mode;
    std::shared_ptr<const MemoTable> table;
    BigCount total;
    std::vector<int> row_order;
};

// Runs the enumeration and binds its output. Throws InfeasibleMarginsError
// when the count is zero.
SamplerContext prepare(const MarginSpec& spec, Mode mode);
SamplerContext prepare(const MarginSpec& spec, Mode mode, CountResult counted);

/* Current column sums in input column order. The DP state abstracts columns
 * into multiplicity buckets; the sampler tracks the actual identities. */
struct ColumnState {
    std::vector<int> sums;

    // Column indices with current sum exactly `value`, in index order.
    std::vector<int> bucket(int value) const;
};

/* Pick a child composition s with probability proportional to
 * coefficient(r,s) * count(child), by one uniform draw on the state count and
 * a cumulative walk in the shared composition order. The walk finishes the
 * full sweep and checks that the child weights partition the state count. */
Composition select_child(int j, const CountsVector& r, RandomSource& rng,
                         const SamplerContext& ctx);

/* One matrix row consuming s from the current columns, binary case: for each
 * value i, a uniformly random s_i-subset of the columns with sum i gets a 1. */
std::vector<int> reconstruct_row_binary(const ColumnState& vstate, const Composition& s,
                                        RandomSource& rng);

/* N-valued case, following the constructive choice sequence: with
 * t = r reduce s, work from the top value down, choosing t_i columns to be
 * left at sum i from the value-i bucket plus the carried-over unchosen
 * columns; columns never chosen are consumed entirely. */
std::vector<int> reconstruct_row_natural(const ColumnState& vstate, const Composition& s,
                                         RandomSource& rng);

// One exactly-uniform sample with the context's margins, rows in the
// caller's original order.
Matrix draw(const SamplerContext& ctx, RandomSource& rng);

}  // namespace margincount

#endif
