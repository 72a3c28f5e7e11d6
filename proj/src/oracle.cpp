#include "margincount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace margincount {

namespace {

constexpr long kMaxCells = 20;
constexpr int kMaxMargin = 12;
constexpr std::size_t kMaxEnumerated = 100000;

void check_guard(const MarginSpec& spec) {
    const long cells = static_cast<long>(spec.rows()) * spec.cols();
    int max_margin = 0;
    for (int v : spec.row_sums) max_margin = std::max(max_margin, v);
    for (int v : spec.col_sums) max_margin = std::max(max_margin, v);
    for (int v : spec.row_sums)
        if (v < 0) throw std::invalid_argument("oracle: negative margin");
    for (int v : spec.col_sums)
        if (v < 0) throw std::invalid_argument("oracle: negative margin");
    if (cells > kMaxCells || max_margin > kMaxMargin)
        throw std::invalid_argument("oracle: instance exceeds the brute-force size guard");
}

/* Per-cell backtracking in row-major order, tracking the remaining need of
 * the current row and the remaining capacity of every column. */
struct Search {
    const MarginSpec& spec;
    Mode mode;
    Matrix current;
    std::vector<int> col_left;
    unsigned long found = 0;
    std::vector<Matrix>* sink = nullptr;  // null when only counting

    explicit Search(const MarginSpec& s, Mode m)
        : spec(s), mode(m), current(s.rows(), std::vector<int>(s.cols(), 0)),
          col_left(s.col_sums) {}

    void run() {
        if (spec.row_total() != spec.col_total()) return;
        fill(0, 0, spec.rows() ? spec.row_sums[0] : 0);
    }

    void fill(int i, int j, int row_left) {
        if (i == spec.rows()) {
            if (std::all_of(col_left.begin(), col_left.end(), [](int v) { return v == 0; }))
                record();
            return;
        }
        if (j == spec.cols()) {
            if (row_left == 0) fill(i + 1, 0, i + 1 < spec.rows() ? spec.row_sums[i + 1] : 0);
            return;
        }
        // The rest of this row cannot absorb more than the remaining column capacity.
        long capacity = 0;
        for (int c = j; c < spec.cols(); ++c)
            capacity += mode == Mode::Binary ? std::min(col_left[c], 1) : col_left[c];
        if (row_left > capacity) return;

        const int cap = mode == Mode::Binary ? 1 : row_left;
        const int hi = std::min({cap, row_left, col_left[j]});
        for (int e = 0; e <= hi; ++e) {
            current[i][j] = e;
            col_left[j] -= e;
            fill(i, j + 1, row_left - e);
            col_left[j] += e;
            current[i][j] = 0;
        }
    }

    void record() {
        ++found;
        if (sink) {
            if (sink->size() >= kMaxEnumerated)
                throw std::invalid_argument("oracle: enumeration exceeds the size guard");
            sink->push_back(current);
        }
    }
};

}  // namespace

BigCount brute_count(const MarginSpec& spec, Mode mode) {
    check_guard(spec);
    Search search(spec, mode);
    search.run();
    return BigCount(search.found);
}

std::vector<Matrix> brute_enumerate(const MarginSpec& spec, Mode mode) {
    check_guard(spec);
    std::vector<Matrix> matrices;
    Search search(spec, mode);
    search.sink = &matrices;
    search.run();
    return matrices;
}

}  // namespace margincount
