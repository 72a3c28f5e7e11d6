// Acceptance suite: one line per criterion, nonzero exit on any failure.
// The slow tier (100x100 counts, H_7 and H_8) runs only with --slow.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "common.hpp"
#include "margincount/ehrhart.hpp"
#include "margincount/enumerate.hpp"
#include "margincount/oracle.hpp"
#include "margincount/sample.hpp"

using namespace margincount;
using namespace margincount::testing;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << '\n';
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const MarginSpec kFinch{{14, 13, 14, 10, 12, 2, 10, 1, 10, 11, 6, 2, 17},
                        {4, 4, 11, 10, 10, 8, 9, 10, 8, 9, 3, 10, 4, 7, 9, 3, 3}};
const MarginSpec kGulf{{14, 14, 14, 12, 5, 13, 9, 11, 11, 11, 11, 11, 7, 8, 8, 7, 2, 4, 2, 3, 2, 2, 2},
                       {21, 19, 18, 19, 14, 15, 12, 15, 12, 12, 12, 5, 4, 4, 1}};
const MarginSpec kCalifornia{{1, 4, 3, 2, 1, 1, 1, 5, 1, 3, 1, 4, 4, 5, 1, 2, 1, 5, 4, 5, 3, 7,
                              1, 3, 2, 4, 1, 3, 2, 4, 6},
                             {2, 14, 24, 8, 2, 5, 20, 15}};

MarginSpec hundred_by_hundred() {
    std::vector<int> rows{70, 30, 20, 10};
    rows.insert(rows.end(), 6, 5);
    rows.insert(rows.end(), 10, 4);
    rows.insert(rows.end(), 20, 3);
    rows.insert(rows.end(), 60, 2);
    std::vector<int> cols(80, 4);
    cols.insert(cols.end(), 20, 3);
    return MarginSpec{std::move(rows), std::move(cols)};
}

const char* const kHundredBinary =
    "860585058801817078819959949756041558231879514104670757612387"
    "280341919502865086909993523205599348663646837362726765460951"
    "032776118129432733489342067673016169716787054236343091407458"
    "802261593735765113169808512677339861494709092492858489355535"
    "514748397544147637928475318462070009855280569561693514768239"
    "201499080842592443823774161366680107327323365049702068246736"
    "456919918589686056321467354298509024976141650428747522863473"
    "529515269318246400000000000000000000000";

const char* const kHundredNatural =
    "620017488391049592297896956531192562528805388295441812965295"
    "130897484012791595142882674755488640101825726867156331426482"
    "441148514978852842582445295040041143220637964258279947442682"
    "896809706562683189375098411751981435132377208717294759756041"
    "358372207736032818841045369779439398975681041714752821787419"
    "816573563436066161167632677774184809010338787868042742993719"
    "703936093873250600121874335524794990013547042810153560084573"
    "133035731217642637607153615611029851392000000000000000000000"
    "000";

const std::map<int, std::vector<const char*>> kHValues{
    {4, {"24", "282", "2008"}},
    {5, {"120", "6210", "153040", "2224955", "22069251", "164176640"}},
    {6,
     {"720", "202410", "20933840", "1047649905", "30767936616", "602351808741", "8575979362560",
      "94459713879600", "842286559093240", "6292583664553881"}},
    {7,
     {"5040", "9135630", "4662857360", "936670590450", "94161778046406", "5562418293759978",
      "215717608046511873", "5945968652327831925", "123538613356253145400",
      "2023270039486328373811", "27046306550096288483238", "303378141987182515342992",
      "2920054336492521720572276", "24563127009195223721952590",
      "183343273080700916973016745"}},
    {8,
     {"40320", "545007960", "1579060246400", "1455918295922650", "569304690994400256",
      "114601242382721619224", "13590707419428422843904", "1046591482728407939338275",
      "56272722406349235035916800", "2233160342369825596702148720",
      "68316292103293669997188919040", "1667932098862773837734823042196",
      "33427469280977307618866364694400", "562798805673342016752366344185200",
      "8115208977465404874100226492575360", "101857066150530294146428615917957029",
      "1128282526405022554049557329097252992", "11161302946841260178530673680176000200",
      "99613494890126594335550124219924540800", "809256770610540675454657517194018680846",
      "6031107989875562751266116901999327710720"}}};

const char* const kH4Coefficients[] = {"1",      "65/18",    "379/63", "35117/5670", "43/10",
                                       "1109/540", "2/3",    "19/135", "11/630",     "11/11340"};

void criterion_toy() {
    const auto start = std::chrono::steady_clock::now();
    const bool counts_ok = count(toy_spec(), Mode::Binary).count == 8 &&
                           count(toy_spec(), Mode::Natural).count == 24;
    const double elapsed = seconds_since(start);
    report(1, "toy instance: binary 8, natural 24, < 10 ms", counts_ok && elapsed < 0.010);
}

void criterion_dataset(int criterion, const char* name, const MarginSpec& spec,
                       const char* expected, double budget_s) {
    const auto start = std::chrono::steady_clock::now();
    const BigCount result = count(spec, Mode::Binary).count;
    const double elapsed = seconds_since(start);
    report(criterion,
           std::string(name) + " binary count (" + std::to_string(elapsed) + " s)",
           result == BigCount(expected) && elapsed <= budget_s);
}

bool h_table_matches(int n) {
    const auto& expected = kHValues.at(n);
    for (std::size_t r = 1; r <= expected.size(); ++r)
        if (h_value(n, static_cast<int>(r)) != BigCount(expected[r - 1])) return false;
    return true;
}

void criterion_ehrhart() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n : {4, 5, 6}) ok = ok && h_table_matches(n);
    const RationalPoly poly = birkhoff_polynomial(4);
    ok = ok && poly.degree() == 9;
    for (int j = 0; j <= 9 && ok; ++j) ok = poly.coeffs[j] == Rational(kH4Coefficients[j]);
    const double elapsed = seconds_since(start);
    report(5, "H_n(r) tables for n=4,5,6 and the H_4 coefficients (" +
                  std::to_string(elapsed) + " s)",
           ok && elapsed <= 600.0);
}

void criterion_slow_tier() {
    const MarginSpec big = hundred_by_hundred();
    {
        const auto start = std::chrono::steady_clock::now();
        const BigCount result = count(big, Mode::Binary).count;
        const double elapsed = seconds_since(start);
        report(6, "100x100 binary count (" + std::to_string(elapsed) + " s)",
               result == BigCount(kHundredBinary) && elapsed <= 4 * 3600.0);
    }
    {
        const auto start = std::chrono::steady_clock::now();
        const BigCount result = count(big, Mode::Natural).count;
        const double elapsed = seconds_since(start);
        report(6, "100x100 natural count (" + std::to_string(elapsed) + " s)",
               result == BigCount(kHundredNatural) && elapsed <= 4 * 3600.0);
    }
    report(6, "H_7 appendix table", h_table_matches(7));
    report(6, "H_8 appendix table", h_table_matches(8));
}

void criterion_oracle_equivalence() {
    std::mt19937 gen(12345);
    int checked = 0;
    int mismatches = 0;
    for (int iter = 0; checked < 200; ++iter) {
        const MarginSpec spec =
            iter % 3 == 0 ? random_spec(gen, 4, 4, 3)
                          : random_feasible_spec(gen, 4, 4, 3, iter % 2 ? Mode::Binary : Mode::Natural);
        if (static_cast<long>(spec.rows()) * spec.cols() > 16) continue;
        ++checked;
        for (Mode mode : {Mode::Binary, Mode::Natural})
            if (count(spec, mode).count != brute_count(spec, mode)) ++mismatches;
    }
    report(7, "DP equals brute force on " + std::to_string(checked) + " random specs, both modes",
           mismatches == 0);
}

bool uniformity_run(Mode mode, long draws, long expected_each, long band, double chi_crit,
                    const std::vector<std::uint64_t>& seeds) {
    const auto all = brute_enumerate(toy_spec(), mode);
    std::set<std::string> keys;
    for (const auto& m : all) keys.insert(matrix_key(m));
    const SamplerContext ctx = prepare(toy_spec(), mode);

    for (std::uint64_t seed : seeds) {
        RandomSource rng(seed);
        std::map<std::string, long> freq;
        for (long i = 0; i < draws; ++i) {
            const std::string key = matrix_key(draw(ctx, rng));
            if (!keys.count(key)) return false;
            ++freq[key];
        }
        for (const auto& [key, f] : freq)
            if (f < expected_each - band || f > expected_each + band) return false;
        if (freq.size() != keys.size()) return false;
        if (chi_square_statistic(freq, draws, keys.size()) >= chi_crit) return false;
    }
    return true;
}

void criterion_uniformity() {
    // Binary: 8 matrices, 80000 draws per seed, 7 dof; natural: 24 matrices,
    // 120000 draws per seed, 23 dof. Thresholds are the 0.999 quantiles.
    const bool binary_ok = uniformity_run(Mode::Binary, 80000, 10000, 500, 24.32, {1, 2, 3});
    const bool natural_ok = uniformity_run(Mode::Natural, 120000, 5000, 350, 49.73, {1, 2, 3});
    report(8, "toy uniformity, binary (3 seeds, 10000 +- 500, chi2 < 24.32)", binary_ok);
    report(8, "toy uniformity, natural (3 seeds, 5000 +- 350, chi2 < 49.73)", natural_ok);
}

void criterion_properties() {
    std::mt19937 gen(54321);
    bool ok = true;

    // Gale-Ryser iff nonzero brute count; transpose and permutation invariance.
    for (int iter = 0; iter < 60 && ok; ++iter) {
        const MarginSpec spec = random_spec(gen, 4, 4, 3);
        if (static_cast<long>(spec.rows()) * spec.cols() > 16) continue;
        ok = ok && gale_ryser_feasible(spec.row_sums, counts_vector(spec.col_sums)) ==
                       (brute_count(spec, Mode::Binary) > 0);
        MarginSpec shuffled = spec;
        std::shuffle(shuffled.row_sums.begin(), shuffled.row_sums.end(), gen);
        std::shuffle(shuffled.col_sums.begin(), shuffled.col_sums.end(), gen);
        const MarginSpec transposed{spec.col_sums, spec.row_sums};
        for (Mode mode : {Mode::Binary, Mode::Natural}) {
            const BigCount base = count(spec, mode).count;
            ok = ok && base == count(shuffled, mode).count;
            ok = ok && base == count(transposed, mode).count;
        }
    }
    report(9, "Gale-Ryser equivalence, transpose symmetry, permutation invariance", ok);

    // Child-weight partition and the weight-level identity on the toy tables.
    bool identities = true;
    for (Mode mode : {Mode::Binary, Mode::Natural}) {
        const CountResult res = count(toy_spec(), mode);
        const MemoTable& table = *res.table;
        const auto& rows = table.sorted_rows();
        table.for_each([&](int j, const CountsVector& r, const BigCount& value) {
            long remaining = 0;
            for (std::size_t i = j; i < rows.size(); ++i) remaining += rows[i];
            if (weight(r) != remaining) identities = false;
            if (j == static_cast<int>(rows.size()) || value == 0) return;
            BigCount sum = 0;
            compositions(r, rows[j], mode, [&](const Composition& s) {
                const BigCount* child = table.find(j + 1, reduce(r, s));
                if (!child)
                    identities = false;
                else
                    sum += coefficient(r, s, mode, table.binomials()) * *child;
            });
            if (sum != value) identities = false;
        });
    }
    report(9, "child-weight partition and weight-level identities", identities);

    // Margin exactness and determinism of samples.
    bool sampling_ok = true;
    const MarginSpec natural_spec{{7, 6, 5, 5, 4, 3}, {8, 7, 6, 4, 3, 2}};
    for (Mode mode : {Mode::Binary, Mode::Natural}) {
        const MarginSpec& spec = mode == Mode::Binary ? kFinch : natural_spec;
        const SamplerContext ctx = prepare(spec, mode);
        RandomSource a(7), b(7);
        for (int i = 0; i < 25; ++i) {
            const Matrix ma = draw(ctx, a);
            sampling_ok = sampling_ok && has_margins(ma, spec) && ma == draw(ctx, b);
            if (mode == Mode::Binary)
                for (const auto& row : ma)
                    for (int e : row) sampling_ok = sampling_ok && (e == 0 || e == 1);
        }
    }
    report(9, "margin exactness and determinism of samples", sampling_ok);

    // Ehrhart reciprocity, integrality, extrapolation.
    bool ehrhart_ok = true;
    for (int n : {4, 5}) {
        const int k = (n - 1) * (n - 2) / 2;
        const int d = (n - 1) * (n - 1);
        const RationalPoly poly = birkhoff_polynomial(n);
        const int sign = d % 2 == 0 ? 1 : -1;
        for (int r = 0; r <= k; ++r)
            ehrhart_ok =
                ehrhart_ok && evaluate(poly, -n - r) == Rational(sign) * evaluate(poly, r);
        for (long r = -n - k + 1; r <= k + 5; ++r)
            ehrhart_ok = ehrhart_ok && evaluate(poly, r).get_den() == 1;
        for (int extra = 1; extra <= 2; ++extra)
            ehrhart_ok =
                ehrhart_ok && evaluate(poly, k + extra) == Rational(h_value(n, k + extra));
    }
    report(9, "Ehrhart reciprocity, integrality, extrapolation", ehrhart_ok);
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    criterion_toy();
    criterion_dataset(2, "Darwin finch margins", kFinch, "67149106137567626", 60.0);
    criterion_dataset(3, "Gulf of California margins", kGulf, "839926782939601640", 60.0);
    criterion_dataset(4, "California Islands margins", kCalifornia, "1360641571195211109388",
                      120.0);
    criterion_ehrhart();
    if (slow)
        criterion_slow_tier();
    else
        std::cout << "SKIP criterion 6: slow tier (run with --slow)\n";
    criterion_oracle_equivalence();
    criterion_uniformity();
    criterion_properties();

    if (failures) {
        std::cout << failures << " criterion check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
