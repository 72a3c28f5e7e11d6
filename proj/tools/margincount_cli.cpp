#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "margincount/ehrhart.hpp"
#include "margincount/enumerate.hpp"
#include "margincount/margin_io.hpp"
#include "margincount/sample.hpp"

namespace {

using namespace margincount;

struct MarginArgs {
    std::string file;
    std::string rows;
    std::string cols;
    std::string mode_name;

    void attach(CLI::App* cmd) {
        cmd->add_option("--mode", mode_name, "matrix family: binary or natural")
            ->required()
            ->check(CLI::IsMember({"binary", "natural"}));
        cmd->add_option("--file", file, "margin file (rows:/cols: lines, x^k run-lengths)");
        cmd->add_option("--rows", rows, "row sums, e.g. \"2 2 1 1\" or \"4^80 3^20\"");
        cmd->add_option("--cols", cols, "column sums");
    }

    Mode mode() const { return mode_name == "binary" ? Mode::Binary : Mode::Natural; }

    MarginSpec spec() const {
        if (!file.empty()) {
            if (!rows.empty() || !cols.empty())
                throw std::invalid_argument("give either --file or --rows/--cols, not both");
            return load_margin_file(file);
        }
        if (rows.empty() || cols.empty())
            throw std::invalid_argument("margins required: --file or both --rows and --cols");
        MarginSpec spec{parse_terms(rows), parse_terms(cols)};
        if (spec.row_sums.empty() || spec.col_sums.empty())
            throw std::invalid_argument("margins must be nonempty");
        return spec;
    }
};

int run_count(const MarginArgs& margins, bool stats) {
    const MarginSpec spec = margins.spec();
    const auto start = std::chrono::steady_clock::now();
    const CountResult result = count(spec, margins.mode());
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << result.count.get_str() << '\n';
    if (stats) {
        const MemoStats s = result.table ? result.table->stats() : MemoStats{};
        std::cerr << "nodes=" << s.nodes << " terms=" << s.terms << " pruned=" << s.pruned
                  << " ms=" << elapsed << '\n';
    }
    return 0;
}

int run_sample(const MarginArgs& margins, std::uint64_t seed, int num, const std::string& format) {
    const MarginSpec spec = margins.spec();
    const SamplerContext ctx = prepare(spec, margins.mode());
    RandomSource rng(seed);
    for (int i = 0; i < num; ++i) {
        const Matrix m = draw(ctx, rng);
        if (format == "csv") {
            if (i) std::cout << '\n';
            write_matrix_csv(std::cout, m);
        } else {
            write_matrix_jsonl(std::cout, m);
        }
    }
    return 0;
}

int run_ehrhart(int n, bool values_only, bool force) {
    if ((n < 2 || n > 8) && !force)
        throw std::invalid_argument("ehrhart: n outside the supported range 2..8 (use --force)");
    const int k = (n - 1) * (n - 2) / 2;
    const std::vector<BigCount> v = stanley_vector(n);
    // The tail of the vector holds H_n(0..k).
    const int base = static_cast<int>(v.size()) - (k + 1);
    for (int r = 1; r <= k; ++r)
        std::cout << "H_" << n << "(" << r << ") = " << v[base + r].get_str() << '\n';
    if (!values_only) {
        const RationalPoly poly = solve_coefficients(n, v);
        for (int j = 0; j <= poly.degree(); ++j)
            std::cout << "r^" << j << ": " << poly.coeffs[j].get_num().get_str() << "/"
                      << poly.coeffs[j].get_den().get_str() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and uniform sampling of matrices with fixed margins"};
    app.require_subcommand(1);

    MarginArgs count_margins;
    bool stats = false;
    CLI::App* cmd_count = app.add_subcommand("count", "count matrices with the given margins");
    count_margins.attach(cmd_count);
    cmd_count->add_flag("--stats", stats, "print memo statistics to stderr");

    MarginArgs sample_margins;
    std::uint64_t seed = 0;
    int num = 1;
    std::string format = "csv";
    CLI::App* cmd_sample = app.add_subcommand("sample", "draw uniform samples");
    sample_margins.attach(cmd_sample);
    cmd_sample->add_option("--seed", seed, "random seed (default 0)");
    cmd_sample->add_option("--num", num, "number of samples")->check(CLI::PositiveNumber);
    cmd_sample->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    int ehrhart_n = 0;
    bool values_only = false;
    bool force = false;
    CLI::App* cmd_ehrhart =
        app.add_subcommand("ehrhart", "Birkhoff polytope counts and Ehrhart polynomial");
    cmd_ehrhart->add_option("--n", ehrhart_n, "matrix order (2..8)")->required();
    cmd_ehrhart->add_flag("--values-only", values_only, "print only the H_n(r) values");
    cmd_ehrhart->add_flag("--force", force, "allow n outside the supported range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_count) return run_count(count_margins, stats);
        if (*cmd_sample) return run_sample(sample_margins, seed, num, format);
        return run_ehrhart(ehrhart_n, values_only, force);
    } catch (const margincount::InfeasibleMarginsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
