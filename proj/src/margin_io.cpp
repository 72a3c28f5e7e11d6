#include "margincount/margin_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace margincount {

namespace {

int parse_nonneg(const std::string& token, const char* what) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + token + "'");
    }
    if (pos != token.size() || value < 0)
        throw std::invalid_argument(std::string("bad ") + what + ": '" + token + "'");
    return static_cast<int>(value);
}

}  // namespace

std::vector<int> parse_terms(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        if (caret == std::string::npos) {
            values.push_back(parse_nonneg(token, "margin term"));
        } else {
            const int value = parse_nonneg(token.substr(0, caret), "margin term");
            const int repeat = parse_nonneg(token.substr(caret + 1), "repeat count");
            if (repeat < 1) throw std::invalid_argument("repeat count must be at least 1");
            values.insert(values.end(), repeat, value);
        }
    }
    return values;
}

MarginSpec parse_margin_file(std::istream& in) {
    MarginSpec spec;
    bool have_rows = false;
    bool have_cols = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string body = line.substr(start);
        if (body.rfind("rows:", 0) == 0) {
            spec.row_sums = parse_terms(body.substr(5));
            have_rows = true;
        } else if (body.rfind("cols:", 0) == 0) {
            spec.col_sums = parse_terms(body.substr(5));
            have_cols = true;
        } else {
            throw std::invalid_argument("margin file: unrecognized line: " + line);
        }
    }
    if (!have_rows || !have_cols)
        throw std::invalid_argument("margin file: need both a rows: and a cols: line");
    if (spec.row_sums.empty() || spec.col_sums.empty())
        throw std::invalid_argument("margin file: margins must be nonempty");
    return spec;
}

MarginSpec load_margin_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open margin file: " + path);
    return parse_margin_file(in);
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << row[j];
        }
        out << '\n';
    }
}

void write_matrix_jsonl(std::ostream& out, const Matrix& m) {
    out << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) out << ',';
            out << m[i][j];
        }
        out << ']';
    }
    out << "]\n";
}

}  // namespace margincount
