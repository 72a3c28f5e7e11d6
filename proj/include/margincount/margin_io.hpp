#ifndef MARGINCOUNT_MARGIN_IO_HPP
#define MARGINCOUNT_MARGIN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "margincount/core.hpp"
#include "margincount/sample.hpp"

namespace margincount {

/* Margin text formats. A term is an integer `x` or a run-length `x^k`
 * (x repeated k times). Margin files carry a `rows:` line and a `cols:`
 * line; `#` starts a comment. */

// Throws std::invalid_argument on malformed input.
std::vector<int> parse_terms(const std::string& text);

MarginSpec parse_margin_file(std::istream& in);
MarginSpec load_margin_file(const std::string& path);

void write_matrix_csv(std::ostream& out, const Matrix& m);
void write_matrix_jsonl(std::ostream& out, const Matrix& m);

}  // namespace margincount

#endif
