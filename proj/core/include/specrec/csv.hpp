#pragma once

#include <string>
#include <vector>

namespace specrec {

/// Shortest-round-trip decimal form: 17 significant digits, '.' separator,
/// locale-independent. Identical inputs produce identical bytes.
std::string format_number(double v);

/// One CSV row from preformatted cells.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace specrec
