#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace appdesc {

/// Fixed-notation decimal with at most max_frac fractional digits; trailing
/// zeros (and a bare trailing point) are trimmed. Never uses an exponent.
std::string format_decimal(double v, int max_frac = 4);

/// Fixed-notation decimal, exactly frac fractional digits.
std::string format_fixed(double v, int frac);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_exact(double v);

namespace csv {

std::string escape(std::string_view field);
std::string join(const std::vector<std::string>& fields);

/// Splits one CSV line, honoring double-quoted fields with "" escapes.
std::vector<std::string> split_line(std::string_view line);

}  // namespace csv

}  // namespace appdesc
