#ifndef RULEKIT_FORMAT_HPP
#define RULEKIT_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>

namespace rulekit {

// Shortest decimal that round-trips to the same double: 2.0 -> "2",
// 0.1 -> "0.1". Infinities render as "Inf"/"-Inf", NaN as "NA".
std::string format_number(double v);

// Fixed-point with `digits` decimals, trailing zeros (and a bare point)
// stripped: 2.8099 -> "2.81", 1.0 -> "1".
std::string format_rounded(double v, int digits);

// Inverse of format_number; also accepts "Inf", "-Inf", "NA", "NaN".
std::optional<double> parse_number(std::string_view s);

}  // namespace rulekit

#endif  // RULEKIT_FORMAT_HPP
