#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace bfgame {

/// Exact nonnegative edge weight. Never a binary float.
using Weight = boost::rational<std::int64_t>;

/// Parses a decimal such as "2", "0.25" or "-1.5", or an integer ratio
/// "7/3", exactly. Exponents and hex are rejected with std::invalid_argument.
/// Sign is accepted here; callers decide whether negatives are legal.
Weight parse_weight(std::string_view text);

/// Terminating fractions print as decimals ("1.25"), anything else as "p/q".
std::string format_weight(const Weight& w);

}  // namespace bfgame
