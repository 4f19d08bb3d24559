#include "bfgame/weight.hpp"

#include <cctype>
#include <algorithm>
#include <stdexcept>

namespace bfgame {

namespace {

std::int64_t checked_mul_add(std::int64_t acc, int digit) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(acc, std::int64_t{10}, &out) ||
      __builtin_add_overflow(out, std::int64_t{digit}, &out)) {
    throw std::invalid_argument("weight out of range");
  }
  return out;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  const std::string original(text);
  // "p/q", as printed for non-terminating values
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Weight num = parse_weight(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (num.denominator() != 1 || den_text.empty() || !std::isdigit(static_cast<unsigned char>(den_text.front()))) {
      throw std::invalid_argument("bad weight '" + original + "'");
    }
    const Weight den = parse_weight(den_text);
    if (den.denominator() != 1 || den.numerator() == 0) throw std::invalid_argument("bad weight '" + original + "'");
    return num / den;
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty weight '" + original + "'");

  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) throw std::invalid_argument("bad weight '" + original + "'");
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad weight '" + original + "'");
    }
    seen_digit = true;
    numerator = checked_mul_add(numerator, ch - '0');
    if (seen_point) denominator = checked_mul_add(denominator, 0);
  }
  if (!seen_digit) throw std::invalid_argument("bad weight '" + original + "'");
  return Weight(negative ? -numerator : numerator, denominator);
}

std::string format_weight(const Weight& w) {
  std::int64_t num = w.numerator();
  std::int64_t den = w.denominator();

  // Terminating iff the reduced denominator has no prime factors besides 2 and 5.
  std::int64_t rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return std::to_string(num) + "/" + std::to_string(den);

  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = num * (scale / den);

  std::string sign = scaled < 0 ? "-" : "";
  std::uint64_t mag = scaled < 0 ? static_cast<std::uint64_t>(-(scaled + 1)) + 1
                                 : static_cast<std::uint64_t>(scaled);
  std::string out = std::to_string(mag / static_cast<std::uint64_t>(scale));
  if (digits > 0) {
    std::string frac = std::to_string(mag % static_cast<std::uint64_t>(scale));
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return sign + out;
}

}  // namespace bfgame
