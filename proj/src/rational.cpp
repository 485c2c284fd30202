#include "cyctope/rational.hpp"

#include <charconv>

#include "cyctope/errors.hpp"

namespace cyctope {

long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

Rat rat_mod1(const Rat& r) { return r - rat_floor(r); }

namespace {

long long parse_ll(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("bad integer in rational: '" + std::string(s) + "'");
  return value;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_ll(text), 1);
  const long long num = parse_ll(std::string_view(text).substr(0, slash));
  const long long den = parse_ll(std::string_view(text).substr(slash + 1));
  if (den <= 0) throw InputError("rational denominator must be positive: '" + text + "'");
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace cyctope
