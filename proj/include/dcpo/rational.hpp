#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dcpo {

/// Exact rational arithmetic, always in lowest terms. Never floating point.
using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return rational(bigint(num), bigint(den));
}

/// Renders `p/q` in lowest terms, plain `p` when the denominator is 1.
inline std::string to_text(const rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses `p` or `p/q` with optional leading sign. Empty result on malformed input.
inline std::optional<rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(s)) return std::nullopt;
    return rational(bigint(std::string(s)));
  }
  auto num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  bigint d{std::string(den)};
  if (d == 0) return std::nullopt;
  return rational(bigint(std::string(num)), d);
}

/// The zig-zag enumeration 0, 1, -1, 2, -2, ... of the integers.
inline bigint zigzag(std::size_t n) {
  if (n % 2 == 0) return bigint(n / 2);
  return -bigint((n + 1) / 2);
}

/// Canonical surjection onto the rationals: index -> (zigzag numerator, denominator).
/// Duplicates are harmless; every rational appears.
inline rational nth_rational(std::size_t n) {
  // Cantor unpairing of n into (a, b).
  std::size_t w = 0, t = 0;
  while (t + w + 1 <= n) { ++w; t += w; }
  std::size_t b = n - t;
  std::size_t a = w - b;
  return rational(zigzag(a), bigint(b + 1));
}

} // namespace dcpo
