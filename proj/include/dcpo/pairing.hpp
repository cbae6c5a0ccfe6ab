#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dcpo {

/// Cantor pairing (a, b) -> (a+b)(a+b+1)/2 + b; the canonical dovetail order
/// for every two-index search in this library.
inline std::size_t cantor_pair(std::size_t a, std::size_t b) {
  std::size_t s = a + b;
  return s * (s + 1) / 2 + b;
}

inline std::pair<std::size_t, std::size_t> cantor_unpair(std::size_t n) {
  std::size_t w = 0, t = 0;
  while (t + w + 1 <= n) { ++w; t += w; }
  std::size_t b = n - t;
  return {w - b, b};
}

/// Codes finite lists of naturals: 0 is the empty list, n+1 unpairs into
/// (head, coded tail). Total and surjective onto all finite lists.
inline std::vector<std::size_t> decode_list(std::size_t n) {
  std::vector<std::size_t> out;
  while (n != 0) {
    auto [head, rest] = cantor_unpair(n - 1);
    out.push_back(head);
    n = rest;
  }
  return out;
}

inline std::size_t encode_list(const std::vector<std::size_t>& xs) {
  std::size_t n = 0;
  for (std::size_t i = xs.size(); i-- > 0;) n = cantor_pair(xs[i], n) + 1;
  return n;
}

} // namespace dcpo
