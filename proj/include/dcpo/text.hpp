#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcpo/domains.hpp"
#include "dcpo/rational.hpp"

// Text forms shared by the command line tool and the test suites:
// element specs like `cantor:repeat(01)`, `dede:sqrt(2)`, `eps:repeat(01)`,
// and per-domain basis atoms like `010`, `(1/2,3)`, `{eta(0)=>eta(1)}`.

namespace dcpo::text {

struct parse_error {
  std::string message;
  std::size_t position = 0;
};

template <class T>
using parsed = std::pair<std::optional<T>, parse_error>;

template <class T>
parsed<T> ok(T value) {
  return {std::move(value), {}};
}

template <class T>
parsed<T> fail(std::string message, std::size_t position) {
  return {std::nullopt, {std::move(message), position}};
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// `010`, possibly empty; binary digits only.
inline parsed<domains::seq> parse_cantor_atom(std::string_view s) {
  domains::seq out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      return fail<domains::seq>("expected binary digit", i);
    out.push_back(static_cast<domains::symbol>(s[i] - '0'));
  }
  return ok(std::move(out));
}

/// `3,1,4`, possibly empty; comma-separated naturals.
inline parsed<domains::seq> parse_baire_atom(std::string_view s) {
  domains::seq out;
  if (s.empty()) return ok(std::move(out));
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    if (!all_digits(tok)) return fail<domains::seq>("expected natural number", pos);
    out.push_back(static_cast<domains::symbol>(std::stoul(std::string(tok))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ok(std::move(out));
}

/// `(p,q)` with rationals p < q.
inline parsed<domains::qpair> parse_qpair_atom(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    return fail<domains::qpair>("expected (p,q)", 0);
  std::string_view body = s.substr(1, s.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string_view::npos)
    return fail<domains::qpair>("expected a comma", 1);
  auto lo = parse_rational(body.substr(0, comma));
  if (!lo) return fail<domains::qpair>("malformed rational", 1);
  auto hi = parse_rational(body.substr(comma + 1));
  if (!hi) return fail<domains::qpair>("malformed rational", comma + 2);
  if (!(*lo < *hi))
    return fail<domains::qpair>("interval endpoints must satisfy p < q", 1);
  return ok(domains::qpair{*lo, *hi});
}

inline parsed<rational> parse_rational_atom(std::string_view s) {
  auto r = parse_rational(s);
  if (!r) return fail<rational>("malformed rational", 0);
  return ok(std::move(*r));
}

/// `_|_` or `eta(n)`.
inline parsed<domains::lnat> parse_lifted_atom(std::string_view s) {
  if (s == "_|_") return ok(domains::lnat::bottom());
  if (s.size() >= 5 && s.substr(0, 4) == "eta(" && s.back() == ')') {
    std::string_view body = s.substr(4, s.size() - 5);
    if (!all_digits(body)) return fail<domains::lnat>("expected eta(natural)", 4);
    return ok(domains::lnat::eta(
        static_cast<domains::symbol>(std::stoul(std::string(body)))));
  }
  return fail<domains::lnat>("expected _|_ or eta(n)", 0);
}

/// `{a1=>b1, a2=>b2}`; the result is normalized, and an unbounded pair list
/// is a parse-level rejection.
inline parsed<domains::eps_step> parse_step_atom(std::string_view s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    return fail<domains::eps_step>("expected {a=>b, ...}", 0);
  std::string_view body = s.substr(1, s.size() - 2);
  std::vector<std::pair<domains::lnat, domains::ltwo>> pairs;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
    if (pos >= body.size()) break;
    std::size_t end = body.find(',', pos);
    std::string_view item =
        end == std::string_view::npos ? body.substr(pos) : body.substr(pos, end - pos);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::size_t arrow = item.find("=>");
    if (arrow == std::string_view::npos)
      return fail<domains::eps_step>("expected =>", pos + 1);
    auto a = parse_lifted_atom(item.substr(0, arrow));
    if (!a.first)
      return fail<domains::eps_step>(a.second.message, pos + 1 + a.second.position);
    auto b = parse_lifted_atom(item.substr(arrow + 2));
    if (!b.first)
      return fail<domains::eps_step>(b.second.message,
                                     pos + 1 + arrow + 2 + b.second.position);
    if (b.first->value && *b.first->value > 1)
      return fail<domains::eps_step>("target must be _|_, eta(0) or eta(1)",
                                     pos + 1 + arrow + 2);
    pairs.emplace_back(*a.first, *b.first);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  auto nat = domains::lift_nat_basis();
  auto two = domains::lift_two_basis();
  auto r = step_normalize(*nat, *two, std::move(pairs));
  if (auto* sf = std::get_if<domains::eps_step>(&r)) return ok(std::move(*sf));
  return fail<domains::eps_step>("step function is unbounded", 1);
}

/// Generator specs: `repeat(digits)` or `prefix(digits)+repeat(digits)`;
/// the baire flavour uses comma-separated naturals inside the parens.
inline parsed<domains::sequence_generator> parse_generator(std::string_view s,
                                                           bool binary) {
  auto parse_body = [binary](std::string_view body,
                             std::size_t at) -> parsed<domains::seq> {
    auto r = binary ? parse_cantor_atom(body) : parse_baire_atom(body);
    if (!r.first) return fail<domains::seq>(r.second.message, at + r.second.position);
    return r;
  };
  domains::seq prefix;
  std::size_t pos = 0;
  if (s.substr(0, 7) == "prefix(") {
    std::size_t close = s.find(')', 7);
    if (close == std::string_view::npos)
      return fail<domains::sequence_generator>("missing )", s.size());
    auto p = parse_body(s.substr(7, close - 7), 7);
    if (!p.first) return fail<domains::sequence_generator>(p.second.message, p.second.position);
    prefix = *p.first;
    if (s.substr(close + 1, 1) != "+")
      return fail<domains::sequence_generator>("expected +repeat(...)", close + 1);
    pos = close + 2;
  }
  std::string_view rest = s.substr(pos);
  if (rest.substr(0, 7) != "repeat(" || rest.empty() || rest.back() != ')')
    return fail<domains::sequence_generator>("expected repeat(...)", pos);
  auto body = parse_body(rest.substr(7, rest.size() - 8), pos + 7);
  if (!body.first)
    return fail<domains::sequence_generator>(body.second.message, body.second.position);
  if (body.first->empty())
    return fail<domains::sequence_generator>("repeat needs at least one symbol", pos + 7);
  return ok(domains::eventually_periodic(prefix, *body.first));
}

/// Real specs: `rat(p/q)` or `sqrt(n)`.
inline parsed<domains::rational_locator> parse_real(std::string_view s) {
  if (s.substr(0, 4) == "rat(" && !s.empty() && s.back() == ')') {
    auto r = parse_rational(s.substr(4, s.size() - 5));
    if (!r) return fail<domains::rational_locator>("malformed rational", 4);
    return ok(domains::locator_of_rational(*r));
  }
  if (s.substr(0, 5) == "sqrt(" && !s.empty() && s.back() == ')') {
    std::string_view body = s.substr(5, s.size() - 6);
    if (!all_digits(body))
      return fail<domains::rational_locator>("expected sqrt(natural)", 5);
    return ok(domains::locator_of_sqrt(
        static_cast<unsigned>(std::stoul(std::string(body)))));
  }
  return fail<domains::rational_locator>("expected rat(p/q) or sqrt(n)", 0);
}

} // namespace dcpo::text
