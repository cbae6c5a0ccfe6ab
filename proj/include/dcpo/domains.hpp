#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcpo/basis.hpp"
#include "dcpo/constructions.hpp"
#include "dcpo/errors.hpp"
#include "dcpo/ideal.hpp"
#include "dcpo/lift.hpp"
#include "dcpo/rational.hpp"
#include "dcpo/separation.hpp"

namespace dcpo::domains {

using dcpo::to_text;

using symbol = unsigned;
using seq = std::vector<symbol>;

/// An infinite sequence presented by a pure total indexing function.
struct sequence_generator {
  std::function<symbol(std::size_t)> at;
};

inline sequence_generator eventually_periodic(seq prefix, seq period) {
  if (period.empty()) throw precondition_error("eventually_periodic: empty period");
  return sequence_generator{[prefix, period](std::size_t n) {
    if (n < prefix.size()) return prefix[n];
    return period[(n - prefix.size()) % period.size()];
  }};
}

inline seq front(const sequence_generator& g, std::size_t n) {
  seq out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(g.at(i));
  return out;
}

inline bool is_prefix(const seq& a, const seq& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

namespace detail {

inline std::string render_cantor(const seq& s) {
  std::string out;
  for (symbol c : s) out += std::to_string(c);
  return out;
}

inline std::string render_baire(const seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

inline std::shared_ptr<const basis_descriptor<seq>> sequence_basis(
    std::string name, std::function<seq(std::size_t)> enumerate,
    std::function<std::string(const seq&)> render) {
  auto b = std::make_shared<basis_descriptor<seq>>();
  b->name = std::move(name);
  b->reflexive = true;
  b->prec = [](const seq& a, const seq& c) { return is_prefix(a, c); };
  b->enumerate = std::move(enumerate);
  b->interpolate = [](const seq&, const seq& c) { return c; };
  b->refinable = [](const seq& a, const seq& c) {
    return is_prefix(a, c) || is_prefix(c, a);
  };
  b->is_bottom = [](const seq& a) { return a.empty(); };
  b->render = std::move(render);
  return b;
}

} // namespace detail

/// Finite binary sequences under the prefix order, enumerated length first,
/// then lexicographically.
inline std::shared_ptr<const basis_descriptor<seq>> cantor_basis() {
  return detail::sequence_basis(
      "cantor",
      [](std::size_t n) {
        if (n == 0) return seq{};
        std::size_t len = 1, first = 1, count = 2;
        while (n >= first + count) {
          first += count;
          count *= 2;
          ++len;
        }
        std::size_t m = n - first;
        seq out(len, 0);
        for (std::size_t i = 0; i < len; ++i)
          out[len - 1 - i] = static_cast<symbol>((m >> i) & 1);
        return out;
      },
      detail::render_cantor);
}

/// Finite sequences of naturals under the prefix order, enumerated by the
/// canonical list coding.
inline std::shared_ptr<const basis_descriptor<seq>> baire_basis() {
  return detail::sequence_basis(
      "baire",
      [](std::size_t n) {
        seq out;
        for (std::size_t v : decode_list(n)) out.push_back(static_cast<symbol>(v));
        return out;
      },
      detail::render_baire);
}

/// Embeds an infinite sequence as the chain of its finite prefixes, with the
/// total membership decider, the induced sharp oracle, and the
/// strong-maximality split that separates any non-prefix from the element.
inline element<seq> embed_seq(std::shared_ptr<const basis_descriptor<seq>> basis,
                              sequence_generator g) {
  auto chain = [g](std::size_t n) { return front(g, n); };
  auto decide = [g](const seq& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != g.at(i)) return false;
    return true;
  };
  auto render = basis->render;
  element<seq> x = sharp_from_decider<seq>(
      basis, chain, decide, [g, render](const seq& t) {
        return "diverges from prefix " + render(front(g, t.size()));
      });
  x.strongmax = strongmax_oracle<seq>{
      [g, decide](const seq& u, const seq& v) -> strongmax_verdict<seq> {
        if (decide(u)) return way_below_t{};
        (void)v;
        return hausdorff_witness<seq>{u, front(g, u.size()), 0, u.size(), true};
      }};
  return x;
}

// ---------------------------------------------------------------------------
// Partial Dedekind reals

/// An open rational interval (lo, hi) with lo < hi; the basis elements of the
/// domain of partial Dedekind reals. Narrower intervals carry more
/// information: (p, q) is below (r, s) when p < r and s < q.
struct qpair {
  rational lo;
  rational hi;

  friend bool operator==(const qpair&, const qpair&) = default;
  friend bool operator<(const qpair& a, const qpair& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  }
};

inline std::string to_text(const qpair& p) {
  return "(" + to_text(p.lo) + "," + to_text(p.hi) + ")";
}

inline std::shared_ptr<const basis_descriptor<qpair>> dedekind_basis() {
  auto b = std::make_shared<basis_descriptor<qpair>>();
  b->name = "dedekind";
  b->reflexive = false;
  b->prec = [](const qpair& a, const qpair& c) {
    return a.lo < c.lo && c.hi < a.hi;
  };
  b->enumerate = [](std::size_t n) {
    auto [i, j] = cantor_unpair(n);
    rational p = nth_rational(i), q = nth_rational(j);
    if (p < q) return qpair{p, q};
    if (q < p) return qpair{q, p};
    return qpair{p - 1, p + 1};
  };
  b->interpolate = [](const qpair& a, const qpair& c) {
    return qpair{(a.lo + c.lo) / 2, (c.hi + a.hi) / 2};
  };
  b->refinable = [](const qpair& a, const qpair& c) {
    return std::max(a.lo, c.lo) < std::min(a.hi, c.hi);
  };
  b->render = [](const qpair& p) { return to_text(p); };
  return b;
}

// ---------------------------------------------------------------------------
// Locators

/// Two-sided rational cut data: total decisions for "p is below the value"
/// and "the value is below q", with stored bound witnesses.
struct rational_locator {
  std::function<bool(const rational&)> below;
  std::function<bool(const rational&)> above;
  rational lower_witness;
  rational upper_witness;
};

inline rational_locator locator_of_rational(const rational& r) {
  return {[r](const rational& p) { return p < r; },
          [r](const rational& q) { return r < q; }, r - 1, r + 1};
}

/// Locator of the positive square root of n, in exact rational arithmetic.
inline rational_locator locator_of_sqrt(unsigned n) {
  rational nn(n);
  return {[nn](const rational& p) { return p < 0 || p * p < nn; },
          [nn](const rational& q) { return q > 0 && q * q > nn; }, rational(-1),
          rational(n) + 1};
}

/// The fixed validation grid: reduced rationals with denominator at most 16
/// and magnitude at most 8, sorted.
inline const std::vector<rational>& locator_sample_grid() {
  static const std::vector<rational> grid = [] {
    std::vector<rational> g;
    for (int d = 1; d <= 16; ++d)
      for (int n = -8 * d; n <= 8 * d; ++n) g.push_back(rational(n, d));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }();
  return grid;
}

/// Sampled validation of the locator laws on the fixed grid: boundedness of
/// the stored witnesses, cut monotonicity, transitivity, locatedness on
/// adjacent pairs, and roundedness probed by dyadic refinement at the cut
/// boundaries. Throws on the first violation found.
inline void validate_locator(const rational_locator& loc) {
  if (!(loc.lower_witness < loc.upper_witness) || !loc.below(loc.lower_witness) ||
      !loc.above(loc.upper_witness))
    throw validation_error("locator: stored bound witnesses fail");

  const auto& grid = locator_sample_grid();
  std::vector<bool> bel(grid.size()), abv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bel[i] = loc.below(grid[i]);
    abv[i] = loc.above(grid[i]);
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (bel[i + 1] && !bel[i])
      throw validation_error("locator: lower cut not downward closed at " +
                             to_text(grid[i]));
    if (abv[i] && !abv[i + 1])
      throw validation_error("locator: upper cut not upward closed at " +
                             to_text(grid[i + 1]));
    if (!bel[i] && !abv[i + 1])
      throw validation_error("locator: locatedness fails on (" + to_text(grid[i]) +
                             ", " + to_text(grid[i + 1]) + ")");
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (bel[i] && abv[i])
      throw validation_error("locator: transitivity fails at " + to_text(grid[i]));

  auto last_below = std::find(bel.rbegin(), bel.rend(), true);
  if (last_below != bel.rend()) {
    std::size_t t = grid.size() - 1 - static_cast<std::size_t>(last_below - bel.rbegin());
    if (t + 1 < grid.size()) {
      bool ok = false;
      rational step = (grid[t + 1] - grid[t]) / 2;
      rational r = grid[t] + step;
      for (int i = 0; i < 24 && !ok; ++i, step /= 2, r = grid[t] + step)
        ok = loc.below(r);
      if (!ok)
        throw validation_error("locator: lower roundedness fails near " +
                               to_text(grid[t]));
    }
  }
  auto first_above = std::find(abv.begin(), abv.end(), true);
  if (first_above != abv.end()) {
    std::size_t t = static_cast<std::size_t>(first_above - abv.begin());
    if (t > 0) {
      bool ok = false;
      rational step = (grid[t] - grid[t - 1]) / 2;
      rational r = grid[t] - step;
      for (int i = 0; i < 24 && !ok; ++i, step /= 2, r = grid[t] - step)
        ok = loc.above(r);
      if (!ok)
        throw validation_error("locator: upper roundedness fails near " +
                               to_text(grid[t]));
    }
  }
}

namespace detail {

/// One trisection step of the located-interval refinement: keep the third
/// that the lower cut confirms, otherwise the locatedness-forced other side.
inline std::pair<rational, rational> trisect(const rational_locator& loc,
                                             std::pair<rational, rational> uv) {
  rational third = (uv.second - uv.first) / 3;
  rational m1 = uv.first + third;
  rational m2 = uv.first + third * 2;
  if (loc.below(m1)) return {m1, uv.second};
  return {uv.first, m2};
}

inline std::pair<rational, rational> refined_interval(const rational_locator& loc,
                                                      std::size_t n) {
  std::pair<rational, rational> uv{loc.lower_witness, loc.upper_witness};
  for (std::size_t i = 0; i < n; ++i) uv = trisect(loc, uv);
  return uv;
}

inline rational pow2(std::size_t n) {
  rational r = 1;
  for (std::size_t i = 0; i < n; ++i) r /= 2;
  return r;
}

inline constexpr std::size_t locator_refinement_cap = 4096;

} // namespace detail

/// Embeds a located cut as a partial Dedekind real: the chain is the
/// trisection refinement of the stored bounds, widened by a shrinking margin
/// to keep it strictly increasing. Carries the total membership decider, its
/// sharp oracle, and the strong-maximality split driven by locatedness.
inline element<qpair> embed_located(std::shared_ptr<const basis_descriptor<qpair>> basis,
                                    rational_locator loc) {
  validate_locator(loc);
  rational width = loc.upper_witness - loc.lower_witness;
  auto chain = [loc, width](std::size_t n) {
    auto [u, v] = detail::refined_interval(loc, n);
    rational margin = width * detail::pow2(n + 2);
    return qpair{u - margin, v + margin};
  };
  auto decide = [loc](const qpair& e) { return loc.below(e.lo) && loc.above(e.hi); };

  element<qpair> x;
  x.basis = basis;
  x.chain = chain;
  {
    element<qpair> probe{basis, chain, {}, {}, {}};
    for (std::size_t n = 0; n < 32; ++n) {
      qpair e = basis->enumerate(n);
      if (decide(e) != member(probe, e, 64).has_value())
        throw validation_error("embed_located: decider contradicts chain at " +
                               to_text(e));
    }
  }
  x.negative = negative_oracle<qpair>{
      [loc](const qpair& e, std::size_t) {
        if (!loc.below(e.lo))
          return refute_result<qpair>{membership::not_member,
                                      "lower endpoint " + to_text(e.lo) +
                                          " is not below the cut"};
        if (!loc.above(e.hi))
          return refute_result<qpair>{membership::not_member,
                                      "upper endpoint " + to_text(e.hi) +
                                          " is not above the cut"};
        return refute_result<qpair>{membership::is_member, {}};
      },
      true};
  x.sharp = sharp_oracle<qpair>{
      [decide](const qpair& a, const qpair& b) -> sharp_verdict<qpair> {
        if (decide(a)) return below_t{};
        (void)b;
        return not_above<qpair>{a, "interval not around the cut"};
      }};
  x.strongmax = strongmax_oracle<qpair>{
      [loc, decide, chain](const qpair& u, const qpair& v) -> strongmax_verdict<qpair> {
        if (decide(u)) return way_below_t{};
        const rational &r = v.lo, &s = v.hi;
        if (!loc.below(u.lo)) {
          // Locatedness at (u.lo, r) forces the cut below r: shrink the chain
          // until it fits strictly to the left of v, then pick a fresh
          // interval around [r, s] that cannot overlap it.
          for (std::size_t k = 0; k < detail::locator_refinement_cap; ++k) {
            qpair c = chain(k);
            if (c.hi < r)
              return hausdorff_witness<qpair>{qpair{(c.hi + r) / 2, s + 1}, c, 0, k + 1,
                                              true};
          }
        } else {
          // decide(u) failed on the upper side; locatedness at (s, u.hi)
          // forces the cut above s.
          for (std::size_t k = 0; k < detail::locator_refinement_cap; ++k) {
            qpair c = chain(k);
            if (s < c.lo)
              return hausdorff_witness<qpair>{qpair{r - 1, (s + c.lo) / 2}, c, 0, k + 1,
                                              true};
          }
        }
        throw validation_error("embed_located: locator failed to localize the cut");
      }};
  return x;
}

inline element<qpair> embed_rational(std::shared_ptr<const basis_descriptor<qpair>> basis,
                                     const rational& r) {
  return embed_located(std::move(basis), locator_of_rational(r));
}

// ---------------------------------------------------------------------------
// Lower reals

inline std::shared_ptr<const basis_descriptor<rational>> lower_basis() {
  auto b = std::make_shared<basis_descriptor<rational>>();
  b->name = "lower";
  b->reflexive = false;
  b->linear = true;
  b->prec = [](const rational& p, const rational& q) { return p < q; };
  b->enumerate = [](std::size_t n) { return nth_rational(n); };
  b->interpolate = [](const rational& p, const rational& q) { return (p + q) / 2; };
  b->refinable = [](const rational&, const rational&) { return true; };
  b->render = [](const rational& p) { return to_text(p); };
  return b;
}

/// A lower real from a located cut: the chain is the trisection refinement's
/// lower endpoints, nudged down by a shrinking margin for strictness. The
/// sharp split realizes locatedness: confirm the lower point or refute with
/// it.
inline element<rational> lower_from_locator(
    std::shared_ptr<const basis_descriptor<rational>> basis, rational_locator loc) {
  validate_locator(loc);
  rational width = loc.upper_witness - loc.lower_witness;
  auto chain = [loc, width](std::size_t n) {
    auto [u, v] = detail::refined_interval(loc, n);
    return u - width * detail::pow2(n + 1);
  };
  element<rational> x;
  x.basis = basis;
  x.chain = chain;
  {
    element<rational> probe{basis, chain, {}, {}, {}};
    for (std::size_t n = 0; n < 32; ++n) {
      rational e = basis->enumerate(n);
      if (loc.below(e) != member(probe, e, 64).has_value())
        throw validation_error("lower_from_locator: decider contradicts chain at " +
                               to_text(e));
    }
  }
  x.negative = negative_oracle<rational>{
      [loc](const rational& p, std::size_t) {
        if (loc.below(p)) return refute_result<rational>{membership::is_member, {}};
        return refute_result<rational>{membership::not_member,
                                       to_text(p) + " is not below the cut"};
      },
      true};
  x.sharp = sharp_oracle<rational>{
      [loc](const rational& p, const rational& q) -> sharp_verdict<rational> {
        if (loc.below(p)) return below_t{};
        (void)q;
        return not_above<rational>{p, to_text(p) + " is not below the cut"};
      }};
  return x;
}

inline element<rational> lower_rational(
    std::shared_ptr<const basis_descriptor<rational>> basis, const rational& r) {
  return lower_from_locator(std::move(basis), locator_of_rational(r));
}

/// Bounded search for a witness that q lies in the upper cut induced by a
/// lower real with total membership: a rational below q that is not a member.
inline std::optional<rational> upper_complement(const element<rational>& x,
                                                const rational& q,
                                                std::size_t search_bound) {
  if (!x.negative || !x.negative->total)
    throw capability_error("upper_complement: needs a total membership decision");
  for (std::size_t n = 0; n < search_bound; ++n) {
    rational s = nth_rational(n);
    if (s < q &&
        x.negative->refute(s, search_bound).kind == membership::not_member)
      return s;
  }
  return std::nullopt;
}

/// Round trip between locators and sharp lower reals: rebuild the cut
/// decisions from the sharp split and list every disagreement with the
/// given locator on the grid pairs.
inline std::vector<std::string> locator_roundtrip(
    std::shared_ptr<const basis_descriptor<rational>> basis,
    const rational_locator& loc,
    const std::vector<std::pair<rational, rational>>& grid) {
  std::vector<std::string> mismatches;
  element<rational> x = lower_from_locator(basis, loc);
  for (const auto& [p, q] : grid) {
    if (!(p < q)) continue;
    sharp_verdict<rational> v = x.sharp->split(p, q);
    if (std::holds_alternative<below_t>(v)) {
      if (!loc.below(p))
        mismatches.push_back("split placed " + to_text(p) +
                             " in the lower cut, locator disagrees");
    } else {
      const auto& na = std::get<not_above<rational>>(v);
      if (loc.below(na.refuting))
        mismatches.push_back("split refuted with " + to_text(na.refuting) +
                             ", locator places it in the lower cut");
      if (!(na.refuting < q))
        mismatches.push_back("refuting rational " + to_text(na.refuting) +
                             " is not below " + to_text(q));
      if (!loc.above(q))
        mismatches.push_back("split placed " + to_text(q) +
                             " in the upper cut, locator disagrees");
    }
  }
  return mismatches;
}

// ---------------------------------------------------------------------------
// The exponential domain for Cantor space

using lnat = lifted<symbol>;
using ltwo = lifted<symbol>;
using eps_step = step_fn<lnat, ltwo>;

inline std::shared_ptr<const basis_descriptor<lnat>> lift_nat_basis() {
  return lift_compacts<symbol>([](std::size_t n) { return static_cast<symbol>(n); },
                               std::nullopt,
                               [](const symbol& v) { return std::to_string(v); },
                               "L(N)");
}

inline std::shared_ptr<const basis_descriptor<ltwo>> lift_two_basis() {
  return lift_compacts<symbol>([](std::size_t n) { return static_cast<symbol>(n); },
                               std::size_t{2},
                               [](const symbol& v) { return std::to_string(v); },
                               "L(2)");
}

inline std::shared_ptr<const basis_descriptor<eps_step>> eps_basis() {
  return exponential_basis<lnat, ltwo>(lift_nat_basis(), lift_two_basis());
}

/// Embeds a binary sequence into the exponential over the liftings: the chain
/// collects the graph step by step, and the total decider reduces order
/// against the embedded function pointwise, with strictness at bottom.
inline element<eps_step> epsilon_embed(
    std::shared_ptr<const basis_descriptor<eps_step>> basis, sequence_generator g) {
  auto nat = lift_nat_basis();
  auto two = lift_two_basis();
  auto chain = [basis, nat, two, g](std::size_t n) {
    std::vector<std::pair<lnat, ltwo>> pairs;
    for (std::size_t k = 0; k < n; ++k)
      pairs.emplace_back(lnat::eta(static_cast<symbol>(k)), ltwo::eta(g.at(k)));
    return std::get<eps_step>(step_normalize(*nat, *two, std::move(pairs)));
  };
  auto decide = [g](const eps_step& s) {
    for (const auto& [a, b] : s.pairs) {
      if (a.is_bottom()) return false;  // the embedded function is strict
      if (!b.is_bottom() && *b.value != g.at(*a.value)) return false;
    }
    return true;
  };
  auto render = basis->render;
  return sharp_from_decider<eps_step>(basis, chain, decide,
                                      [render](const eps_step& s) {
                                        return render(s) +
                                               " is not below the embedded function";
                                      });
}

/// The embedded constant sequence against the non-strict constant function:
/// the first sits strictly below the second, witnessed by the single-step
/// function at bottom.
struct nonmax_result {
  element<eps_step> strict_constant;
  element<eps_step> nonstrict_constant;
  eps_step separating;                       // the step function at bottom
  std::optional<refutation<eps_step>> down;  // nonstrict not below strict
  bool chain_inclusion = false;              // strict chain below nonstrict chain
};

inline nonmax_result nonmax_witness(
    std::shared_ptr<const basis_descriptor<eps_step>> basis, symbol i) {
  nonmax_result out;
  out.strict_constant =
      epsilon_embed(basis, sequence_generator{[i](std::size_t) { return i; }});
  eps_step at_bottom{{{lnat::bottom(), ltwo::eta(i)}}};
  out.separating = at_bottom;
  auto chain = [at_bottom](std::size_t) { return at_bottom; };
  auto decide = [i](const eps_step& s) {
    for (const auto& [a, b] : s.pairs) {
      (void)a;
      if (!b.is_bottom() && *b.value != i) return false;
    }
    return true;
  };
  out.nonstrict_constant = sharp_from_decider<eps_step>(
      basis, chain, decide, [](const eps_step&) {
        return std::string("not below the constant function");
      });
  out.down = not_below(out.nonstrict_constant, out.strict_constant, 128);
  out.chain_inclusion = true;
  for (std::size_t n = 0; n < 32 && out.chain_inclusion; ++n)
    out.chain_inclusion =
        basis->prec(out.strict_constant.chain(n), out.nonstrict_constant.chain(0));
  return out;
}

} // namespace dcpo::domains
