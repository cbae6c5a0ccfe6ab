#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcpo/basis.hpp"
#include "dcpo/pairing.hpp"
#include "dcpo/step_function.hpp"

namespace dcpo {

/// Basis for a product of two completions: pairs related componentwise.
/// Capabilities are present exactly when both factors supply them.
template <class E1, class E2>
std::shared_ptr<const basis_descriptor<std::pair<E1, E2>>> product_basis(
    std::shared_ptr<const basis_descriptor<E1>> b1,
    std::shared_ptr<const basis_descriptor<E2>> b2) {
  using P = std::pair<E1, E2>;
  auto b = std::make_shared<basis_descriptor<P>>();
  b->name = b1->name + " x " + b2->name;
  b->reflexive = b1->reflexive && b2->reflexive;
  b->prec = [b1, b2](const P& x, const P& y) {
    return b1->prec(x.first, y.first) && b2->prec(x.second, y.second);
  };
  b->enumerate = [b1, b2](std::size_t n) {
    auto [i, j] = cantor_unpair(n);
    return P{b1->enumerate(i), b2->enumerate(j)};
  };
  b->interpolate = [b1, b2](const P& x, const P& y) {
    return P{b1->interpolate(x.first, y.first), b2->interpolate(x.second, y.second)};
  };
  if (b1->has_refinable() && b2->has_refinable())
    b->refinable = [b1, b2](const P& x, const P& y) {
      return b1->refinable(x.first, y.first) && b2->refinable(x.second, y.second);
    };
  if (b1->has_bottom() && b2->has_bottom())
    b->is_bottom = [b1, b2](const P& x) {
      return b1->is_bottom(x.first) && b2->is_bottom(x.second);
    };
  if (b1->has_join() && b2->has_join())
    b->join = [b1, b2](const std::vector<P>& xs) -> std::optional<P> {
      std::vector<E1> l;
      std::vector<E2> r;
      for (const auto& x : xs) { l.push_back(x.first); r.push_back(x.second); }
      auto jl = b1->join(l);
      auto jr = b2->join(r);
      if (!jl || !jr) return std::nullopt;
      return P{*jl, *jr};
    };
  b->render = [b1, b2](const P& x) {
    return "(" + b1->render(x.first) + ", " + b2->render(x.second) + ")";
  };
  return b;
}

/// Basis of compact step functions for the exponential between an inhabited
/// algebraic source and a pointed bounded-complete algebraic target. The
/// order decision is the pointwise reduction via evaluation; refinability is
/// boundedness of the union. Enumeration decodes pair lists and normalizes,
/// mapping unbounded decodes to the bottom step function.
template <class A, class B>
std::shared_ptr<const basis_descriptor<step_fn<A, B>>> exponential_basis(
    std::shared_ptr<const basis_descriptor<A>> bd,
    std::shared_ptr<const basis_descriptor<B>> be) {
  if (!bd->reflexive)
    throw precondition_error("exponential_basis: source basis must be reflexive");
  if (!be->reflexive || !be->has_join() || !be->has_bottom())
    throw precondition_error(
        "exponential_basis: target basis must be reflexive with join and bottom hooks");
  if (!bd->has_join())
    throw precondition_error("exponential_basis: source basis must supply a join hook");
  using S = step_fn<A, B>;
  auto b = std::make_shared<basis_descriptor<S>>();
  b->name = be->name + "^" + bd->name;
  b->reflexive = true;
  b->prec = [bd, be](const S& s, const S& t) { return step_leq(*bd, *be, s, t); };
  b->enumerate = [bd, be](std::size_t n) {
    std::vector<std::pair<A, B>> pairs;
    for (std::size_t item : decode_list(n)) {
      auto [i, j] = cantor_unpair(item);
      pairs.emplace_back(bd->enumerate(i), be->enumerate(j));
    }
    auto r = step_normalize(*bd, *be, std::move(pairs));
    if (auto* s = std::get_if<S>(&r)) return *s;
    return S{};
  };
  b->interpolate = [](const S&, const S& t) { return t; };
  b->refinable = [bd, be](const S& s, const S& t) {
    std::vector<std::pair<A, B>> all = s.pairs;
    all.insert(all.end(), t.pairs.begin(), t.pairs.end());
    return std::holds_alternative<S>(step_normalize(*bd, *be, std::move(all)));
  };
  b->is_bottom = [](const S& s) { return s.pairs.empty(); };
  b->join = [bd, be](const std::vector<S>& xs) -> std::optional<S> {
    std::vector<std::pair<A, B>> all;
    for (const auto& x : xs) all.insert(all.end(), x.pairs.begin(), x.pairs.end());
    auto r = step_normalize(*bd, *be, std::move(all));
    if (auto* s = std::get_if<S>(&r)) return *s;
    return std::nullopt;
  };
  b->render = [bd, be](const S& s) { return render_step_fn(*bd, *be, s); };
  return b;
}

} // namespace dcpo
