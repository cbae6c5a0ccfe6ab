#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "dcpo/basis.hpp"
#include "dcpo/errors.hpp"
#include "dcpo/oracles.hpp"

namespace dcpo {

/// An element of the rounded ideal completion, presented as a lazy
/// prec-increasing approximant chain. The denoted ideal is the union of the
/// downsets of the chain elements; membership is semidecidable from the
/// chain alone. Negative information, sharpness and strong maximality are
/// extra data carried as optional oracles.
///
/// Everything is immutable and pure; elements may be shared freely.
template <class E>
struct element {
  std::shared_ptr<const basis_descriptor<E>> basis;
  std::function<E(std::size_t)> chain;
  std::optional<negative_oracle<E>> negative;
  std::optional<sharp_oracle<E>> sharp;
  std::optional<strongmax_oracle<E>> strongmax;
};

/// Number of enumeration probes principal() spends looking for a starting
/// approximant of an irreflexive principal ideal.
inline constexpr std::size_t principal_start_bound = 200000;

/// The principal ideal of a basis element b. Reflexive case: the constant
/// chain at b (a compact element). Irreflexive case: a strictly increasing
/// chain cofinal in the downset of b, driven by repeated interpolation from
/// a starting approximant (supplied, or found by bounded enumeration).
template <class E>
element<E> principal(std::shared_ptr<const basis_descriptor<E>> basis, E b,
                     std::optional<E> start = std::nullopt) {
  element<E> x;
  x.basis = basis;
  if (basis->reflexive) {
    x.chain = [b](std::size_t) { return b; };
    return x;
  }
  E a{};
  if (start) {
    if (!basis->prec(*start, b))
      throw precondition_error(basis->name + ": supplied start is not below b");
    a = *start;
  } else {
    bool found = false;
    for (std::size_t n = 0; n < principal_start_bound && !found; ++n) {
      E c = basis->enumerate(n);
      if (basis->prec(c, b)) { a = c; found = true; }
    }
    if (!found)
      throw construction_error(basis->name +
                               ": no starting approximant below the given element");
  }
  auto bd = basis;
  x.chain = [bd, a, b](std::size_t n) {
    E c = bd->interpolate(a, b);
    for (std::size_t i = 0; i < n; ++i) c = bd->interpolate(c, b);
    return c;
  };
  return x;
}

/// Semidecides membership of b in x: the least n <= fuel with
/// prec(b, chain(n)), or nothing. Monotone in fuel; never a false yes.
template <class E>
std::optional<std::size_t> member(const element<E>& x, const E& b,
                                  std::size_t fuel) {
  for (std::size_t n = 0; n <= fuel; ++n)
    if (x.basis->prec(b, x.chain(n))) return n;
  return std::nullopt;
}

/// In the rounded ideal completion, the principal ideal of a is way below x
/// exactly when a is a member of x, so this is member() under another name.
template <class E>
std::optional<std::size_t> way_below_principal(const E& a, const element<E>& x,
                                               std::size_t fuel) {
  return member(x, a, fuel);
}

/// Searches for a counterexample to x below y: a chain element of x that
/// y's negative oracle rejects. A result certifies that x is not below y;
/// no result is not a proof of the order.
template <class E>
std::optional<refutation<E>> below_check(const element<E>& x, const element<E>& y,
                                         std::size_t fuel) {
  if (!y.negative)
    throw capability_error("below_check: right operand carries no negative oracle");
  for (std::size_t n = 0; n <= fuel; ++n) {
    E b = x.chain(n);
    refute_result<E> r = y.negative->refute(b, fuel);
    if (r.kind == membership::not_member)
      return refutation<E>{b, n, r.evidence};
  }
  return std::nullopt;
}

/// Supremum of a countable family over a linearly ordered basis: chain(n) is
/// a strict majorant, within the union ideal, of all approximants with both
/// indices at most n. Defined only where prec is a total order.
template <class E>
element<E> sup_linear(std::shared_ptr<const basis_descriptor<E>> basis,
                      std::function<element<E>(std::size_t)> family) {
  if (!basis->linear)
    throw capability_error(basis->name + ": sup_linear needs a linearly ordered basis");
  element<E> out;
  out.basis = basis;
  out.chain = [basis, family](std::size_t n) {
    // max over the square of indices, then interpolate toward the next
    // element of the chain that realized the max; stays inside the union.
    std::size_t bi = 0, bj = 0;
    E best = family(0).chain(0);
    for (std::size_t i = 0; i <= n; ++i) {
      element<E> xi = family(i);
      for (std::size_t j = 0; j <= n; ++j) {
        E c = xi.chain(j);
        if (basis->prec(best, c)) { best = c; bi = i; bj = j; }
      }
    }
    E above = family(bi).chain(bj + 1);
    return basis->interpolate(best, above);
  };
  return out;
}

} // namespace dcpo
