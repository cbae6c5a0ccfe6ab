#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcpo/errors.hpp"
#include "dcpo/pairing.hpp"

namespace dcpo {

/// An abstract basis (B, prec): a countable carrier with a decidable
/// transitive interpolative relation, presented as a record of pure functions.
///
/// Decidability of `prec` is the library-wide contract: every basis answers
/// `prec(a, b)` totally. The `reflexive` flag switches principal-ideal and
/// compactness behaviour (the algebraic case). Optional capabilities:
/// `refinable` decides whether two elements have a common strict upper bound,
/// `is_bottom` detects the least generator, `join` computes finite joins of
/// compacts where they exist (used by the exponential construction).
template <class E>
struct basis_descriptor {
  using element = E;

  std::function<bool(const E&, const E&)> prec;
  bool reflexive = false;
  std::function<E(std::size_t)> enumerate;
  std::function<E(const E&, const E&)> interpolate;
  std::function<bool(const E&, const E&)> refinable;  // may be empty
  std::function<bool(const E&)> is_bottom;            // may be empty
  std::function<std::optional<E>(const std::vector<E>&)> join;  // may be empty
  std::function<std::string(const E&)> render;
  bool linear = false;  // prec is a total strict order (the lower-real basis)
  std::string name;

  bool has_refinable() const { return static_cast<bool>(refinable); }
  bool has_bottom() const { return static_cast<bool>(is_bottom); }
  bool has_join() const { return static_cast<bool>(join); }
};

template <class E>
bool prec(const basis_descriptor<E>& b, const E& x, const E& y) {
  return b.prec(x, y);
}

template <class E>
E interpolate(const basis_descriptor<E>& b, const E& x, const E& y) {
  if (!b.prec(x, y))
    throw precondition_error(b.name + ": interpolate requires prec(a, b)");
  return b.interpolate(x, y);
}

template <class E>
bool refinable(const basis_descriptor<E>& b, const E& x, const E& y) {
  if (!b.has_refinable())
    throw capability_error(b.name + ": no refinability decider");
  return b.refinable(x, y);
}

template <class E>
bool is_bottom(const basis_descriptor<E>& b, const E& x) {
  if (!b.has_bottom())
    throw capability_error(b.name + ": no bottom detection");
  return b.is_bottom(x);
}

template <class E>
E enumerate(const basis_descriptor<E>& b, std::size_t n) {
  return b.enumerate(n);
}

/// Fuel-bounded interpolant search over the enumeration; the closed-form
/// `interpolate` hook is the primary route, this exists as an independent
/// cross-check for validate_basis.
template <class E>
std::optional<E> search_interpolant(const basis_descriptor<E>& b, const E& x,
                                    const E& y, std::size_t bound) {
  for (std::size_t n = 0; n < bound; ++n) {
    E c = b.enumerate(n);
    if (b.prec(x, c) && b.prec(c, y)) return c;
  }
  return std::nullopt;
}

struct basis_violation {
  std::string kind;
  std::string detail;
};

/// Spot-checks the basis axioms on the first `sample_size` enumerated
/// elements: transitivity, interpolant correctness, reflexivity when flagged,
/// refinability symmetry and soundness against enumerated upper bounds.
/// Violations are data, not errors; an empty list is a pass.
template <class E>
std::vector<basis_violation> validate_basis(const basis_descriptor<E>& b,
                                            std::size_t sample_size) {
  std::vector<basis_violation> out;
  std::vector<E> sample;
  sample.reserve(sample_size);
  for (std::size_t n = 0; n < sample_size; ++n) sample.push_back(b.enumerate(n));

  auto show = [&](const E& e) { return b.render ? b.render(e) : std::string("<elem>"); };

  if (b.reflexive) {
    for (const E& a : sample)
      if (!b.prec(a, a))
        out.push_back({"reflexivity", "prec(a,a) false for a = " + show(a)});
  }

  for (const E& a : sample)
    for (const E& c : sample) {
      if (!b.prec(a, c)) continue;
      for (const E& d : sample)
        if (b.prec(c, d) && !b.prec(a, d))
          out.push_back({"transitivity", show(a) + " < " + show(c) + " < " +
                                             show(d) + " but not " + show(a) +
                                             " < " + show(d)});
      E m = b.interpolate(a, c);
      if (!b.prec(a, m) || !b.prec(m, c)) {
        std::string note;
        if (auto found = search_interpolant(b, a, c, sample_size))
          note = "; a searched interpolant exists: " + show(*found);
        out.push_back({"interpolant", "interpolate(" + show(a) + ", " + show(c) +
                                          ") = " + show(m) + " is not strictly between" + note});
      }
    }

  if (b.has_refinable()) {
    for (const E& a : sample)
      for (const E& c : sample) {
        if (b.refinable(a, c) != b.refinable(c, a))
          out.push_back({"refinable-symmetry", show(a) + " vs " + show(c)});
        if (!b.refinable(a, c)) {
          for (const E& z : sample)
            if (b.prec(a, z) && b.prec(c, z)) {
              out.push_back({"refinable-soundness",
                             show(z) + " bounds " + show(a) + " and " + show(c) +
                                 " but refinable says false"});
              break;
            }
        }
      }
  }

  return out;
}

} // namespace dcpo
