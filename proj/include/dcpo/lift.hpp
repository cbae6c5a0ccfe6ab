#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dcpo/basis.hpp"

namespace dcpo {

/// A compact element of the lifting of a set: the added least element, or the
/// image of a carrier value under the unit. Unit images are pairwise
/// incomparable; bottom sits below everything.
template <class T>
struct lifted {
  std::optional<T> value;

  static lifted bottom() { return lifted{std::nullopt}; }
  static lifted eta(T v) { return lifted{std::move(v)}; }
  bool is_bottom() const { return !value.has_value(); }

  friend bool operator==(const lifted& a, const lifted& b) = default;
  friend bool operator<(const lifted& a, const lifted& b) {
    if (a.is_bottom()) return !b.is_bottom();
    if (b.is_bottom()) return false;
    return *a.value < *b.value;
  }
};

/// The order on lifted compacts.
template <class T>
bool lift_leq(const lifted<T>& a, const lifted<T>& b) {
  return a.is_bottom() || a == b;
}

/// Join of finitely many lifted compacts: exists exactly when the non-bottom
/// members agree. The empty join is bottom.
template <class T>
std::optional<lifted<T>> lift_join(const std::vector<lifted<T>>& xs) {
  lifted<T> acc = lifted<T>::bottom();
  for (const auto& x : xs) {
    if (x.is_bottom()) continue;
    if (acc.is_bottom()) acc = x;
    else if (!(acc == x)) return std::nullopt;
  }
  return acc;
}

/// The basis of compact elements of the lifting of a set with decidable
/// equality: reflexive, bottom-detecting, with the exact join hook. The
/// carrier is presented by a value enumerator (finite carriers cycle).
template <class T>
std::shared_ptr<const basis_descriptor<lifted<T>>> lift_compacts(
    std::function<T(std::size_t)> value_at, std::optional<std::size_t> carrier_size,
    std::function<std::string(const T&)> render_value, std::string name) {
  auto b = std::make_shared<basis_descriptor<lifted<T>>>();
  b->name = std::move(name);
  b->reflexive = true;
  b->prec = [](const lifted<T>& x, const lifted<T>& y) { return lift_leq(x, y); };
  b->enumerate = [value_at, carrier_size](std::size_t n) {
    if (n == 0) return lifted<T>::bottom();
    std::size_t k = n - 1;
    if (carrier_size) k %= *carrier_size;
    return lifted<T>::eta(value_at(k));
  };
  b->interpolate = [](const lifted<T>&, const lifted<T>& y) { return y; };
  b->refinable = [](const lifted<T>& x, const lifted<T>& y) {
    return lift_join<T>({x, y}).has_value();
  };
  b->is_bottom = [](const lifted<T>& x) { return x.is_bottom(); };
  b->join = [](const std::vector<lifted<T>>& xs) { return lift_join(xs); };
  b->render = [render_value](const lifted<T>& x) {
    return x.is_bottom() ? std::string("_|_") : "eta(" + render_value(*x.value) + ")";
  };
  return b;
}

/// Functorial action of the lifting on a carrier map: strict, unit to unit.
template <class T, class U>
std::function<lifted<U>(const lifted<T>&)> lift_map(std::function<U(const T&)> f) {
  return [f](const lifted<T>& x) {
    if (x.is_bottom()) return lifted<U>::bottom();
    return lifted<U>::eta(f(*x.value));
  };
}

} // namespace dcpo
