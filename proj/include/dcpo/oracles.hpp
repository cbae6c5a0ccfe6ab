#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>

namespace dcpo {

/// Outcome of a negative-information query "is b a member of this ideal?".
enum class membership { not_member, is_member, unknown };

template <class E>
struct refute_result {
  membership kind = membership::unknown;
  std::string evidence;  // domain-specific text, plain data for serialization
};

/// Negative information attached to an element: a procedure refuting
/// membership of basis elements. `total` oracles never answer unknown and
/// partition the carrier, agreeing with chain membership on every yes case.
template <class E>
struct negative_oracle {
  std::function<refute_result<E>(const E&, std::size_t)> refute;
  bool total = false;
};

struct below_t {};

/// Evidence that no element above `b` lies below x: a basis element
/// strictly below `b` that is certifiably not a member of x.
template <class E>
struct not_above {
  E refuting;
  std::string evidence;
};

template <class E>
using sharp_verdict = std::variant<below_t, not_above<E>>;

/// A total split for sharp elements: for every a prec b, either a is an
/// approximant of x or b is certifiably not below x.
template <class E>
struct sharp_oracle {
  std::function<sharp_verdict<E>(const E&, const E&)> split;
};

/// Checkable certificate that two elements are Hausdorff separated:
/// a is way below the first, b way below the second, and a, b have no
/// common strict upper bound.
template <class E>
struct hausdorff_witness {
  E a;
  E b;
  std::size_t a_index = 0;  // chain index where a was confirmed (when applicable)
  std::size_t b_index = 0;
  bool refinable_checked = false;
};

struct way_below_t {};

template <class E>
using strongmax_verdict = std::variant<way_below_t, hausdorff_witness<E>>;

/// A total split for strongly maximal elements: for every u prec v, either
/// u approximates x or v and x are Hausdorff separated, with a witness.
/// A Separated witness orients its `a` field toward the probe v and its
/// `b` field toward x.
template <class E>
struct strongmax_oracle {
  std::function<strongmax_verdict<E>(const E&, const E&)> split;
};

enum class apart_direction { left_not_below_right, right_not_below_left };

inline const char* to_text(apart_direction d) {
  return d == apart_direction::left_not_below_right ? "left_not_below_right"
                                                    : "right_not_below_left";
}

/// Certificate for intrinsic apartness: `element` enters the chain of the
/// side named by `direction` at `member_index`, and the other side's
/// negative oracle certifies it is not a member there.
template <class E>
struct apartness_witness {
  apart_direction direction = apart_direction::left_not_below_right;
  E element;
  std::size_t member_index = 0;
  std::string evidence;
};

/// A refuted order claim x below y: chain element of x at `index`, rejected
/// by y's negative oracle.
template <class E>
struct refutation {
  E element;
  std::size_t index = 0;
  std::string evidence;
};

} // namespace dcpo
