#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dcpo/basis.hpp"
#include "dcpo/errors.hpp"

namespace dcpo {

/// A compact element of an exponential between algebraic dcpos: a bounded
/// finite set of single-step pairs in canonical form (sorted, no bottom
/// targets, one pair per source, no pair implied by the others). Equality of
/// normalized step functions is syntactic.
template <class A, class B>
struct step_fn {
  std::vector<std::pair<A, B>> pairs;

  friend bool operator==(const step_fn& s, const step_fn& t) = default;
  friend bool operator<(const step_fn& s, const step_fn& t) {
    return s.pairs < t.pairs;
  }
};

template <class A, class B>
struct unbounded_conflict {
  std::vector<std::pair<A, B>> pairs;  // a subset whose targets admit no join
};

template <class A, class B>
using normalize_result = std::variant<step_fn<A, B>, unbounded_conflict<A, B>>;

/// Evaluation of a normalized step function at a source compact: the join of
/// the targets whose sources sit below the argument, bottom when none do.
/// An impossible join means the input was not normalized.
template <class A, class B>
B step_eval(const basis_descriptor<A>& bd, const basis_descriptor<B>& be,
            const step_fn<A, B>& t, const A& a) {
  std::vector<B> hits;
  for (const auto& [ai, bi] : t.pairs)
    if (bd.prec(ai, a)) hits.push_back(bi);
  auto j = be.join(hits);
  if (!j)
    throw precondition_error("step_eval: unbounded join, step function not normalized");
  return *j;
}

/// The order decision for the exponential basis: S below T reduces to a
/// pointwise check of S's pairs against evaluation of T.
template <class A, class B>
bool step_leq(const basis_descriptor<A>& bd, const basis_descriptor<B>& be,
              const step_fn<A, B>& s, const step_fn<A, B>& t) {
  for (const auto& [a, b] : s.pairs)
    if (!be.prec(b, step_eval(bd, be, t, a))) return false;
  return true;
}

/// Canonical form of a finite list of single-step pairs, or the conflict that
/// makes it unbounded. Drops bottom targets, joins targets that share a
/// source, checks boundedness over source joins, removes pairs implied by
/// the rest, and sorts.
template <class A, class B>
normalize_result<A, B> step_normalize(const basis_descriptor<A>& bd,
                                      const basis_descriptor<B>& be,
                                      std::vector<std::pair<A, B>> pairs) {
  if (!bd.has_join() || !be.has_join())
    throw capability_error("step_normalize: both bases need join hooks");

  std::erase_if(pairs, [&](const auto& p) { return be.is_bottom(p.second); });

  // One pair per source.
  std::vector<std::pair<A, B>> merged;
  for (auto& p : pairs) {
    bool hit = false;
    for (auto& q : merged) {
      if (q.first == p.first) {
        auto j = be.join({q.second, p.second});
        if (!j) return unbounded_conflict<A, B>{{q, p}};
        q.second = *j;
        hit = true;
        break;
      }
    }
    if (!hit) merged.push_back(std::move(p));
  }

  // Boundedness: every source join that exists must make the matching
  // targets joinable. Candidate bounds are the sources closed under joins.
  std::vector<A> candidates;
  for (const auto& p : merged) candidates.push_back(p.first);
  for (std::size_t i = 0; i < candidates.size() && candidates.size() < 256; ++i)
    for (std::size_t j = i + 1; j < candidates.size() && candidates.size() < 256; ++j) {
      auto u = bd.join({candidates[i], candidates[j]});
      if (!u) continue;
      if (std::find(candidates.begin(), candidates.end(), *u) == candidates.end())
        candidates.push_back(*u);
    }
  for (const A& u : candidates) {
    std::vector<B> targets;
    std::vector<std::pair<A, B>> group;
    for (const auto& p : merged)
      if (bd.prec(p.first, u)) {
        targets.push_back(p.second);
        group.push_back(p);
      }
    if (!be.join(targets)) return unbounded_conflict<A, B>{group};
  }

  std::sort(merged.begin(), merged.end());

  // Drop pairs whose target is already reached by evaluating the rest.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < merged.size(); ++i) {
      step_fn<A, B> rest;
      for (std::size_t j = 0; j < merged.size(); ++j)
        if (j != i) rest.pairs.push_back(merged[j]);
      if (be.prec(merged[i].second, step_eval(bd, be, rest, merged[i].first))) {
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  return step_fn<A, B>{std::move(merged)};
}

template <class A, class B>
std::string render_step_fn(const basis_descriptor<A>& bd, const basis_descriptor<B>& be,
                           const step_fn<A, B>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : s.pairs) {
    if (!first) out += ", ";
    first = false;
    out += bd.render(a) + "=>" + be.render(b);
  }
  return out + "}";
}

} // namespace dcpo
