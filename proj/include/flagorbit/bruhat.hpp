#pragma once

#include <utility>
#include <vector>

#include "flagorbit/coxeter.hpp"

namespace flagorbit {

/// Lower Bruhat interval [e, top].
struct BruhatInterval {
  CoxeterElement top;
  /// Sorted by (length, canonical word).
  std::vector<CoxeterElement> members;
  /// poincare[k] = number of members of length k.
  std::vector<BigInt> poincare;

  std::size_t size() const { return members.size(); }
  bool contains(const CoxeterElement& u) const;
};

/// Lifting recursion on a left descent of w. Throws MixedSystems.
bool bruhat_leq(const CoxeterElement& u, const CoxeterElement& w);

/// Sub-product dynamic program over the canonical reduced word of w.
BruhatInterval lower_interval(const CoxeterElement& w);
/// Same program over a caller-chosen word, which must be a reduced word of
/// some element. Throws ParseError if it is not reduced.
BruhatInterval lower_interval_from_word(const WeylGroup& group, const Word& reduced_word);

/// Builds an interval record from an explicit member list (sorted, counted).
BruhatInterval make_interval(const CoxeterElement& top, std::vector<CoxeterElement> members);

bool is_palindromic(const std::vector<BigInt>& poincare);
inline bool is_palindromic(const BruhatInterval& interval) { return is_palindromic(interval.poincare); }

/// Covering pairs u < v inside the interval, sorted by
/// (l(u), word of u, word of v).
std::vector<std::pair<CoxeterElement, CoxeterElement>> covering_edges(const BruhatInterval& interval);

}  // namespace flagorbit
