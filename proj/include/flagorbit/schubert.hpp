#pragma once

#include <span>
#include <vector>

#include "flagorbit/coxeter.hpp"

namespace flagorbit {

/// A pattern is a permutation of {1..k} matched by relative order.
using Pattern = Permutation;

/// True iff some k positions of perm carry values in the same relative order
/// as pat. Throws PatternLongerThanPermutation.
bool contains_pattern(const Permutation& perm, const Pattern& pat);

/// The two patterns whose avoidance characterises smooth type A Schubert
/// varieties: 3412 and 4231.
std::span<const Pattern> smoothness_patterns();

/// Avoids every pattern in `patterns`. Throws NotTypeA.
bool is_smooth_type_a(const CoxeterElement& w, std::span<const Pattern> patterns = smoothness_patterns());

}  // namespace flagorbit
