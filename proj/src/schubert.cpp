#include "flagorbit/schubert.hpp"

#include "flagorbit/errors.hpp"

namespace flagorbit {

namespace {

// chosen[j] is the position matched to pat[j], for j < depth.
bool extend_match(const Permutation& perm, const Pattern& pat, std::vector<std::size_t>& chosen, std::size_t depth,
                  std::size_t next_pos) {
  const std::size_t k = pat.size();
  if (depth == k) return true;
  const std::size_t m = perm.size();
  for (std::size_t pos = next_pos; pos + (k - depth) <= m; ++pos) {
    bool consistent = true;
    for (std::size_t j = 0; j < depth && consistent; ++j) {
      consistent = (pat.one_line[j] < pat.one_line[depth]) == (perm.one_line[chosen[j]] < perm.one_line[pos]);
    }
    if (!consistent) continue;
    chosen[depth] = pos;
    if (extend_match(perm, pat, chosen, depth + 1, pos + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& perm, const Pattern& pat) {
  if (pat.size() > perm.size())
    throw PatternLongerThanPermutation("pattern of length " + std::to_string(pat.size()) +
                                       " is longer than permutation of length " + std::to_string(perm.size()));
  std::vector<std::size_t> chosen(pat.size());
  return extend_match(perm, pat, chosen, 0, 0);
}

std::span<const Pattern> smoothness_patterns() {
  static const std::vector<Pattern> patterns{Pattern{{3, 4, 1, 2}}, Pattern{{4, 2, 3, 1}}};
  return patterns;
}

bool is_smooth_type_a(const CoxeterElement& w, std::span<const Pattern> patterns) {
  const Permutation perm = to_permutation(w);
  for (const auto& pat : patterns) {
    if (pat.size() <= perm.size() && contains_pattern(perm, pat)) return false;
  }
  return true;
}

}  // namespace flagorbit
