#include "flagorbit/bruhat.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagorbit/errors.hpp"

namespace flagorbit {

bool BruhatInterval::contains(const CoxeterElement& u) const {
  return std::binary_search(members.begin(), members.end(), u, shortlex_less);
}

bool bruhat_leq(const CoxeterElement& u_in, const CoxeterElement& w_in) {
  require_same_group(u_in, w_in);
  CoxeterElement u = u_in;
  CoxeterElement w = w_in;
  for (;;) {
    if (u.length() > w.length()) return false;
    if (u.length() == w.length()) return u == w;
    if (u.is_identity()) return true;
    // s is a left descent of w; the canonical word starts with one.
    const int s = w.word().front();
    if (u.is_descent(s, Side::Left)) u = u.multiply_generator(s, Side::Left);
    w = w.multiply_generator(s, Side::Left);
  }
}

BruhatInterval make_interval(const CoxeterElement& top, std::vector<CoxeterElement> members) {
  std::sort(members.begin(), members.end(), shortlex_less);
  std::vector<BigInt> poincare(static_cast<std::size_t>(top.length() + 1), BigInt(0));
  for (const auto& u : members) {
    if (u.length() > top.length()) throw Error("interval member longer than its top element");
    poincare[static_cast<std::size_t>(u.length())] += 1;
  }
  return BruhatInterval{top, std::move(members), std::move(poincare)};
}

namespace {

BruhatInterval subproduct_interval(const WeylGroup& group, const Word& word) {
  std::unordered_set<RootAction, RootActionHash> set{group.identity().root_action()};
  CoxeterElement top = group.identity();
  for (int s : word) {
    std::vector<RootAction> extended;
    extended.reserve(set.size());
    for (const auto& u : set) extended.push_back(group.multiply_action(u, s, Side::Right));
    for (auto& u : extended) set.insert(std::move(u));
    top = top.multiply_generator(s, Side::Right);
  }
  return make_interval(top, group.elements_of_ideal(std::vector<RootAction>(set.begin(), set.end())));
}

}  // namespace

BruhatInterval lower_interval(const CoxeterElement& w) { return subproduct_interval(w.group(), w.word()); }

BruhatInterval lower_interval_from_word(const WeylGroup& group, const Word& reduced_word) {
  const CoxeterElement w = group.from_word(reduced_word);
  if (static_cast<std::size_t>(w.length()) != reduced_word.size())
    throw ParseError("word " + format_word(reduced_word) + " is not reduced");
  return subproduct_interval(group, reduced_word);
}

bool is_palindromic(const std::vector<BigInt>& poincare) {
  return std::equal(poincare.begin(), poincare.begin() + static_cast<std::ptrdiff_t>(poincare.size() / 2),
                    poincare.rbegin());
}

std::vector<std::pair<CoxeterElement, CoxeterElement>> covering_edges(const BruhatInterval& interval) {
  std::vector<std::pair<CoxeterElement, CoxeterElement>> edges;
  // members are length-sorted, so each level is a contiguous block
  const auto& m = interval.members;
  std::size_t level_start = 0;
  while (level_start < m.size()) {
    const int len = m[level_start].length();
    std::size_t next_start = level_start;
    while (next_start < m.size() && m[next_start].length() == len) ++next_start;
    std::size_t next_end = next_start;
    while (next_end < m.size() && m[next_end].length() == len + 1) ++next_end;
    for (std::size_t i = level_start; i < next_start; ++i) {
      for (std::size_t j = next_start; j < next_end; ++j) {
        if (bruhat_leq(m[i], m[j])) edges.emplace_back(m[i], m[j]);
      }
    }
    level_start = next_start;
  }
  return edges;
}

}  // namespace flagorbit
