#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "flagorbit/rootdata.hpp"

namespace flagorbit {

enum class Side { Left, Right };

/// 1-based generator indices.
using Word = std::vector<int>;

/// Sorted set of 1-based generator indices.
struct GeneratorSubset {
  std::vector<int> indices;

  bool contains(int s) const;
  std::size_t size() const { return indices.size(); }
  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;
};

/// One-line notation of a permutation of {1..m}.
struct Permutation {
  std::vector<int> one_line;

  /// Throws ParseError unless one_line is a bijection on {1..m}.
  static Permutation from_one_line(std::vector<int> values);
  std::size_t size() const { return one_line.size(); }
  Permutation inverse() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

class CoxeterElement;

/// Image of each positive root as a signed 1-based root index.
using RootAction = std::vector<std::int16_t>;

struct RootActionHash {
  std::size_t operator()(const RootAction& a) const;
};

/// Weyl group of a finite root system, realised through its signed action on
/// the positive roots. Shared by all of its elements.
class WeylGroup : public std::enable_shared_from_this<WeylGroup> {
 public:
  static std::shared_ptr<const WeylGroup> create(RootSystem system);

  const RootSystem& root_system() const { return system_; }
  int rank() const { return system_.rank(); }
  std::size_t num_positive() const { return system_.num_positive(); }

  CoxeterElement identity() const;
  CoxeterElement generator(int s) const;
  /// Product of the letters of an arbitrary word (need not be reduced).
  CoxeterElement from_word(const Word& word) const;
  /// Element of W_J whose right descent set is J.
  CoxeterElement longest_element(const GeneratorSubset& J) const;
  CoxeterElement longest_element() const;
  GeneratorSubset all_generators() const;

  /// Signed 1-based index of s_i(beta_k) for 0-based root index k.
  int reflect(int s, std::size_t k) const { return reflections_[static_cast<std::size_t>(s - 1)][k]; }

  /// Action of w s (Right) or s w (Left), without canonicalizing.
  RootAction multiply_action(const RootAction& action, int s, Side side) const;
  /// Throws Error unless `action` is the action of some element.
  CoxeterElement from_action(RootAction action) const;

  /// Elements for a set of actions that is closed under removing the
  /// smallest left descent (true of every lower Bruhat ideal). Canonical
  /// words are extended from the parent's word instead of recomputed.
  std::vector<CoxeterElement> elements_of_ideal(const std::vector<RootAction>& actions) const;

  /// Same root system (pointer identity or equal Cartan data).
  bool same_system(const WeylGroup& other) const;

 private:
  explicit WeylGroup(RootSystem system);
  RootSystem system_;
  std::vector<std::vector<int>> reflections_;
};

/// A Weyl group element. Equality and hashing go through the root action;
/// the canonical word is the lexicographically least reduced word.
class CoxeterElement {
 public:
  using Action = RootAction;

  const WeylGroup& group() const { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const { return group_; }

  const Word& word() const { return word_; }
  /// Image of each positive root as a signed 1-based root index.
  const Action& root_action() const { return action_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// Positive roots sent to negative roots, counted from root_action().
  int inversion_count() const;

  CoxeterElement multiply_generator(int s, Side side) const;
  CoxeterElement inverse() const;
  GeneratorSubset descents(Side side) const;
  bool is_descent(int s, Side side) const;
  bool is_identity() const { return word_.empty(); }

  friend CoxeterElement operator*(const CoxeterElement& a, const CoxeterElement& b);
  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) { return a.action_ == b.action_; }
  /// (length, canonical word) order.
  friend bool shortlex_less(const CoxeterElement& a, const CoxeterElement& b);

  std::size_t hash() const;

 private:
  friend class WeylGroup;
  CoxeterElement(std::shared_ptr<const WeylGroup> group, Action action);
  CoxeterElement(std::shared_ptr<const WeylGroup> group, Action action, Word word);
  void canonicalize();

  std::shared_ptr<const WeylGroup> group_;
  Action action_;
  Word word_;
};

bool shortlex_less(const CoxeterElement& a, const CoxeterElement& b);

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& w) const { return w.hash(); }
};

/// Throws MixedSystems if a and b belong to different root systems.
void require_same_group(const CoxeterElement& a, const CoxeterElement& b);

/// "1,2,1"; the empty word is "e".
std::string format_word(const Word& word);
/// Inverse of format_word; also accepts "" for the identity. Throws ParseError.
Word parse_word(const std::string& text);

inline constexpr std::size_t kDefaultMaxGroupOrder = 3628800;

/// All elements sorted by (length, canonical word). Throws GroupTooLarge.
std::vector<CoxeterElement> enumerate_elements(const WeylGroup& group, std::size_t max_order = kDefaultMaxGroupOrder);

/// Type A only; s_i acts as the transposition (i, i+1). Throws NotTypeA.
Permutation to_permutation(const CoxeterElement& w);
CoxeterElement from_permutation(const WeylGroup& group, const Permutation& p);

}  // namespace flagorbit
