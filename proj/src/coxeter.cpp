#include "flagorbit/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "flagorbit/errors.hpp"

namespace flagorbit {

namespace {

inline int sign(int x) { return x < 0 ? -1 : 1; }
inline std::size_t slot(int signed_index) { return static_cast<std::size_t>(std::abs(signed_index) - 1); }

}  // namespace

bool GeneratorSubset::contains(int s) const { return std::binary_search(indices.begin(), indices.end(), s); }

Permutation Permutation::from_one_line(std::vector<int> values) {
  std::vector<bool> hit(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || hit[static_cast<std::size_t>(v)])
      throw ParseError("not a permutation of 1.." + std::to_string(values.size()));
    hit[static_cast<std::size_t>(v)] = true;
  }
  return Permutation{std::move(values)};
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line.size());
  for (std::size_t i = 0; i < one_line.size(); ++i) inv[static_cast<std::size_t>(one_line[i] - 1)] = static_cast<int>(i + 1);
  return Permutation{std::move(inv)};
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(RootSystem system) : system_(std::move(system)) {
  const int n = system_.rank();
  const std::size_t N = system_.num_positive();
  const auto& a = system_.datum.cartan_matrix();
  reflections_.assign(static_cast<std::size_t>(n), std::vector<int>(N, 0));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      if (k == static_cast<std::size_t>(i)) {
        reflections_[i][k] = -(i + 1);
        continue;
      }
      RootVector image = system_.positive_roots[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a[i][j] * image[j];
      image[i] -= pairing;
      const int idx = system_.index_of(image);
      if (idx < 0) throw NonFiniteType("positive roots are not closed under simple reflections");
      reflections_[i][k] = idx + 1;
    }
  }
}

std::shared_ptr<const WeylGroup> WeylGroup::create(RootSystem system) {
  if (system.num_positive() > 32767) throw NonFiniteType("too many positive roots for the signed action encoding");
  return std::shared_ptr<const WeylGroup>(new WeylGroup(std::move(system)));
}

CoxeterElement WeylGroup::identity() const {
  CoxeterElement::Action action(num_positive());
  std::iota(action.begin(), action.end(), std::int16_t{1});
  return CoxeterElement(shared_from_this(), std::move(action));
}

CoxeterElement WeylGroup::generator(int s) const { return identity().multiply_generator(s, Side::Right); }

CoxeterElement WeylGroup::from_word(const Word& word) const {
  CoxeterElement w = identity();
  for (int s : word) w = w.multiply_generator(s, Side::Right);
  return w;
}

CoxeterElement WeylGroup::longest_element(const GeneratorSubset& J) const {
  for (int s : J.indices) {
    if (s < 1 || s > rank()) throw IndexOutOfRange("generator " + std::to_string(s) + " out of range");
  }
  CoxeterElement w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : J.indices) {
      if (!w.is_descent(s, Side::Right)) {
        w = w.multiply_generator(s, Side::Right);
        grew = true;
      }
    }
  }
  return w;
}

CoxeterElement WeylGroup::longest_element() const { return longest_element(all_generators()); }

GeneratorSubset WeylGroup::all_generators() const {
  GeneratorSubset all;
  for (int s = 1; s <= rank(); ++s) all.indices.push_back(s);
  return all;
}

RootAction WeylGroup::multiply_action(const RootAction& action, int s, Side side) const {
  if (s < 1 || s > rank()) throw IndexOutOfRange("generator " + std::to_string(s) + " out of range");
  RootAction out(action.size());
  if (side == Side::Right) {
    // (w s)(beta_k) = w(s(beta_k))
    for (std::size_t k = 0; k < action.size(); ++k) {
      const int t = reflect(s, k);
      out[k] = static_cast<std::int16_t>(sign(t) * action[slot(t)]);
    }
  } else {
    for (std::size_t k = 0; k < action.size(); ++k) {
      const int t = action[k];
      out[k] = static_cast<std::int16_t>(sign(t) * reflect(s, slot(t)));
    }
  }
  return out;
}

CoxeterElement WeylGroup::from_action(RootAction action) const {
  if (action.size() != num_positive()) throw Error("root action has the wrong size");
  std::vector<bool> hit(action.size(), false);
  for (int t : action) {
    if (t == 0 || static_cast<std::size_t>(std::abs(t)) > action.size() || hit[slot(t)])
      throw Error("not a signed permutation of the positive roots");
    hit[slot(t)] = true;
  }
  CoxeterElement w(shared_from_this(), std::move(action));
  RootAction rebuilt(num_positive());
  std::iota(rebuilt.begin(), rebuilt.end(), std::int16_t{1});
  for (int s : w.word()) rebuilt = multiply_action(rebuilt, s, Side::Right);
  if (rebuilt != w.root_action()) throw Error("signed permutation is not a group element");
  return w;
}

std::vector<CoxeterElement> WeylGroup::elements_of_ideal(const std::vector<RootAction>& actions) const {
  const int n = rank();
  auto inversions = [](const RootAction& a) { return std::count_if(a.begin(), a.end(), [](int t) { return t < 0; }); };
  std::vector<std::size_t> order(actions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::ptrdiff_t> lengths(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) lengths[i] = inversions(actions[i]);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

  std::unordered_map<RootAction, std::size_t, RootActionHash> built_index;
  std::vector<CoxeterElement> out;
  out.reserve(actions.size());
  for (std::size_t i : order) {
    const RootAction& a = actions[i];
    int smallest = 0;
    for (int t : a) {
      if (t < 0 && -t <= n && (smallest == 0 || -t < smallest)) smallest = -t;
    }
    Word word;
    if (smallest != 0) {
      const auto parent = built_index.find(multiply_action(a, smallest, Side::Left));
      if (parent == built_index.end()) throw Error("action set is not closed under left descents");
      const Word& tail = out[parent->second].word();
      word.reserve(tail.size() + 1);
      word.push_back(smallest);
      word.insert(word.end(), tail.begin(), tail.end());
    }
    built_index.emplace(a, out.size());
    out.push_back(CoxeterElement(shared_from_this(), a, std::move(word)));
  }
  return out;
}

bool WeylGroup::same_system(const WeylGroup& other) const {
  return this == &other || system_.datum.cartan_matrix() == other.system_.datum.cartan_matrix();
}

// ---------------------------------------------------------------------------
// CoxeterElement

CoxeterElement::CoxeterElement(std::shared_ptr<const WeylGroup> group, Action action)
    : group_(std::move(group)), action_(std::move(action)) {
  canonicalize();
}

CoxeterElement::CoxeterElement(std::shared_ptr<const WeylGroup> group, Action action, Word word)
    : group_(std::move(group)), action_(std::move(action)), word_(std::move(word)) {}

void CoxeterElement::canonicalize() {
  // Strip the smallest left descent until the identity is reached.
  const int n = group_->rank();
  word_.clear();
  Action current = action_;
  for (;;) {
    int smallest = 0;
    for (int t : current) {
      if (t < 0 && -t <= n && (smallest == 0 || -t < smallest)) smallest = -t;
    }
    if (smallest == 0) break;
    word_.push_back(smallest);
    for (auto& t : current) t = static_cast<std::int16_t>(sign(t) * group_->reflect(smallest, slot(t)));
  }
}

int CoxeterElement::inversion_count() const {
  return static_cast<int>(std::count_if(action_.begin(), action_.end(), [](std::int16_t t) { return t < 0; }));
}

CoxeterElement CoxeterElement::multiply_generator(int s, Side side) const {
  return CoxeterElement(group_, group_->multiply_action(action_, s, side));
}

CoxeterElement CoxeterElement::inverse() const {
  Action out(action_.size());
  for (std::size_t k = 0; k < action_.size(); ++k) {
    const int t = action_[k];
    out[slot(t)] = static_cast<std::int16_t>(sign(t) * static_cast<int>(k + 1));
  }
  return CoxeterElement(group_, std::move(out));
}

bool CoxeterElement::is_descent(int s, Side side) const {
  if (s < 1 || s > group_->rank()) throw IndexOutOfRange("generator " + std::to_string(s) + " out of range");
  if (side == Side::Right) return action_[static_cast<std::size_t>(s - 1)] < 0;
  return std::find(action_.begin(), action_.end(), static_cast<std::int16_t>(-s)) != action_.end();
}

GeneratorSubset CoxeterElement::descents(Side side) const {
  GeneratorSubset d;
  for (int s = 1; s <= group_->rank(); ++s) {
    if (is_descent(s, side)) d.indices.push_back(s);
  }
  return d;
}

CoxeterElement operator*(const CoxeterElement& a, const CoxeterElement& b) {
  require_same_group(a, b);
  CoxeterElement::Action out(b.action_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int t = b.action_[k];
    out[k] = static_cast<std::int16_t>(sign(t) * a.action_[slot(t)]);
  }
  return CoxeterElement(a.group_, std::move(out));
}

bool shortlex_less(const CoxeterElement& a, const CoxeterElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

std::size_t CoxeterElement::hash() const { return RootActionHash{}(action_); }

std::size_t RootActionHash::operator()(const RootAction& a) const {
  std::size_t h = 1469598103934665603ull;
  for (auto t : a) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(t));
    h *= 1099511628211ull;
  }
  return h;
}

void require_same_group(const CoxeterElement& a, const CoxeterElement& b) {
  if (!a.group().same_system(b.group())) throw MixedSystems("elements belong to different root systems");
}

// ---------------------------------------------------------------------------

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty() || s == "e") return {};
  Word word;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("malformed word '" + text + "'");
    word.push_back(std::stoi(item));
  }
  if (s.back() == ',') throw ParseError("malformed word '" + text + "'");
  return word;
}

std::vector<CoxeterElement> enumerate_elements(const WeylGroup& group, std::size_t max_order) {
  std::vector<CoxeterElement> out;
  std::unordered_set<CoxeterElement, CoxeterElementHash> seen;
  std::vector<CoxeterElement> frontier{group.identity()};
  seen.insert(frontier.front());
  if (seen.size() > max_order) throw GroupTooLarge("group order exceeds " + std::to_string(max_order));
  while (!frontier.empty()) {
    std::vector<CoxeterElement> next;
    for (const auto& w : frontier) {
      for (int s = 1; s <= group.rank(); ++s) {
        if (w.is_descent(s, Side::Right)) continue;
        auto ws = w.multiply_generator(s, Side::Right);
        if (seen.insert(ws).second) {
          if (seen.size() > max_order) throw GroupTooLarge("group order exceeds " + std::to_string(max_order));
          next.push_back(std::move(ws));
        }
      }
    }
    std::sort(frontier.begin(), frontier.end(), shortlex_less);
    for (auto& w : frontier) out.push_back(std::move(w));
    frontier = std::move(next);
  }
  return out;
}

Permutation to_permutation(const CoxeterElement& w) {
  if (w.group().root_system().datum.series() != Series::A) throw NotTypeA("one-line notation needs a type A system");
  std::vector<int> one_line(static_cast<std::size_t>(w.group().rank() + 1));
  std::iota(one_line.begin(), one_line.end(), 1);
  for (int s : w.word()) std::swap(one_line[static_cast<std::size_t>(s - 1)], one_line[static_cast<std::size_t>(s)]);
  return Permutation{std::move(one_line)};
}

CoxeterElement from_permutation(const WeylGroup& group, const Permutation& p) {
  if (group.root_system().datum.series() != Series::A) throw NotTypeA("permutations need a type A system");
  if (p.size() != static_cast<std::size_t>(group.rank() + 1))
    throw ArityMismatch("permutation size does not match rank + 1");
  std::vector<int> q = p.one_line;
  Word reversed;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        reversed.push_back(static_cast<int>(i + 1));
        found = true;
        break;
      }
    }
  }
  return group.from_word(Word(reversed.rbegin(), reversed.rend()));
}

}  // namespace flagorbit
