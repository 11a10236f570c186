#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "flagorbit/coxeter.hpp"
#include "flagorbit/errors.hpp"
#include "oracles.hpp"

using namespace flagorbit;

namespace {

std::shared_ptr<const WeylGroup> group(const std::string& spec) {
  return WeylGroup::create(build_root_system(CartanDatum::parse(spec)));
}

GeneratorSubset J(std::vector<int> idx) { return GeneratorSubset{std::move(idx)}; }

}  // namespace

TEST_CASE("identity") {
  for (const char* spec : {"A2", "A3"}) {
    const auto g = group(spec);
    const auto e = g->identity();
    CHECK(e.word().empty());
    CHECK(e.length() == 0);
    for (int s = 1; s <= g->rank(); ++s) CHECK(e * g->generator(s) == g->generator(s));
  }
}

TEST_CASE("multiply_generator") {
  const auto g = group("A2");
  const auto s1 = g->identity().multiply_generator(1, Side::Right);
  CHECK(s1.word() == Word{1});
  CHECK(s1.multiply_generator(1, Side::Right).is_identity());
  const auto w0 = g->from_word({1, 2, 1});
  const auto w0s2 = w0.multiply_generator(2, Side::Right);
  CHECK(w0s2.length() == 2);
  CHECK(oracle::perm_of_word(w0s2.word(), 3) == oracle::Perm{3, 1, 2});
  CHECK_THROWS_AS(s1.multiply_generator(3, Side::Right), IndexOutOfRange);
  CHECK_THROWS_AS(s1.multiply_generator(0, Side::Left), IndexOutOfRange);
}

TEST_CASE("lengths and longest elements") {
  CHECK(group("A2")->identity().length() == 0);
  CHECK(group("A2")->longest_element().length() == 3);
  CHECK(group("A3")->longest_element().length() == 6);
  int max_len = 0;
  for (const auto& p : oracle::all_permutations(4)) max_len = std::max(max_len, oracle::inversions(p));
  CHECK(max_len == 6);
}

TEST_CASE("descents") {
  const auto g = group("A2");
  CHECK(g->identity().descents(Side::Right).indices.empty());
  CHECK(g->longest_element().descents(Side::Right) == g->all_generators());
  CHECK(g->longest_element().descents(Side::Left) == g->all_generators());
  const auto s1s2 = g->from_word({1, 2});
  CHECK(s1s2.descents(Side::Right) == J({2}));
  CHECK(s1s2.descents(Side::Left) == J({1}));
}

TEST_CASE("parabolic longest elements") {
  const auto a2 = group("A2");
  CHECK(a2->longest_element(J({})).is_identity());
  CHECK(a2->longest_element(J({1, 2})).word() == Word{1, 2, 1});
  const auto a3 = group("A3");
  const auto w = a3->longest_element(J({1, 3}));
  CHECK(w.word() == Word{1, 3});
  CHECK(w.length() == 2);
  CHECK_THROWS_AS(a3->longest_element(J({4})), IndexOutOfRange);
}

TEST_CASE("enumerate_elements") {
  const auto a2 = enumerate_elements(*group("A2"));
  REQUIRE(a2.size() == 6);
  std::multiset<int> lengths;
  for (const auto& w : a2) lengths.insert(w.length());
  CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});
  CHECK(enumerate_elements(*group("A3")).size() == 24);
  CHECK(enumerate_elements(*group("A1")).size() == 2);
  CHECK_THROWS_AS(enumerate_elements(*group("A3"), 23), GroupTooLarge);
  CHECK_NOTHROW(enumerate_elements(*group("A3"), 24));

  std::vector<Word> words;
  for (const auto& w : a2) words.push_back(w.word());
  CHECK(words == std::vector<Word>{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}});
}

TEST_CASE("group orders of the classical series") {
  // |W(A_n)| = (n+1)!, |W(B_n)| = |W(C_n)| = 2^n n!, |W(D_n)| = 2^(n-1) n!
  CHECK(enumerate_elements(*group("A4")).size() == 120);
  CHECK(enumerate_elements(*group("A5")).size() == 720);
  CHECK(enumerate_elements(*group("B2")).size() == 8);
  CHECK(enumerate_elements(*group("B3")).size() == 48);
  CHECK(enumerate_elements(*group("C3")).size() == 48);
  CHECK(enumerate_elements(*group("D4")).size() == 192);
  CHECK(enumerate_elements(*group(R"({"cartan_matrix": [[2,-1],[-3,2]]})")).size() == 12);
}

TEST_CASE("to_permutation") {
  const auto a2 = group("A2");
  CHECK(to_permutation(a2->identity()).one_line == std::vector<int>{1, 2, 3});
  CHECK(to_permutation(a2->generator(1)).one_line == std::vector<int>{2, 1, 3});
  CHECK(to_permutation(group("A3")->longest_element()).one_line == std::vector<int>{4, 3, 2, 1});
  CHECK_THROWS_AS(to_permutation(group("B2")->identity()), NotTypeA);
}

TEST_CASE("element invariants against the permutation model, A_n for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = group("A" + std::to_string(n));
    const auto elements = enumerate_elements(*g);
    std::set<oracle::Perm> perms;
    std::set<CoxeterElement::Action> actions;
    for (const auto& w : elements) {
      const auto p = to_permutation(w).one_line;
      perms.insert(p);
      actions.insert(w.root_action());
      CHECK(w.length() == w.inversion_count());
      CHECK(w.length() == oracle::inversions(p));
      CHECK(p == oracle::perm_of_word(w.word(), n + 1));
      CHECK(from_permutation(*g, Permutation{p}) == w);
      // right descents are the positions with p(i) > p(i+1)
      for (int s = 1; s <= n; ++s) CHECK(w.is_descent(s, Side::Right) == (p[s - 1] > p[s]));
      // reduced: the length increases at every prefix of the canonical word
      auto prefix = g->identity();
      for (int s : w.word()) {
        const auto next = prefix.multiply_generator(s, Side::Right);
        CHECK(next.length() == prefix.length() + 1);
        prefix = next;
      }
      CHECK(prefix == w);
    }
    std::size_t factorial = 1;
    for (int k = 2; k <= n + 1; ++k) factorial *= static_cast<std::size_t>(k);
    CHECK(perms.size() == factorial);
    CHECK(actions.size() == factorial);
  }
}

TEST_CASE("canonical word is the lexicographically least reduced word") {
  // enumerate every reduced word by brute force and compare, A3
  const auto g = group("A3");
  std::map<CoxeterElement::Action, Word> least;
  std::vector<Word> layer{{}};
  for (int len = 0; len <= 6; ++len) {
    std::vector<Word> next;
    for (const auto& word : layer) {
      const auto w = g->from_word(word);
      if (w.length() != len) continue;
      auto [it, fresh] = least.emplace(w.root_action(), word);
      if (!fresh && word < it->second) it->second = word;
      for (int s = 1; s <= 3; ++s) {
        auto longer = word;
        longer.push_back(s);
        next.push_back(longer);
      }
    }
    layer = std::move(next);
  }
  REQUIRE(least.size() == 24);
  for (const auto& w : enumerate_elements(*g)) CHECK(w.word() == least.at(w.root_action()));
}

TEST_CASE("length changes by exactly one under multiplication") {
  std::mt19937 rng(7);
  for (const char* spec : {"A4", "B3", "D4"}) {
    const auto g = group(spec);
    std::uniform_int_distribution<int> gen(1, g->rank());
    for (int trial = 0; trial < 200; ++trial) {
      Word word(static_cast<std::size_t>(gen(rng) * 3));
      for (auto& s : word) s = gen(rng);
      const auto w = g->from_word(word);
      for (int s = 1; s <= g->rank(); ++s) {
        for (Side side : {Side::Left, Side::Right}) {
          const int delta = w.multiply_generator(s, side).length() - w.length();
          CHECK((delta == 1 || delta == -1));
          CHECK((delta == -1) == w.is_descent(s, side));
        }
      }
      CHECK((w * w.inverse()).is_identity());
      CHECK(w.inverse().length() == w.length());
      CHECK(w.inverse().descents(Side::Left) == w.descents(Side::Right));
    }
  }
}

TEST_CASE("longest element properties, A_n for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = group("A" + std::to_string(n));
    const auto w0 = g->longest_element();
    CHECK((w0 * w0).is_identity());
    for (int s = 1; s <= n; ++s) CHECK(w0 * g->generator(s) * w0 == g->generator(n + 1 - s));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      GeneratorSubset sub;
      int supported = 0;
      for (int s = 1; s <= n; ++s)
        if (mask & (1u << (s - 1))) sub.indices.push_back(s);
      for (const auto& root : g->root_system().positive_roots) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (root[i] != 0 && !sub.contains(i + 1)) inside = false;
        supported += inside;
      }
      const auto w = g->longest_element(sub);
      CHECK(w.descents(Side::Right) == sub);
      CHECK(w.length() == supported);
    }
  }
}

TEST_CASE("mixed systems") {
  const auto a = group("A2");
  const auto b = group("B2");
  CHECK_THROWS_AS(a->identity() * b->identity(), MixedSystems);
  // two independently built A2 groups are the same system
  CHECK_NOTHROW(a->identity() * group("A2")->identity());
}

TEST_CASE("word serialization") {
  CHECK(format_word({}) == "e");
  CHECK(format_word({1, 2, 1}) == "1,2,1");
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(parse_word("e").empty());
  CHECK(parse_word(" 3 , 1 ") == Word{3, 1});
  CHECK_THROWS_AS(parse_word("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_word("1,2,"), ParseError);
  CHECK_THROWS_AS(parse_word("a"), ParseError);
  CHECK_THROWS_AS(parse_word("-1"), ParseError);
}
