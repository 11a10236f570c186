#include <random>

#include "doctest.h"
#include "flagorbit/bruhat.hpp"
#include "flagorbit/errors.hpp"
#include "flagorbit/schubert.hpp"
#include "oracles.hpp"

using namespace flagorbit;

namespace {

std::shared_ptr<const WeylGroup> group(const std::string& spec) {
  return WeylGroup::create(build_root_system(CartanDatum::parse(spec)));
}

}  // namespace

TEST_CASE("contains_pattern examples") {
  CHECK(contains_pattern(Permutation{{3, 4, 1, 2}}, Pattern{{3, 4, 1, 2}}));
  CHECK_FALSE(contains_pattern(Permutation{{1, 2, 3, 4}}, Pattern{{2, 1}}));
  CHECK_FALSE(contains_pattern(Permutation{{4, 2, 3, 1}}, Pattern{{3, 4, 1, 2}}));
  CHECK(contains_pattern(Permutation{{5, 2, 3, 4, 1}}, Pattern{{4, 2, 3, 1}}));
  CHECK_THROWS_AS(contains_pattern(Permutation{{2, 1}}, Pattern{{1, 2, 3}}), PatternLongerThanPermutation);
}

TEST_CASE("contains_pattern agrees with exhaustive subset search") {
  std::mt19937 rng(3412);
  for (int m = 1; m <= 8; ++m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int k = 1; k <= std::min(m, 4); ++k) {
        for (const auto& pat : oracle::all_permutations(k)) {
          CHECK(contains_pattern(Permutation{perm}, Pattern{pat}) == oracle::contains_pattern_bruteforce(perm, pat));
        }
      }
    }
  }
}

TEST_CASE("permutation validation") {
  CHECK_NOTHROW(Permutation::from_one_line({2, 3, 1}));
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), ParseError);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), ParseError);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 3}), ParseError);
}

TEST_CASE("smoothness counts in S3 and S4") {
  int smooth_a2 = 0;
  for (const auto& w : enumerate_elements(*group("A2"))) smooth_a2 += is_smooth_type_a(w);
  CHECK(smooth_a2 == 6);

  std::vector<std::vector<int>> singular;
  int smooth_a3 = 0;
  for (const auto& w : enumerate_elements(*group("A3"))) {
    const bool smooth = is_smooth_type_a(w);
    smooth_a3 += smooth;
    if (!smooth) singular.push_back(to_permutation(w).one_line);
    // brute-force oracle on the same permutation
    const auto p = to_permutation(w).one_line;
    const bool brute = !oracle::contains_pattern_bruteforce(p, {3, 4, 1, 2}) &&
                       !oracle::contains_pattern_bruteforce(p, {4, 2, 3, 1});
    CHECK(smooth == brute);
    CHECK(smooth == is_palindromic(lower_interval(w)));
  }
  CHECK(smooth_a3 == 22);
  std::sort(singular.begin(), singular.end());
  CHECK(singular == std::vector<std::vector<int>>{{3, 4, 1, 2}, {4, 2, 3, 1}});
}

TEST_CASE("pattern avoidance agrees with palindromicity on S5") {
  for (const auto& w : enumerate_elements(*group("A4"))) CHECK(is_smooth_type_a(w) == is_palindromic(lower_interval(w)));
}

TEST_CASE("smoothness is inverse invariant; identity and w0 are smooth") {
  for (int n = 1; n <= 5; ++n) {
    const auto g = group("A" + std::to_string(n));
    CHECK(is_smooth_type_a(g->identity()));
    CHECK(is_smooth_type_a(g->longest_element()));
    for (const auto& w : enumerate_elements(*g)) CHECK(is_smooth_type_a(w) == is_smooth_type_a(w.inverse()));
  }
}

TEST_CASE("smoothness needs type A") { CHECK_THROWS_AS(is_smooth_type_a(group("B2")->identity()), NotTypeA); }
