#include <random>

#include "doctest.h"
#include "flagorbit/errors.hpp"
#include "flagorbit/orbits.hpp"
#include "oracles.hpp"

using namespace flagorbit;

namespace {

std::shared_ptr<const WeylGroup> group(const std::string& spec) {
  return WeylGroup::create(build_root_system(CartanDatum::parse(spec)));
}

std::vector<Word> words_of(const std::vector<CoxeterElement>& v) {
  std::vector<Word> out;
  for (const auto& u : v) out.push_back(u.word());
  return out;
}

}  // namespace

TEST_CASE("orbit_descriptor examples") {
  const auto a2 = group("A2");
  auto d = orbit_descriptor(a2->identity(), *a2);
  CHECK(d.dim_k_orbit == 3);
  CHECK(d.vanishing_number == 3);
  CHECK(d.interval_size == 1);
  CHECK(d.dim_flag == 6);

  d = orbit_descriptor(a2->longest_element(), *a2);
  CHECK(d.dim_k_orbit == 6);
  CHECK(d.vanishing_number == 0);
  CHECK(d.interval_size == 6);

  const auto a3 = group("A3");
  d = orbit_descriptor(a3->from_word({1, 2}), *a3);
  CHECK(d.dim_k_orbit == 8);
  CHECK(d.vanishing_number == 4);

  CHECK_THROWS_AS(orbit_descriptor(a2->identity(), *group("B2")), MixedSystems);
}

TEST_CASE("u_w_members examples") {
  const auto a2 = group("A2");
  CHECK(words_of(u_w_members(a2->identity())) == std::vector<Word>{{}});
  CHECK(u_w_members(a2->longest_element()).size() == 6);
  CHECK(words_of(u_w_members(a2->from_word({1, 2}))) == std::vector<Word>{{}, {1}, {2}, {1, 2}});
}

TEST_CASE("closure_order examples") {
  const auto a2 = group("A2");
  const auto e = a2->identity();
  const auto w0 = a2->longest_element();
  CHECK(closure_order(e, w0, OrbitSide::KOrbit));
  CHECK_FALSE(closure_order(e, w0, OrbitSide::G0Orbit));
  CHECK(closure_order(w0, e, OrbitSide::G0Orbit));
  CHECK(closure_order(a2->generator(1), a2->from_word({1, 2}), OrbitSide::KOrbit));
}

TEST_CASE("closure orders are mutually reversed on A3") {
  const auto elements = enumerate_elements(*group("A3"));
  for (const auto& u : elements)
    for (const auto& w : elements)
      CHECK(closure_order(u, w, OrbitSide::G0Orbit) == closure_order(w, u, OrbitSide::KOrbit));
}

TEST_CASE("orbit invariants for every element, A_n for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = group("A" + std::to_string(n));
    const auto elements = enumerate_elements(*g);
    const int N = n * (n + 1) / 2;
    for (const auto& w : elements) {
      const auto d = orbit_descriptor(w, *g);
      CHECK(d.dim_k_orbit + d.vanishing_number == 2 * N);
      CHECK(d.dim_k_orbit == N + w.length());
      std::vector<CoxeterElement> below;
      for (const auto& u : elements)
        if (closure_order(u, w, OrbitSide::KOrbit)) below.push_back(u);
      const auto members = u_w_members(w);
      CHECK(words_of(members) == words_of(below));
      // w is the unique maximal label, i.e. S_w is the one closed orbit of U_w
      for (const auto& u : members)
        if (!(u == w)) CHECK(closure_order(u, w, OrbitSide::KOrbit));
      CHECK(members.back() == w);
    }
  }
}

TEST_CASE("parabolic census") {
  const auto a2 = enumerate_elements(*group("A2"));
  std::vector<Word> parabolic;
  for (const auto& w : a2)
    if (is_parabolic(w)) parabolic.push_back(w.word());
  CHECK(parabolic == std::vector<Word>{{}, {1}, {2}, {1, 2, 1}});

  int count = 0;
  for (const auto& w : enumerate_elements(*group("A3"))) count += is_parabolic(w);
  CHECK(count == 8);
  CHECK(is_parabolic(group("A5")->identity()));

  for (int n = 1; n <= 5; ++n) {
    int p = 0;
    for (const auto& w : enumerate_elements(*group("A" + std::to_string(n)))) p += is_parabolic(w);
    CHECK(p == (1 << n));
  }
}

TEST_CASE("parabolic implies smooth, A_n for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& r : classify_all(enumerate_elements(*group("A" + std::to_string(n))))) {
      if (r.parabolic) CHECK(r.smooth == Smoothness::Smooth);
    }
  }
}

TEST_CASE("classify verdicts") {
  for (const auto& r : classify_all(enumerate_elements(*group("A2")))) {
    CHECK(r.verdict == Verdict::IrreducibleRealization);
    CHECK(r.one_line.has_value());
  }
  const auto a3 = group("A3");
  const auto singular = classify(from_permutation(*a3, Permutation{{4, 2, 3, 1}}));
  CHECK(singular.verdict == Verdict::NotGuaranteedSingular);
  CHECK(singular.smooth == Smoothness::Singular);
  CHECK_FALSE(singular.rationally_smooth);

  const auto records = classify_all(enumerate_elements(*a3));
  const auto summary = summarize(records);
  CHECK(summary.orbits == 24);
  CHECK(summary.parabolic == 8);
  CHECK(summary.smooth == 22);
  CHECK(summary.text() == "24 orbits, 8 parabolic, 22 smooth");
  CHECK(std::count_if(records.begin(), records.end(),
                      [](const auto& r) { return r.verdict == Verdict::IrreducibleRealization; }) == 22);
}

TEST_CASE("classification record invariants on every supported series") {
  for (const char* spec : {"A3", "B2", "B3", "C3", "D4", R"({"cartan_matrix": [[2,-1],[-3,2]]})"}) {
    const auto g = group(spec);
    const auto series = g->root_system().datum.series();
    for (const auto& r : classify_all(enumerate_elements(*g))) {
      if (r.parabolic) CHECK(r.smooth != Smoothness::Singular);
      CHECK((r.verdict == Verdict::IrreducibleRealization) == (r.smooth == Smoothness::Smooth));
      CHECK(r.one_line.has_value() == (series == Series::A));
      if (series != Series::A && series != Series::D) CHECK(r.smooth != Smoothness::Smooth);
      if (r.smooth == Smoothness::RationalOnly) CHECK(r.verdict == Verdict::RationalOnlyCaveat);
      if (!r.rationally_smooth) CHECK(r.smooth == Smoothness::Singular);
    }
  }
}

TEST_CASE("type D smoothness follows palindromicity") {
  int singular = 0;
  for (const auto& r : classify_all(enumerate_elements(*group("D4")))) {
    CHECK((r.smooth == Smoothness::Smooth) == r.rationally_smooth);
    singular += r.smooth == Smoothness::Singular;
  }
  CHECK(singular > 0);
}

TEST_CASE("classify_all keeps input order with several workers") {
  const auto elements = enumerate_elements(*group("A4"));
  const auto one = classify_all(elements, lower_interval, smoothness_patterns(), 1);
  const auto many = classify_all(elements, lower_interval, smoothness_patterns(), 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].descriptor.w == elements[i]);
    CHECK(many[i].descriptor.w == elements[i]);
    CHECK(one[i].poincare == many[i].poincare);
    CHECK(one[i].smooth == many[i].smooth);
  }
}

TEST_CASE("induction_prediction") {
  for (int n = 1; n <= 8; ++n) {
    const auto p = induction_prediction(1, n);
    CHECK(p.factor_count == 1);
    CHECK(p.irreducible);
  }
  CHECK(induction_prediction(2, 2).factor_count == 2);
  CHECK_FALSE(induction_prediction(2, 2).irreducible);
  CHECK(induction_prediction(3, 3).factor_count == 3);
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      const auto p = induction_prediction(a, b);
      const auto q = induction_prediction(b, a);
      CHECK(p.factor_count == q.factor_count);
      CHECK(p.irreducible == q.irreducible);
      // irreducible exactly for the partitions {n, 1} of n + 1
      CHECK(p.irreducible == (std::min(a, b) == 1));
    }
  CHECK_THROWS_AS(induction_prediction(0, 3), NonPositivePartition);
  CHECK_THROWS_AS(induction_prediction(2, -1), NonPositivePartition);
}

TEST_CASE("vanishing number one census") {
  CHECK(count_vanishing_one_orbits(*group("A1")) == 1);
  CHECK(count_vanishing_one_orbits(*group("A2")) == 2);
  CHECK(count_vanishing_one_orbits(*group("A3")) == 3);
  for (const char* spec : {"A4", "A5", "B3", "D4"}) {
    const auto g = group(spec);
    CHECK(count_vanishing_one_orbits(*g) == static_cast<std::size_t>(g->rank()));
  }
  CHECK_THROWS_AS(count_vanishing_one_orbits(*group("A3"), 10), GroupTooLarge);
}

TEST_CASE("serre_dual") {
  const auto a2 = group("A2");
  const auto& sys = a2->root_system();
  const RealizationDescriptor r{0, rho(sys), Region::OpenSet};
  const auto dual = serre_dual(r, sys);
  CHECK(dual.degree == 6);
  CHECK(dual.weight == -rho(sys));
  CHECK(dual.region == Region::OpenSet);
  CHECK(serre_dual(dual, sys) == r);

  for (const auto& w : enumerate_elements(*a2)) {
    const auto d = orbit_descriptor(w, *a2);
    CHECK(serre_dual(RealizationDescriptor{d.vanishing_number, rho(sys), Region::Orbit}, sys).degree == d.dim_k_orbit);
  }

  CHECK_THROWS_AS(serre_dual(RealizationDescriptor{7, rho(sys), Region::Orbit}, sys), DegreeOutOfRange);
  CHECK_THROWS_AS(serre_dual(RealizationDescriptor{-1, rho(sys), Region::Orbit}, sys), DegreeOutOfRange);
}

TEST_CASE("serre_dual is an involution and swaps antidominance") {
  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (const char* spec : {"A1", "A3", "B3", "D4"}) {
    const auto g = group(spec);
    const auto& sys = g->root_system();
    std::uniform_int_distribution<int> degree(0, 2 * static_cast<int>(sys.num_positive()));
    for (int trial = 0; trial < 100; ++trial) {
      Weight w;
      for (int i = 0; i < sys.rank(); ++i) w.coords.emplace_back(num(rng), den(rng));
      const RealizationDescriptor r{degree(rng), w, trial % 2 ? Region::Orbit : Region::OpenSet};
      const auto d = serre_dual(r, sys);
      CHECK(serre_dual(d, sys) == r);
      CHECK(r.degree + d.degree == 2 * static_cast<int>(sys.num_positive()));
      if (is_antidominant(sys, w)) CHECK(is_antidominant(sys, -d.weight));
    }
  }
}
