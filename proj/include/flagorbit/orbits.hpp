#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagorbit/bruhat.hpp"
#include "flagorbit/schubert.hpp"

namespace flagorbit {

/// Orbit data attached to a Weyl group element w. The flag space is
/// X0 x conj(X0) with dim X0 = N positive roots.
struct OrbitDescriptor {
  CoxeterElement w;
  int length = 0;
  int dim_k_orbit = 0;       // N + l(w)
  int vanishing_number = 0;  // N - l(w)
  int dim_flag = 0;          // 2N
  std::size_t interval_size = 0;
};

enum class Smoothness { Smooth, Singular, RationalOnly };
enum class Verdict { IrreducibleRealization, NotGuaranteedSingular, RationalOnlyCaveat };

const char* to_string(Smoothness s);
const char* to_string(Verdict v);

struct ClassificationRecord {
  OrbitDescriptor descriptor;
  std::optional<Permutation> one_line;  // type A only
  std::vector<BigInt> poincare;
  bool parabolic = false;
  bool rationally_smooth = false;
  Smoothness smooth = Smoothness::Singular;
  Verdict verdict = Verdict::NotGuaranteedSingular;
};

enum class Region { Orbit, OpenSet };

/// Degree and twist of a compactly supported cohomology group.
struct RealizationDescriptor {
  int degree = 0;
  Weight weight;
  Region region = Region::Orbit;
  friend bool operator==(const RealizationDescriptor&, const RealizationDescriptor&) = default;
};

struct InductionPrediction {
  int n1 = 1;
  int n2 = 1;
  int factor_count = 1;
  bool irreducible = true;
};

OrbitDescriptor orbit_descriptor(const CoxeterElement& w, const WeylGroup& group);
OrbitDescriptor orbit_descriptor(const CoxeterElement& w, const BruhatInterval& interval);

/// Labels of the G0-orbits making up the smallest invariant open set U_w
/// containing S_w; w is the unique label of an orbit closed in U_w.
std::vector<CoxeterElement> u_w_members(const CoxeterElement& w);

enum class OrbitSide { KOrbit, G0Orbit };

/// KOrbit: Q_u lies in the closure of Q_w (u <= w).
/// G0Orbit: S_u lies in the closure of S_w (w <= u); duality reverses order.
bool closure_order(const CoxeterElement& u, const CoxeterElement& w, OrbitSide side);

/// w is the longest element of the parabolic subgroup of its right descents.
bool is_parabolic(const CoxeterElement& w);

/// Smoothness policy: pattern avoidance in type A, palindromicity (which is
/// equivalent to smoothness) in type D, rational smoothness only otherwise.
ClassificationRecord classify(const CoxeterElement& w, const BruhatInterval& interval,
                              std::span<const Pattern> patterns = smoothness_patterns());
ClassificationRecord classify(const CoxeterElement& w, std::span<const Pattern> patterns = smoothness_patterns());

using IntervalSource = std::function<BruhatInterval(const CoxeterElement&)>;

/// Classifies every element of `elements` (order preserved) on worker threads.
std::vector<ClassificationRecord> classify_all(const std::vector<CoxeterElement>& elements,
                                               const IntervalSource& intervals = lower_interval,
                                               std::span<const Pattern> patterns = smoothness_patterns(),
                                               unsigned workers = 0);

/// Maximal parabolic of GL(n1 + n2): min(n1, n2) predicted composition
/// factors. Throws NonPositivePartition.
InductionPrediction induction_prediction(int n1, int n2);

/// Number of elements of length N - 1.
std::size_t count_vanishing_one_orbits(const WeylGroup& group, std::size_t max_order = kDefaultMaxGroupOrder);

/// (p, lambda) -> (2N - p, -lambda). Throws DegreeOutOfRange.
RealizationDescriptor serre_dual(const RealizationDescriptor& r, const RootSystem& system);

struct ClassificationSummary {
  std::size_t orbits = 0;
  std::size_t parabolic = 0;
  std::size_t smooth = 0;
  std::size_t rational_only = 0;

  /// "24 orbits, 8 parabolic, 22 smooth"
  std::string text() const;
};

ClassificationSummary summarize(std::span<const ClassificationRecord> records);

}  // namespace flagorbit
