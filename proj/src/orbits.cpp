#include "flagorbit/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include "flagorbit/errors.hpp"

namespace flagorbit {

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "true";
    case Smoothness::Singular: return "false";
    case Smoothness::RationalOnly: return "rational_only";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::IrreducibleRealization: return "IRREDUCIBLE_REALIZATION";
    case Verdict::NotGuaranteedSingular: return "NOT_GUARANTEED_SINGULAR";
    case Verdict::RationalOnlyCaveat: return "RATIONAL_ONLY_CAVEAT";
  }
  return "?";
}

namespace {

OrbitDescriptor make_descriptor(const CoxeterElement& w, std::size_t interval_size) {
  const int N = static_cast<int>(w.group().num_positive());
  OrbitDescriptor d{w};
  d.length = w.length();
  d.dim_k_orbit = N + d.length;
  d.vanishing_number = N - d.length;
  d.dim_flag = 2 * N;
  d.interval_size = interval_size;
  return d;
}

}  // namespace

OrbitDescriptor orbit_descriptor(const CoxeterElement& w, const WeylGroup& group) {
  if (!w.group().same_system(group)) throw MixedSystems("element does not belong to the given root system");
  return make_descriptor(w, lower_interval(w).size());
}

OrbitDescriptor orbit_descriptor(const CoxeterElement& w, const BruhatInterval& interval) {
  require_same_group(w, interval.top);
  if (!(w == interval.top)) throw Error("interval does not belong to this element");
  return make_descriptor(w, interval.size());
}

std::vector<CoxeterElement> u_w_members(const CoxeterElement& w) { return lower_interval(w).members; }

bool closure_order(const CoxeterElement& u, const CoxeterElement& w, OrbitSide side) {
  return side == OrbitSide::KOrbit ? bruhat_leq(u, w) : bruhat_leq(w, u);
}

bool is_parabolic(const CoxeterElement& w) {
  return w == w.group().longest_element(w.descents(Side::Right));
}

ClassificationRecord classify(const CoxeterElement& w, const BruhatInterval& interval,
                              std::span<const Pattern> patterns) {
  ClassificationRecord rec{orbit_descriptor(w, interval), std::nullopt, {}};
  rec.poincare = interval.poincare;
  rec.parabolic = is_parabolic(w);
  rec.rationally_smooth = is_palindromic(interval);

  switch (w.group().root_system().datum.series()) {
    case Series::A:
      rec.one_line = to_permutation(w);
      rec.smooth = is_smooth_type_a(w, patterns) ? Smoothness::Smooth : Smoothness::Singular;
      break;
    case Series::D:
      rec.smooth = rec.rationally_smooth ? Smoothness::Smooth : Smoothness::Singular;
      break;
    default:
      rec.smooth = rec.rationally_smooth ? Smoothness::RationalOnly : Smoothness::Singular;
      break;
  }

  switch (rec.smooth) {
    case Smoothness::Smooth: rec.verdict = Verdict::IrreducibleRealization; break;
    case Smoothness::Singular: rec.verdict = Verdict::NotGuaranteedSingular; break;
    case Smoothness::RationalOnly: rec.verdict = Verdict::RationalOnlyCaveat; break;
  }
  return rec;
}

ClassificationRecord classify(const CoxeterElement& w, std::span<const Pattern> patterns) {
  return classify(w, lower_interval(w), patterns);
}

std::vector<ClassificationRecord> classify_all(const std::vector<CoxeterElement>& elements,
                                               const IntervalSource& intervals, std::span<const Pattern> patterns,
                                               unsigned workers) {
  std::vector<std::optional<ClassificationRecord>> slots(elements.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(elements.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < elements.size() && !failed; i = next++) {
      try {
        slots[i] = classify(elements[i], intervals(elements[i]), patterns);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassificationRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

InductionPrediction induction_prediction(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw NonPositivePartition("partition parts must be positive");
  InductionPrediction p;
  p.n1 = n1;
  p.n2 = n2;
  p.factor_count = std::min(n1, n2);
  p.irreducible = p.factor_count == 1;
  return p;
}

std::size_t count_vanishing_one_orbits(const WeylGroup& group, std::size_t max_order) {
  const int target = static_cast<int>(group.num_positive()) - 1;
  const auto elements = enumerate_elements(group, max_order);
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [&](const CoxeterElement& w) { return w.length() == target; }));
}

RealizationDescriptor serre_dual(const RealizationDescriptor& r, const RootSystem& system) {
  const int dim_flag = 2 * static_cast<int>(system.num_positive());
  if (r.degree < 0 || r.degree > dim_flag)
    throw DegreeOutOfRange("degree " + std::to_string(r.degree) + " outside [0, " + std::to_string(dim_flag) + "]");
  if (r.weight.rank() != static_cast<std::size_t>(system.rank())) throw ArityMismatch("weight rank mismatch");
  return RealizationDescriptor{dim_flag - r.degree, -r.weight, r.region};
}

std::string ClassificationSummary::text() const {
  std::string s = std::to_string(orbits) + " orbits, " + std::to_string(parabolic) + " parabolic, " +
                  std::to_string(smooth) + " smooth";
  if (rational_only) s += ", " + std::to_string(rational_only) + " rationally smooth only";
  return s;
}

ClassificationSummary summarize(std::span<const ClassificationRecord> records) {
  ClassificationSummary s;
  s.orbits = records.size();
  for (const auto& r : records) {
    s.parabolic += r.parabolic;
    s.smooth += r.smooth == Smoothness::Smooth;
    s.rational_only += r.smooth == Smoothness::RationalOnly;
  }
  return s;
}

}  // namespace flagorbit
