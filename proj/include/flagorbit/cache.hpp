#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

#include "flagorbit/bruhat.hpp"

namespace flagorbit {

/// Bumped whenever interval construction or the on-disk layout changes, so
/// entries written by older engines are never read back.
inline constexpr const char* kEngineVersion = "flagorbit-interval-v1";

/// On-disk store of lower Bruhat intervals keyed by (system, canonical word,
/// engine version). Unreadable or inconsistent entries count as misses; I/O
/// failures are reported on the diagnostic stream and never propagate.
class IntervalCache {
 public:
  IntervalCache(std::optional<std::filesystem::path> dir, std::ostream& diagnostics);

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path path_for(const std::string& system_key, const Word& word) const;

  std::optional<BruhatInterval> load(const std::string& system_key, const CoxeterElement& w) const;
  /// Writes to a temporary file in the cache directory, then renames.
  bool store(const std::string& system_key, const BruhatInterval& interval) const;
  BruhatInterval get_or_compute(const std::string& system_key, const CoxeterElement& w) const;

 private:
  void warn(const std::string& message) const;

  std::optional<std::filesystem::path> dir_;
  std::ostream& diagnostics_;
  mutable std::mutex diag_mutex_;
};

std::string serialize_interval(const std::string& system_key, const BruhatInterval& interval);
/// Returns nullopt on any inconsistency.
std::optional<BruhatInterval> deserialize_interval(const std::string& text, const std::string& system_key,
                                                   const CoxeterElement& expected_top);

}  // namespace flagorbit
