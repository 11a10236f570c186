#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "flagorbit/orbits.hpp"

namespace flagorbit::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceGuard = 3 };

enum class Format { Table, Json, Csv };

struct CliConfig {
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  std::optional<std::filesystem::path> cache_dir;
  Format format = Format::Table;
};

/// Stable field order shared by JSON objects and CSV columns.
inline constexpr const char* kRecordFields[] = {"word",          "one_line", "length",   "dim_k_orbit",
                                                "vanishing_number", "interval_size", "poincare", "parabolic",
                                                "rationally_smooth", "smooth",   "verdict"};

nlohmann::ordered_json record_to_json(const ClassificationRecord& record);
std::string record_to_csv(const ClassificationRecord& record);
std::string csv_header();

/// Plain directed-graph text of the Hasse diagram of an interval.
std::string hasse_dot(const BruhatInterval& interval, std::span<const Pattern> patterns = smoothness_patterns());

int cmd_classify(const std::string& system_spec, const CliConfig& config,
                 const std::optional<std::filesystem::path>& out_path, std::ostream& out, std::ostream& err);
int cmd_interval(const std::string& system_spec, const std::string& word, const CliConfig& config,
                 const std::optional<std::filesystem::path>& dot_path, std::ostream& out, std::ostream& err);
int cmd_orbit(const std::string& system_spec, const std::string& word, const CliConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_verdict(const std::string& system_spec, const std::string& word, const std::string& lambda,
                const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_induction(int n1, int n2, const CliConfig& config, std::ostream& out, std::ostream& err);
/// `patterns` exists so tests can feed a corrupted smoothness table.
int cmd_paper_check(std::ostream& out, std::ostream& err, std::span<const Pattern> patterns = smoothness_patterns());

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagorbit::cli
