#include "flagorbit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "flagorbit/cache.hpp"
#include "flagorbit/errors.hpp"

namespace flagorbit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct LoadedSystem {
  std::shared_ptr<const WeylGroup> group;
  std::string key;
};

LoadedSystem load_system(const std::string& spec) {
  auto datum = CartanDatum::parse(spec);
  auto key = datum.key();
  return LoadedSystem{WeylGroup::create(build_root_system(datum)), std::move(key)};
}

/// Maps engine errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

ordered_json bigint_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

ordered_json poincare_json(const std::vector<BigInt>& p) {
  auto arr = ordered_json::array();
  for (const auto& b : p) arr.push_back(bigint_json(b));
  return arr;
}

std::string join_bigints(const std::vector<BigInt>& p, std::size_t limit) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size() && i < limit; ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  if (p.size() > limit) s += ",...";
  return s + "]";
}

std::string one_line_text(const std::optional<Permutation>& p) {
  if (!p) return "";
  std::string s = "[";
  for (std::size_t i = 0; i < p->one_line.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p->one_line[i]);
  }
  return s + "]";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::vector<std::string> record_cells(const ClassificationRecord& r, std::size_t poincare_limit) {
  const auto& d = r.descriptor;
  return {format_word(d.w.word()),
          one_line_text(r.one_line),
          std::to_string(d.length),
          std::to_string(d.dim_k_orbit),
          std::to_string(d.vanishing_number),
          std::to_string(d.interval_size),
          join_bigints(r.poincare, poincare_limit),
          bool_text(r.parabolic),
          bool_text(r.rationally_smooth),
          to_string(r.smooth),
          to_string(r.verdict)};
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

int emit(const std::string& content, const std::optional<std::filesystem::path>& out_path, std::ostream& out,
         std::ostream& err) {
  if (!out_path) {
    out << content;
    return kOk;
  }
  std::ofstream file(*out_path, std::ios::binary | std::ios::trunc);
  file << content;
  if (!file) {
    err << "error: cannot write " << out_path->string() << "\n";
    return kUsage;
  }
  return kOk;
}

IntervalSource interval_source(const IntervalCache& cache, const std::string& key) {
  if (!cache.enabled()) return lower_interval;
  return [&cache, key](const CoxeterElement& w) { return cache.get_or_compute(key, w); };
}

}  // namespace

nlohmann::ordered_json record_to_json(const ClassificationRecord& r) {
  const auto& d = r.descriptor;
  ordered_json j;
  j["word"] = format_word(d.w.word());
  j["one_line"] = r.one_line ? ordered_json(r.one_line->one_line) : ordered_json(nullptr);
  j["length"] = d.length;
  j["dim_k_orbit"] = d.dim_k_orbit;
  j["vanishing_number"] = d.vanishing_number;
  j["interval_size"] = d.interval_size;
  j["poincare"] = poincare_json(r.poincare);
  j["parabolic"] = r.parabolic;
  j["rationally_smooth"] = r.rationally_smooth;
  if (r.smooth == Smoothness::RationalOnly)
    j["smooth"] = "rational_only";
  else
    j["smooth"] = r.smooth == Smoothness::Smooth;
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::string csv_header() {
  std::string s;
  for (const char* f : kRecordFields) {
    if (!s.empty()) s += ",";
    s += f;
  }
  return s;
}

std::string record_to_csv(const ClassificationRecord& r) {
  const auto cells = record_cells(r, std::numeric_limits<std::size_t>::max());
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ",";
    s += csv_quote(cells[i]);
  }
  return s;
}

std::string hasse_dot(const BruhatInterval& interval, std::span<const Pattern> patterns) {
  std::string s = "digraph bruhat {\n  rankdir=BT;\n";
  for (const auto& u : interval.members) {
    s += "  \"" + format_word(u.word()) + "\"";
    if (is_parabolic(u)) {
      s += " [class=\"parabolic\", color=\"blue\"]";
    } else if (classify(u, patterns).smooth == Smoothness::Singular) {
      s += " [class=\"singular\", color=\"red\"]";
    }
    s += ";\n";
  }
  for (const auto& [u, v] : covering_edges(interval))
    s += "  \"" + format_word(u.word()) + "\" -> \"" + format_word(v.word()) + "\";\n";
  return s + "}\n";
}

int cmd_classify(const std::string& system_spec, const CliConfig& config,
                 const std::optional<std::filesystem::path>& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(system_spec);
    const auto elements = enumerate_elements(*sys.group, config.max_group_order);
    const IntervalCache cache(config.cache_dir, err);
    const auto records = classify_all(elements, interval_source(cache, sys.key));
    const auto summary = summarize(records);

    std::string content;
    switch (config.format) {
      case Format::Json: {
        ordered_json doc;
        doc["system"] = sys.key;
        auto& arr = doc["records"] = ordered_json::array();
        for (const auto& r : records) arr.push_back(record_to_json(r));
        doc["summary"] = {{"orbits", summary.orbits},
                          {"parabolic", summary.parabolic},
                          {"smooth", summary.smooth},
                          {"rational_only", summary.rational_only},
                          {"text", summary.text()}};
        content = doc.dump(2) + "\n";
        break;
      }
      case Format::Csv:
        content = csv_header() + "\n";
        for (const auto& r : records) content += record_to_csv(r) + "\n";
        content += "# " + summary.text() + "\n";
        break;
      case Format::Table: {
        std::vector<std::vector<std::string>> rows;
        rows.emplace_back(std::begin(kRecordFields), std::end(kRecordFields));
        for (const auto& r : records) rows.push_back(record_cells(r, 12));
        content = render_table(rows) + summary.text() + "\n";
        break;
      }
    }
    return emit(content, out_path, out, err);
  });
}

int cmd_interval(const std::string& system_spec, const std::string& word, const CliConfig& config,
                 const std::optional<std::filesystem::path>& dot_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(system_spec);
    const auto w = sys.group->from_word(parse_word(word));
    const IntervalCache cache(config.cache_dir, err);
    const auto interval = cache.enabled() ? cache.get_or_compute(sys.key, w) : lower_interval(w);

    if (config.format == Format::Json) {
      ordered_json j;
      j["system"] = sys.key;
      j["word"] = format_word(w.word());
      j["size"] = interval.size();
      j["poincare"] = poincare_json(interval.poincare);
      j["palindromic"] = is_palindromic(interval);
      auto& members = j["members"] = ordered_json::array();
      for (const auto& u : interval.members) members.push_back(format_word(u.word()));
      out << j.dump(2) << "\n";
    } else if (config.format == Format::Csv) {
      out << "word,size,poincare,palindromic\n"
          << csv_quote(format_word(w.word())) << "," << interval.size() << ","
          << csv_quote(join_bigints(interval.poincare, std::numeric_limits<std::size_t>::max())) << ","
          << bool_text(is_palindromic(interval)) << "\n";
    } else {
      out << "word: " << format_word(w.word()) << "\n"
          << "size: " << interval.size() << "\n"
          << "poincare: " << join_bigints(interval.poincare, 12) << "\n"
          << "palindromic: " << bool_text(is_palindromic(interval)) << "\n";
    }
    if (dot_path) return emit(hasse_dot(interval), dot_path, out, err);
    return static_cast<int>(kOk);
  });
}

int cmd_orbit(const std::string& system_spec, const std::string& word, const CliConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(system_spec);
    const auto w = sys.group->from_word(parse_word(word));
    const IntervalCache cache(config.cache_dir, err);
    const auto rec = classify(w, cache.enabled() ? cache.get_or_compute(sys.key, w) : lower_interval(w));
    if (config.format == Format::Json) {
      out << record_to_json(rec).dump(2) << "\n";
    } else if (config.format == Format::Csv) {
      out << csv_header() << "\n" << record_to_csv(rec) << "\n";
    } else {
      const auto cells = record_cells(rec, 12);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < cells.size(); ++i) rows.push_back({std::string(kRecordFields[i]) + ":", cells[i]});
      rows.push_back({"dim_flag:", std::to_string(rec.descriptor.dim_flag)});
      out << render_table(rows);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verdict(const std::string& system_spec, const std::string& word, const std::string& lambda_text,
                const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(system_spec);
    const auto& roots = sys.group->root_system();
    const auto w = sys.group->from_word(parse_word(word));
    const Weight lambda = parse_weight(lambda_text);
    if (lambda.rank() != static_cast<std::size_t>(roots.rank()))
      throw ArityMismatch("lambda has " + std::to_string(lambda.rank()) + " entries, rank is " +
                          std::to_string(roots.rank()));

    const bool integral = is_integral(roots, lambda);
    const bool regular = is_regular(roots, lambda);
    const bool antidominant = is_antidominant(roots, lambda);
    const auto rec = classify(w);

    std::optional<std::string> verdict;
    std::vector<std::string> notes;
    if (!antidominant) {
      notes.push_back("λ not antidominant: the vanishing and irreducibility hypotheses do not hold, verdict suppressed");
    } else {
      verdict = to_string(rec.verdict);
      if (!regular)
        notes.push_back("λ is singular: the realization statement applies only when the standard module is a "
                        "classifying module (its irreducible submodule is nonzero)");
    }

    if (config.format == Format::Json) {
      ordered_json j;
      j["system"] = sys.key;
      j["word"] = format_word(w.word());
      auto& coords = j["lambda"] = ordered_json::array();
      for (const auto& c : lambda.coords) coords.push_back(c.str());
      j["integral"] = integral;
      j["regular"] = regular;
      j["antidominant"] = antidominant;
      j["smooth"] = record_to_json(rec)["smooth"];
      j["verdict"] = verdict ? ordered_json(*verdict) : ordered_json(nullptr);
      j["notes"] = notes;
      out << j.dump(2) << "\n";
    } else {
      out << "word: " << format_word(w.word()) << "\n"
          << "lambda: " << format_weight(lambda) << "\n"
          << "integral: " << bool_text(integral) << "\n"
          << "regular: " << bool_text(regular) << "\n"
          << "antidominant: " << bool_text(antidominant) << "\n"
          << "verdict: " << (verdict ? *verdict : std::string("suppressed")) << "\n";
      for (const auto& n : notes) out << "note: " << n << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_induction(int n1, int n2, const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto p = induction_prediction(n1, n2);
    if (config.format == Format::Json) {
      ordered_json j;
      j["n1"] = p.n1;
      j["n2"] = p.n2;
      j["factor_count"] = p.factor_count;
      j["irreducible"] = p.irreducible;
      out << j.dump(2) << "\n";
    } else if (config.format == Format::Csv) {
      out << "n1,n2,factor_count,irreducible\n"
          << p.n1 << "," << p.n2 << "," << p.factor_count << "," << bool_text(p.irreducible) << "\n";
    } else {
      out << "GL(" << (p.n1 + p.n2) << ") with Levi GL(" << p.n1 << ") x GL(" << p.n2 << "): predicted "
          << p.factor_count << " composition factor" << (p.factor_count == 1 ? "" : "s") << ", "
          << (p.irreducible ? "irreducible" : "reducible") << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_paper_check(std::ostream& out, std::ostream& err, std::span<const Pattern> patterns) {
  return guarded(err, [&] {
    int failures = 0;
    int total = 0;
    auto report = [&](bool ok, const std::string& label) {
      ++total;
      failures += !ok;
      out << (ok ? "PASS  " : "FAIL  ") << label << "\n";
    };

    struct Census {
      const char* spec;
      const char* label;
      ClassificationSummary expected;
    };
    const Census censuses[] = {{"A2", "GL(3)", {6, 4, 6, 0}}, {"A3", "GL(4)", {24, 8, 22, 0}}};

    bool parabolic_smooth = true;
    bool oracles_agree = true;
    std::size_t agreements = 0;
    std::size_t a3_size = 0;
    for (const auto& c : censuses) {
      const auto sys = load_system(c.spec);
      const auto elements = enumerate_elements(*sys.group);
      const auto records = classify_all(elements, lower_interval, patterns);
      const auto got = summarize(records);
      report(got.orbits == c.expected.orbits && got.parabolic == c.expected.parabolic &&
                 got.smooth == c.expected.smooth,
             std::string(c.label) + " census: expected '" + c.expected.text() + "', got '" + got.text() + "'");
      for (const auto& r : records) {
        if (r.parabolic && r.smooth != Smoothness::Smooth) parabolic_smooth = false;
      }
      if (std::string(c.spec) == "A3") {
        a3_size = records.size();
        for (const auto& r : records) {
          const bool agree = (r.smooth == Smoothness::Smooth) == r.rationally_smooth;
          agreements += agree;
          oracles_agree = oracles_agree && agree;
        }
      }
    }
    report(parabolic_smooth, "parabolic orbits have smooth associated varieties (A2, A3)");
    report(oracles_agree, "pattern avoidance agrees with palindromicity on A3 (" + std::to_string(agreements) + "/" +
                              std::to_string(a3_size) + ")");

    bool one_n = true;
    for (int n = 1; n <= 8; ++n) {
      const auto p = induction_prediction(1, n);
      one_n = one_n && p.factor_count == 1 && p.irreducible;
    }
    report(one_n, "induction (1,n) gives 1 composition factor, irreducible, n = 1..8");
    const auto two_two = induction_prediction(2, 2);
    report(two_two.factor_count == 2 && !two_two.irreducible, "induction (2,2) gives 2 composition factors");

    out << (total - failures) << "/" << total << " checks passed\n";
    return failures == 0 ? static_cast<int>(kOk) : static_cast<int>(kCheckFailed);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl group orbit classification on complex flag spaces", "flagorbit"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "table";
  std::optional<std::filesystem::path> out_path;
  std::optional<std::filesystem::path> dot_path;
  std::string cache_dir;
  std::string system_spec;
  std::string word;
  std::string lambda;
  int n1 = 0;
  int n2 = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--max-group-order", config.max_group_order, "Refuse groups larger than this")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", cache_dir, "Interval cache directory (FLAGORBIT_CACHE_DIR overrides)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify every orbit of a Weyl group");
  classify_cmd->add_option("system", system_spec, "A3, B2, ... or JSON with \"cartan_matrix\"")->required();
  classify_cmd->add_option("--out", out_path, "Write records to a file");
  add_common(classify_cmd);

  auto* interval_cmd = app.add_subcommand("interval", "Lower Bruhat interval of an element");
  interval_cmd->add_option("system", system_spec)->required();
  interval_cmd->add_option("word", word, "Comma separated generators, e for the identity")->required();
  interval_cmd->add_option("--dot", dot_path, "Write the Hasse diagram as graph text");
  add_common(interval_cmd);

  auto* orbit_cmd = app.add_subcommand("orbit", "Classification record of a single orbit");
  orbit_cmd->add_option("system", system_spec)->required();
  orbit_cmd->add_option("word", word)->required();
  add_common(orbit_cmd);

  auto* verdict_cmd = app.add_subcommand("verdict", "Weight predicates and realization verdict");
  verdict_cmd->add_option("system", system_spec)->required();
  verdict_cmd->add_option("word", word)->required();
  verdict_cmd->add_option("--lambda", lambda, "Values on the simple coroots, e.g. -1,-1/2")->required();
  add_common(verdict_cmd);

  auto* induction_cmd = app.add_subcommand("induction", "Composition factor prediction for GL(n1+n2)");
  induction_cmd->add_option("n1", n1)->required();
  induction_cmd->add_option("n2", n2)->required();
  add_common(induction_cmd);

  auto* check_cmd = app.add_subcommand("paper-check", "Verify the published orbit counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  if (const char* env = std::getenv("FLAGORBIT_CACHE_DIR"); env && *env) config.cache_dir = env;

  if (classify_cmd->parsed()) return cmd_classify(system_spec, config, out_path, out, err);
  if (interval_cmd->parsed()) return cmd_interval(system_spec, word, config, dot_path, out, err);
  if (orbit_cmd->parsed()) return cmd_orbit(system_spec, word, config, out, err);
  if (verdict_cmd->parsed()) return cmd_verdict(system_spec, word, lambda, config, out, err);
  if (induction_cmd->parsed()) return cmd_induction(n1, n2, config, out, err);
  if (check_cmd->parsed()) return cmd_paper_check(out, err);
  return kUsage;
}

}  // namespace flagorbit::cli
