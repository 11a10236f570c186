#include "flagorbit/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"

namespace flagorbit {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return out;
}

}  // namespace

std::string serialize_interval(const std::string& system_key, const BruhatInterval& interval) {
  nlohmann::ordered_json j;
  j["engine"] = kEngineVersion;
  j["system"] = system_key;
  j["top"] = format_word(interval.top.word());
  auto& members = j["members"] = nlohmann::ordered_json::array();
  for (const auto& u : interval.members) members.push_back(format_word(u.word()));
  auto& poincare = j["poincare"] = nlohmann::ordered_json::array();
  for (const auto& b : interval.poincare) poincare.push_back(b.str());
  return j.dump() + "\n";
}

std::optional<BruhatInterval> deserialize_interval(const std::string& text, const std::string& system_key,
                                                   const CoxeterElement& expected_top) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("engine").get<std::string>() != kEngineVersion) return std::nullopt;
    if (j.at("system").get<std::string>() != system_key) return std::nullopt;
    if (j.at("top").get<std::string>() != format_word(expected_top.word())) return std::nullopt;
    const auto& group = expected_top.group();
    std::vector<CoxeterElement> members;
    for (const auto& m : j.at("members")) {
      const Word word = parse_word(m.get<std::string>());
      auto u = group.from_word(word);
      if (u.word() != word) return std::nullopt;
      members.push_back(std::move(u));
    }
    auto interval = make_interval(expected_top, std::move(members));
    std::vector<BigInt> stored;
    for (const auto& b : j.at("poincare")) stored.emplace_back(b.get<std::string>());
    if (stored != interval.poincare) return std::nullopt;
    for (std::size_t i = 1; i < interval.members.size(); ++i) {
      if (interval.members[i] == interval.members[i - 1]) return std::nullopt;
    }
    if (interval.members.empty() || !interval.members.front().is_identity() ||
        !(interval.members.back() == expected_top))
      return std::nullopt;
    return interval;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

IntervalCache::IntervalCache(std::optional<std::filesystem::path> dir, std::ostream& diagnostics)
    : dir_(std::move(dir)), diagnostics_(diagnostics) {}

void IntervalCache::warn(const std::string& message) const {
  std::lock_guard lock(diag_mutex_);
  diagnostics_ << "warning: " << message << "\n";
}

std::filesystem::path IntervalCache::path_for(const std::string& system_key, const Word& word) const {
  const std::string key = std::string(kEngineVersion) + "|" + system_key + "|" + format_word(word);
  return *dir_ / (hex(fnv1a(key)) + ".json");
}

std::optional<BruhatInterval> IntervalCache::load(const std::string& system_key, const CoxeterElement& w) const {
  if (!dir_) return std::nullopt;
  const auto path = path_for(system_key, w.word());
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize_interval(buf.str(), system_key, w);
}

bool IntervalCache::store(const std::string& system_key, const BruhatInterval& interval) const {
  if (!dir_) return false;
  static std::atomic<unsigned long> counter{0};
  try {
    std::filesystem::create_directories(*dir_);
    const auto target = path_for(system_key, interval.top.word());
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << serialize_interval(system_key, interval);
      out.flush();
      if (!out) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        warn("could not write cache entry " + tmp.string());
        return false;
      }
    }
    std::filesystem::rename(tmp, target);
    return true;
  } catch (const std::exception& e) {
    warn(std::string("cache store failed: ") + e.what());
    return false;
  }
}

BruhatInterval IntervalCache::get_or_compute(const std::string& system_key, const CoxeterElement& w) const {
  if (auto hit = load(system_key, w)) return std::move(*hit);
  auto interval = lower_interval(w);
  store(system_key, interval);
  return interval;
}

}  // namespace flagorbit
