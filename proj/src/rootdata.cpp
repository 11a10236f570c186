#include "flagorbit/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "flagorbit/errors.hpp"

namespace flagorbit {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::Custom: return '?';
  }
  return '?';
}

namespace {

void validate_matrix(const IntMatrix& m) {
  if (m.empty()) throw MalformedCartanMatrix("Cartan matrix must have rank >= 1");
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw MalformedCartanMatrix("Cartan matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (m[i][j] != 2) throw MalformedCartanMatrix("diagonal entries must equal 2");
      } else {
        if (m[i][j] > 0) throw MalformedCartanMatrix("off-diagonal entries must be <= 0");
        if ((m[i][j] == 0) != (m[j][i] == 0))
          throw MalformedCartanMatrix("a_ij = 0 must imply a_ji = 0");
      }
    }
  }
}

IntMatrix standard_matrix(Series series, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  switch (series) {
    case Series::A:
    case Series::B:
    case Series::C:
      for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = -1;
      if (series == Series::B) m[n - 1][n - 2] = -2;
      if (series == Series::C) m[n - 2][n - 1] = -2;
      break;
    case Series::D:
      // chain 1-2-...-(n-2), with n-1 and n both attached to n-2
      for (std::size_t i = 0; i + 2 < n; ++i) m[i][i + 1] = m[i + 1][i] = -1;
      m[n - 3][n - 1] = m[n - 1][n - 3] = -1;
      break;
    case Series::Custom:
      break;
  }
  return m;
}

int min_rank(Series s) {
  switch (s) {
    case Series::B:
    case Series::C: return 2;
    case Series::D: return 3;
    default: return 1;
  }
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cartan_matrix"))
    throw ParseError("expected a JSON object with key \"cartan_matrix\"");
  const auto& rows = j.at("cartan_matrix");
  if (!rows.is_array()) throw ParseError("\"cartan_matrix\" must be an array of rows");
  IntMatrix m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("\"cartan_matrix\" rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("\"cartan_matrix\" entries must be integers");
      r.push_back(x.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

CartanDatum::CartanDatum(Series series, IntMatrix matrix) : series_(series), matrix_(std::move(matrix)) {
  validate_matrix(matrix_);
  if (series_ != Series::Custom && matrix_ != standard_matrix(series_, rank()))
    throw MalformedCartanMatrix("matrix does not match the standard series matrix");
}

CartanDatum CartanDatum::standard(Series series, int rank) {
  if (series == Series::Custom) throw MalformedCartanMatrix("custom series needs an explicit matrix");
  if (rank < min_rank(series)) {
    throw MalformedCartanMatrix(std::string("series ") + series_letter(series) + " needs rank >= " +
                                std::to_string(min_rank(series)));
  }
  return CartanDatum(series, standard_matrix(series, rank));
}

CartanDatum CartanDatum::custom(IntMatrix matrix) { return CartanDatum(Series::Custom, std::move(matrix)); }

CartanDatum CartanDatum::parse(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t\n\r"));
  s.erase(s.find_last_not_of(" \t\n\r") + 1);
  if (s.empty()) throw ParseError("empty system specification");

  if (s.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
      return custom(matrix_from_json(j));
    } catch (const MalformedCartanMatrix& e) {
      throw ParseError(e.what());
    }
  }

  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
  const bool digits = s.size() > 1 && std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); });
  if (digits && (letter == 'A' || letter == 'B' || letter == 'C' || letter == 'D')) {
    if (s.size() > 6) throw ParseError("rank too large: " + s);
    const int rank = std::stoi(s.substr(1));
    const Series series = letter == 'A' ? Series::A : letter == 'B' ? Series::B : letter == 'C' ? Series::C : Series::D;
    try {
      return standard(series, rank);
    } catch (const MalformedCartanMatrix& e) {
      throw ParseError(e.what());
    }
  }

  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    std::ifstream in(s);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string body = buf.str();
    if (body.find('{') == std::string::npos) throw ParseError("file does not contain a JSON object: " + s);
    return parse(body);
  }
  throw ParseError("cannot parse root system specification: " + s);
}

std::string CartanDatum::key() const {
  if (series_ != Series::Custom) return std::string(1, series_letter(series_)) + std::to_string(rank());
  nlohmann::json j = matrix_;
  return "custom:" + j.dump();
}

int RootSystem::index_of(const RootVector& root) const {
  const auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
  return it == positive_roots.end() ? -1 : static_cast<int>(it - positive_roots.begin());
}

RootSystem build_root_system(const CartanDatum& datum, std::size_t max_roots) {
  constexpr long long kMaxCoefficient = 1000;
  const int n = datum.rank();
  const auto& a = datum.cartan_matrix();

  RootSystem sys{datum, {}, {}};
  std::map<RootVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.emplace(e, sys.positive_roots.size());
    sys.positive_roots.push_back(e);
    sys.positive_coroots.push_back(e);
    queue.push_back(static_cast<std::size_t>(i));
  }

  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const RootVector& beta = sys.positive_roots[k];
      const RootVector& beta_vee = sys.positive_coroots[k];
      if (k == static_cast<std::size_t>(i)) continue;  // s_i(alpha_i) = -alpha_i
      long long pairing = 0;       // <beta, alpha_i^vee>
      long long dual_pairing = 0;  // <alpha_i, beta^vee>
      for (int j = 0; j < n; ++j) {
        pairing += static_cast<long long>(a[i][j]) * beta[j];
        dual_pairing += static_cast<long long>(a[j][i]) * beta_vee[j];
      }
      // Finite root systems never have coefficients above 6.
      if (std::llabs(beta[i] - pairing) > kMaxCoefficient || std::llabs(beta_vee[i] - dual_pairing) > kMaxCoefficient)
        throw NonFiniteType("root coefficients grow without bound");
      RootVector image = beta;
      RootVector image_vee = beta_vee;
      image[i] -= static_cast<int>(pairing);
      image_vee[i] -= static_cast<int>(dual_pairing);
      if (seen.count(image)) continue;
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; }) ||
          std::any_of(image_vee.begin(), image_vee.end(), [](int c) { return c < 0; }))
        throw MalformedCartanMatrix("reflection produced a root with mixed signs");
      if (sys.positive_roots.size() >= max_roots)
        throw NonFiniteType("root closure exceeded " + std::to_string(max_roots) + " roots");
      seen.emplace(image, sys.positive_roots.size());
      queue.push_back(sys.positive_roots.size());
      sys.positive_roots.push_back(std::move(image));
      sys.positive_coroots.push_back(std::move(image_vee));
    }
  }
  return sys;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw ArityMismatch("weights of different rank");
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

namespace {

Rational parse_rational(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  auto is_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start && std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                                           [](unsigned char c) { return std::isdigit(c); });
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw ParseError("not a rational number: '" + s + "'");
    return Rational(to_int(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw ParseError("not a rational number: '" + s + "'");
  const BigInt d = to_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(to_int(num), d);
}

}  // namespace

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.coords.push_back(parse_rational(item));
  if (w.coords.empty()) throw ParseError("empty weight");
  return w;
}

std::string format_weight(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out += ",";
    out += w.coords[i].str();
  }
  return out + ")";
}

namespace {

void check_rank(const RootSystem& system, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(system.rank()))
    throw ArityMismatch("weight has " + std::to_string(lambda.rank()) + " coordinates, system rank is " +
                        std::to_string(system.rank()));
}

bool is_positive_integer(const Rational& r) {
  return denominator(r) == 1 && r > 0;
}

}  // namespace

Weight rho(const RootSystem& system) {
  return Weight{std::vector<Rational>(static_cast<std::size_t>(system.rank()), Rational(1))};
}

Rational coroot_value(const RootSystem& system, const Weight& lambda, std::size_t coroot_index) {
  check_rank(system, lambda);
  if (coroot_index >= system.positive_coroots.size())
    throw IndexOutOfRange("coroot index " + std::to_string(coroot_index) + " out of range");
  const auto& c = system.positive_coroots[coroot_index];
  Rational v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * lambda.coords[i];
  return v;
}

bool is_integral(const RootSystem& system, const Weight& lambda) {
  check_rank(system, lambda);
  for (std::size_t k = 0; k < system.num_positive(); ++k) {
    if (denominator(coroot_value(system, lambda, k)) != 1) return false;
  }
  return true;
}

bool is_regular(const RootSystem& system, const Weight& lambda) {
  check_rank(system, lambda);
  for (std::size_t k = 0; k < system.num_positive(); ++k) {
    if (coroot_value(system, lambda, k) == 0) return false;
  }
  return true;
}

bool is_antidominant(const RootSystem& system, const Weight& lambda) {
  check_rank(system, lambda);
  for (std::size_t k = 0; k < system.num_positive(); ++k) {
    if (is_positive_integer(coroot_value(system, lambda, k))) return false;
  }
  return true;
}

Weight shift_to_d_module_parameter(const RootSystem& system, const Weight& mu) {
  check_rank(system, mu);
  return mu - rho(system);
}

}  // namespace flagorbit
