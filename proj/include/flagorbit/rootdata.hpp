#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagorbit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Series { A, B, C, D, Custom };

char series_letter(Series s);

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan datum of a (hopefully finite) root system.
///
/// Convention: cartan_matrix[i][j] = <alpha_j, alpha_i^vee>, so the simple
/// reflection s_i sends beta to beta - (sum_j a_ij beta_j) alpha_i.  In B_n
/// the last simple root is short, in C_n it is long.
class CartanDatum {
 public:
  /// Standard matrix for series A (rank >= 1), B, C (rank >= 2), D (rank >= 3).
  static CartanDatum standard(Series series, int rank);
  /// Custom matrix; validated but not required to be of finite type here.
  static CartanDatum custom(IntMatrix matrix);

  /// Accepts "A2", "B3", "D4", an inline JSON object with key
  /// "cartan_matrix", or the path of a file holding such an object.
  static CartanDatum parse(const std::string& text);

  Series series() const { return series_; }
  int rank() const { return static_cast<int>(matrix_.size()); }
  const IntMatrix& cartan_matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[i][j]; }

  /// Stable identifier: "A3" for series data, "custom:[[2,-1],[-1,2]]" otherwise.
  std::string key() const;

  bool operator==(const CartanDatum& other) const { return matrix_ == other.matrix_ && series_ == other.series_; }

 private:
  CartanDatum(Series series, IntMatrix matrix);
  Series series_;
  IntMatrix matrix_;
};

using RootVector = std::vector<int>;

/// Positive roots and the matching positive coroots of a finite root system,
/// both in simple (co)root coordinates. positive_coroots[k] is the coroot of
/// positive_roots[k]; the first `rank` entries are the simple roots in order.
struct RootSystem {
  CartanDatum datum;
  std::vector<RootVector> positive_roots;
  std::vector<RootVector> positive_coroots;

  int rank() const { return datum.rank(); }
  std::size_t num_positive() const { return positive_roots.size(); }
  const RootVector& simple_root(int i) const { return positive_roots.at(static_cast<std::size_t>(i)); }
  /// Index of a positive root vector, or -1.
  int index_of(const RootVector& root) const;
};

inline constexpr std::size_t kDefaultRootBound = 10000;

/// Closure of the simple roots under simple reflections, run in lockstep on
/// the transposed matrix to produce coroots.
/// Throws MalformedCartanMatrix or NonFiniteType.
RootSystem build_root_system(const CartanDatum& datum, std::size_t max_roots = kDefaultRootBound);

/// A weight stored by its values on the simple coroots.
struct Weight {
  std::vector<Rational> coords;

  std::size_t rank() const { return coords.size(); }
  Weight operator-() const;
  friend Weight operator-(const Weight& a, const Weight& b);
  friend bool operator==(const Weight& a, const Weight& b) = default;
};

/// Parses "1,-1/2,0".  Throws ParseError.
Weight parse_weight(const std::string& text);
std::string format_weight(const Weight& w);

Weight rho(const RootSystem& system);
Rational coroot_value(const RootSystem& system, const Weight& lambda, std::size_t coroot_index);
bool is_integral(const RootSystem& system, const Weight& lambda);
bool is_regular(const RootSystem& system, const Weight& lambda);
/// No positive-coroot value lies in {1, 2, ...}; zero values are allowed.
bool is_antidominant(const RootSystem& system, const Weight& lambda);
/// lambda = mu - rho.
Weight shift_to_d_module_parameter(const RootSystem& system, const Weight& mu);

}  // namespace flagorbit
