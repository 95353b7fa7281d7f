#pragma once

#include <bzeta/qcore/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bzeta::weights {

using qcore::Rational;

/// Exact complex number re + i*im with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

enum class WeightKind { trivial, alternating, mod4, periodic };

std::string to_string(WeightKind kind);

/// Bounded periodic weight chi on the positive integers.
///
/// values()[i] is chi at residue i+1 modulo the period, so the last entry is
/// residue 0.
class ArithmeticWeight {
 public:
  static ArithmeticWeight trivial();
  /// chi(r) = (-1)^(r-1).
  static ArithmeticWeight alternating();
  /// chi(even) = 0, chi(1 mod 4) = 1, chi(3 mod 4) = -1.
  static ArithmeticWeight mod4();
  /// Throws std::invalid_argument on an empty table.
  static ArithmeticWeight periodic(std::vector<GaussianRational> values);
  /// "trivial", "alternating" or "mod4"; throws std::invalid_argument otherwise.
  static ArithmeticWeight preset(std::string_view name);

  WeightKind kind() const { return kind_; }
  std::size_t period() const { return values_.size(); }
  const std::vector<GaussianRational>& values() const { return values_; }

  /// chi(r); throws std::invalid_argument for r = 0.
  const GaussianRational& evaluate(std::size_t r) const;

  /// max |chi| over one period, and its exact square.
  double bound() const;
  const Rational& bound_squared() const { return bound_squared_; }

  /// Average of chi over one period. Nonzero exactly when the associated
  /// L-series has a pole at s = 1.
  GaussianRational mean() const;

  /// Pointwise sum; the period is the lcm of both periods.
  friend ArithmeticWeight operator+(const ArithmeticWeight& a, const ArithmeticWeight& b);

  std::string name() const;

 private:
  ArithmeticWeight(WeightKind kind, std::vector<GaussianRational> values);

  WeightKind kind_;
  std::vector<GaussianRational> values_;
  Rational bound_squared_;
};

/// Descriptor: {"kind": "periodic", "period": 4, "values": [[1,0],[0,0],[-1,0],[0,0]]}
/// or a preset kind alone, e.g. {"kind": "mod4"}. Value parts may be integers,
/// finite doubles, or "p/q" strings.
nlohmann::json to_json(const ArithmeticWeight& w);
ArithmeticWeight weight_from_json(const nlohmann::json& j);

/// Preset name or path to a JSON descriptor file.
ArithmeticWeight load_weight(const std::string& preset_or_path);

}  // namespace bzeta::weights
