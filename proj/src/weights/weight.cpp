#include <bzeta/weights/weight.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace bzeta::weights {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::trivial: return "trivial";
    case WeightKind::alternating: return "alternating";
    case WeightKind::mod4: return "mod4";
    case WeightKind::periodic: return "periodic";
  }
  return "periodic";
}

ArithmeticWeight::ArithmeticWeight(WeightKind kind, std::vector<GaussianRational> values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("weight table must not be empty");
  for (const auto& v : values_) {
    const Rational n = v.norm();
    if (n > bound_squared_) bound_squared_ = n;
  }
}

ArithmeticWeight ArithmeticWeight::trivial() {
  return ArithmeticWeight(WeightKind::trivial, {{1, 0}});
}

ArithmeticWeight ArithmeticWeight::alternating() {
  return ArithmeticWeight(WeightKind::alternating, {{1, 0}, {-1, 0}});
}

ArithmeticWeight ArithmeticWeight::mod4() {
  return ArithmeticWeight(WeightKind::mod4, {{1, 0}, {0, 0}, {-1, 0}, {0, 0}});
}

ArithmeticWeight ArithmeticWeight::periodic(std::vector<GaussianRational> values) {
  return ArithmeticWeight(WeightKind::periodic, std::move(values));
}

ArithmeticWeight ArithmeticWeight::preset(std::string_view name) {
  if (name == "trivial") return trivial();
  if (name == "alternating") return alternating();
  if (name == "mod4") return mod4();
  throw std::invalid_argument("unknown weight preset '" + std::string(name) + "'");
}

const GaussianRational& ArithmeticWeight::evaluate(std::size_t r) const {
  if (r == 0) throw std::invalid_argument("arithmetic weights are defined for r >= 1");
  return values_[(r - 1) % values_.size()];
}

double ArithmeticWeight::bound() const { return std::sqrt(bound_squared_.get_d()); }

GaussianRational ArithmeticWeight::mean() const {
  GaussianRational total{0, 0};
  for (const auto& v : values_) total = total + v;
  const Rational p(static_cast<long>(values_.size()));
  return {total.re / p, total.im / p};
}

ArithmeticWeight operator+(const ArithmeticWeight& a, const ArithmeticWeight& b) {
  const std::size_t period = std::lcm(a.period(), b.period());
  std::vector<GaussianRational> values;
  values.reserve(period);
  for (std::size_t r = 1; r <= period; ++r) values.push_back(a.evaluate(r) + b.evaluate(r));
  return ArithmeticWeight::periodic(std::move(values));
}

std::string ArithmeticWeight::name() const {
  if (kind_ != WeightKind::periodic) return to_string(kind_);
  return "periodic/" + std::to_string(period());
}

namespace {

Rational part_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) throw std::invalid_argument("weight value must be finite");
    return Rational(d);
  }
  if (j.is_string()) return qcore::parse_rational(j.get<std::string>());
  throw std::invalid_argument("weight value parts must be numbers or \"p/q\" strings");
}

nlohmann::json part_to_json(const Rational& r) {
  if (qcore::is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return qcore::to_string(r);
}

}  // namespace

nlohmann::json to_json(const ArithmeticWeight& w) {
  if (w.kind() != WeightKind::periodic) return {{"kind", to_string(w.kind())}};
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : w.values()) values.push_back({part_to_json(v.re), part_to_json(v.im)});
  return {{"kind", "periodic"}, {"period", w.period()}, {"values", values}};
}

ArithmeticWeight weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("weight descriptor needs a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind != "periodic") return ArithmeticWeight::preset(kind);
  if (!j.contains("values") || !j["values"].is_array()) {
    throw std::invalid_argument("periodic weight needs a \"values\" array");
  }
  std::vector<GaussianRational> values;
  for (const auto& entry : j["values"]) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("each weight value must be a [re, im] pair");
    }
    values.push_back({part_from_json(entry[0]), part_from_json(entry[1])});
  }
  if (j.contains("period")) {
    if (!j["period"].is_number_unsigned() || j["period"].get<std::size_t>() != values.size()) {
      throw std::invalid_argument("\"period\" must equal the number of values");
    }
  }
  return ArithmeticWeight::periodic(std::move(values));
}

ArithmeticWeight load_weight(const std::string& preset_or_path) {
  if (preset_or_path == "trivial" || preset_or_path == "alternating" || preset_or_path == "mod4") {
    return ArithmeticWeight::preset(preset_or_path);
  }
  std::ifstream in{std::filesystem::path(preset_or_path)};
  if (!in) throw std::invalid_argument("unknown weight preset or unreadable file '" + preset_or_path + "'");
  return weight_from_json(nlohmann::json::parse(in));
}

}  // namespace bzeta::weights
