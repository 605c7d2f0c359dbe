#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace c4lab {

using Json = nlohmann::json;

enum class VerdictKind { Required, Informative };

/// Experiment record with stable keys. Wall time lives under "timing" and is
/// left out of canonical comparisons.
class ExperimentReport {
 public:
  ExperimentReport() = default;
  explicit ExperimentReport(std::string experiment) : experiment_(std::move(experiment)) {}

  const std::string& experiment() const noexcept { return experiment_; }

  Json& params() noexcept { return params_; }
  Json& measured() noexcept { return measured_; }
  Json& bounds() noexcept { return bounds_; }
  const Json& params() const noexcept { return params_; }
  const Json& measured() const noexcept { return measured_; }
  const Json& bounds() const noexcept { return bounds_; }
  const Json& verdicts() const noexcept { return verdicts_; }

  /// Records a verdict keyed by `name`. `inequality` is the tested relation
  /// written out with its evaluated sides.
  void verdict(const std::string& name, std::string_view inequality, bool holds,
               VerdictKind kind = VerdictKind::Required);

  bool verdict_holds(const std::string& name) const;

  /// All required verdicts hold.
  bool passed() const;
  /// Inequalities of the failed required verdicts.
  std::vector<std::string> failures() const;

  void set_wall_ms(double ms) { wall_ms_ = ms; }
  void set_config(Json config) { config_ = std::move(config); }

  Json to_json(bool with_timing = true) const;
  std::string dump(bool with_timing = true) const { return to_json(with_timing).dump(2) + "\n"; }

  static std::string csv_header();
  /// experiment,q,t,seed,trials,passed,measured where measured is `k=v;...`
  /// over the scalar measurements in key order.
  std::string csv_row() const;

 private:
  std::string experiment_;
  Json params_ = Json::object();
  Json measured_ = Json::object();
  Json bounds_ = Json::object();
  Json verdicts_ = Json::object();
  Json config_;
  std::optional<double> wall_ms_;
};

}  // namespace c4lab
