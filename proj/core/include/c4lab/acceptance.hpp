#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace c4lab::acceptance {

/// Quick shrinks every sweep; Standard runs the stated scales and time
/// limits; Full widens the sweeps (larger q, exhaustive census at q = 16).
enum class Mode { Quick, Standard, Full };

struct Options {
  Mode mode = Mode::Standard;
  unsigned threads = 0;
  std::uint64_t seed = 20240917;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion `id` in [1, 12]. Unexpected exceptions become a failed
/// result carrying the message.
CriterionResult run_criterion(int id, const Options& opts);

std::vector<CriterionResult> run_all(const Options& opts);

/// `[PASS] 03 title (1.2 s): detail`
std::string format_line(const CriterionResult& r);

}  // namespace c4lab::acceptance
