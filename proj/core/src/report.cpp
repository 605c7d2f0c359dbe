#include "c4lab/report.hpp"

#include <sstream>

namespace c4lab {

void ExperimentReport::verdict(const std::string& name, std::string_view inequality, bool holds, VerdictKind kind) {
  verdicts_[name] = Json{{"inequality", std::string(inequality)},
                         {"holds", holds},
                         {"kind", kind == VerdictKind::Required ? "required" : "informative"}};
}

bool ExperimentReport::verdict_holds(const std::string& name) const {
  const auto it = verdicts_.find(name);
  if (it == verdicts_.end()) throw std::out_of_range("no verdict named " + name);
  return it->at("holds").get<bool>();
}

bool ExperimentReport::passed() const { return failures().empty(); }

std::vector<std::string> ExperimentReport::failures() const {
  std::vector<std::string> out;
  for (const auto& [name, v] : verdicts_.items()) {
    if (v.at("kind") == "required" && !v.at("holds").get<bool>()) {
      out.push_back(name + ": " + v.at("inequality").get<std::string>());
    }
  }
  return out;
}

Json ExperimentReport::to_json(bool with_timing) const {
  Json j{{"experiment", experiment_},
         {"params", params_},
         {"measured", measured_},
         {"bounds", bounds_},
         {"verdicts", verdicts_},
         {"passed", passed()}};
  if (!config_.is_null()) j["config"] = config_;
  if (with_timing && wall_ms_) j["timing"] = Json{{"wall_ms", *wall_ms_}};
  return j;
}

std::string ExperimentReport::csv_header() { return "experiment,q,t,seed,trials,passed,measured\n"; }

std::string ExperimentReport::csv_row() const {
  auto field = [&](const char* key) -> std::string {
    const auto it = params_.find(key);
    return it == params_.end() || it->is_null() ? std::string() : it->dump();
  };
  std::ostringstream os;
  os << experiment_ << ',' << field("q") << ',' << field("t") << ',' << field("seed") << ',' << field("trials") << ','
     << (passed() ? "true" : "false") << ',';
  bool first = true;
  for (const auto& [k, v] : measured_.items()) {
    if (v.is_structured()) continue;
    if (!first) os << ';';
    first = false;
    os << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  }
  os << '\n';
  return os.str();
}

}  // namespace c4lab
