#include "mixq/laws.hpp"

namespace mixq {

bool LawReport::all_passed() const {
  for (const auto& l : laws)
    if (!l.passed) return false;
  return true;
}

const LawResult* LawReport::find(std::string_view name) const {
  for (const auto& l : laws)
    if (l.name == name) return &l;
  return nullptr;
}

nlohmann::json to_json(const LawReport& report) {
  nlohmann::json j;
  j["all_passed"] = report.all_passed();
  if (report.options.mode == SamplingMode::exhaustive) {
    j["mode"] = "exhaustive";
  } else {
    j["mode"] = "sampled";
    j["seed"] = report.options.seed;
    j["samples"] = report.options.samples;
  }
  auto& laws = j["laws"] = nlohmann::json::array();
  for (const auto& l : report.laws) {
    nlohmann::json e;
    e["name"] = l.name;
    e["passed"] = l.passed;
    e["cases"] = l.cases;
    if (!l.passed) e["counterexample"] = l.counterexample;
    laws.push_back(std::move(e));
  }
  return j;
}

}  // namespace mixq
