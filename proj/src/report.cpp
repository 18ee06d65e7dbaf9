#include "delsch/report.hpp"

namespace delsch {

nlohmann::ordered_json VerificationReport::to_json(bool zero_timing) const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  j["range"] = range;
  j["status"] = pass ? "pass" : "fail";
  j["instances_checked"] = instances_checked;
  j["elapsed_ms"] = zero_timing ? 0 : elapsed_ms;
  if (counterexample) {
    nlohmann::ordered_json ce;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : counterexample->params) params[key] = value;
    ce["params"] = params;
    ce["lhs"] = counterexample->lhs;
    ce["rhs"] = counterexample->rhs;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string VerificationReport::summary(bool zero_timing) const {
  std::string line = pass ? "[pass] " : "[FAIL] ";
  line += claim_id;
  line += "  ";
  line += range;
  line += "  instances=" + std::to_string(instances_checked);
  line += "  elapsed=" + std::to_string(zero_timing ? 0 : elapsed_ms) + "ms";
  if (counterexample) {
    line += "  counterexample:";
    for (const auto& [key, value] : counterexample->params)
      line += " " + key + "=" + value;
    line += "  lhs=" + counterexample->lhs + "  rhs=" + counterexample->rhs;
  }
  return line;
}

}  // namespace delsch
