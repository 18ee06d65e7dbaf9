#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace delsch {

// Smallest witness of a failed claim: the sweep parameters at the point of
// failure plus both sides of the equality (or the violated condition).
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
};

// Structured outcome of one claim sweep. `instances_checked` counts the
// instances actually evaluated; a failing sweep stops at the first failure,
// so on failure it can be smaller than the declared range.
struct VerificationReport {
  std::string claim_id;
  std::string range;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t instances_checked = 0;
  std::int64_t elapsed_ms = 0;

  void fail(Counterexample ce) {
    pass = false;
    counterexample = std::move(ce);
  }

  // Fixed key order so byte-identical output is reproducible. With
  // zero_timing the elapsed field is emitted as 0.
  nlohmann::ordered_json to_json(bool zero_timing = false) const;

  // One-line human summary, e.g.
  //   [pass] thm1.1  1<=n<=400  instances=400  elapsed=123ms
  std::string summary(bool zero_timing = false) const;
};

// Wall-clock helper for filling elapsed_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace delsch
