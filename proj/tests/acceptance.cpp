// Acceptance suite: the full sweep battery at its shipping ranges, plus the
// CLI contract. Prints one line per criterion and exits nonzero if any fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "delsch/certificates.hpp"
#include "delsch/modular.hpp"
#include "delsch/report.hpp"
#include "delsch/sequences.hpp"
#include "delsch/verify.hpp"
#include "cli_runner.hpp"

using namespace delsch;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, bool pass,
               const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
            << description;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!pass) ++failures;
}

VerificationReport run_claim(const std::string& id) {
  const Claim* claim = find_claim(id);
  if (!claim) {
    VerificationReport rep;
    rep.claim_id = id;
    rep.pass = false;
    return rep;
  }
  return claim->run(claim->defaults);
}

std::string describe(const VerificationReport& rep) {
  std::ostringstream os;
  os << rep.claim_id << " " << (rep.pass ? "pass" : "FAIL") << " ("
     << rep.instances_checked << " instances, " << rep.elapsed_ms << "ms)";
  if (!rep.pass && rep.counterexample) {
    os << " counterexample:";
    for (const auto& [key, value] : rep.counterexample->params)
      os << " " << key << "=" << value;
  }
  return os.str();
}

bool json_string(const nlohmann::json& v) { return v.is_string(); }

// Structural contract for one serialized report.
bool validate_report_schema(const nlohmann::json& r, std::string& why) {
  if (!r.is_object()) { why = "report is not an object"; return false; }
  const std::vector<std::string> keys = {"claim_id",          "range",
                                         "status",            "instances_checked",
                                         "elapsed_ms",        "counterexample"};
  for (const std::string& key : keys) {
    if (!r.contains(key)) { why = "missing key " + key; return false; }
  }
  if (r.size() != keys.size()) { why = "unexpected extra keys"; return false; }
  if (!json_string(r["claim_id"]) || !json_string(r["range"])) {
    why = "claim_id/range must be strings";
    return false;
  }
  if (r["status"] != "pass" && r["status"] != "fail") {
    why = "status must be pass|fail";
    return false;
  }
  if (!r["instances_checked"].is_number_unsigned() ||
      !r["elapsed_ms"].is_number()) {
    why = "counts must be numbers";
    return false;
  }
  const nlohmann::json& ce = r["counterexample"];
  if (r["status"] == "pass") {
    if (!ce.is_null()) { why = "pass report carries a counterexample"; return false; }
    return true;
  }
  if (!ce.is_object()) { why = "fail report lacks a counterexample"; return false; }
  if (!ce.contains("params") || !ce.contains("lhs") || !ce.contains("rhs")) {
    why = "counterexample missing params/lhs/rhs";
    return false;
  }
  if (!ce["params"].is_object() || !json_string(ce["lhs"]) || !json_string(ce["rhs"])) {
    why = "counterexample field types wrong";
    return false;
  }
  for (const auto& [key, value] : ce["params"].items()) {
    (void)key;
    if (!json_string(value)) { why = "params values must be strings"; return false; }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  // 1. Positive odd integers with route agreement, n <= 400, under 30 s.
  {
    Stopwatch sw;
    VerificationReport rep = run_claim("thm1.1");
    bool anchors = compute_a_checked(1) == 1 && compute_a_checked(2) == 17 &&
                   compute_b_checked(2) == 83;
    bool in_budget = sw.ms() < 30000;
    criterion(1, "A(n), B(n) positive odd with three agreeing routes, n<=400",
              rep.pass && rep.instances_checked == 400 && anchors && in_budget,
              describe(rep) + (anchors ? ", anchors A(1)=1 A(2)=17 B(2)=83 ok"
                                       : ", anchor mismatch"));
  }

  // 2. Both congruences mod p^2 for every prime 3 < p <= 1000, under 2 min.
  {
    Stopwatch sw;
    VerificationReport rep = run_claim("thm1.2");
    BigInt sum1 = 0, sum2 = 0;
    for (long k = 1; k <= 4; ++k) {
      BigInt t = BigInt(k) * k * delannoy_direct(k) * delannoy_direct(k - 1);
      if (k % 2 != 0) sum1 -= t; else sum1 += t;
    }
    for (long k = 1; k <= 5; ++k) {
      BigInt t = (BigInt(4) * k * k + 2 * k - 1) * delannoy_direct(k - 1) *
                 little_schroder_direct(k);
      if (k % 2 != 0) sum2 -= t; else sum2 += t;
    }
    bool anchors = sum1 == 316350 && Residue(sum1, 25) == Residue(0, 25) &&
                   Residue(sum2, 25) == Residue(5, 25);
    bool in_budget = sw.ms() < 120000;
    criterion(2, "alternating sums are -5p/6 and -4p mod p^2, primes 3<p<=1000",
              rep.pass && rep.instances_checked == 166 && anchors && in_budget,
              describe(rep) + (anchors ? ", p=5 anchors ok" : ", anchor mismatch"));
  }

  // 3. Normalized polynomial sum lies in Z[x] for even n <= 200, under 2 min.
  {
    Stopwatch sw;
    VerificationReport rep = run_claim("thm1.3");
    Theorem13Result n2 = check_theorem_1_3(2);
    bool anchor = n2.report.pass && n2.quotient == IntPoly{5};
    bool in_budget = sw.ms() < 120000;
    criterion(3, "4 sum k(k+1)(k+2) s_k s_{k+1} / (n(n+1)(n+2)(1+2x)^3) in Z[x], even n<=200",
              rep.pass && rep.instances_checked == 100 && anchor && in_budget,
              describe(rep) + (anchor ? ", n=2 quotient = 5" : ", n=2 anchor mismatch"));
  }

  // 4. Certificate suite: telescoping exact everywhere, F(1) = 0, both
  //    parities covered by the sweeps (n runs over odd and even values).
  {
    VerificationReport f2 = run_claim("cert-f2");
    VerificationReport g2 = run_claim("cert-g2");
    VerificationReport f4 = run_claim("cert-f4");
    bool pass = f2.pass && f2.instances_checked == 100 && g2.pass &&
                g2.instances_checked == 100 && f4.pass && f4.instances_checked == 60;
    criterion(4, "telescoping certificates exact for n<=100 (integer) and n<=60 (polynomial)",
              pass, describe(f2) + "; " + describe(g2) + "; " + describe(f4));
  }

  // 5. Lemma suite at the shipping ranges.
  {
    std::vector<std::string> ids = {"lem2.1", "lem2.2", "lem2.3", "lem3.1",
                                    "lem3.2", "lem3.3", "lem3.4", "lem3.5",
                                    "lem3.6", "lem4.1", "lem4.2"};
    bool all = true;
    std::string detail;
    for (const std::string& id : ids) {
      VerificationReport rep = run_claim(id);
      if (!rep.pass) {
        all = false;
        detail += (detail.empty() ? "" : "; ") + describe(rep);
      }
    }
    criterion(5, "lemma sweeps (2.1-2.3, 3.1-3.6, 4.1-4.2) at shipping ranges",
              all, all ? "11 claims pass" : detail);
  }

  // 6. Cross-definition oracles.
  {
    std::vector<std::string> ids = {"xdef-delannoy", "xdef-schroder", "xdef-id1.2",
                                    "xdef-id1.3", "xdef-s4form", "xdef-evenquot"};
    bool all = true;
    std::string detail;
    for (const std::string& id : ids) {
      VerificationReport rep = run_claim(id);
      if (!rep.pass) {
        all = false;
        detail += (detail.empty() ? "" : "; ") + describe(rep);
      }
    }
    criterion(6, "cross-definition agreement (sequences n<=500, polynomials n<=100)",
              all, all ? "6 claims pass" : detail);
  }

  // 7. CLI contract: sweep-all exits 0 with schema-valid JSON; a corrupted
  //    certificate coefficient fails with a minimal counterexample and exit 1.
  {
    if (cli.empty()) {
      criterion(7, "CLI contract (sweep-all JSON, corrupted-certificate fixture)",
                false, "no CLI path given");
    } else {
      std::string out_path = dstest::temp_path("delsch-acceptance-sweep");
      auto sweep = dstest::run_cli(
          cli, "sweep-all --format json --deterministic-timing --out '" + out_path + "'");
      bool pass = sweep.exit_code == 0;
      std::string detail = "sweep-all exit=" + std::to_string(sweep.exit_code);
      if (pass) {
        std::ifstream is(out_path);
        nlohmann::json reports = nlohmann::json::parse(is, nullptr, false);
        if (reports.is_discarded() || !reports.is_array() || reports.empty()) {
          pass = false;
          detail += ", output is not a JSON array";
        } else {
          detail += ", " + std::to_string(reports.size()) + " reports";
          std::string why;
          for (const auto& r : reports) {
            if (!validate_report_schema(r, why)) {
              pass = false;
              detail += ", schema violation: " + why;
              break;
            }
            if (r["status"] != "pass") {
              pass = false;
              detail += ", claim failed: " + r["claim_id"].get<std::string>();
              break;
            }
          }
          if (pass) detail += ", all schema-valid and passing";
        }
      }
      std::remove(out_path.c_str());

      auto corrupt = dstest::run_cli(
          cli, "cert --claim cert-f2 --corrupt-cert cert-f2 --format json",
          /*merge_stderr=*/false);
      if (corrupt.exit_code != 1) {
        pass = false;
        detail += ", corrupt fixture exit=" + std::to_string(corrupt.exit_code) +
                  " (want 1)";
      } else {
        nlohmann::json reports = nlohmann::json::parse(corrupt.output, nullptr, false);
        std::string why;
        if (reports.is_discarded() || reports.size() != 1 ||
            !validate_report_schema(reports[0], why) ||
            reports[0]["status"] != "fail" ||
            reports[0]["counterexample"]["params"]["n"] != "1" ||
            reports[0]["counterexample"]["params"]["k"] != "1") {
          pass = false;
          detail += ", corrupt fixture report malformed " + why;
        } else {
          detail += ", corrupt fixture fails at n=1 k=1 with exit 1";
        }
      }
      criterion(7, "CLI contract (sweep-all JSON, corrupted-certificate fixture)",
                pass, detail);
    }
  }

  if (failures == 0) {
    std::cout << "acceptance: all 7 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
  return 1;
}
