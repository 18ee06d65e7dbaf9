// delsch: exact generation of Delannoy/Schroeder sequence families and
// mechanical verification of the identities, congruences and telescoping
// certificates the library ships. Exit status: 0 all selected checks passed,
// 1 at least one claim failed, 2 usage or configuration error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delsch/certificates.hpp"
#include "delsch/errors.hpp"
#include "delsch/poly_families.hpp"
#include "delsch/report.hpp"
#include "delsch/sequences.hpp"
#include "delsch/verify.hpp"

namespace {

using delsch::VerificationReport;

struct OutputOpts {
  std::string format = "text";
  std::string out_path;  // empty = stdout
  bool deterministic_timing = false;
};

void write_output(const OutputOpts& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(opts.out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file " + opts.out_path);
  os << payload;
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const OutputOpts& opts) {
  std::vector<const VerificationReport*> ordered;
  ordered.reserve(reports.size());
  for (const VerificationReport& r : reports) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const VerificationReport* a, const VerificationReport* b) {
                     return a->claim_id < b->claim_id;
                   });
  std::ostringstream os;
  if (opts.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport* r : ordered)
      arr.push_back(r->to_json(opts.deterministic_timing));
    os << arr.dump(2) << '\n';
  } else if (opts.format == "csv") {
    os << "claim_id,param,status\n";
    for (const VerificationReport* r : ordered)
      os << r->claim_id << ',' << r->range << ',' << (r->pass ? "pass" : "fail")
         << '\n';
  } else {
    std::size_t failed = 0;
    for (const VerificationReport* r : ordered) {
      os << r->summary(opts.deterministic_timing) << '\n';
      if (!r->pass) ++failed;
    }
    if (failed == 0) {
      os << "all " << ordered.size() << " claim(s) passed\n";
    } else {
      os << failed << " of " << ordered.size() << " claim(s) failed\n";
    }
  }
  return os.str();
}

int emit_and_status(const std::vector<VerificationReport>& reports,
                    const OutputOpts& opts) {
  write_output(opts, render_reports(reports, opts));
  for (const VerificationReport& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gen

struct GenOpts {
  std::string kind;
  long n_max = 0;
  std::string cache_dir;
  OutputOpts output;
};

delsch::SequenceTable cached_table(delsch::SequenceKind kind, long n_max,
                                   const std::string& cache_dir) {
  auto build = [&] {
    switch (kind) {
      case delsch::SequenceKind::delannoy: return delsch::delannoy_table(n_max);
      case delsch::SequenceKind::little_schroder:
        return delsch::little_schroder_table(n_max);
      case delsch::SequenceKind::large_schroder:
        return delsch::large_schroder_table(n_max);
    }
    throw std::logic_error("unknown sequence kind");
  };
  if (cache_dir.empty()) return build();
  std::filesystem::path path = std::filesystem::path(cache_dir) /
                               (std::string(delsch::kind_name(kind)) + "-" +
                                std::to_string(n_max) + ".seq");
  if (std::filesystem::exists(path)) {
    std::ifstream is(path);
    try {
      delsch::SequenceTable t = delsch::read_table(is);
      if (t.kind() == kind && t.max_index() == n_max) return t;
      std::cerr << "note: ignoring cache file with mismatched header: " << path
                << '\n';
    } catch (const delsch::CacheFormatError& e) {
      std::cerr << "note: ignoring unreadable cache file " << path << ": "
                << e.what() << '\n';
    }
  }
  delsch::SequenceTable t = build();
  std::ofstream os(path, std::ios::binary);
  if (os) {
    delsch::write_table(t, os);
  } else {
    std::cerr << "note: cannot write cache file " << path << '\n';
  }
  return t;
}

int run_gen_sequence(const GenOpts& opts, delsch::SequenceKind kind) {
  delsch::SequenceTable table = cached_table(kind, opts.n_max, opts.cache_dir);
  std::ostringstream os;
  if (opts.output.format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = std::string(delsch::kind_name(kind));
    j["first_index"] = table.first_index();
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const delsch::BigInt& v : table.values()) values.push_back(v.get_str());
    j["values"] = values;
    os << j.dump(2) << '\n';
  } else if (opts.output.format == "csv") {
    os << "index,value\n";
    for (long n = table.first_index(); n <= table.max_index(); ++n)
      os << n << ',' << table.at(n).get_str() << '\n';
  } else {
    for (size_t i = 0; i < table.values().size(); ++i) {
      if (i > 0) os << ", ";
      os << table.values()[i].get_str();
    }
    os << '\n';
  }
  write_output(opts.output, os.str());
  return 0;
}

int run_gen_poly(const GenOpts& opts, const std::string& family) {
  long first = 0;
  std::vector<delsch::IntPoly> polys;
  if (family == "delannoy-poly") {
    for (long n = 0; n <= opts.n_max; ++n) polys.push_back(delsch::delannoy_poly(n));
  } else if (family == "large-schroder-poly") {
    for (long n = 0; n <= opts.n_max; ++n)
      polys.push_back(delsch::large_schroder_poly(n));
  } else if (family == "little-schroder-poly") {
    first = 1;
    std::vector<delsch::IntPoly> table = delsch::little_schroder_poly_table(opts.n_max);
    polys.assign(table.begin() + 1, table.end());
  } else {
    throw std::invalid_argument("unknown polynomial family " + family);
  }
  std::ostringstream os;
  if (opts.output.format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = family;
    j["first_index"] = first;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const delsch::IntPoly& p : polys) values.push_back(p.to_string());
    j["polynomials"] = values;
    os << j.dump(2) << '\n';
  } else if (opts.output.format == "csv") {
    os << "index,coefficients\n";
    for (size_t i = 0; i < polys.size(); ++i)
      os << (first + static_cast<long>(i)) << ",\"" << polys[i].to_string() << "\"\n";
  } else {
    for (const delsch::IntPoly& p : polys) os << p.to_string() << '\n';
  }
  write_output(opts.output, os.str());
  return 0;
}

int run_gen(const GenOpts& opts) {
  if (auto kind = delsch::kind_from_name(opts.kind)) {
    return run_gen_sequence(opts, *kind);
  }
  std::string normalized = opts.kind;
  std::replace(normalized.begin(), normalized.end(), '_', '-');
  return run_gen_poly(opts, normalized);
}

// ---------------------------------------------------------------------------
// verify / cert / sweep-all

struct VerifyOpts {
  std::vector<std::string> claims;
  delsch::ClaimOverrides overrides;
  OutputOpts output;
  std::string corrupt_cert;  // test fixture, see README
};

void validate_overrides(const delsch::Claim& claim,
                        const delsch::ClaimOverrides& overrides) {
  if (claim.even_n_required && overrides.n_max && *overrides.n_max % 2 != 0) {
    throw std::invalid_argument("claim " + claim.id +
                                " requires an even --nmax, got " +
                                std::to_string(*overrides.n_max));
  }
  delsch::ClaimParams prm = delsch::resolve_params(claim, overrides);
  if (prm.p_min > 0 && prm.p_max > 0 && prm.p_min > prm.p_max) {
    throw std::invalid_argument("claim " + claim.id + ": --pmin " +
                                std::to_string(prm.p_min) + " exceeds --pmax " +
                                std::to_string(prm.p_max));
  }
}

std::string normalize_cert_id(const std::string& id) {
  if (id == "f2" || id == "g2" || id == "f4") return "cert-" + id;
  return id;
}

int run_verify(const VerifyOpts& opts) {
  // Reject unknown selectors before any computation.
  std::vector<const delsch::Claim*> selected;
  for (const std::string& raw : opts.claims) {
    const delsch::Claim* claim = delsch::find_claim(normalize_cert_id(raw));
    if (!claim) throw std::invalid_argument("unknown claim selector: " + raw);
    validate_overrides(*claim, opts.overrides);
    selected.push_back(claim);
  }
  std::vector<VerificationReport> reports;
  for (const delsch::Claim* claim : selected) {
    delsch::ClaimParams prm = delsch::resolve_params(*claim, opts.overrides);
    if (!opts.corrupt_cert.empty() &&
        claim->id == normalize_cert_id(opts.corrupt_cert)) {
      const delsch::CertificateSpec* spec = delsch::find_certificate(claim->id);
      if (!spec)
        throw std::invalid_argument("--corrupt-cert names a non-certificate claim: " +
                                    opts.corrupt_cert);
      reports.push_back(delsch::run_certificate_claim(
          delsch::corrupt_certificate(*spec), prm.n_max));
    } else {
      reports.push_back(claim->run(prm));
    }
  }
  return emit_and_status(reports, opts.output);
}

int run_sweep_all(const OutputOpts& output) {
  std::vector<VerificationReport> reports;
  for (const delsch::Claim& claim : delsch::all_claims())
    reports.push_back(claim.run(claim.defaults));
  return emit_and_status(reports, output);
}

void add_output_flags(CLI::App* cmd, OutputOpts& opts, bool with_timing) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
  if (with_timing) {
    cmd->add_flag("--deterministic-timing", opts.deterministic_timing,
                  "Zero the elapsed_ms fields for byte-reproducible output");
  }
}

void add_range_flags(CLI::App* cmd, delsch::ClaimOverrides& overrides) {
  cmd->add_option("--nmax", overrides.n_max, "Override the claim's n sweep bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--pmin", overrides.p_min, "Override the smallest prime swept")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--pmax", overrides.p_max, "Override the largest prime swept")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jmax", overrides.j_max, "Override the claim's j sweep bound")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "delsch: exact Delannoy/Schroeder sequences, polynomials, and a sweep\n"
      "verifier for the identities, congruences and telescoping certificates\n"
      "they satisfy"};
  app.require_subcommand(1);

  GenOpts gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "Generate sequence or polynomial tables");
  gen->add_option("kind", gen_opts.kind,
                  "delannoy | little-schroder | large-schroder | delannoy-poly | "
                  "little-schroder-poly | large-schroder-poly")
      ->required();
  gen->add_option("--nmax", gen_opts.n_max, "Largest index to generate")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--cache-dir", gen_opts.cache_dir,
                  "Directory for sequence cache files")
      ->envname("DELSCH_CACHE_DIR");
  add_output_flags(gen, gen_opts.output, /*with_timing=*/false);

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Run named claims");
  verify->add_option("--claim", verify_opts.claims, "Claim selector (repeatable)")
      ->required();
  add_range_flags(verify, verify_opts.overrides);
  add_output_flags(verify, verify_opts.output, /*with_timing=*/true);

  VerifyOpts cert_opts;
  CLI::App* cert = app.add_subcommand("cert", "Run telescoping certificate claims");
  cert->add_option("--claim", cert_opts.claims,
                   "cert-f2 | cert-g2 | cert-f4 (default: all three)");
  cert->add_option("--corrupt-cert", cert_opts.corrupt_cert,
                   "Test fixture: run the named certificate with one corrupted "
                   "coefficient");
  add_range_flags(cert, cert_opts.overrides);
  add_output_flags(cert, cert_opts.output, /*with_timing=*/true);

  OutputOpts sweep_output;
  CLI::App* sweep = app.add_subcommand(
      "sweep-all", "Run every claim in the registry at its default range");
  add_output_flags(sweep, sweep_output, /*with_timing=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (cert->parsed()) {
      if (cert_opts.claims.empty())
        cert_opts.claims = {"cert-f2", "cert-g2", "cert-f4"};
      for (std::string& id : cert_opts.claims) {
        id = normalize_cert_id(id);
        if (!delsch::find_certificate(id))
          throw std::invalid_argument("unknown certificate: " + id);
      }
      return run_verify(cert_opts);
    }
    if (sweep->parsed()) return run_sweep_all(sweep_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
