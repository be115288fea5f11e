#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "matstab/claims.hpp"
#include "matstab/hpp_analysis.hpp"
#include "matstab/quaternion.hpp"

namespace {

int cmd_catalog(const std::string& name, bool pretty) {
  try {
    matstab::Matroid m = matstab::catalog(name);
    std::cout << matstab::matroid_to_json(m).dump(pretty ? 2 : -1) << "\n";
    return 0;
  } catch (const matstab::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

void print_report(const matstab::VerificationReport& rep,
                  matstab::ClaimStatus expected, bool json) {
  if (json) {
    std::cout << rep.to_json().dump(2) << "\n";
    return;
  }
  bool match = rep.status == expected;
  std::cout << (match ? "[ok]   " : "[FAIL] ") << rep.claim << ": "
            << matstab::status_name(rep.status) << " (expected "
            << matstab::status_name(expected) << ", " << rep.runtime_ms
            << " ms)\n";
  if (!match || rep.status == matstab::ClaimStatus::Failed)
    std::cout << rep.details.dump(2) << "\n";
}

int cmd_verify(const std::string& id, bool all, const matstab::ClaimOptions& opts,
               bool json) {
  std::vector<std::string> ids;
  if (all) {
    ids = matstab::claim_ids();
  } else {
    if (!matstab::is_claim_id(id)) {
      std::cerr << "error: unknown claim id '" << id << "'. known ids:\n";
      for (const auto& known : matstab::claim_ids())
        std::cerr << "  " << known << "\n";
      return 2;
    }
    ids.push_back(id);
  }
  bool all_match = true;
  nlohmann::json agg = nlohmann::json::array();
  for (const auto& claim : ids) {
    matstab::VerificationReport rep = matstab::run_claim(claim, opts);
    matstab::ClaimStatus expected = matstab::expected_status(claim);
    all_match &= rep.status == expected;
    if (json && all)
      agg.push_back(rep.to_json());
    else
      print_report(rep, expected, json);
  }
  if (json && all) {
    nlohmann::json top;
    top["claims"] = std::move(agg);
    top["all_match"] = all_match;
    std::cout << top.dump(2) << "\n";
  } else if (!json && all) {
    std::cout << (all_match ? "all claims match their expected status\n"
                            : "claim mismatch\n");
  }
  return all_match ? 0 : 1;
}

int cmd_falsify(const std::string& path, int samples, uint64_t seed, bool json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  matstab::SparsePoly p;
  try {
    try {
      p = matstab::poly_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error&) {
      p = matstab::SparsePoly::parse(text);
    }
    if (!p.is_homogeneous())
      throw std::invalid_argument("polynomial is not homogeneous");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto witness = matstab::stability_falsify(p, {}, samples, seed);
  nlohmann::json out;
  out["claim"] = "stability of " + path;
  if (witness) {
    out["status"] = "falsified";
    out["witness"] = matstab::witness_to_json(*witness);
  } else {
    out["status"] = "sampled-pass";
    out["note"] = "no witness found; this proves nothing";
  }
  if (json)
    std::cout << out.dump(2) << "\n";
  else if (witness)
    std::cout << "falsified: " << out["witness"].dump() << "\n";
  else
    std::cout << "no witness found (sampled search only, proves nothing)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit: matroids, polymatroid amalgams, "
               "stable polynomials, quaternionic unimodular identities"};
  app.require_subcommand(1);

  std::string catalog_name;
  bool catalog_pretty = false;
  auto* cat = app.add_subcommand("catalog", "print a catalog matroid as JSON");
  cat->add_option("name", catalog_name,
                  "fano | nonfano | f7m4 | f7m5 | p8 | p1 | u(k,n) | "
                  "graphic_g1 | graphic_g2")
      ->required();
  cat->add_flag("--pretty", catalog_pretty, "indent the JSON output");

  std::string claim_id;
  bool verify_all = false, verify_json = false;
  int opt_m = 0, opt_samples = 100;
  uint64_t opt_seed = 0;
  auto* ver = app.add_subcommand("verify", "run a claim from the registry");
  ver->add_option("claim", claim_id, "claim id (see --all for the list)");
  ver->add_flag("--all", verify_all, "run every claim");
  ver->add_flag("--json", verify_json, "machine-readable output");
  ver->add_option("--m", opt_m, "scaling factor for the amalgam claims");
  ver->add_option("--samples", opt_samples, "budget for sampled checks");
  ver->add_option("--seed", opt_seed, "seed for sampled checks");

  std::string falsify_path;
  bool falsify_json = false;
  int falsify_samples = 64;
  uint64_t falsify_seed = 0;
  auto* fal = app.add_subcommand(
      "falsify", "search for an exact non-stability certificate");
  fal->add_option("file", falsify_path,
                  "polynomial file (JSON or canonical text form)")
      ->required();
  fal->add_option("--samples", falsify_samples, "built-in grid budget");
  fal->add_option("--seed", falsify_seed, "grid seed");
  fal->add_flag("--json", falsify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (cat->parsed()) return cmd_catalog(catalog_name, catalog_pretty);
  if (ver->parsed()) {
    if (!verify_all && claim_id.empty()) {
      std::cerr << "error: give a claim id or --all\n";
      return 2;
    }
    matstab::ClaimOptions opts;
    if (opt_m > 0) opts.m = opt_m;
    opts.samples = opt_samples;
    opts.seed = opt_seed;
    return cmd_verify(claim_id, verify_all, opts, verify_json);
  }
  if (fal->parsed())
    return cmd_falsify(falsify_path, falsify_samples, falsify_seed, falsify_json);
  return 2;
}
