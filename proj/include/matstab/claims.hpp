#ifndef MATSTAB_CLAIMS_HPP
#define MATSTAB_CLAIMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace matstab {

enum class ClaimStatus { Verified, Falsified, SampledPass, Failed };

std::string status_name(ClaimStatus s);

/// Exact certificates report "verified"; sampled checks can at best report
/// "sampled-pass". "failed" means the run did not establish the claim.
struct VerificationReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::Failed;
  nlohmann::json details;
  double runtime_ms = 0.0;

  /// Volatile timing is excluded so identical runs serialize identically.
  nlohmann::json to_json() const;
};

struct ClaimOptions {
  std::optional<int> m;   // scaling factor for the amalgam claims
  int samples = 100;      // sampled-check budget
  uint64_t seed = 0;
};

std::vector<std::string> claim_ids();
bool is_claim_id(const std::string& id);
ClaimStatus expected_status(const std::string& id);

/// Runs one claim; throws UnknownName for an unknown id. Exceptions from the
/// underlying modules are caught and turned into a "failed" report.
VerificationReport run_claim(const std::string& id, const ClaimOptions& opts = {});

}  // namespace matstab

#endif
