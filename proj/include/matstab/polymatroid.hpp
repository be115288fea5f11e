#ifndef MATSTAB_POLYMATROID_HPP
#define MATSTAB_POLYMATROID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matstab/matroid.hpp"

#include "json.hpp"

namespace matstab {

struct NotPolymatroid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotMConvex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAFlat : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RestrictionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer rank table over all subsets of a labelled ground set.
struct Polymatroid {
  std::vector<std::string> ground;
  std::vector<int> r;  // size 1 << ground.size()

  int n() const { return int(ground.size()); }
  int operator()(uint32_t subset) const { return r[subset]; }
  int index_of(const std::string& label) const;
  uint32_t mask_of(const std::vector<std::string>& labels) const;
  bool operator==(const Polymatroid&) const = default;
};

/// Finite set of nonnegative integer vectors with the exchange property.
struct MConvexSet {
  std::vector<std::string> ground;
  std::vector<std::vector<int>> points;  // sorted, deduplicated

  int n() const { return int(ground.size()); }
  bool operator==(const MConvexSet&) const = default;
};

struct MConvexViolation {
  int i;  // ground index with alpha_i > beta_i but no valid exchange
  std::vector<int> alpha, beta;
};

/// Exchange-property check; returns a witness on failure, nullopt on success.
std::optional<MConvexViolation> mconvex_violation(
    const std::vector<std::vector<int>>& points);

inline bool is_mconvex(const std::vector<std::vector<int>>& points) {
  return !mconvex_violation(points).has_value();
}

/// Validating constructors.
MConvexSet mconvex_from_points(std::vector<std::string> ground,
                               std::vector<std::vector<int>> points);
Polymatroid polymatroid_from_table(std::vector<std::string> ground,
                                   std::vector<int> table);

/// r_J(S) = max over J of the coordinate sum on S.
Polymatroid rank_from_mconvex(const MConvexSet& j);

/// J_r: integer points meeting every subset bound with full total sum.
MConvexSet mconvex_from_rank(const Polymatroid& r);

Polymatroid polymatroid_from_matroid(const Matroid& m);
MConvexSet basis_indicator_set(const Matroid& m);

std::vector<uint32_t> flats(const Polymatroid& r);
bool is_modular_pair(const Polymatroid& r, uint32_t f1, uint32_t f2);
/// All flat pairs modular; a sufficient condition for stickiness.
bool sticky_sufficient(const Polymatroid& r);

Polymatroid restrict_to(const Polymatroid& r, uint32_t subset);

/// Image of the basis indicator vectors under summing coordinates that share
/// a target label. New ground order: first occurrence in the old order.
MConvexSet specialize_support(const Matroid& m,
                              const std::map<std::string, std::string>& identify);

Polymatroid scale(const Polymatroid& r, int m);

/// Equality as set functions: same ground labels (any order), same values.
bool equal_as_functions(const Polymatroid& a, const Polymatroid& b);

struct AmalgamSearchStats {
  uint64_t nodes = 0;
  uint64_t leaves = 0;
};

/*
 * Exhaustive integer backtracking for an amalgam of r1 and r2 on the union
 * ground set. Any amalgam r satisfies, for every subset S,
 *     max(r1(S & E1), r2(S & E2)) <= r(S) <= r1(S & E1) + r2(S & E2) - r0(S & E0)
 * (monotonicity below, submodularity applied to S & E1 and S & E2 above), so
 * enumerating these ranges is complete and std::nullopt certifies that no
 * amalgam exists. Deterministic: subsets in mask order, smallest value first.
 */
std::optional<Polymatroid> find_amalgam(const Polymatroid& r1, const Polymatroid& r2,
                                        AmalgamSearchStats* stats = nullptr);

nlohmann::json polymatroid_to_json(const Polymatroid& r);
Polymatroid polymatroid_from_json(const nlohmann::json& j);
nlohmann::json mconvex_to_json(const MConvexSet& j);
MConvexSet mconvex_from_json(const nlohmann::json& j);

}  // namespace matstab

#endif
