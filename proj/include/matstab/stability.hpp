#ifndef MATSTAB_STABILITY_HPP
#define MATSTAB_STABILITY_HPP

#include <optional>

#include "matstab/polymatroid.hpp"
#include "matstab/sparse_poly.hpp"
#include "matstab/upoly.hpp"

namespace matstab {

struct DegreeTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRealRooted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Variable name used for the ground element with this label ("x" + label).
std::string var_of(const std::string& label);

/// h_J = sum over J of x^alpha / alpha!.
SparsePoly generating_polynomial(const MConvexSet& j);

/// d_i P * d_j P - P * d_i d_j P.
SparsePoly rayleigh_difference(const SparsePoly& p, const std::string& var_i,
                               const std::string& var_j);

/// x0^d' * Q(x_i / x0); requires d' >= deg Q and x0 not already a variable.
SparsePoly homogenize(const SparsePoly& q, const std::string& x0, int dprime);
/// Sets x0 = 1; input must be homogeneous.
SparsePoly dehomogenize(const SparsePoly& h, const std::string& x0);
/// Keeps terms with x0-exponent >= k and divides them by x0^k.
SparsePoly truncate_divide(const SparsePoly& p, const std::string& x0, int k);

/// P(t*e + v) as a univariate polynomial in t; e, v indexed like P.vars().
UnivariatePoly line_restriction(const SparsePoly& p, const std::vector<Rat>& e,
                                const std::vector<Rat>& v);

/// True iff P(t*e + v) has only real zeros (vacuously true when it vanishes
/// identically or is a nonzero constant). A false is an exact certificate.
bool line_test(const SparsePoly& p, const std::vector<Rat>& e,
               const std::vector<Rat>& v);

/*
 * Hyperbolicity-cone membership: requires P(t*e + w) real-rooted and decides
 * whether w lies in the closed cone at e. The root-sign convention is locked
 * by the regression examples (the all-ones direction must contain every
 * coordinate point for a stable generating polynomial): membership means no
 * root of P(t*e + w) in (0, +inf).
 */
bool cone_contains(const SparsePoly& p, const std::vector<Rat>& e,
                   const std::vector<Rat>& w);

struct FalsifyWitness {
  enum class Kind { LineNotRealRooted, RayleighNegative };
  Kind kind;
  // line witness
  std::vector<Rat> e, v;
  // rayleigh witness
  std::string var_i, var_j;
  std::vector<Rat> point;
  Rat value;
};

struct SampleSet {
  std::vector<std::vector<Rat>> line_dirs;     // positive directions
  std::vector<std::vector<Rat>> line_offsets;  // paired against every direction
  std::vector<std::vector<Rat>> rayleigh_points;
};

/*
 * Searches for an exact certificate that a homogeneous polynomial is NOT
 * stable: (i) failed line tests over caller samples, (ii) negative Rayleigh
 * difference values at caller points, then (iii) a built-in deterministic
 * seeded rational grid of both kinds, `budget` rounds. A witness disproves
 * stability unconditionally; std::nullopt proves nothing.
 */
std::optional<FalsifyWitness> stability_falsify(const SparsePoly& p,
                                                const SampleSet& samples = {},
                                                int budget = 64,
                                                uint64_t seed = 0);

/// Seeded deterministic sample vectors with entries n/d, |n| <= max_num,
/// d in {1, 2}; shared by the falsifier grid and the sampled-check harnesses.
std::vector<std::vector<Rat>> deterministic_rational_vectors(size_t count,
                                                             size_t dim,
                                                             int max_num,
                                                             uint64_t seed);

nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const FalsifyWitness& w);

}  // namespace matstab

#endif
