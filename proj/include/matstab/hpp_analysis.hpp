#ifndef MATSTAB_HPP_ANALYSIS_HPP
#define MATSTAB_HPP_ANALYSIS_HPP

#include <array>
#include <optional>
#include <set>

#include "matstab/polymatroid.hpp"
#include "matstab/stability.hpp"

namespace matstab {

struct NotARelaxation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SupportNotMConvex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ChainBroken : std::runtime_error {
  ChainBroken(std::string step_, const std::string& msg)
      : std::runtime_error(msg), step(std::move(step_)) {}
  std::string step;
};
struct NonRepresentingMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * Four bases (B1,B2,B3,B4) = (S+{i,k}, S+{j,l}, S+{i,l}, S+{j,k}) where the
 * diagonal pairs {i,j}, {k,l} have at most one of S+{i,j}, S+{k,l} a basis.
 * The coefficient relation a_{B1} a_{B2} = a_{B3} a_{B4} pairs the two bases
 * that split {i,j,k,l} between them; that pairing is forced by the scaling
 * vectors lying in the cut-out space (and by Grassmann-Pluecker on
 * represented instances).
 */
struct QuadrangleRelation {
  uint32_t b1, b2, b3, b4;
  uint32_t s;
  std::array<int, 4> ijkl;  // canonical: i < j, k < l, i = min of the four

  bool operator==(const QuadrangleRelation&) const = default;
  auto operator<=>(const QuadrangleRelation&) const = default;
};

/// Exhaustive, canonically ordered, deduplicated.
std::vector<QuadrangleRelation> degenerate_quadrangles(const Matroid& m);

/// One row per quadrangle: +1 at B1, +1 at B2, -1 at B3, -1 at B4, columns
/// indexed by the sorted basis list.
std::vector<std::vector<Rat>> quadrangle_equation_rows(const Matroid& m);

struct BasisIndexedSpace {
  std::vector<uint32_t> basis_masks;           // sorted bases of the matroid
  std::vector<std::vector<Rat>> basis_vectors; // linearly independent
  int dim() const { return int(basis_vectors.size()); }
};

/// Nullspace of the quadrangle equations inside R^bases.
BasisIndexedSpace v_space(const Matroid& m);

/// Column space of the incidence map v -> (sum_{i in B} v_i)_B; verifies the
/// dimension |E| - z + 1 and the containment W <= V.
BasisIndexedSpace w_space(const Matroid& m);

/// Exact stand-in for (log |det A[B]|)_B: each entry is a formal rational
/// combination of {log p : p prime}, stored as prime -> exponent.
struct LogVector {
  std::vector<uint32_t> basis_masks;
  std::vector<std::map<long long, Rat>> entries;

  std::set<long long> primes() const;
  std::vector<Rat> component(long long prime) const;
  bool is_zero() const;
};

/// u(A) for the column matroid of A; verifies membership in V per prime.
LogVector u_vector(const RatMatrix& a);
/// Same, but A must represent the given matroid (NonRepresentingMatrix).
LogVector u_vector(const RatMatrix& a, const Matroid& m);

bool in_v_space(const Matroid& m, const LogVector& vec);
bool in_w_space(const Matroid& m, const LogVector& vec);
bool in_w_space(const Matroid& m, const std::vector<Rat>& vec);

/// Zero-padding embedding along a relaxation M -> M' = relax(M, X).
std::vector<Rat> iota_embed(const Matroid& m, const Matroid& m_prime,
                            const std::vector<Rat>& vec);

struct EmbedReport {
  uint32_t x = 0;  // the relaxed circuit-hyperplane
  int dim_v = 0, dim_w = 0, dim_v_prime = 0, dim_w_prime = 0;
  bool iota_maps_v_into_v_prime = false;
  bool delta_x_in_v_prime = false;
  bool trivial_intersection = false;  // (iota(U) + R delta_X) meets W' in 0
  bool spans_complement = false;      // dim W' + dim U + 1 == dim V'
  std::vector<std::vector<Rat>> u_basis;  // complement of W in V used
};

/// Full relaxation-embedding verification for M' = relax(M, X).
EmbedReport embed_complement_report(const Matroid& m, const Matroid& m_prime);

/// a_B -> a_B * prod_{i in B} s_i, coefficients indexed like m.bases.
std::vector<Rat> scaling_action(const Matroid& m, const std::vector<Rat>& coeffs,
                                const std::vector<Rat>& s);

/// Prime-exponent log vector of the entry-wise ratio of two coefficient
/// vectors (all entries must be nonzero rationals).
LogVector log_vector_of_ratios(const Matroid& m, const std::vector<Rat>& numer,
                               const std::vector<Rat>& denom);

/// Multiaffine F_{a,b} in a, b, x0..x7: interpolates between the basis
/// coefficients b^{v_B} of P8 and the relaxed term a*x3*x5*x6*x7.
SparsePoly build_F_ab();

struct RayleighCubicReport {
  SparsePoly cubic;  // the (0,1) Rayleigh difference at (1,1,t,-1,-1,t)
  SparsePoly coeff_t3, coeff_t2, coeff_t1, coeff_t0;  // in a and b
  bool matches = false;  // exact match with the pinned cubic
};

/// Computes Delta_{0,1} F_{a,b} at (x2..x7) = (1,1,t,-1,-1,t) and checks it
/// equals -ab t^3 + (-ab - 4b^2 + 2a + 12b + 16) t^2 + a t identically.
RayleighCubicReport verify_rayleigh_cubic();

struct HypconeSpotChecks {
  int line_tests = 0;
  bool lines_pass = false;
  bool coordinate_directions_pass = false;
  bool overlap_direction_pass = false;  // delta_0 - sum of other E0 deltas
};

struct PipelineResult {
  SparsePoly p0;              // common restriction
  SparsePoly h1, h2;          // shifted polynomials
  SparsePoly q1, q2;          // dehomogenized real-zero polynomials
  HypconeSpotChecks checks1, checks2;
  // present when a candidate amalgamating polynomial was supplied:
  std::optional<SparsePoly> p_prime;
  std::optional<Polymatroid> amalgam;
};

/*
 * The constructive amalgamation pipeline. P1, P2 are homogeneous stable
 * polynomials of equal degree over variable sets E1, E2 with matching
 * restrictions to E0 = E1 meet E2 (pivot in E0). Builds the shifted H_k and
 * the real-zero Q_k, runs sampled hyperbolicity checks, and when a candidate
 * Q with Q_k = Q|_{x_i = 0 off E'_k} is supplied, replays the constructive
 * steps and extracts the amalgam polymatroid from the support of P'.
 */
PipelineResult amalgamation_pipeline(const SparsePoly& p1, const SparsePoly& p2,
                                     const std::string& pivot,
                                     const std::optional<SparsePoly>& q = {},
                                     int line_samples = 100, uint64_t seed = 0);

struct ChainStep {
  std::string claim;
  std::string justification;
  bool inferred_by_symmetry = false;
};

struct ChainReport {
  bool symbolic = false;
  int m = 1;  // ignored when symbolic
  std::vector<ChainStep> steps;
  bool contradiction = false;
};

/// Replays the boundary-value chain showing m*r1, m*r2 have no amalgam; the
/// boundary values are re-derived from the specialized supports at m = 1 and
/// every step is linear in m, so the symbolic run covers all m >= 1.
ChainReport no_amalgam_proof_chain(std::optional<int> m);

/// The two specialized polymatroids r1 (from f7m4) and r2 (from f7m5).
std::pair<Polymatroid, Polymatroid> specialized_pair();

/// The stable polynomials behind them: the basis generating polynomials with
/// the primed variables identified (x0' = x0, x1' = x1, x2' = x2). Their
/// coefficients count preimage bases; only these specializations inherit
/// stability, the plain generating polynomials of the supports do not.
std::pair<SparsePoly, SparsePoly> specialized_polynomials();

nlohmann::json logvector_to_json(const LogVector& v, const Matroid& m);

}  // namespace matstab

#endif
