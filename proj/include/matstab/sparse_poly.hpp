#ifndef MATSTAB_SPARSE_POLY_HPP
#define MATSTAB_SPARSE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "matstab/rational.hpp"

namespace matstab {

struct IdentityMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graded lexicographic order on exponent vectors of equal length.
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  }
};

/*
 * Sparse multivariate polynomial over the rationals. Each polynomial carries
 * its own ordered variable list; binary operations align variable sets by
 * name. No zero coefficients are ever stored.
 */
class SparsePoly {
 public:
  using Terms = std::map<std::vector<int>, Rat, GradedLex>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(const Rat& c);
  static SparsePoly variable(const std::string& name);
  static SparsePoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                             const Rat& coeff);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  int var_index(const std::string& name) const;  // -1 if absent

  void add_term(const std::vector<int>& exps, const Rat& coeff);
  Rat coeff_of(const std::vector<int>& exps) const;

  SparsePoly operator+(const SparsePoly&) const;
  SparsePoly operator-(const SparsePoly&) const;
  SparsePoly operator*(const SparsePoly&) const;
  SparsePoly operator*(const Rat&) const;
  SparsePoly pow(unsigned e) const;
  bool operator==(const SparsePoly& o) const;

  SparsePoly derivative(const std::string& var) const;
  /// Simultaneous substitution var -> polynomial; untouched variables remain.
  SparsePoly substitute(const std::map<std::string, SparsePoly>& assignment) const;
  /// Full evaluation; every variable must be assigned.
  Rat eval(const std::map<std::string, Rat>& point) const;
  /// Sets the listed variables to zero.
  SparsePoly set_zero(const std::vector<std::string>& vars) const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  bool is_homogeneous() const;

  /// Exponent vectors of the support, in term order.
  std::vector<std::vector<int>> support() const;

  /// Rewrites over the given variable list (a superset of the current one).
  SparsePoly with_vars(const std::vector<std::string>& new_vars) const;

  /// Coefficients collected by the power of one variable; keys are exponents,
  /// values are polynomials in the remaining variables.
  std::map<int, SparsePoly> collect_in(const std::string& var) const;

  std::string to_string() const;
  static SparsePoly parse(const std::string& text);  // inverse of to_string

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Shared variable list: lhs order first, then unseen rhs variables.
std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

}  // namespace matstab

#endif
