#ifndef MATSTAB_UPOLY_HPP
#define MATSTAB_UPOLY_HPP

#include <optional>
#include <vector>

#include "matstab/rational.hpp"

namespace matstab {

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};

/// Univariate polynomial over the rationals, coefficients ascending by degree.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero polynomial
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const { return k < int(c_.size()) ? c_[k] : Rat(0); }

  Rat eval(const Rat& x) const;
  UnivariatePoly derivative() const;

  UnivariatePoly operator+(const UnivariatePoly&) const;
  UnivariatePoly operator-(const UnivariatePoly&) const;
  UnivariatePoly operator*(const UnivariatePoly&) const;
  UnivariatePoly operator*(const Rat&) const;
  bool operator==(const UnivariatePoly&) const = default;

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);  // monic
UnivariatePoly squarefree_part(const UnivariatePoly& p);

/// Sturm chain of the squarefree part; counts distinct real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const UnivariatePoly& p);  // throws ZeroPolynomial
  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

 private:
  std::vector<UnivariatePoly> chain_;
};

int count_distinct_real_roots(const UnivariatePoly& p);

/// Distinct real roots in (lo, hi]; std::nullopt endpoints mean -inf / +inf.
/// Endpoints that are themselves roots are handled exactly (divided out).
int count_roots_in(const UnivariatePoly& p, std::optional<Rat> lo, std::optional<Rat> hi);

/// True iff every complex root is real (squarefree part has full root count).
bool sturm_real_rooted(const UnivariatePoly& p);  // throws ZeroPolynomial

}  // namespace matstab

#endif
