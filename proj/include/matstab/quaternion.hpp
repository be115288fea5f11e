#ifndef MATSTAB_QUATERNION_HPP
#define MATSTAB_QUATERNION_HPP

#include <vector>

#include "matstab/matroid.hpp"
#include "matstab/sparse_poly.hpp"

#include "json.hpp"

namespace matstab {

struct PropertyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// a + b*i + c*j + d*k with exact rational components.
struct Quaternion {
  Rat a, b, c, d;

  Quaternion(Rat a_ = 0, Rat b_ = 0, Rat c_ = 0, Rat d_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  Quaternion operator+(const Quaternion&) const;
  Quaternion operator-(const Quaternion&) const;
  Quaternion operator*(const Quaternion&) const;
  bool operator==(const Quaternion&) const = default;
  Quaternion conj() const { return {a, -b, -c, -d}; }
  Rat norm_sq() const { return a * a + b * b + c * c + d * d; }
};

struct QuatMatrix {
  int rows = 0, cols = 0;
  std::vector<Quaternion> e;

  QuatMatrix() = default;
  QuatMatrix(int r, int c) : rows(r), cols(c), e(size_t(r) * c) {}
  Quaternion& at(int i, int j) { return e[size_t(i) * cols + j]; }
  const Quaternion& at(int i, int j) const { return e[size_t(i) * cols + j]; }

  QuatMatrix operator+(const QuatMatrix&) const;
  QuatMatrix operator*(const QuatMatrix&) const;
  QuatMatrix star() const;  // conjugate transpose
  QuatMatrix columns(const std::vector<int>& idx) const;
  bool operator==(const QuatMatrix&) const = default;
};

struct ComplexRat {
  Rat re, im;
  bool operator==(const ComplexRat&) const = default;
};

struct ComplexMatrix {
  int rows = 0, cols = 0;
  std::vector<ComplexRat> e;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), e(size_t(r) * c) {}
  ComplexRat& at(int i, int j) { return e[size_t(i) * cols + j]; }
  const ComplexRat& at(int i, int j) const { return e[size_t(i) * cols + j]; }
  ComplexMatrix operator*(const ComplexMatrix&) const;
  ComplexMatrix columns(const std::vector<int>& idx) const;
  bool operator==(const ComplexMatrix&) const = default;
};

ComplexRat det(const ComplexMatrix& m);

/// Entry-wise complex embedding: each quaternion becomes the 2x2 block
/// [[a+bi, c+di], [-c+di, a-bi]].
ComplexMatrix phi(const QuatMatrix& a);

/// |det phi(A)| = delta(A)^2; always a rational for square quaternionic A.
Rat delta_sq(const QuatMatrix& a);

/// "p/q" when delta is rational, otherwise "sqrt(p/q)".
std::string delta_str(const QuatMatrix& a);

/// delta(AB) = delta(A) delta(B) and delta(A) = delta(A*), via delta^2.
bool delta_multiplicativity_check(const QuatMatrix& a, const QuatMatrix& b);

struct CauchyBinetReport {
  Rat lhs_det;          // det phi(A A*)
  Rat rhs_sum;          // sum over m-subsets of delta_sq(A[B])
  std::vector<std::pair<std::vector<int>, Rat>> terms;
  bool holds = false;   // lhs_det == rhs_sum^2
};

/// delta(AA*) = sum_B delta(A[B] A[B]*) checked as det phi(AA*) == (sum)^2.
CauchyBinetReport cauchy_binet_check(const QuatMatrix& a);

/// delta_sq(A[B]) is 1 exactly on the bases of M and 0 elsewhere.
bool delta_basis_property(const QuatMatrix& a, const Matroid& m);

struct QuIdentityReport {
  Matroid matroid;       // from the nonzero delta minors
  SparsePoly h;          // basis generating polynomial
  SparsePoly lhs;        // h^2
  SparsePoly rhs;        // det(phi(A) X phi(A)*) expanded by Cauchy-Binet
  bool holds = false;
};

/*
 * The half-plane-property identity for a quaternionic unimodular matrix:
 * h_M^2 equals det(phi(A) diag(x_1,x_1,...,x_m,x_m) phi(A)*), expanded
 * exactly over the rationals. Requires delta_basis_property for the matroid
 * of nonzero delta minors (PropertyViolation otherwise); IdentityMismatch
 * carries the difference if the polynomials disagree.
 */
QuIdentityReport qu_hpp_identity(const QuatMatrix& a);

nlohmann::json quat_matrix_to_json(const QuatMatrix& a);
QuatMatrix quat_matrix_from_json(const nlohmann::json& j);

}  // namespace matstab

#endif
