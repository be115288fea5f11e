#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matstab/quaternion.hpp"
#include "matstab/stability.hpp"
#include "matstab/rng.hpp"

using namespace matstab;

namespace {

const Quaternion kOne(1), kI(0, 1), kJ(0, 0, 1), kK(0, 0, 0, 1);

Quaternion random_quat(SplitMix64& rng) {
  return Quaternion(Rat(rng.range(-3, 3)), Rat(rng.range(-3, 3)),
                    Rat(rng.range(-3, 3)), Rat(rng.range(-3, 3)));
}

QuatMatrix random_matrix(SplitMix64& rng, int rows, int cols) {
  QuatMatrix a(rows, cols);
  for (auto& q : a.e) q = random_quat(rng);
  return a;
}

QuatMatrix hurwitz_u24() {
  QuatMatrix a(2, 4);
  a.at(0, 0) = kOne;
  a.at(0, 2) = kOne;
  a.at(0, 3) = kOne;
  a.at(1, 1) = kOne;
  a.at(1, 2) = kOne;
  a.at(1, 3) = Quaternion(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2));
  return a;
}

QuatMatrix real_to_quat(const RatMatrix& m) {
  QuatMatrix a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a.at(i, j) = Quaternion(m.at(i, j));
  return a;
}

}  // namespace

TEST_CASE("quaternion algebra") {
  CHECK(kI * kJ == kK);
  CHECK(kJ * kI == Quaternion(0, 0, 0, -1));
  CHECK(kI * kI == Quaternion(-1));
  Quaternion q(1, 2, 3, 4);
  CHECK(q.norm_sq() == 30);
  CHECK(q * q.conj() == Quaternion(30));

  // the half-unit (1+i+j+k)/2 is a sixth root of unity: q^3 = -1
  Quaternion h(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2));
  CHECK(h.norm_sq() == 1);
  CHECK(h * h * h == Quaternion(-1));
}

TEST_CASE("complex embedding") {
  QuatMatrix one(1, 1);
  one.at(0, 0) = kOne;
  ComplexMatrix p1 = phi(one);
  CHECK(p1.at(0, 0) == ComplexRat{Rat(1), Rat(0)});
  CHECK(p1.at(0, 1) == ComplexRat{Rat(0), Rat(0)});
  CHECK(p1.at(1, 1) == ComplexRat{Rat(1), Rat(0)});

  QuatMatrix im(1, 1);
  im.at(0, 0) = kI;
  ComplexMatrix pi = phi(im);
  CHECK(pi.at(0, 0) == ComplexRat{Rat(0), Rat(1)});
  CHECK(pi.at(1, 1) == ComplexRat{Rat(0), Rat(-1)});
  CHECK(pi.at(0, 1) == ComplexRat{Rat(0), Rat(0)});
  CHECK(pi.at(1, 0) == ComplexRat{Rat(0), Rat(0)});
}

TEST_CASE("phi is a star ring homomorphism on random instances") {
  SplitMix64 rng{31};
  auto cm_eq = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return a == b;
  };
  for (int t = 0; t < 20; ++t) {
    QuatMatrix a = random_matrix(rng, 2, 2);
    QuatMatrix b = random_matrix(rng, 2, 2);
    CHECK(cm_eq(phi(a * b), phi(a) * phi(b)));
    CHECK(cm_eq(phi(a + b), [&] {
      ComplexMatrix s(4, 4);
      ComplexMatrix pa = phi(a), pb = phi(b);
      for (size_t k = 0; k < s.e.size(); ++k)
        s.e[k] = {pa.e[k].re + pb.e[k].re, pa.e[k].im + pb.e[k].im};
      return s;
    }()));
    // phi(A*) equals the conjugate transpose of phi(A)
    ComplexMatrix ps = phi(a.star());
    ComplexMatrix pa = phi(a);
    ComplexMatrix pat(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        pat.at(i, j) = {pa.at(j, i).re, -pa.at(j, i).im};
    CHECK(cm_eq(ps, pat));
  }
}

TEST_CASE("delta squared") {
  QuatMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = kOne;
  CHECK(delta_sq(id) == 1);
  CHECK(delta_str(id) == "1");

  QuatMatrix q(1, 1);
  q.at(0, 0) = Quaternion(1, 2, 3, 4);
  CHECK(delta_sq(q) == 30);  // |q|^2
  CHECK(delta_str(q) == "sqrt(30)");

  // scaling the first column by a rational scales delta by its absolute value
  SplitMix64 rng{77};
  for (int t = 0; t < 10; ++t) {
    QuatMatrix a = random_matrix(rng, 2, 2);
    Rat lambda = rng.small_rat(4);
    QuatMatrix scaled = a;
    for (int i = 0; i < 2; ++i)
      scaled.at(i, 0) = Quaternion(a.at(i, 0).a * lambda, a.at(i, 0).b * lambda,
                                   a.at(i, 0).c * lambda, a.at(i, 0).d * lambda);
    CHECK(delta_sq(scaled) == lambda * lambda * delta_sq(a));
  }
}

TEST_CASE("delta multiplicativity and star invariance") {
  QuatMatrix id(2, 2);
  id.at(0, 0) = id.at(1, 1) = kOne;
  CHECK(delta_multiplicativity_check(id, id));

  SplitMix64 rng{123};
  for (int t = 0; t < 20; ++t)
    CHECK(delta_multiplicativity_check(random_matrix(rng, 2, 2),
                                       random_matrix(rng, 2, 2)));
  for (int t = 0; t < 5; ++t) {
    QuatMatrix a = random_matrix(rng, 3, 3);
    CHECK(delta_sq(a) == delta_sq(a.star()));
  }
}

TEST_CASE("quaternionic Cauchy-Binet") {
  QuatMatrix ones(1, 2);
  ones.at(0, 0) = kOne;
  ones.at(0, 1) = kOne;
  CauchyBinetReport rep = cauchy_binet_check(ones);
  CHECK(rep.holds);
  CHECK(rep.rhs_sum == 2);  // delta(A A*) = delta((2)) = 2
  CHECK(rep.lhs_det == 4);

  // a zero column contributes vanishing singleton terms
  QuatMatrix zc(1, 3);
  zc.at(0, 0) = kOne;
  zc.at(0, 2) = kJ;
  CauchyBinetReport rz = cauchy_binet_check(zc);
  CHECK(rz.holds);
  for (const auto& [cols, term] : rz.terms)
    if (cols == std::vector<int>{1}) CHECK(term == 0);

  SplitMix64 rng{2};
  for (int t = 0; t < 10; ++t)
    CHECK(cauchy_binet_check(random_matrix(rng, 2, 4)).holds);
}

TEST_CASE("delta basis property") {
  RatMatrix u23(2, 3);
  u23.at(0, 0) = 1;
  u23.at(0, 2) = 1;
  u23.at(1, 1) = 1;
  u23.at(1, 2) = -1;
  CHECK(delta_basis_property(real_to_quat(u23), catalog("u(2,3)")));

  // the sixth-root-of-unity representation of U(2,4), embedded in the
  // quaternions through the half-unit
  Matroid u24 = catalog("u(2,4)");
  CHECK(delta_basis_property(hurwitz_u24(), u24));

  // the P8 matrix has minors with |det| = 2
  CHECK_FALSE(delta_basis_property(real_to_quat(p8_matrix()), catalog("p8")));
}

TEST_CASE("half-plane-property identity") {
  RatMatrix u23(2, 3);
  u23.at(0, 0) = 1;
  u23.at(0, 2) = 1;
  u23.at(1, 1) = 1;
  u23.at(1, 2) = 1;
  QuIdentityReport rep = qu_hpp_identity(real_to_quat(u23));
  CHECK(rep.holds);
  CHECK(rep.h == SparsePoly::parse("1*x1*x2 + 1*x1*x3 + 1*x2*x3"));
  CHECK(rep.rhs.num_terms() == rep.lhs.num_terms());

  QuatMatrix single(1, 1);
  single.at(0, 0) = kOne;
  QuIdentityReport r1 = qu_hpp_identity(single);
  CHECK(r1.holds);
  CHECK(r1.lhs == SparsePoly::parse("1*x1^2"));

  QuIdentityReport r24 = qu_hpp_identity(hurwitz_u24());
  CHECK(r24.holds);
  CHECK(r24.matroid.bases.size() == 6);

  // a units-only matrix found by small search: [I2 | (0 1; 1 i)]
  QuatMatrix u(2, 4);
  u.at(0, 0) = kOne;
  u.at(0, 3) = kOne;
  u.at(1, 1) = kOne;
  u.at(1, 2) = kOne;
  u.at(1, 3) = kI;
  QuIdentityReport ru = qu_hpp_identity(u);
  CHECK(ru.holds);
  CHECK(ru.matroid.bases.size() == 5);

  // at the doubled-basis monomials the expansion carries exactly the squares
  // of the generating polynomial's coefficients
  for (uint32_t b : r24.matroid.bases) {
    std::vector<int> doubled(size_t(r24.matroid.n()), 0);
    for (int i = 0; i < r24.matroid.n(); ++i)
      if (b >> i & 1) doubled[i] = 2;
    CHECK(r24.rhs.coeff_of(doubled) == 1);
  }

  // necessary-condition smoke test: no stability witness on the grid
  CHECK_FALSE(stability_falsify(rep.h, {}, 32, 0).has_value());
  CHECK_FALSE(stability_falsify(r24.h, {}, 32, 0).has_value());
}

TEST_CASE("identity preconditions are enforced") {
  CHECK_THROWS_AS(qu_hpp_identity(real_to_quat(p8_matrix())), PropertyViolation);
}

TEST_CASE("quaternion matrix JSON round trip") {
  QuatMatrix a = hurwitz_u24();
  QuatMatrix back = quat_matrix_from_json(quat_matrix_to_json(a));
  CHECK(back == a);
  CHECK(quat_matrix_to_json(a)["entries"][1][3][0] == "1/2");
}
