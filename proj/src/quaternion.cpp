#include "matstab/quaternion.hpp"

#include <bit>

#include "matstab/stability.hpp"

namespace matstab {

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return {a + o.a, b + o.b, c + o.c, d + o.d};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return {a - o.a, b - o.b, c - o.c, d - o.d};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {a * o.a - b * o.b - c * o.c - d * o.d,
          a * o.b + b * o.a + c * o.d - d * o.c,
          a * o.c - b * o.d + c * o.a + d * o.b,
          a * o.d + b * o.c - c * o.b + d * o.a};
}

QuatMatrix QuatMatrix::operator+(const QuatMatrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("quaternion matrix shape mismatch");
  QuatMatrix out(rows, cols);
  for (size_t k = 0; k < e.size(); ++k) out.e[k] = e[k] + o.e[k];
  return out;
}

QuatMatrix QuatMatrix::operator*(const QuatMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("quaternion matrix shape mismatch");
  QuatMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      Quaternion acc;
      for (int k = 0; k < cols; ++k) acc = acc + at(i, k) * o.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

QuatMatrix QuatMatrix::star() const {
  QuatMatrix out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

QuatMatrix QuatMatrix::columns(const std::vector<int>& idx) const {
  QuatMatrix out(rows, int(idx.size()));
  for (int i = 0; i < rows; ++i)
    for (size_t j = 0; j < idx.size(); ++j) out.at(i, int(j)) = at(i, idx[j]);
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("complex matrix shape mismatch");
  ComplexMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      Rat re(0), im(0);
      for (int k = 0; k < cols; ++k) {
        const auto& x = at(i, k);
        const auto& y = o.at(k, j);
        re += x.re * y.re - x.im * y.im;
        im += x.re * y.im + x.im * y.re;
      }
      out.at(i, j) = {re, im};
    }
  return out;
}

ComplexMatrix ComplexMatrix::columns(const std::vector<int>& idx) const {
  ComplexMatrix out(rows, int(idx.size()));
  for (int i = 0; i < rows; ++i)
    for (size_t j = 0; j < idx.size(); ++j) out.at(i, int(j)) = at(i, idx[j]);
  return out;
}

ComplexRat det(const ComplexMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  ComplexMatrix a = m;
  const int n = a.rows;
  Rat dre(1), dim(0);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c).re != 0 || a.at(r, c).im != 0) { p = r; break; }
    if (p < 0) return {Rat(0), Rat(0)};
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(a.at(p, k), a.at(c, k));
      dre = -dre;
      dim = -dim;
    }
    const ComplexRat piv = a.at(c, c);
    Rat nr = piv.re * piv.re + piv.im * piv.im;
    {
      Rat t = dre * piv.re - dim * piv.im;
      dim = dre * piv.im + dim * piv.re;
      dre = t;
    }
    ComplexRat inv{piv.re / nr, -piv.im / nr};
    for (int r = c + 1; r < n; ++r) {
      ComplexRat f0 = a.at(r, c);
      if (f0.re == 0 && f0.im == 0) continue;
      ComplexRat f{f0.re * inv.re - f0.im * inv.im, f0.re * inv.im + f0.im * inv.re};
      for (int k = c; k < n; ++k) {
        const ComplexRat& x = a.at(c, k);
        ComplexRat& y = a.at(r, k);
        y.re -= f.re * x.re - f.im * x.im;
        y.im -= f.re * x.im + f.im * x.re;
      }
    }
  }
  return {dre, dim};
}

ComplexMatrix phi(const QuatMatrix& a) {
  ComplexMatrix out(2 * a.rows, 2 * a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const Quaternion& q = a.at(i, j);
      out.at(2 * i, 2 * j) = {q.a, q.b};
      out.at(2 * i, 2 * j + 1) = {q.c, q.d};
      out.at(2 * i + 1, 2 * j) = {-q.c, q.d};
      out.at(2 * i + 1, 2 * j + 1) = {q.a, -q.b};
    }
  return out;
}

Rat delta_sq(const QuatMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("delta: matrix not square");
  ComplexRat d = det(phi(a));
  if (d.im != 0)
    throw std::logic_error("det(phi(A)) is not real for a quaternionic matrix");
  return abs(d.re);
}

std::string delta_str(const QuatMatrix& a) {
  Rat ds = delta_sq(a);
  if (auto root = exact_sqrt(ds)) return rat_str(*root);
  return "sqrt(" + rat_str(ds) + ")";
}

bool delta_multiplicativity_check(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows)
    throw std::invalid_argument("delta_multiplicativity: need equal square sizes");
  return delta_sq(a * b) == delta_sq(a) * delta_sq(b) &&
         delta_sq(a) == delta_sq(a.star());
}

CauchyBinetReport cauchy_binet_check(const QuatMatrix& a) {
  if (a.rows > a.cols) throw std::invalid_argument("cauchy_binet: need m <= n");
  CauchyBinetReport rep;
  rep.lhs_det = delta_sq(a * a.star());  // det phi(AA*) = delta(AA*)^2
  rep.rhs_sum = 0;
  const int m = a.rows, n = a.cols;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) idx.push_back(j);
    Rat term = delta_sq(a.columns(idx));  // delta(A[B] A[B]*) = delta(A[B])^2
    rep.terms.emplace_back(idx, term);
    rep.rhs_sum += term;
  }
  rep.holds = rep.lhs_det == rep.rhs_sum * rep.rhs_sum;
  return rep;
}

bool delta_basis_property(const QuatMatrix& a, const Matroid& m) {
  if (a.rows != m.rank_d || a.cols != m.n())
    throw std::invalid_argument("delta_basis_property: shape mismatch");
  for (uint32_t mask = 0; mask < (1u << a.cols); ++mask) {
    if (std::popcount(mask) != a.rows) continue;
    std::vector<int> idx;
    for (int j = 0; j < a.cols; ++j)
      if (mask >> j & 1) idx.push_back(j);
    Rat ds = delta_sq(a.columns(idx));
    if (ds != (m.has_basis(mask) ? Rat(1) : Rat(0))) return false;
  }
  return true;
}

QuIdentityReport qu_hpp_identity(const QuatMatrix& a) {
  const int d = a.rows, n = a.cols;
  std::vector<uint32_t> bases;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) idx.push_back(j);
    Rat ds = delta_sq(a.columns(idx));
    if (ds == 1) bases.push_back(mask);
    else if (ds != 0)
      throw PropertyViolation("delta of a maximal minor is neither 0 nor 1");
  }
  if (bases.empty()) throw PropertyViolation("no minor has delta 1");

  QuIdentityReport rep;
  std::vector<std::string> labels;
  for (int j = 1; j <= n; ++j) labels.push_back(std::to_string(j));
  rep.matroid = matroid_from_bases(labels, bases);

  rep.h = generating_polynomial(basis_indicator_set(rep.matroid));
  rep.lhs = rep.h * rep.h;

  // det(phi(A) X phi(A)*) via complex Cauchy-Binet, X = diag(x_ceil(s/2))
  ComplexMatrix ph = phi(a);
  rep.rhs = SparsePoly(rep.lhs.vars());
  std::vector<int> idx;
  for (uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
    if (std::popcount(mask) != 2 * d) continue;
    idx.clear();
    for (int s = 0; s < 2 * n; ++s)
      if (mask >> s & 1) idx.push_back(s);
    ComplexRat dd = det(ph.columns(idx));
    Rat coeff = dd.re * dd.re + dd.im * dd.im;
    if (coeff == 0) continue;
    std::vector<int> exps(n, 0);
    for (int s : idx) exps[s / 2] += 1;
    rep.rhs.add_term(exps, coeff);
  }
  rep.holds = rep.lhs == rep.rhs;
  if (!rep.holds)
    throw IdentityMismatch("h^2 differs from the determinant expansion by " +
                           (rep.lhs - rep.rhs).to_string());
  return rep;
}

nlohmann::json quat_matrix_to_json(const QuatMatrix& a) {
  nlohmann::json j;
  j["rows"] = a.rows;
  j["cols"] = a.cols;
  auto& rows = j["entries"] = nlohmann::json::array();
  for (int i = 0; i < a.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < a.cols; ++k) {
      const Quaternion& q = a.at(i, k);
      row.push_back(nlohmann::json::array(
          {rat_str(q.a), rat_str(q.b), rat_str(q.c), rat_str(q.d)}));
    }
    rows.push_back(std::move(row));
  }
  return j;
}

QuatMatrix quat_matrix_from_json(const nlohmann::json& j) {
  QuatMatrix a(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& rows = j.at("entries");
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto& q = rows.at(i).at(k);
      a.at(i, k) = Quaternion(parse_rat(q.at(0).get<std::string>()),
                              parse_rat(q.at(1).get<std::string>()),
                              parse_rat(q.at(2).get<std::string>()),
                              parse_rat(q.at(3).get<std::string>()));
    }
  return a;
}

}  // namespace matstab
