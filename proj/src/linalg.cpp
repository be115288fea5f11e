#include "matstab/linalg.hpp"

#include <stdexcept>

namespace matstab {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols())
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> RatMatrix::row(int i) const {
  std::vector<Rat> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

RatMatrix RatMatrix::columns(const std::vector<int>& idx) const {
  RatMatrix m(rows_, int(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m.at(i, int(j)) = at(i, idx[j]);
  return m;
}

Rat det_bareiss(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return Rat(1);

  // clear denominators per row
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rat scale(1);
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(m.at(i, j)));
    for (int j = 0; j < n; ++j) a[i][j] = num(m.at(i, j)) * (l / den(m.at(i, j)));
    scale *= Rat(1, l);
  }

  Int prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return Rat(0);
      std::swap(a[k], a[p]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] /= prev;  // exact division, Bareiss invariant
      }
    prev = a[k][k];
  }
  return Rat(sgn * a[n - 1][n - 1]) * scale;
}

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return int(rref(copy).size());
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(int(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows));
}

bool in_span(const std::vector<std::vector<Rat>>& gens, const std::vector<Rat>& vec) {
  int base = rank_of_rows(gens);
  auto extended = gens;
  extended.push_back(vec);
  return rank_of_rows(extended) == base;
}

std::vector<std::vector<Rat>> complement_basis(
    const std::vector<std::vector<Rat>>& inside,
    const std::vector<std::vector<Rat>>& ambient) {
  std::vector<std::vector<Rat>> current = inside;
  std::vector<std::vector<Rat>> added;
  int r = rank_of_rows(current);
  for (const auto& v : ambient) {
    current.push_back(v);
    int r2 = rank_of_rows(current);
    if (r2 > r) {
      added.push_back(v);
      r = r2;
    } else {
      current.pop_back();
    }
  }
  return added;
}

}  // namespace matstab
