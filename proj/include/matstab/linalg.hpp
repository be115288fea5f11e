#ifndef MATSTAB_LINALG_HPP
#define MATSTAB_LINALG_HPP

#include <vector>

#include "matstab/rational.hpp"

namespace matstab {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  std::vector<Rat> row(int i) const;
  RatMatrix columns(const std::vector<int>& idx) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/*
 * Determinant by fraction-free Bareiss elimination. Denominators are cleared
 * row by row first so the elimination runs over integers; exact for all
 * rational inputs and detects singularity with no rounding concerns.
 */
Rat det_bareiss(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMatrix& m);

/// Canonical basis of the right nullspace {x : m x = 0} (from RREF free columns).
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Is vec in the linear span of the given vectors?
bool in_span(const std::vector<std::vector<Rat>>& gens, const std::vector<Rat>& vec);

int rank_of_rows(const std::vector<std::vector<Rat>>& rows);

/// Extends `inside` (independent vectors) to a basis of span(ambient) by
/// greedily adding ambient vectors; returns only the added vectors.
std::vector<std::vector<Rat>> complement_basis(
    const std::vector<std::vector<Rat>>& inside,
    const std::vector<std::vector<Rat>>& ambient);

}  // namespace matstab

#endif
