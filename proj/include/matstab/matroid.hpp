#ifndef MATSTAB_MATROID_HPP
#define MATSTAB_MATROID_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matstab/linalg.hpp"

#include "json.hpp"

namespace matstab {

struct ExchangeAxiomViolation : std::runtime_error {
  ExchangeAxiomViolation(uint32_t b1, uint32_t b2, int e, const std::string& msg)
      : std::runtime_error(msg), basis1(b1), basis2(b2), element(e) {}
  uint32_t basis1, basis2;
  int element;
};

struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCircuitHyperplane : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * Matroid on at most 16 labelled elements. Subsets are bit masks over the
 * ground order; bases are kept sorted. Immutable after construction.
 */
struct Matroid {
  std::vector<std::string> ground;
  int rank_d = 0;
  std::vector<uint32_t> bases;  // sorted ascending, each of popcount rank_d

  int n() const { return int(ground.size()); }
  int index_of(const std::string& label) const;  // throws on unknown label
  uint32_t mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(uint32_t mask) const;
  bool has_basis(uint32_t mask) const;
};

/// Constructor with full basis-exchange check.
Matroid matroid_from_bases(std::vector<std::string> ground,
                           std::vector<uint32_t> bases);

/// Column matroid; bases are the column subsets with nonzero determinant,
/// decided by fraction-free elimination. Column labels default to "0","1",...
Matroid matroid_from_matrix(const RatMatrix& a,
                            std::vector<std::string> labels = {});

int rank(const Matroid& m, uint32_t subset);

std::vector<uint32_t> circuit_hyperplanes(const Matroid& m);

Matroid relax(const Matroid& m, uint32_t x);

/// fano, nonfano, f7m4, f7m5, p8, p1, u(k,n), graphic_g1, graphic_g2
Matroid catalog(const std::string& name);

/// The matrices behind the catalog's represented matroids.
RatMatrix p8_matrix();
RatMatrix nonfano_matrix();
RatMatrix graphic_g1_matrix();  // signed incidence matrix, full row rank

/// Finest partition of the ground set with rank additive across parts.
std::vector<std::vector<int>> connected_components(const Matroid& m);

nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace matstab

#endif
