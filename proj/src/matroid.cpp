#include "matstab/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace matstab {

namespace {

std::string mask_str(const Matroid& m, uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < m.n(); ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += m.ground[i];
      first = false;
    }
  return s + "}";
}

}  // namespace

int Matroid::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (ground[i] == label) return i;
  throw std::invalid_argument("unknown ground element: " + label);
}

uint32_t Matroid::mask_of(const std::vector<std::string>& labels) const {
  uint32_t m = 0;
  for (const auto& l : labels) m |= 1u << index_of(l);
  return m;
}

std::vector<std::string> Matroid::labels_of(uint32_t mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < n(); ++i)
    if (mask >> i & 1) out.push_back(ground[i]);
  return out;
}

bool Matroid::has_basis(uint32_t mask) const {
  return std::binary_search(bases.begin(), bases.end(), mask);
}

Matroid matroid_from_bases(std::vector<std::string> ground,
                           std::vector<uint32_t> bases) {
  if (ground.size() > 16) throw std::invalid_argument("ground set larger than 16");
  if (bases.empty()) throw std::invalid_argument("empty basis list");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  Matroid m;
  m.ground = std::move(ground);
  m.rank_d = std::popcount(bases.front());
  m.bases = std::move(bases);
  for (uint32_t b : m.bases)
    if (std::popcount(b) != m.rank_d)
      throw std::invalid_argument("bases are not equicardinal");

  for (uint32_t b1 : m.bases)
    for (uint32_t b2 : m.bases) {
      uint32_t only1 = b1 & ~b2;
      for (int e = 0; e < m.n(); ++e) {
        if (!(only1 >> e & 1)) continue;
        uint32_t without = b1 & ~(1u << e);
        bool found = false;
        uint32_t only2 = b2 & ~b1;
        for (int f = 0; f < m.n() && !found; ++f)
          if (only2 >> f & 1) found = m.has_basis(without | (1u << f));
        if (!found)
          throw ExchangeAxiomViolation(
              b1, b2, e,
              "exchange axiom fails for " + mask_str(m, b1) + ", " +
                  mask_str(m, b2) + " at element " + m.ground[e]);
      }
    }
  return m;
}

Matroid matroid_from_matrix(const RatMatrix& a, std::vector<std::string> labels) {
  const int d = a.rows(), n = a.cols();
  if (n > 16) throw std::invalid_argument("more than 16 columns");
  if (labels.empty())
    for (int j = 0; j < n; ++j) labels.push_back(std::to_string(j));
  if (int(labels.size()) != n)
    throw std::invalid_argument("label count does not match column count");

  std::vector<uint32_t> bases;
  std::vector<int> cols(d);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    int k = 0;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) cols[k++] = j;
    if (det_bareiss(a.columns(cols)) != 0) bases.push_back(mask);
  }
  if (bases.empty())
    throw RankDeficient("matrix has no invertible " + std::to_string(d) +
                        "-column minor");
  Matroid m;
  m.ground = std::move(labels);
  m.rank_d = d;
  m.bases = std::move(bases);
  return m;
}

int rank(const Matroid& m, uint32_t subset) {
  int best = 0;
  for (uint32_t b : m.bases) best = std::max(best, std::popcount(b & subset));
  return best;
}

namespace {

bool is_circuit_hyperplane(const Matroid& m, uint32_t x) {
  const int d = m.rank_d;
  if (std::popcount(x) != d || m.has_basis(x)) return false;
  if (rank(m, x) != d - 1) return false;
  for (int e = 0; e < m.n(); ++e)
    if (x >> e & 1) {
      if (rank(m, x & ~(1u << e)) != d - 1) return false;  // circuit part
    } else {
      if (rank(m, x | (1u << e)) != d) return false;  // closure part
    }
  return true;
}

}  // namespace

std::vector<uint32_t> circuit_hyperplanes(const Matroid& m) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < (1u << m.n()); ++x)
    if (std::popcount(x) == m.rank_d && is_circuit_hyperplane(m, x))
      out.push_back(x);
  return out;
}

Matroid relax(const Matroid& m, uint32_t x) {
  if (!is_circuit_hyperplane(m, x))
    throw NotCircuitHyperplane(mask_str(m, x) + " is not a circuit-hyperplane");
  std::vector<uint32_t> bases = m.bases;
  bases.push_back(x);
  return matroid_from_bases(m.ground, std::move(bases));
}

RatMatrix p8_matrix() {
  const int data[4][8] = {{1, 0, 0, 0, 0, 1, 1, 2},
                          {0, 1, 0, 0, 1, 0, 1, 1},
                          {0, 0, 1, 0, 1, 1, 0, 1},
                          {0, 0, 0, 1, 2, 1, 1, 0}};
  RatMatrix a(4, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) a.at(i, j) = data[i][j];
  return a;
}

RatMatrix nonfano_matrix() {
  const int data[3][7] = {{1, 1, 0, 0, 0, 1, 1},
                          {0, 1, 1, 1, 0, 0, 1},
                          {0, 0, 0, 1, 1, 1, 1}};
  RatMatrix a(3, 7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 7; ++j) a.at(i, j) = data[i][j];
  return a;
}

namespace {

// vertices 0..nv-1; returns signed incidence matrix with the last vertex row
// dropped (graph must be connected so the rank equals nv-1)
RatMatrix incidence_matrix(int nv, const std::vector<std::pair<int, int>>& edges) {
  RatMatrix a(nv - 1, int(edges.size()));
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < nv - 1) a.at(u, int(e)) = 1;
    if (v < nv - 1) a.at(v, int(e)) = a.at(v, int(e)) - 1;
  }
  return a;
}

// Fig-2 left graph; vertices: 0 top, 1 center, 2 left, 3 right, 4 bottom
const std::vector<std::pair<int, int>> kG1Edges = {
    {2, 4}, {1, 3}, {0, 3}, {4, 3}, {1, 0}, {0, 2}, {1, 2}, {1, 0}};

// Fig-2 right graph; outer 4-cycle plus doubled spokes from left and right
// vertices to the center. vertices: 0 top, 1 left, 2 bottom, 3 right, 4 center
const std::vector<std::pair<int, int>> kG2Edges = {
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {1, 4}, {3, 4}, {3, 4}};

Matroid make_fano() {
  std::vector<std::string> ground;
  for (int i = 1; i <= 7; ++i) ground.push_back(std::to_string(i));
  const int lines[7][3] = {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {1, 4, 7},
                           {2, 5, 7}, {3, 6, 7}, {2, 4, 6}};
  std::set<uint32_t> non_bases;
  for (auto& l : lines)
    non_bases.insert((1u << (l[0] - 1)) | (1u << (l[1] - 1)) | (1u << (l[2] - 1)));
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < (1u << 7); ++s)
    if (std::popcount(s) == 3 && !non_bases.count(s)) bases.push_back(s);
  return matroid_from_bases(ground, bases);
}

Matroid make_from_lines(std::vector<std::string> ground,
                        const std::vector<std::vector<std::string>>& lines) {
  Matroid tmp;
  tmp.ground = ground;
  std::set<uint32_t> non_bases;
  for (const auto& l : lines) non_bases.insert(tmp.mask_of(l));
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < (1u << ground.size()); ++s)
    if (std::popcount(s) == 3 && !non_bases.count(s)) bases.push_back(s);
  return matroid_from_bases(std::move(ground), bases);
}

Matroid make_uniform(int k, int n) {
  if (k < 0 || n < 1 || k > n || n > 16)
    throw UnknownName("uniform matroid parameters out of range");
  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == k) bases.push_back(s);
  return matroid_from_bases(ground, bases);
}

}  // namespace

RatMatrix graphic_g1_matrix() { return incidence_matrix(5, kG1Edges); }

Matroid catalog(const std::string& name) {
  if (name == "fano") return make_fano();
  if (name == "nonfano") {
    Matroid f = make_fano();
    return relax(f, f.mask_of({"2", "4", "6"}));
  }
  if (name == "f7m4")
    return make_from_lines({"0", "1", "2", "3", "0'", "1'", "2'"},
                           {{"3", "0", "0'"}, {"3", "1", "1'"}, {"3", "2", "2'"}});
  if (name == "f7m5")
    return make_from_lines({"0", "1", "2", "4", "0'", "1'", "2'"},
                           {{"4", "0", "0'"}, {"4", "2", "2'"}});
  if (name == "p8") return matroid_from_matrix(p8_matrix());
  if (name == "p1") {
    Matroid p8 = matroid_from_matrix(p8_matrix());
    return relax(p8, p8.mask_of({"3", "5", "6", "7"}));
  }
  if (name == "graphic_g1") return matroid_from_matrix(incidence_matrix(5, kG1Edges));
  if (name == "graphic_g2") return matroid_from_matrix(incidence_matrix(5, kG2Edges));
  if (name.size() >= 6 && name.substr(0, 2) == "u(" && name.back() == ')') {
    auto comma = name.find(',');
    if (comma != std::string::npos) {
      try {
        int k = std::stoi(name.substr(2, comma - 2));
        int n = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
        return make_uniform(k, n);
      } catch (const std::logic_error&) {
        throw UnknownName("cannot parse uniform matroid name: " + name);
      }
    }
  }
  throw UnknownName("unknown catalog matroid: " + name);
}

std::vector<std::vector<int>> connected_components(const Matroid& m) {
  const int n = m.n();
  const uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  std::vector<uint32_t> separators;
  for (uint32_t s = 1; s < full; ++s)
    if (rank(m, s) + rank(m, full & ~s) == m.rank_d) separators.push_back(s);

  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = int(out.size());
    std::vector<int> block = {i};
    for (int j = i + 1; j < n; ++j) {
      if (comp[j] >= 0) continue;
      bool together = true;
      for (uint32_t s : separators)
        if (((s >> i) & 1) != ((s >> j) & 1)) { together = false; break; }
      if (together) {
        comp[j] = comp[i];
        block.push_back(j);
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json j;
  j["ground"] = m.ground;
  j["rank"] = m.rank_d;
  auto& arr = j["bases"] = nlohmann::json::array();
  for (uint32_t b : m.bases) arr.push_back(m.labels_of(b));
  return j;
}

Matroid matroid_from_json(const nlohmann::json& j) {
  Matroid tmp;
  tmp.ground = j.at("ground").get<std::vector<std::string>>();
  std::vector<uint32_t> bases;
  for (const auto& lb : j.at("bases"))
    bases.push_back(tmp.mask_of(lb.get<std::vector<std::string>>()));
  Matroid m = matroid_from_bases(tmp.ground, bases);
  if (j.contains("rank") && j.at("rank").get<int>() != m.rank_d)
    throw std::invalid_argument("declared rank does not match basis size");
  return m;
}

nlohmann::json matrix_to_json(const RatMatrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto& rows = j["entries"] = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(rat_str(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return j;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  RatMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& rows = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k)
      m.at(i, k) = parse_rat(rows.at(i).at(k).get<std::string>());
  return m;
}

}  // namespace matstab
