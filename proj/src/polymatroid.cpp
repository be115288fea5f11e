#include "matstab/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace matstab {

int Polymatroid::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (ground[i] == label) return i;
  throw std::invalid_argument("unknown ground element: " + label);
}

uint32_t Polymatroid::mask_of(const std::vector<std::string>& labels) const {
  uint32_t m = 0;
  for (const auto& l : labels) m |= 1u << index_of(l);
  return m;
}

std::optional<MConvexViolation> mconvex_violation(
    const std::vector<std::vector<int>>& points) {
  std::set<std::vector<int>> lookup(points.begin(), points.end());
  for (const auto& alpha : points)
    for (const auto& beta : points) {
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool ok = false;
        std::vector<int> moved = alpha;
        moved[i] -= 1;
        for (size_t j = 0; j < alpha.size() && !ok; ++j) {
          if (alpha[j] >= beta[j]) continue;
          moved[j] += 1;
          ok = lookup.count(moved) > 0;
          moved[j] -= 1;
        }
        if (!ok) return MConvexViolation{int(i), alpha, beta};
      }
    }
  return std::nullopt;
}

MConvexSet mconvex_from_points(std::vector<std::string> ground,
                               std::vector<std::vector<int>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw NotMConvex("empty point set");
  long sum0 = -1;
  for (const auto& p : points) {
    if (p.size() != ground.size())
      throw std::invalid_argument("point length does not match ground size");
    long s = 0;
    for (int x : p) {
      if (x < 0) throw NotMConvex("negative coordinate");
      s += x;
    }
    if (sum0 < 0) sum0 = s;
    if (s != sum0) throw NotMConvex("points do not share a total degree");
  }
  if (auto w = mconvex_violation(points)) {
    std::ostringstream os;
    os << "exchange fails at coordinate " << ground[w->i];
    throw NotMConvex(os.str());
  }
  return MConvexSet{std::move(ground), std::move(points)};
}

namespace {

void check_polymatroid_axioms(const std::vector<std::string>& ground,
                              const std::vector<int>& r) {
  const int n = int(ground.size());
  if (int(r.size()) != (1 << n))
    throw std::invalid_argument("rank table has wrong size");
  if (r[0] != 0) throw NotPolymatroid("r(empty) != 0");
  for (uint32_t s = 0; s < r.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) continue;
      if (r[s | (1u << i)] < r[s]) throw NotPolymatroid("rank not monotone");
      for (int j = i + 1; j < n; ++j) {
        if (s >> j & 1) continue;
        if (r[s | (1u << i)] + r[s | (1u << j)] <
            r[s | (1u << i) | (1u << j)] + r[s])
          throw NotPolymatroid("rank not submodular");
      }
    }
  }
  if (std::any_of(r.begin(), r.end(), [](int v) { return v < 0; }))
    throw NotPolymatroid("negative rank value");
}

}  // namespace

Polymatroid polymatroid_from_table(std::vector<std::string> ground,
                                   std::vector<int> table) {
  check_polymatroid_axioms(ground, table);
  return Polymatroid{std::move(ground), std::move(table)};
}

Polymatroid rank_from_mconvex(const MConvexSet& j) {
  if (auto w = mconvex_violation(j.points)) throw NotMConvex("input not M-convex");
  const int n = j.n();
  std::vector<int> r(size_t(1) << n, 0);
  for (uint32_t s = 1; s < r.size(); ++s) {
    int best = 0;
    for (const auto& p : j.points) {
      int acc = 0;
      for (int i = 0; i < n; ++i)
        if (s >> i & 1) acc += p[i];
      best = std::max(best, acc);
    }
    r[s] = best;
  }
  return polymatroid_from_table(j.ground, std::move(r));
}

namespace {

void enumerate_points(const Polymatroid& r, int coord, int budget,
                      std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  const int n = r.n();
  if (coord == n) {
    if (budget != 0) return;
    // full subset-bound check
    for (uint32_t s = 1; s < (1u << n); ++s) {
      int acc = 0;
      for (int i = 0; i < n; ++i)
        if (s >> i & 1) acc += current[i];
      if (acc > r(s)) return;
    }
    out.push_back(current);
    return;
  }
  int cap = std::min(budget, r(1u << coord));
  for (int x = 0; x <= cap; ++x) {
    current[coord] = x;
    enumerate_points(r, coord + 1, budget - x, current, out);
  }
  current[coord] = 0;
}

}  // namespace

MConvexSet mconvex_from_rank(const Polymatroid& r) {
  check_polymatroid_axioms(r.ground, r.r);
  const uint32_t full = (1u << r.n()) - 1;
  std::vector<std::vector<int>> points;
  std::vector<int> current(r.n(), 0);
  enumerate_points(r, 0, r(full), current, points);
  return mconvex_from_points(r.ground, std::move(points));
}

Polymatroid polymatroid_from_matroid(const Matroid& m) {
  std::vector<int> r(size_t(1) << m.n());
  for (uint32_t s = 0; s < r.size(); ++s) r[s] = rank(m, s);
  return Polymatroid{m.ground, std::move(r)};
}

MConvexSet basis_indicator_set(const Matroid& m) {
  std::vector<std::vector<int>> pts;
  for (uint32_t b : m.bases) {
    std::vector<int> p(m.n(), 0);
    for (int i = 0; i < m.n(); ++i) p[i] = (b >> i) & 1;
    pts.push_back(std::move(p));
  }
  return mconvex_from_points(m.ground, std::move(pts));
}

std::vector<uint32_t> flats(const Polymatroid& r) {
  const int n = r.n();
  std::vector<uint32_t> out;
  for (uint32_t f = 0; f < (1u << n); ++f) {
    bool flat = true;
    for (int y = 0; y < n && flat; ++y)
      if (!(f >> y & 1) && r(f | (1u << y)) <= r(f)) flat = false;
    if (flat) out.push_back(f);
  }
  return out;
}

bool is_modular_pair(const Polymatroid& r, uint32_t f1, uint32_t f2) {
  auto fl = flats(r);
  auto is_flat = [&fl](uint32_t f) {
    return std::binary_search(fl.begin(), fl.end(), f);
  };
  if (!is_flat(f1) || !is_flat(f2)) throw NotAFlat("argument is not a flat");
  return r(f1) + r(f2) == r(f1 | f2) + r(f1 & f2);
}

bool sticky_sufficient(const Polymatroid& r) {
  auto fl = flats(r);
  for (size_t a = 0; a < fl.size(); ++a)
    for (size_t b = a; b < fl.size(); ++b)
      if (r(fl[a]) + r(fl[b]) != r(fl[a] | fl[b]) + r(fl[a] & fl[b])) return false;
  return true;
}

Polymatroid restrict_to(const Polymatroid& r, uint32_t subset) {
  std::vector<int> positions;
  for (int i = 0; i < r.n(); ++i)
    if (subset >> i & 1) positions.push_back(i);
  std::vector<std::string> ground;
  for (int p : positions) ground.push_back(r.ground[p]);
  std::vector<int> table(size_t(1) << positions.size());
  for (uint32_t s = 0; s < table.size(); ++s) {
    uint32_t big = 0;
    for (size_t k = 0; k < positions.size(); ++k)
      if (s >> k & 1) big |= 1u << positions[k];
    table[s] = r(big);
  }
  return Polymatroid{std::move(ground), std::move(table)};
}

MConvexSet specialize_support(const Matroid& m,
                              const std::map<std::string, std::string>& identify) {
  std::vector<std::string> new_ground;
  std::vector<int> cls(m.n());
  for (int i = 0; i < m.n(); ++i) {
    auto it = identify.find(m.ground[i]);
    if (it == identify.end())
      throw std::invalid_argument("identification map misses element " +
                                  m.ground[i]);
    const std::string& target = it->second;
    auto pos = std::find(new_ground.begin(), new_ground.end(), target);
    if (pos == new_ground.end()) {
      cls[i] = int(new_ground.size());
      new_ground.push_back(target);
    } else {
      cls[i] = int(pos - new_ground.begin());
    }
  }
  std::vector<std::vector<int>> pts;
  for (uint32_t b : m.bases) {
    std::vector<int> p(new_ground.size(), 0);
    for (int i = 0; i < m.n(); ++i)
      if (b >> i & 1) p[cls[i]] += 1;
    pts.push_back(std::move(p));
  }
  return mconvex_from_points(std::move(new_ground), std::move(pts));
}

Polymatroid scale(const Polymatroid& r, int m) {
  if (m <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<int> table = r.r;
  for (int& v : table) v *= m;
  return Polymatroid{r.ground, std::move(table)};
}

bool equal_as_functions(const Polymatroid& a, const Polymatroid& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> where(a.n());
  for (int i = 0; i < a.n(); ++i) {
    auto it = std::find(b.ground.begin(), b.ground.end(), a.ground[i]);
    if (it == b.ground.end()) return false;
    where[i] = int(it - b.ground.begin());
  }
  for (uint32_t s = 0; s < a.r.size(); ++s) {
    uint32_t t = 0;
    for (int i = 0; i < a.n(); ++i)
      if (s >> i & 1) t |= 1u << where[i];
    if (a.r[s] != b.r[t]) return false;
  }
  return true;
}

namespace {

struct AmalgamContext {
  std::vector<std::string> ground;          // E3
  std::vector<int> table;                   // values; -1 unknown
  std::vector<uint32_t> unknown;            // masks, ascending
  uint32_t e1_mask, e2_mask, e0_mask;
  const Polymatroid *r1, *r2;
  std::vector<int> map1, map2;              // E3 index -> E1/E2 index or -1
};

uint32_t project(uint32_t s, const std::vector<int>& map) {
  uint32_t out = 0;
  for (size_t i = 0; i < map.size(); ++i)
    if ((s >> i & 1) && map[i] >= 0) out |= 1u << map[i];
  return out;
}

bool table_is_polymatroid(const std::vector<int>& r, int n) {
  if (r[0] != 0) return false;
  for (uint32_t s = 0; s < r.size(); ++s)
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) continue;
      if (r[s | (1u << i)] < r[s]) return false;
      for (int j = i + 1; j < n; ++j) {
        if (s >> j & 1) continue;
        if (r[s | (1u << i)] + r[s | (1u << j)] <
            r[s | (1u << i) | (1u << j)] + r[s])
          return false;
      }
    }
  return true;
}

bool consistent_so_far(const AmalgamContext& ctx, uint32_t s) {
  const auto& r = ctx.table;
  // against every known value: monotone on chains, submodular when closed
  for (uint32_t t = 0; t < r.size(); ++t) {
    if (r[t] < 0 || t == s) continue;
    if ((t & s) == t && r[t] > r[s]) return false;
    if ((t & s) == s && r[s] > r[t]) return false;
    uint32_t u = t | s, v = t & s;
    if (r[u] >= 0 && r[v] >= 0 && r[s] + r[t] < r[u] + r[v]) return false;
  }
  return true;
}

bool search(AmalgamContext& ctx, size_t k, AmalgamSearchStats* stats) {
  if (k == ctx.unknown.size()) {
    if (stats) ++stats->leaves;
    return table_is_polymatroid(ctx.table, int(ctx.ground.size()));
  }
  uint32_t s = ctx.unknown[k];
  int v1 = (*ctx.r1)(project(s, ctx.map1));
  int v2 = (*ctx.r2)(project(s, ctx.map2));
  int v0 = (*ctx.r1)(project(s & ctx.e0_mask, ctx.map1));
  int lo = std::max(v1, v2), hi = v1 + v2 - v0;
  for (int v = lo; v <= hi; ++v) {
    ctx.table[s] = v;
    if (stats) ++stats->nodes;
    if (consistent_so_far(ctx, s) && search(ctx, k + 1, stats)) return true;
  }
  ctx.table[s] = -1;
  return false;
}

}  // namespace

std::optional<Polymatroid> find_amalgam(const Polymatroid& r1, const Polymatroid& r2,
                                        AmalgamSearchStats* stats) {
  AmalgamContext ctx;
  ctx.r1 = &r1;
  ctx.r2 = &r2;
  ctx.ground = r1.ground;
  for (const auto& l : r2.ground)
    if (std::find(ctx.ground.begin(), ctx.ground.end(), l) == ctx.ground.end())
      ctx.ground.push_back(l);
  if (ctx.ground.size() > 16) throw std::invalid_argument("union ground too large");

  const int n = int(ctx.ground.size());
  ctx.map1.assign(n, -1);
  ctx.map2.assign(n, -1);
  ctx.e1_mask = ctx.e2_mask = 0;
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < r1.n(); ++a)
      if (r1.ground[a] == ctx.ground[i]) { ctx.map1[i] = a; ctx.e1_mask |= 1u << i; }
    for (int b = 0; b < r2.n(); ++b)
      if (r2.ground[b] == ctx.ground[i]) { ctx.map2[i] = b; ctx.e2_mask |= 1u << i; }
  }
  ctx.e0_mask = ctx.e1_mask & ctx.e2_mask;

  // precondition: restrictions agree on E0
  for (uint32_t s = 0; s < (1u << n); ++s) {
    if ((s & ~ctx.e0_mask) != 0) continue;
    if (r1(project(s, ctx.map1)) != r2(project(s, ctx.map2)))
      throw RestrictionMismatch("r1 and r2 disagree on the common ground");
  }

  ctx.table.assign(size_t(1) << n, -1);
  for (uint32_t s = 0; s < (1u << n); ++s) {
    if ((s & ~ctx.e1_mask) == 0) ctx.table[s] = r1(project(s, ctx.map1));
    else if ((s & ~ctx.e2_mask) == 0) ctx.table[s] = r2(project(s, ctx.map2));
    else ctx.unknown.push_back(s);
  }

  if (!search(ctx, 0, stats)) return std::nullopt;
  return polymatroid_from_table(ctx.ground, ctx.table);
}

namespace {

std::string subset_key(const Polymatroid& r, uint32_t s) {
  std::string key;
  for (int i = 0; i < r.n(); ++i)
    if (s >> i & 1) {
      if (!key.empty()) key += ",";
      key += r.ground[i];
    }
  return key;
}

}  // namespace

nlohmann::json polymatroid_to_json(const Polymatroid& r) {
  nlohmann::json j;
  j["ground"] = r.ground;
  nlohmann::json table = nlohmann::json::object();
  for (uint32_t s = 0; s < r.r.size(); ++s) table[subset_key(r, s)] = r(s);
  j["r"] = std::move(table);
  return j;
}

Polymatroid polymatroid_from_json(const nlohmann::json& j) {
  Polymatroid tmp;
  tmp.ground = j.at("ground").get<std::vector<std::string>>();
  std::vector<int> table(size_t(1) << tmp.ground.size(), -1);
  for (const auto& [key, value] : j.at("r").items()) {
    uint32_t mask = 0;
    if (!key.empty()) {
      std::istringstream is(key);
      std::string label;
      while (std::getline(is, label, ',')) mask |= 1u << tmp.index_of(label);
    }
    table[mask] = value.get<int>();
  }
  if (std::any_of(table.begin(), table.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("rank table incomplete");
  return polymatroid_from_table(tmp.ground, std::move(table));
}

nlohmann::json mconvex_to_json(const MConvexSet& j) {
  nlohmann::json out;
  out["ground"] = j.ground;
  out["points"] = j.points;
  return out;
}

MConvexSet mconvex_from_json(const nlohmann::json& j) {
  return mconvex_from_points(j.at("ground").get<std::vector<std::string>>(),
                             j.at("points").get<std::vector<std::vector<int>>>());
}

}  // namespace matstab
