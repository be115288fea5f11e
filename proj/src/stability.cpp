#include "matstab/stability.hpp"

#include <algorithm>

#include "matstab/rng.hpp"

namespace matstab {

std::string var_of(const std::string& label) { return "x" + label; }

SparsePoly generating_polynomial(const MConvexSet& j) {
  std::vector<std::string> vars;
  for (const auto& l : j.ground) vars.push_back(var_of(l));
  SparsePoly h(vars);
  for (const auto& alpha : j.points) {
    Int fact = 1;
    for (int a : alpha) fact *= factorial(a);
    h.add_term(alpha, Rat(1, fact));
  }
  return h;
}

SparsePoly rayleigh_difference(const SparsePoly& p, const std::string& var_i,
                               const std::string& var_j) {
  if (var_i == var_j) throw std::invalid_argument("rayleigh: i == j");
  if (p.var_index(var_i) < 0 || p.var_index(var_j) < 0)
    throw std::invalid_argument("rayleigh: unknown variable");
  SparsePoly di = p.derivative(var_i);
  SparsePoly dj = p.derivative(var_j);
  SparsePoly dij = di.derivative(var_j);
  return di * dj - p * dij;
}

SparsePoly homogenize(const SparsePoly& q, const std::string& x0, int dprime) {
  if (q.var_index(x0) >= 0)
    throw std::invalid_argument("homogenize: " + x0 + " already occurs");
  if (q.is_zero()) return SparsePoly(merged_vars({x0}, q.vars()));
  if (dprime < q.total_degree())
    throw DegreeTooSmall("homogenization degree below polynomial degree");
  std::vector<std::string> vars = merged_vars({x0}, q.vars());
  SparsePoly out(vars);
  for (const auto& [e, c] : q.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    std::vector<int> ne;
    ne.reserve(vars.size());
    ne.push_back(dprime - deg);
    ne.insert(ne.end(), e.begin(), e.end());
    out.add_term(ne, c);
  }
  return out;
}

SparsePoly dehomogenize(const SparsePoly& h, const std::string& x0) {
  if (!h.is_homogeneous())
    throw std::invalid_argument("dehomogenize: input is not homogeneous");
  return h.substitute({{x0, SparsePoly::constant(1)}});
}

SparsePoly truncate_divide(const SparsePoly& p, const std::string& x0, int k) {
  if (k < 0) throw std::invalid_argument("truncate_divide: negative power");
  if (k == 0) return p;
  int idx = p.var_index(x0);
  SparsePoly out(p.vars());
  if (idx < 0) return out;  // no term is divisible by x0^k
  for (const auto& [e, c] : p.terms()) {
    if (e[idx] < k) continue;
    std::vector<int> ne = e;
    ne[idx] -= k;
    out.add_term(ne, c);
  }
  return out;
}

UnivariatePoly line_restriction(const SparsePoly& p, const std::vector<Rat>& e,
                                const std::vector<Rat>& v) {
  const auto& vars = p.vars();
  if (e.size() != vars.size() || v.size() != vars.size())
    throw std::invalid_argument("line_restriction: vector length mismatch");
  const int d = std::max(p.total_degree(), 0);
  std::vector<Rat> acc(size_t(d) + 1, Rat(0));
  std::vector<Rat> term, next;
  for (const auto& [exps, c] : p.terms()) {
    term.assign(1, c);
    for (size_t i = 0; i < vars.size(); ++i)
      for (int rep = 0; rep < exps[i]; ++rep) {
        // multiply by (e_i * t + v_i)
        next.assign(term.size() + 1, Rat(0));
        for (size_t k = 0; k < term.size(); ++k) {
          next[k] += term[k] * v[i];
          next[k + 1] += term[k] * e[i];
        }
        term.swap(next);
      }
    for (size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
  }
  return UnivariatePoly(std::move(acc));
}

bool line_test(const SparsePoly& p, const std::vector<Rat>& e,
               const std::vector<Rat>& v) {
  UnivariatePoly u = line_restriction(p, e, v);
  if (u.is_zero() || u.degree() == 0) return true;  // no zeros to speak of
  return sturm_real_rooted(u);
}

bool cone_contains(const SparsePoly& p, const std::vector<Rat>& e,
                   const std::vector<Rat>& w) {
  UnivariatePoly u = line_restriction(p, e, w);
  if (u.is_zero()) throw NotRealRooted("restriction vanishes identically");
  if (u.degree() == 0) return true;
  if (!sturm_real_rooted(u)) throw NotRealRooted("restriction is not real-rooted");
  return count_roots_in(u, Rat(0), std::nullopt) == 0;
}

namespace {

std::optional<FalsifyWitness> rayleigh_probe(
    const SparsePoly& p, const std::vector<Rat>& point,
    std::map<std::pair<std::string, std::string>, SparsePoly>& cache) {
  const auto& vars = p.vars();
  if (point.size() != vars.size()) return std::nullopt;
  std::map<std::string, Rat> assign;
  for (size_t i = 0; i < vars.size(); ++i) assign[vars[i]] = point[i];
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j) {
      auto key = std::make_pair(vars[i], vars[j]);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, rayleigh_difference(p, vars[i], vars[j])).first;
      Rat value = it->second.eval(assign);
      if (value < 0) {
        FalsifyWitness w;
        w.kind = FalsifyWitness::Kind::RayleighNegative;
        w.var_i = vars[i];
        w.var_j = vars[j];
        w.point = point;
        w.value = value;
        return w;
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<FalsifyWitness> stability_falsify(const SparsePoly& p,
                                                const SampleSet& samples,
                                                int budget, uint64_t seed) {
  if (!p.is_homogeneous())
    throw std::invalid_argument("stability_falsify expects a homogeneous input");
  const size_t nv = p.vars().size();
  std::map<std::pair<std::string, std::string>, SparsePoly> cache;

  for (const auto& e : samples.line_dirs)
    for (const auto& v : samples.line_offsets)
      if (!line_test(p, e, v)) {
        FalsifyWitness w;
        w.kind = FalsifyWitness::Kind::LineNotRealRooted;
        w.e = e;
        w.v = v;
        return w;
      }
  for (const auto& point : samples.rayleigh_points)
    if (auto w = rayleigh_probe(p, point, cache)) return w;

  SplitMix64 rng{seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL};
  std::vector<Rat> ones(nv, Rat(1));
  for (int round = 0; round < budget; ++round) {
    std::vector<Rat> e(nv), v(nv), point(nv);
    for (size_t i = 0; i < nv; ++i) e[i] = rng.positive_rat(4);
    for (size_t i = 0; i < nv; ++i) v[i] = rng.small_rat(6);
    for (size_t i = 0; i < nv; ++i) point[i] = rng.small_rat(8);
    const std::vector<Rat>& dir = (round % 2 == 0) ? ones : e;
    if (!line_test(p, dir, v)) {
      FalsifyWitness w;
      w.kind = FalsifyWitness::Kind::LineNotRealRooted;
      w.e = dir;
      w.v = v;
      return w;
    }
    if (auto w = rayleigh_probe(p, point, cache)) return w;
  }
  return std::nullopt;
}

std::vector<std::vector<Rat>> deterministic_rational_vectors(size_t count,
                                                             size_t dim,
                                                             int max_num,
                                                             uint64_t seed) {
  SplitMix64 rng{seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL};
  std::vector<std::vector<Rat>> out(count, std::vector<Rat>(dim));
  for (auto& v : out)
    for (auto& x : v) x = rng.small_rat(max_num);
  return out;
}

nlohmann::json poly_to_json(const SparsePoly& p) {
  nlohmann::json j;
  j["vars"] = p.vars();
  auto& terms = j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["coeff"] = rat_str(c);
    t["exps"] = e;
    terms.push_back(std::move(t));
  }
  return j;
}

SparsePoly poly_from_json(const nlohmann::json& j) {
  SparsePoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exps").get<std::vector<int>>(),
               parse_rat(t.at("coeff").get<std::string>()));
  return p;
}

namespace {

nlohmann::json rat_vector_json(const std::vector<Rat>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

}  // namespace

nlohmann::json witness_to_json(const FalsifyWitness& w) {
  nlohmann::json j;
  if (w.kind == FalsifyWitness::Kind::LineNotRealRooted) {
    j["kind"] = "line-not-real-rooted";
    j["e"] = rat_vector_json(w.e);
    j["v"] = rat_vector_json(w.v);
  } else {
    j["kind"] = "rayleigh-negative";
    j["i"] = w.var_i;
    j["j"] = w.var_j;
    j["point"] = rat_vector_json(w.point);
    j["value"] = rat_str(w.value);
  }
  return j;
}

}  // namespace matstab
