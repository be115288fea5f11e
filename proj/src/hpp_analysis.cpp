#include "matstab/hpp_analysis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace matstab {

std::vector<QuadrangleRelation> degenerate_quadrangles(const Matroid& m) {
  const int n = m.n(), d = m.rank_d;
  std::vector<QuadrangleRelation> out;
  if (d < 2) return out;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != d - 2) continue;
    std::vector<int> rest;
    for (int e = 0; e < n; ++e)
      if (!(s >> e & 1)) rest.push_back(e);
    const int r = int(rest.size());
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        for (int c = b + 1; c < r; ++c)
          for (int e = c + 1; e < r; ++e) {
            const int t[4] = {rest[a], rest[b], rest[c], rest[e]};
            // the three splits into diagonal pairs, min element first
            const int splits[3][4] = {{t[0], t[1], t[2], t[3]},
                                      {t[0], t[2], t[1], t[3]},
                                      {t[0], t[3], t[1], t[2]}};
            for (const auto& sp : splits) {
              const int i = sp[0], j = sp[1], k = sp[2], l = sp[3];
              uint32_t b1 = s | (1u << i) | (1u << k);
              uint32_t b2 = s | (1u << j) | (1u << l);
              uint32_t b3 = s | (1u << i) | (1u << l);
              uint32_t b4 = s | (1u << j) | (1u << k);
              if (!m.has_basis(b1) || !m.has_basis(b2) || !m.has_basis(b3) ||
                  !m.has_basis(b4))
                continue;
              int diag_bases = (m.has_basis(s | (1u << i) | (1u << j)) ? 1 : 0) +
                               (m.has_basis(s | (1u << k) | (1u << l)) ? 1 : 0);
              if (diag_bases <= 1)
                out.push_back(QuadrangleRelation{b1, b2, b3, b4, s, {i, j, k, l}});
            }
          }
  }
  return out;
}

std::vector<std::vector<Rat>> quadrangle_equation_rows(const Matroid& m) {
  std::vector<std::vector<Rat>> rows;
  auto index_of = [&m](uint32_t b) {
    return size_t(std::lower_bound(m.bases.begin(), m.bases.end(), b) -
                  m.bases.begin());
  };
  for (const auto& q : degenerate_quadrangles(m)) {
    std::vector<Rat> row(m.bases.size(), Rat(0));
    row[index_of(q.b1)] += 1;
    row[index_of(q.b2)] += 1;
    row[index_of(q.b3)] -= 1;
    row[index_of(q.b4)] -= 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

BasisIndexedSpace v_space(const Matroid& m) {
  BasisIndexedSpace out;
  out.basis_masks = m.bases;
  auto rows = quadrangle_equation_rows(m);
  if (rows.empty()) {
    for (size_t i = 0; i < m.bases.size(); ++i) {
      std::vector<Rat> e(m.bases.size(), Rat(0));
      e[i] = 1;
      out.basis_vectors.push_back(std::move(e));
    }
    return out;
  }
  out.basis_vectors = nullspace(RatMatrix::from_rows(rows));
  return out;
}

namespace {

std::vector<std::vector<Rat>> incidence_generators(const Matroid& m) {
  std::vector<std::vector<Rat>> gens;
  for (int y = 0; y < m.n(); ++y) {
    std::vector<Rat> g(m.bases.size());
    for (size_t b = 0; b < m.bases.size(); ++b)
      g[b] = (m.bases[b] >> y & 1) ? 1 : 0;
    gens.push_back(std::move(g));
  }
  return gens;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

BasisIndexedSpace w_space(const Matroid& m) {
  BasisIndexedSpace out;
  out.basis_masks = m.bases;
  auto gens = incidence_generators(m);
  RatMatrix g = RatMatrix::from_rows(gens);
  rref(g);
  for (int i = 0; i < g.rows(); ++i) {
    auto row = g.row(i);
    if (std::any_of(row.begin(), row.end(), [](const Rat& x) { return x != 0; }))
      out.basis_vectors.push_back(std::move(row));
  }
  const int z = int(connected_components(m).size());
  if (out.dim() != m.n() - z + 1)
    throw std::logic_error("w_space dimension differs from |E| - z + 1");
  for (const auto& eq : quadrangle_equation_rows(m))
    for (const auto& w : out.basis_vectors)
      if (dot(eq, w) != 0)
        throw std::logic_error("w_space is not contained in v_space");
  return out;
}

std::set<long long> LogVector::primes() const {
  std::set<long long> out;
  for (const auto& e : entries)
    for (const auto& [p, exp] : e)
      if (exp != 0) out.insert(p);
  return out;
}

std::vector<Rat> LogVector::component(long long prime) const {
  std::vector<Rat> out(entries.size(), Rat(0));
  for (size_t i = 0; i < entries.size(); ++i) {
    auto it = entries[i].find(prime);
    if (it != entries[i].end()) out[i] = it->second;
  }
  return out;
}

bool LogVector::is_zero() const { return primes().empty(); }

LogVector u_vector(const RatMatrix& a) {
  Matroid m = matroid_from_matrix(a);
  return u_vector(a, m);
}

LogVector u_vector(const RatMatrix& a, const Matroid& m) {
  Matroid from_a = matroid_from_matrix(a, m.ground);
  if (from_a.bases != m.bases)
    throw NonRepresentingMatrix("matrix does not represent the given matroid");

  LogVector u;
  u.basis_masks = m.bases;
  for (uint32_t b : m.bases) {
    std::vector<int> cols;
    for (int j = 0; j < m.n(); ++j)
      if (b >> j & 1) cols.push_back(j);
    Rat dv = abs(det_bareiss(a.columns(cols)));
    std::map<long long, Rat> entry;
    for (const auto& [p, e] : factor_rat(dv)) entry[p] = Rat(e);
    u.entries.push_back(std::move(entry));
  }
  if (!in_v_space(m, u))
    throw std::logic_error("u(A) violates a quadrangle equation");
  return u;
}

bool in_v_space(const Matroid& m, const LogVector& vec) {
  if (vec.basis_masks != m.bases)
    throw std::invalid_argument("log vector is indexed by a different basis list");
  auto rows = quadrangle_equation_rows(m);
  for (long long p : vec.primes()) {
    auto comp = vec.component(p);
    for (const auto& row : rows)
      if (dot(row, comp) != 0) return false;
  }
  return true;
}

bool in_w_space(const Matroid& m, const std::vector<Rat>& vec) {
  return in_span(incidence_generators(m), vec);
}

bool in_w_space(const Matroid& m, const LogVector& vec) {
  if (vec.basis_masks != m.bases)
    throw std::invalid_argument("log vector is indexed by a different basis list");
  auto gens = incidence_generators(m);
  for (long long p : vec.primes())
    if (!in_span(gens, vec.component(p))) return false;
  return true;
}

namespace {

uint32_t relaxed_set(const Matroid& m, const Matroid& m_prime) {
  if (m.ground != m_prime.ground)
    throw NotARelaxation("ground sets differ");
  std::vector<uint32_t> extra;
  for (uint32_t b : m_prime.bases)
    if (!m.has_basis(b)) extra.push_back(b);
  if (extra.size() != 1 || m_prime.bases.size() != m.bases.size() + 1)
    throw NotARelaxation("basis sets do not differ by exactly one set");
  try {
    // relax() re-checks the circuit-hyperplane condition
    Matroid should = relax(m, extra[0]);
    if (should.bases != m_prime.bases)
      throw NotARelaxation("relaxation produces a different matroid");
  } catch (const NotCircuitHyperplane& err) {
    throw NotARelaxation(err.what());
  }
  return extra[0];
}

}  // namespace

std::vector<Rat> iota_embed(const Matroid& m, const Matroid& m_prime,
                            const std::vector<Rat>& vec) {
  uint32_t x = relaxed_set(m, m_prime);
  if (vec.size() != m.bases.size())
    throw std::invalid_argument("iota_embed: vector length mismatch");
  std::vector<Rat> out;
  out.reserve(m_prime.bases.size());
  size_t src = 0;
  for (uint32_t b : m_prime.bases) {
    if (b == x) out.push_back(Rat(0));
    else out.push_back(vec[src++]);
  }
  return out;
}

EmbedReport embed_complement_report(const Matroid& m, const Matroid& m_prime) {
  EmbedReport rep;
  rep.x = relaxed_set(m, m_prime);

  BasisIndexedSpace v = v_space(m), w = w_space(m);
  BasisIndexedSpace vp = v_space(m_prime), wp = w_space(m_prime);
  rep.dim_v = v.dim();
  rep.dim_w = w.dim();
  rep.dim_v_prime = vp.dim();
  rep.dim_w_prime = wp.dim();
  rep.u_basis = complement_basis(w.basis_vectors, v.basis_vectors);

  auto eqs_prime = quadrangle_equation_rows(m_prime);
  auto satisfies_prime = [&eqs_prime](const std::vector<Rat>& vec) {
    for (const auto& row : eqs_prime)
      if (dot(row, vec) != 0) return false;
    return true;
  };

  rep.iota_maps_v_into_v_prime = true;
  for (const auto& bv : v.basis_vectors)
    if (!satisfies_prime(iota_embed(m, m_prime, bv)))
      rep.iota_maps_v_into_v_prime = false;

  std::vector<Rat> delta_x(m_prime.bases.size(), Rat(0));
  for (size_t i = 0; i < m_prime.bases.size(); ++i)
    if (m_prime.bases[i] == rep.x) delta_x[i] = 1;
  rep.delta_x_in_v_prime = satisfies_prime(delta_x);

  std::vector<std::vector<Rat>> stacked = wp.basis_vectors;
  for (const auto& uv : rep.u_basis)
    stacked.push_back(iota_embed(m, m_prime, uv));
  stacked.push_back(delta_x);
  int r = rank_of_rows(stacked);
  rep.trivial_intersection = r == wp.dim() + int(rep.u_basis.size()) + 1;
  rep.spans_complement = rep.trivial_intersection && r == vp.dim();
  return rep;
}

std::vector<Rat> scaling_action(const Matroid& m, const std::vector<Rat>& coeffs,
                                const std::vector<Rat>& s) {
  if (coeffs.size() != m.bases.size() || int(s.size()) != m.n())
    throw std::invalid_argument("scaling_action: length mismatch");
  for (const auto& x : s)
    if (x <= 0) throw std::invalid_argument("scaling_action: s must be positive");
  std::vector<Rat> out(coeffs.size());
  for (size_t b = 0; b < m.bases.size(); ++b) {
    Rat f(1);
    for (int i = 0; i < m.n(); ++i)
      if (m.bases[b] >> i & 1) f *= s[i];
    out[b] = coeffs[b] * f;
  }
  return out;
}

LogVector log_vector_of_ratios(const Matroid& m, const std::vector<Rat>& numer,
                               const std::vector<Rat>& denom) {
  if (numer.size() != m.bases.size() || denom.size() != m.bases.size())
    throw std::invalid_argument("log_vector_of_ratios: length mismatch");
  LogVector out;
  out.basis_masks = m.bases;
  for (size_t b = 0; b < numer.size(); ++b) {
    if (numer[b] == 0 || denom[b] == 0)
      throw std::invalid_argument("log_vector_of_ratios: zero coefficient");
    std::map<long long, Rat> entry;
    for (const auto& [p, e] : factor_rat(abs(numer[b] / denom[b])))
      entry[p] = Rat(e);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

SparsePoly build_F_ab() {
  RatMatrix a = p8_matrix();
  Matroid p8 = matroid_from_matrix(a);
  std::vector<std::string> vars = {"a", "b"};
  for (int i = 0; i < 8; ++i) vars.push_back("x" + std::to_string(i));

  SparsePoly f(vars);
  for (uint32_t b : p8.bases) {
    std::vector<int> cols;
    for (int j = 0; j < 8; ++j)
      if (b >> j & 1) cols.push_back(j);
    Rat dv = abs(det_bareiss(a.columns(cols)));
    int v = 0;
    while (dv > 1) {
      if (num(dv) % 2 != 0 || den(dv) != 1)
        throw std::logic_error("P8 basis determinant is not a power of two");
      dv /= 2;
      ++v;
    }
    std::vector<int> exps(vars.size(), 0);
    exps[1] = v;  // power of b
    for (int j = 0; j < 8; ++j)
      if (b >> j & 1) exps[2 + j] = 1;
    f.add_term(exps, Rat(1));
  }
  std::vector<int> exps(vars.size(), 0);
  exps[0] = 1;  // a * x3 x5 x6 x7
  exps[2 + 3] = exps[2 + 5] = exps[2 + 6] = exps[2 + 7] = 1;
  f.add_term(exps, Rat(1));
  return f;
}

RayleighCubicReport verify_rayleigh_cubic() {
  SparsePoly f = build_F_ab();
  SparsePoly delta = rayleigh_difference(f, "x0", "x1");
  if (delta.degree_in("x0") != 0 || delta.degree_in("x1") != 0)
    throw std::logic_error("Delta_{0,1} of a multiaffine polynomial kept x0 or x1");

  SparsePoly t = SparsePoly::variable("t");
  RayleighCubicReport rep;
  rep.cubic = delta.substitute({{"x2", SparsePoly::constant(1)},
                                {"x3", SparsePoly::constant(1)},
                                {"x4", t},
                                {"x5", SparsePoly::constant(-1)},
                                {"x6", SparsePoly::constant(-1)},
                                {"x7", t}});
  rep.cubic = rep.cubic.with_vars(merged_vars({"a", "b", "t"}, rep.cubic.vars()));

  auto by_power = rep.cubic.collect_in("t");
  auto coeff = [&by_power](int k) {
    auto it = by_power.find(k);
    return it == by_power.end() ? SparsePoly() : it->second;
  };
  rep.coeff_t3 = coeff(3);
  rep.coeff_t2 = coeff(2);
  rep.coeff_t1 = coeff(1);
  rep.coeff_t0 = coeff(0);

  auto ab_monomial = [](int ea, int eb, const Rat& c) {
    return SparsePoly::monomial({"a", "b"}, {ea, eb}, c);
  };
  SparsePoly want_t3 = ab_monomial(1, 1, Rat(-1));
  SparsePoly want_t2 = ab_monomial(1, 1, Rat(-1)) + ab_monomial(0, 2, Rat(-4)) +
                       ab_monomial(1, 0, Rat(2)) + ab_monomial(0, 1, Rat(12)) +
                       SparsePoly::constant(16);
  SparsePoly want_t1 = ab_monomial(1, 0, Rat(1));

  bool highest_ok = by_power.empty() || by_power.rbegin()->first <= 3;
  rep.matches = highest_ok && rep.coeff_t3 == want_t3 && rep.coeff_t2 == want_t2 &&
                rep.coeff_t1 == want_t1 && rep.coeff_t0.is_zero();
  if (!rep.matches) {
    SparsePoly expected =
        want_t3 * t.pow(3) + want_t2 * t.pow(2) + want_t1 * t;
    throw IdentityMismatch("Rayleigh cubic differs from the pinned identity by " +
                           (rep.cubic - expected).to_string());
  }
  return rep;
}

namespace {

std::vector<std::string> vars_minus(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

std::vector<std::string> vars_common(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

HypconeSpotChecks run_spot_checks(const SparsePoly& h, const std::string& pivot,
                                  const std::vector<std::string>& e0,
                                  int line_samples, uint64_t seed) {
  HypconeSpotChecks out;
  const auto& vars = h.vars();
  const size_t nv = vars.size();
  size_t pivot_idx = size_t(h.var_index(pivot));
  std::vector<Rat> dir(nv, Rat(0));
  dir[pivot_idx] = 1;

  out.lines_pass = true;
  for (const auto& v : deterministic_rational_vectors(size_t(line_samples), nv, 6,
                                                      seed)) {
    ++out.line_tests;
    if (!line_test(h, dir, v)) out.lines_pass = false;
  }

  // a NotRealRooted restriction is itself a failed necessary check
  auto in_cone = [&h, &dir](const std::vector<Rat>& w) {
    try {
      return cone_contains(h, dir, w);
    } catch (const NotRealRooted&) {
      return false;
    }
  };
  out.coordinate_directions_pass = true;
  for (size_t i = 0; i < nv; ++i) {
    std::vector<Rat> w(nv, Rat(0));
    w[i] = 1;
    if (!in_cone(w)) out.coordinate_directions_pass = false;
  }

  std::vector<Rat> overlap(nv, Rat(0));
  overlap[pivot_idx] = 1;
  for (const auto& name : e0)
    if (name != pivot) overlap[size_t(h.var_index(name))] = -1;
  out.overlap_direction_pass = in_cone(overlap);
  return out;
}

}  // namespace

PipelineResult amalgamation_pipeline(const SparsePoly& p1, const SparsePoly& p2,
                                     const std::string& pivot,
                                     const std::optional<SparsePoly>& q,
                                     int line_samples, uint64_t seed) {
  if (!p1.is_homogeneous() || !p2.is_homogeneous())
    throw std::invalid_argument("pipeline inputs must be homogeneous");
  const int d = p1.total_degree();
  if (d <= 0 || p2.total_degree() != d)
    throw std::invalid_argument("pipeline inputs must share a positive degree");
  const auto e1 = p1.vars(), e2 = p2.vars();
  auto e0 = vars_common(e1, e2);
  if (std::find(e0.begin(), e0.end(), pivot) == e0.end())
    throw std::invalid_argument("pivot must lie in the common variable set");

  PipelineResult res;
  SparsePoly p0_from_1 = p1.set_zero(vars_minus(e1, e0));
  SparsePoly p0_from_2 = p2.set_zero(vars_minus(e2, e0));
  if (!(p0_from_1 == p0_from_2))
    throw RestrictionMismatch("restrictions to the common variables disagree");
  res.p0 = p0_from_1;

  auto shift = [&e0, &pivot](const SparsePoly& p) {
    std::map<std::string, SparsePoly> sub;
    for (const auto& name : e0)
      if (name != pivot && p.var_index(name) >= 0)
        sub[name] = SparsePoly::variable(pivot) + SparsePoly::variable(name);
    return p.substitute(sub);
  };
  res.h1 = shift(p1);
  res.h2 = shift(p2);
  res.q1 = res.h1.substitute({{pivot, SparsePoly::constant(1)}});
  res.q2 = res.h2.substitute({{pivot, SparsePoly::constant(1)}});
  res.checks1 = run_spot_checks(res.h1, pivot, e0, line_samples, seed);
  res.checks2 = run_spot_checks(res.h2, pivot, e0, line_samples, seed + 1);

  if (!q) return res;

  // candidate restrictions must reproduce Q_k
  auto eprime_of = [&pivot](const std::vector<std::string>& ek) {
    std::vector<std::string> out;
    for (const auto& v : ek)
      if (v != pivot) out.push_back(v);
    return out;
  };
  auto q_restricted = [&q](const std::vector<std::string>& keep) {
    return q->set_zero(vars_minus(q->vars(), keep));
  };
  if (!(q_restricted(eprime_of(e1)) == res.q1) ||
      !(q_restricted(eprime_of(e2)) == res.q2))
    throw RestrictionMismatch("candidate Q does not restrict to Q_1 and Q_2");

  const int dprime = q->total_degree();
  SparsePoly h = homogenize(*q, pivot, dprime);
  std::map<std::string, SparsePoly> unshift;
  for (const auto& name : e0)
    if (name != pivot && h.var_index(name) >= 0)
      unshift[name] =
          SparsePoly::variable(name) - SparsePoly::variable(pivot);
  SparsePoly p = h.substitute(unshift);

  SparsePoly x0_power =
      SparsePoly::monomial({pivot}, {dprime - d}, Rat(1));
  for (const SparsePoly* pk : {&p1, &p2}) {
    SparsePoly restricted =
        p.set_zero(vars_minus(p.vars(), pk->vars()));
    if (!(restricted == x0_power * *pk))
      throw std::logic_error("pipeline restriction identity failed");
  }

  SparsePoly p_prime = truncate_divide(p, pivot, dprime - d);
  for (const SparsePoly* pk : {&p1, &p2}) {
    SparsePoly restricted =
        p_prime.set_zero(vars_minus(p_prime.vars(), pk->vars()));
    if (!(restricted == *pk))
      throw std::logic_error("truncated polynomial fails to restrict to P_k");
  }
  res.p_prime = p_prime;

  MConvexSet support_set = [&p_prime]() {
    try {
      return mconvex_from_points(p_prime.vars(), p_prime.support());
    } catch (const NotMConvex& err) {
      throw SupportNotMConvex(
          std::string("support of the assembled polynomial is not M-convex: ") +
          err.what());
    }
  }();
  Polymatroid r = rank_from_mconvex(support_set);

  for (const SparsePoly* pk : {&p1, &p2}) {
    MConvexSet jk = mconvex_from_points(pk->vars(), pk->support());
    Polymatroid rk = rank_from_mconvex(jk);
    uint32_t mask = r.mask_of(pk->vars());
    if (!equal_as_functions(restrict_to(r, mask), rk))
      throw std::logic_error("support polymatroid fails the amalgam property");
  }
  res.amalgam = r;
  return res;
}

std::pair<Polymatroid, Polymatroid> specialized_pair() {
  std::map<std::string, std::string> identify = {
      {"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"},
      {"0'", "0"}, {"1'", "1"}, {"2'", "2"}};
  MConvexSet j1 = specialize_support(catalog("f7m4"), identify);
  MConvexSet j2 = specialize_support(catalog("f7m5"), identify);
  return {rank_from_mconvex(j1), rank_from_mconvex(j2)};
}

std::pair<SparsePoly, SparsePoly> specialized_polynomials() {
  std::map<std::string, SparsePoly> identify;
  for (std::string base : {"0", "1", "2"})
    identify[var_of(base + "'")] = SparsePoly::variable(var_of(base));
  SparsePoly h4 = generating_polynomial(basis_indicator_set(catalog("f7m4")));
  SparsePoly h5 = generating_polynomial(basis_indicator_set(catalog("f7m5")));
  return {h4.substitute(identify), h5.substitute(identify)};
}

ChainReport no_amalgam_proof_chain(std::optional<int> m_opt) {
  ChainReport rep;
  rep.symbolic = !m_opt.has_value();
  rep.m = m_opt.value_or(1);
  if (!rep.symbolic && rep.m < 1)
    throw std::invalid_argument("m must be a positive integer");

  auto [r1, r2] = specialized_pair();
  auto value_of = [](const Polymatroid& r, std::vector<std::string> labels) {
    return (long long)r(r.mask_of(labels));
  };

  // every quantity below is c*m for an integer coefficient c: the boundary
  // values are maxima over the specialized supports and scale() is pointwise,
  // and monotonicity/submodularity are homogeneous in m, so checking the
  // coefficients settles every m >= 1 at once
  auto cstr = [&rep](long long c) {
    return rep.symbolic ? std::to_string(c) + "m"
                        : std::to_string(c * rep.m);
  };

  struct Boundary {
    const Polymatroid* r;
    std::vector<std::string> labels;
    long long expect;
    const char* name;
  };
  const Boundary boundaries[] = {
      {&r1, {"0"}, 2, "r1({0})"},
      {&r1, {"0", "3"}, 2, "r1({0,3})"},
      {&r1, {"1", "3"}, 2, "r1({1,3})"},
      {&r1, {"3"}, 1, "r1({3})"},
      {&r2, {"0", "4"}, 2, "r2({0,4})"},
      {&r2, {"2", "4"}, 2, "r2({2,4})"},
      {&r2, {"1", "4"}, 3, "r2({1,4})"},
      {&r1, {"2"}, 2, "r1({2})"},
      {&r1, {"2", "3"}, 2, "r1({2,3})"},
      {&r1, {"0", "2", "3"}, 3, "r1({0,2,3})"},
  };
  for (const auto& b : boundaries) {
    long long got = value_of(*b.r, b.labels);
    if (got != b.expect)
      throw ChainBroken(b.name, std::string(b.name) + " = " +
                                    std::to_string(got) + " at m = 1, expected " +
                                    std::to_string(b.expect));
    rep.steps.push_back({std::string(b.name) + " = " + cstr(b.expect),
                         "maximum over the specialized support at m = 1, "
                         "linear in m",
                         false});
  }
  auto coeff = [&](const Polymatroid& r, std::vector<std::string> labels) {
    return value_of(r, labels);
  };
  auto forced = [&](const std::string& step, long long lo, long long hi) {
    if (lo != hi)
      throw ChainBroken(step, "bounds do not pin the value: " +
                                  std::to_string(lo) + "m .. " +
                                  std::to_string(hi) + "m");
    return lo;
  };

  // r(S) >= r(S & E_k) by monotonicity; r(A) + r(B) >= r(A|B) + r(A&B) gives
  // the upper bounds below, always through subsets whose values are forced.
  long long c034 = forced("r({0,3,4})", std::max(coeff(r1, {"0", "3"}),
                                                 coeff(r2, {"0", "4"})),
                          coeff(r1, {"0", "3"}) + coeff(r2, {"0", "4"}) -
                              coeff(r1, {"0"}));
  rep.steps.push_back(
      {"r({0,3,4}) = " + cstr(c034),
       "monotone above r({0,3}); submodularity on ({0,3},{0,4}) meeting in {0}",
       false});

  long long c234 = forced("r({2,3,4})", std::max(coeff(r1, {"2", "3"}),
                                                 coeff(r2, {"2", "4"})),
                          coeff(r1, {"2", "3"}) + coeff(r2, {"2", "4"}) -
                              coeff(r1, {"2"}));
  rep.steps.push_back(
      {"r({2,3,4}) = " + cstr(c234),
       "derived symmetrically via r2({2,4}); the printed chain only says "
       "\"likewise\", so this step is inferred by symmetry",
       true});

  long long c0234_low = coeff(r1, {"0", "2", "3"});  // monotone
  long long c34 = forced("r({3,4})", coeff(r1, {"3"}),
                         c034 + c234 - c0234_low);
  rep.steps.push_back(
      {"r({3,4}) = " + cstr(c34),
       "monotone above r({3}); submodularity on ({0,3,4},{2,3,4}) meeting in "
       "{3,4} with r({0,2,3,4}) >= r({0,2,3})",
       false});

  long long c134_high = coeff(r1, {"1", "3"}) + c34 - coeff(r1, {"3"});
  rep.steps.push_back(
      {"r({1,3,4}) <= " + cstr(c134_high),
       "submodularity on ({1,3},{3,4}) meeting in {3}", false});

  long long c134_low = coeff(r2, {"1", "4"});
  rep.steps.push_back({"r({1,3,4}) >= " + cstr(c134_low),
                       "monotone above r({1,4})", false});

  rep.contradiction = c134_low > c134_high;
  rep.steps.push_back(
      {"contradiction: " + cstr(c134_low) + " <= r({1,3,4}) <= " +
           cstr(c134_high),
       rep.symbolic
           ? "the coefficient inequality 3 > 2 rules out every m >= 1"
           : "impossible at m = " + std::to_string(rep.m),
       false});
  if (!rep.contradiction)
    throw ChainBroken("contradiction", "chain failed to reach a contradiction");
  return rep;
}

nlohmann::json logvector_to_json(const LogVector& v, const Matroid& m) {
  nlohmann::json j;
  auto& bases = j["bases"] = nlohmann::json::array();
  auto& entries = j["entries"] = nlohmann::json::array();
  for (size_t i = 0; i < v.basis_masks.size(); ++i) {
    bases.push_back(m.labels_of(v.basis_masks[i]));
    nlohmann::json entry = nlohmann::json::object();
    for (const auto& [p, e] : v.entries[i])
      if (e != 0) entry[std::to_string(p)] = rat_str(e);
    entries.push_back(std::move(entry));
  }
  return j;
}

}  // namespace matstab
