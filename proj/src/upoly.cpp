#include "matstab/upoly.hpp"

#include <sstream>

namespace matstab {

void UnivariatePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UnivariatePoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial();
  return c_.back();
}

Rat UnivariatePoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<Rat> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rat(long(k)));
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  std::vector<Rat> s(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) s[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) s[k] += o.c_[k];
  return UnivariatePoly(std::move(s));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
  return *this + o * Rat(-1);
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
  if (is_zero() || o.is_zero()) return UnivariatePoly();
  std::vector<Rat> p(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  return UnivariatePoly(std::move(p));
}

UnivariatePoly UnivariatePoly::operator*(const Rat& s) const {
  std::vector<Rat> p = c_;
  for (auto& x : p) x *= s;
  return UnivariatePoly(std::move(p));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(
    const UnivariatePoly& d) const {
  if (d.is_zero()) throw ZeroPolynomial();
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo;
  while (int(rem.size()) >= int(d.c_.size())) {
    Rat f = rem.back() / d.c_.back();
    size_t shift = rem.size() - d.c_.size();
    if (quo.size() < shift + 1) quo.resize(shift + 1, Rat(0));
    quo[shift] = f;
    for (size_t k = 0; k < d.c_.size(); ++k) rem[shift + k] -= f * d.c_[k];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() < d.c_.size()) break;
  }
  return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] > 0 ? " + " : " - ");
    else if (c_[k] < 0) os << "-";
    Rat a = abs(c_[k]);
    if (a != 1 || k == 0) os << rat_str(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = x.divmod(y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x * (Rat(1) / x.leading());  // monic
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return p;
  UnivariatePoly g = gcd(p, p.derivative());
  auto [q, r] = p.divmod(g);
  return q;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const UnivariatePoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  UnivariatePoly f = squarefree_part(p);
  chain_.push_back(f);
  if (f.degree() >= 1) {
    chain_.push_back(f.derivative());
    while (chain_.back().degree() >= 1) {
      auto [q, r] = chain_[chain_.size() - 2].divmod(chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(r * Rat(-1));
    }
  }
}

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> s;
  for (const auto& f : chain_) s.push_back(sign(f.eval(x)));
  return variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& f : chain_) s.push_back(sign(f.leading()));
  return variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& f : chain_) {
    int lead = sign(f.leading());
    s.push_back(f.degree() % 2 == 0 ? lead : -lead);
  }
  return variations(s);
}

int count_distinct_real_roots(const UnivariatePoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return 0;
  SturmChain chain(p);
  return chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
}

int count_roots_in(const UnivariatePoly& p, std::optional<Rat> lo,
                   std::optional<Rat> hi) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (lo && hi && *lo >= *hi) return 0;  // (lo, hi] is empty
  UnivariatePoly f = squarefree_part(p);
  // divide out roots at finite endpoints so Sturm evaluation points are
  // never roots; (lo, hi] then still counts hi but not lo
  bool hi_is_root = false;
  if (hi && f.eval(*hi) == 0) {
    hi_is_root = true;
    auto [q, r] = f.divmod(UnivariatePoly({-*hi, Rat(1)}));
    f = q;
  }
  if (lo && !f.is_zero() && f.eval(*lo) == 0) {
    auto [q, r] = f.divmod(UnivariatePoly({-*lo, Rat(1)}));
    f = q;
  }
  int inside = 0;
  if (f.degree() >= 1) {
    SturmChain chain(f);
    int vlo = lo ? chain.variations_at(*lo) : chain.variations_at_neg_inf();
    int vhi = hi ? chain.variations_at(*hi) : chain.variations_at_pos_inf();
    inside = vlo - vhi;
  }
  return inside + (hi_is_root ? 1 : 0);
}

bool sturm_real_rooted(const UnivariatePoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  UnivariatePoly f = squarefree_part(p);
  if (f.degree() <= 0) return true;
  return count_distinct_real_roots(f) == f.degree();
}

}  // namespace matstab
