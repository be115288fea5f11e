#include "matstab/sparse_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matstab {

SparsePoly SparsePoly::constant(const Rat& c) {
  SparsePoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

SparsePoly SparsePoly::variable(const std::string& name) {
  SparsePoly p({name});
  p.terms_[{1}] = 1;
  return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, std::vector<int> exps,
                                const Rat& coeff) {
  if (vars.size() != exps.size())
    throw std::invalid_argument("monomial: vars/exps length mismatch");
  SparsePoly p(std::move(vars));
  if (coeff != 0) p.terms_[std::move(exps)] = coeff;
  return p;
}

int SparsePoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : int(it - vars_.begin());
}

void SparsePoly::add_term(const std::vector<int>& exps, const Rat& coeff) {
  if (exps.size() != vars_.size())
    throw std::invalid_argument("add_term: exponent length mismatch");
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat SparsePoly::coeff_of(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

SparsePoly SparsePoly::with_vars(const std::vector<std::string>& new_vars) const {
  std::vector<int> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it == new_vars.end())
      throw std::invalid_argument("with_vars: missing variable " + vars_[i]);
    where[i] = int(it - new_vars.begin());
  }
  SparsePoly out(new_vars);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.terms_[std::move(ne)] = c;
  }
  return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  auto vs = merged_vars(vars_, o.vars_);
  SparsePoly a = with_vars(vs), b = o.with_vars(vs);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  return a;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  return *this + o * Rat(-1);
}

SparsePoly SparsePoly::operator*(const Rat& s) const {
  SparsePoly out(vars_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  auto vs = merged_vars(vars_, o.vars_);
  SparsePoly a = with_vars(vs), b = o.with_vars(vs);
  SparsePoly out(vs);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(vs.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = SparsePoly::constant(1);
  SparsePoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return (*this - o).is_zero();
}

SparsePoly SparsePoly::derivative(const std::string& var) const {
  int k = var_index(var);
  if (k < 0) return SparsePoly(vars_);
  SparsePoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    std::vector<int> ne = e;
    ne[k] -= 1;
    out.add_term(ne, c * Rat(e[k]));
  }
  return out;
}

SparsePoly SparsePoly::substitute(
    const std::map<std::string, SparsePoly>& assignment) const {
  for (const auto& [name, value] : assignment)
    if (var_index(name) < 0)
      throw std::invalid_argument("substitute: unknown variable " + name);
  SparsePoly acc;
  for (const auto& [e, c] : terms_) {
    SparsePoly term = SparsePoly::constant(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(vars_[i]);
      SparsePoly factor =
          it != assignment.end() ? it->second : SparsePoly::variable(vars_[i]);
      term = term * factor.pow(unsigned(e[i]));
    }
    acc = acc + term;
  }
  return acc;
}

Rat SparsePoly::eval(const std::map<std::string, Rat>& point) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw std::invalid_argument("eval: unassigned variable " + vars_[i]);
      t *= pow_rat(it->second, unsigned(e[i]));
    }
    acc += t;
  }
  return acc;
}

SparsePoly SparsePoly::set_zero(const std::vector<std::string>& zs) const {
  std::vector<bool> kill(vars_.size(), false);
  for (const auto& z : zs) {
    int k = var_index(z);
    if (k >= 0) kill[k] = true;
  }
  SparsePoly out(vars_);
  for (const auto& [e, c] : terms_) {
    bool drop = false;
    for (size_t i = 0; i < e.size(); ++i)
      if (kill[i] && e[i] > 0) { drop = true; break; }
    if (!drop) out.terms_[e] = c;
  }
  return out;
}

int SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int x : terms_.rbegin()->first) d += x;  // graded order: last term is max
  return d;
}

int SparsePoly::degree_in(const std::string& var) const {
  int k = var_index(var);
  if (k < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d < 0) d = s;
    if (s != d) return false;
  }
  return true;
}

std::vector<std::vector<int>> SparsePoly::support() const {
  std::vector<std::vector<int>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::map<int, SparsePoly> SparsePoly::collect_in(const std::string& var) const {
  int k = var_index(var);
  std::vector<std::string> rest;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (int(i) != k) rest.push_back(vars_[i]);
  std::map<int, SparsePoly> out;
  for (const auto& [e, c] : terms_) {
    int power = k >= 0 ? e[k] : 0;
    std::vector<int> ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (int(i) != k) ne.push_back(e[i]);
    auto [it, fresh] = out.try_emplace(power, SparsePoly(rest));
    it->second.add_term(ne, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // graded-lex descending, the usual reading order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << rat_str(a);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }
  std::string read_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }
  std::string read_name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
            s[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected variable name");
    return s.substr(start, pos - start);
  }
};

}  // namespace

SparsePoly SparsePoly::parse(const std::string& text) {
  Parser p{text};
  SparsePoly acc;
  p.skip_ws();
  if (p.pos >= text.size()) p.fail("empty input");
  bool more = true;
  int term_sign = 1;
  if (p.eat('-')) term_sign = -1;
  while (more) {
    // term: [number[/number]] ( '*' name['^'number] )*  or leading name
    Rat coeff(term_sign);
    bool saw_coeff = false;
    p.skip_ws();
    if (p.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[p.pos]))) {
      std::string n = p.read_number();
      std::string d = "1";
      if (p.eat('/')) d = p.read_number();
      coeff = Rat(Int(n), Int(d)) * term_sign;
      saw_coeff = true;
    }
    std::map<std::string, int> factors;
    bool expect_var = !saw_coeff;
    while (true) {
      if (saw_coeff || !expect_var) {
        if (!p.eat('*')) break;
      }
      expect_var = false;
      std::string name = p.read_name();
      int e = 1;
      if (p.eat('^')) e = std::stoi(p.read_number());
      factors[name] += e;
      saw_coeff = true;  // after first factor, require '*' separators
    }
    std::vector<std::string> vs;
    std::vector<int> es;
    for (const auto& [name, e] : factors) {
      vs.push_back(name);
      es.push_back(e);
    }
    acc = acc + SparsePoly::monomial(vs, es, coeff);
    p.skip_ws();
    if (p.eat('+')) term_sign = 1;
    else if (p.eat('-')) term_sign = -1;
    else more = false;
  }
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return acc;
}

}  // namespace matstab
