#include "matstab/rational.hpp"

#include <sstream>

namespace matstab {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

Rat pow_rat(const Rat& base, unsigned exp) {
  Rat result(1), b = base;
  while (exp) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

namespace {

std::optional<Int> isqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  Int root = boost::multiprecision::sqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

}  // namespace

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto p = isqrt_exact(num(r));
  auto q = isqrt_exact(den(r));
  if (p && q) return Rat(*p, *q);
  return std::nullopt;
}

std::map<long long, long long> factor_rat(const Rat& r) {
  if (r == 0) throw std::invalid_argument("factor_rat: zero has no factorization");
  std::map<long long, long long> out;
  auto accumulate = [&out](Int n, long long direction) {
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      while (n % p == 0) {
        out[p] += direction;
        n /= p;
      }
      if (p > 1000000) throw std::runtime_error("factor_rat: factor too large");
    }
    if (n > 1) {
      if (n > Int(1000000000000LL))
        throw std::runtime_error("factor_rat: prime factor too large");
      out[static_cast<long long>(n)] += direction;
    }
  };
  accumulate(num(r), 1);
  accumulate(den(r), -1);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace matstab
