#ifndef MATSTAB_RATIONAL_HPP
#define MATSTAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace matstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Canonical string form: "p/q" reduced, or "p" when q = 1.
std::string rat_str(const Rat& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

Rat pow_rat(const Rat& base, unsigned exp);

/// Exact square root if the value is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

/// Prime factorization of a nonzero rational: prime -> exponent, negative
/// exponents for denominator primes. Throws if a factor above the trial
/// division bound remains (values in this project are tiny).
std::map<long long, long long> factor_rat(const Rat& r);

Int factorial(int n);

}  // namespace matstab

#endif
