#ifndef WEILBOUNDS_NUMERIC_HPP
#define WEILBOUNDS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilbounds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown on bad user-facing parameters (CLI maps these to exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal postcondition fails (CLI exit code 3).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw ValidationError("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (root) *root = r;
  return r * r == n;
}

BigInt pow_bigint(const BigInt& base, unsigned long exp);

BigInt binomial(unsigned n, unsigned k);

// Trial-division factorization; intended for desk-scale inputs.
std::map<BigInt, unsigned> factorize(const BigInt& n);

bool is_prime(const BigInt& n);

// q = p^e with p prime, e >= 1.
bool is_prime_power(const BigInt& q, BigInt* p = nullptr, unsigned* e = nullptr);

BigInt euler_phi(const BigInt& n);

// Smallest prime not dividing f.
BigInt smallest_coprime_prime(const BigInt& f);

// Order of a in (Z/mod)^*.  Requires gcd(a, mod) = 1.
BigInt multiplicative_order(const BigInt& a, const BigInt& mod);

std::string to_decimal(const BigInt& v);
std::string to_fraction_string(const Rational& v);  // "num/den", or "num" when integral

// Natural log of a positive BigInt, usable far beyond double range.
double log_bigint(const BigInt& v);

}  // namespace weilbounds

#endif
