#include "weilbounds/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

namespace weilbounds {

BigInt pow_bigint(const BigInt& base, unsigned long exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact at every step
  }
  return result;
}

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n < 1) throw ValidationError("factorize: argument must be positive");
  std::map<BigInt, unsigned> factors;
  BigInt m = n;
  for (BigInt d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    while (m % d == 0) {
      ++factors[d];
      m /= d;
    }
  }
  if (m > 1) ++factors[m];
  return factors;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(const BigInt& q, BigInt* p, unsigned* e) {
  if (q < 2) return false;
  auto factors = factorize(q);
  if (factors.size() != 1) return false;
  if (p) *p = factors.begin()->first;
  if (e) *e = factors.begin()->second;
  return true;
}

BigInt euler_phi(const BigInt& n) {
  BigInt result = n;
  for (const auto& [p, e] : factorize(n)) {
    result -= result / p;
    (void)e;
  }
  return result;
}

BigInt smallest_coprime_prime(const BigInt& f) {
  BigInt l = 2;
  while (boost::multiprecision::gcd(l, f) != 1) {
    ++l;
    while (!is_prime(l)) ++l;
  }
  return l;
}

BigInt multiplicative_order(const BigInt& a, const BigInt& mod) {
  if (mod < 1) throw ValidationError("multiplicative_order: modulus must be positive");
  if (mod <= 2) return 1;
  if (boost::multiprecision::gcd(a, mod) != 1)
    throw ValidationError("multiplicative_order: arguments not coprime");
  // Order modulo a product is the lcm of the orders modulo its prime powers.
  BigInt order = 1;
  for (const auto& [p, e] : factorize(mod)) {
    BigInt pe = pow_bigint(p, e);
    BigInt phi = pe - pe / p;
    BigInt local = phi;
    for (const auto& [r, s] : factorize(phi)) {
      (void)s;
      while (local % r == 0 &&
             boost::multiprecision::powm(a % pe, local / r, pe) == 1) {
        local /= r;
      }
    }
    order = boost::multiprecision::lcm(order, local);
  }
  return order;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_fraction_string(const Rational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double log_bigint(const BigInt& v) {
  if (v <= 0) throw ValidationError("log_bigint: argument must be positive");
  // Split off enough high bits to fit a double, add back the shift.
  unsigned bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 52) return std::log(v.convert_to<double>());
  unsigned shift = bits - 52;
  BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace weilbounds
