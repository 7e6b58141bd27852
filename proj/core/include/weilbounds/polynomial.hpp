#ifndef WEILBOUNDS_POLYNOMIAL_HPP
#define WEILBOUNDS_POLYNOMIAL_HPP

#include "weilbounds/numeric.hpp"
#include "weilbounds/quadratic.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace weilbounds {

struct PolyDivMod;

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored lowest degree first with no trailing zeros.  The zero polynomial
// has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<BigInt> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  // x - r
  static IntPolynomial linear_root(const BigInt& r);
  // x^2 - n
  static IntPolynomial x2_minus(const BigInt& n);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const BigInt& leading() const;
  const BigInt& coeff(size_t i) const;  // 0 beyond degree
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& s) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  QuadExt evaluate(const QuadExt& x) const;

  IntPolynomial derivative() const;

  // Quotient and remainder for a monic divisor (stays in Z[x]).
  PolyDivMod divide_by_monic(const IntPolynomial& divisor) const;

  // True (and sets quotient) when divisor is monic and divides exactly.
  bool exact_divide(const IntPolynomial& divisor, IntPolynomial* quotient) const;

  BigInt content() const;          // gcd of coefficients, 0 for zero poly
  IntPolynomial primitive() const; // divided by content, leading coeff > 0

  // Total ordering used for canonical output: degree, then coefficients
  // from the highest degree down.
  static bool lex_less(const IntPolynomial& x, const IntPolynomial& y);

  std::string to_string(const std::string& var = "x") const;
  std::vector<std::string> coeff_strings() const;  // lowest degree first
  static IntPolynomial from_coeff_strings(const std::vector<std::string>& s);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

struct PolyDivMod {
  IntPolynomial quotient, remainder;
};

// Primitive remainder of a mod b with the sign of the true rational
// remainder preserved.
IntPolynomial signed_primitive_rem(const IntPolynomial& a, const IntPolynomial& b);

// gcd in Q[x], returned as a primitive integer polynomial with positive
// leading coefficient.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

// Squarefree part: p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition p = prod f_i^i (constant factor dropped); element i-1
// of the result is f_i, possibly the constant 1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

}  // namespace weilbounds

#endif
