#include "weilbounds/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace weilbounds {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::linear_root(const BigInt& r) {
  return IntPolynomial({-r, 1});
}

IntPolynomial IntPolynomial::x2_minus(const BigInt& n) {
  return IntPolynomial({-n, 0, 1});
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw InvariantError("leading() of zero polynomial");
  return coeffs_.back();
}

const BigInt& IntPolynomial::coeff(size_t i) const {
  static const BigInt kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c(coeffs_);
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return IntPolynomial();
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> c(coeffs_);
  for (auto& v : c) v *= s;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

QuadExt IntPolynomial::evaluate(const QuadExt& x) const {
  QuadExt acc = QuadExt::rational(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + QuadExt::rational(Rational(*it));
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * BigInt(i);
  return IntPolynomial(std::move(c));
}

PolyDivMod IntPolynomial::divide_by_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw InvariantError("divide_by_monic: divisor not monic");
  if (degree() < divisor.degree()) return {IntPolynomial(), *this};
  std::vector<BigInt> rem(coeffs_);
  std::vector<BigInt> quot(degree() - divisor.degree() + 1, 0);
  for (long i = degree(); i >= divisor.degree(); --i) {
    BigInt c = rem[i];
    if (c == 0) continue;
    quot[i - divisor.degree()] = c;
    for (long j = 0; j <= divisor.degree(); ++j)
      rem[i - divisor.degree() + j] -= c * divisor.coeff(j);
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::exact_divide(const IntPolynomial& divisor, IntPolynomial* quotient) const {
  auto dm = divide_by_monic(divisor);
  if (!dm.remainder.is_zero()) return false;
  if (quotient) *quotient = std::move(dm.quotient);
  return true;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c(coeffs_);
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::lex_less(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  for (long i = x.degree(); i >= 0; --i) {
    if (x.coeff(i) != y.coeff(i)) return x.coeff(i) < y.coeff(i);
  }
  return false;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& c = coeff(i);
    if (c == 0) continue;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) out << a.str();
    if (i >= 1) {
      out << var;
      if (i >= 2) out << "^" << i;
    }
  }
  return out.str();
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

IntPolynomial IntPolynomial::from_coeff_strings(const std::vector<std::string>& s) {
  std::vector<BigInt> c;
  c.reserve(s.size());
  for (const auto& t : s) c.emplace_back(t);
  return IntPolynomial(std::move(c));
}

// Primitive remainder of a mod b with the sign of the true rational
// remainder preserved (only positive rescalings are applied overall).
IntPolynomial signed_primitive_rem(const IntPolynomial& a, const IntPolynomial& b) {
  long db = b.degree();
  if (db < 0) throw InvariantError("polynomial remainder by zero");
  if (a.degree() < db) return a;
  const BigInt& lb = b.leading();
  IntPolynomial r = a;
  long iterations = 0;
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    BigInt lr = r.leading();
    std::vector<BigInt> c(r.degree() + 1, 0);
    for (long i = 0; i <= r.degree(); ++i) c[i] = lb * r.coeff(i);
    for (long j = 0; j <= db; ++j) c[shift + j] -= lr * b.coeff(j);
    r = IntPolynomial(std::move(c));
    ++iterations;
  }
  if (lb < 0 && (iterations % 2) == 1) r = -r;
  if (r.is_zero()) return r;
  BigInt g = r.content();
  std::vector<BigInt> c(r.coeffs());
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    IntPolynomial r = signed_primitive_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  if (!p.is_monic()) throw InvariantError("squarefree_part: monic input expected");
  IntPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  // gcd of a monic polynomial with its derivative is monic after the
  // positive-primitive normalization, so the division stays in Z[x].
  IntPolynomial q;
  if (!p.exact_divide(g, &q))
    throw InvariantError("squarefree_part: inexact division");
  return q;
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<IntPolynomial> out;
  if (p.degree() <= 0) return out;
  if (!p.is_monic())
    throw InvariantError("squarefree_decomposition: monic input expected");
  // Yun's algorithm.
  IntPolynomial d = p.derivative();
  IntPolynomial g = poly_gcd(p, d);
  if (g.degree() == 0) {
    out.push_back(p);
    return out;
  }
  IntPolynomial b, c;
  if (!p.exact_divide(g, &b) || !d.exact_divide(g, &c))
    throw InvariantError("squarefree_decomposition: inexact division");
  IntPolynomial y = c - b.derivative();
  while (b.degree() > 0) {
    IntPolynomial f = poly_gcd(b, y);
    out.push_back(f);
    IntPolynomial b2, c2;
    if (!b.exact_divide(f, &b2) || !y.exact_divide(f, &c2))
      throw InvariantError("squarefree_decomposition: inexact step");
    b = std::move(b2);
    y = c2 - b.derivative();
  }
  return out;
}

}  // namespace weilbounds
