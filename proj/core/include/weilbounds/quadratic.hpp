#ifndef WEILBOUNDS_QUADRATIC_HPP
#define WEILBOUNDS_QUADRATIC_HPP

#include "weilbounds/numeric.hpp"

namespace weilbounds {

// Element a + b*sqrt(disc) of the real quadratic extension Q(sqrt(disc)),
// disc a fixed nonnegative integer.  When disc is a perfect square the
// radical part is folded into the rational part, so arithmetic and sign
// logic never see a hidden zero.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), disc_(0) {}
  QuadExt(Rational a, Rational b, BigInt disc);

  static QuadExt rational(Rational a) { return QuadExt(std::move(a), 0, 0); }
  static QuadExt sqrt_of(const BigInt& disc) { return QuadExt(0, 1, disc); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const BigInt& disc() const { return disc_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, disc_); }
  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const;
  bool operator==(const QuadExt& o) const;

  // Sign as a real number: -1, 0, +1.
  int sign() const;

  double to_double() const;

 private:
  BigInt common_disc(const QuadExt& o) const;

  Rational a_, b_;
  BigInt disc_;  // 0 whenever b_ == 0
};

inline bool operator<(const QuadExt& x, const QuadExt& y) {
  return (x - y).sign() < 0;
}
inline bool operator<=(const QuadExt& x, const QuadExt& y) {
  return (x - y).sign() <= 0;
}

}  // namespace weilbounds

#endif
