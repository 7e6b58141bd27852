#include "weilbounds/quadratic.hpp"

#include <cmath>

namespace weilbounds {

QuadExt::QuadExt(Rational a, Rational b, BigInt disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {
  if (disc_ < 0) throw ValidationError("QuadExt: negative discriminant");
  if (b_ != 0) {
    BigInt root;
    if (is_perfect_square(disc_, &root)) {
      a_ += b_ * Rational(root);
      b_ = 0;
    }
  }
  if (b_ == 0) disc_ = 0;
}

BigInt QuadExt::common_disc(const QuadExt& o) const {
  if (disc_ == 0) return o.disc_;
  if (o.disc_ == 0) return disc_;
  if (disc_ != o.disc_)
    throw InvariantError("QuadExt: mixing different quadratic extensions");
  return disc_;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  return QuadExt(a_ + o.a_, b_ + o.b_, common_disc(o));
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
  return QuadExt(a_ - o.a_, b_ - o.b_, common_disc(o));
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  BigInt d = common_disc(o);
  return QuadExt(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
  if (o.is_zero()) throw ValidationError("QuadExt: division by zero");
  BigInt d = common_disc(o);
  // Multiply by the conjugate; the norm is nonzero since disc is not a
  // square whenever b != 0 (normalization folds square discs away).
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  if (norm == 0) throw InvariantError("QuadExt: zero norm for nonzero element");
  return QuadExt((a_ * o.a_ - b_ * o.b_ * Rational(d)) / norm,
                 (b_ * o.a_ - a_ * o.b_) / norm, d);
}

bool QuadExt::operator==(const QuadExt& o) const {
  return a_ == o.a_ && b_ == o.b_ &&
         (b_ == 0 || disc_ == o.disc_);
}

int QuadExt::sign() const {
  int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
  int sb = b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with disc*b^2.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(disc_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadExt::to_double() const {
  double value = a_.convert_to<double>();
  if (b_ != 0)
    value += b_.convert_to<double>() * std::sqrt(disc_.convert_to<double>());
  return value;
}

}  // namespace weilbounds
