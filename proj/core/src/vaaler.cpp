#include "weilbounds/vaaler.hpp"

#include <cmath>
#include <numbers>

namespace weilbounds {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double x) {
  return {std::cos(kTwoPi * x), std::sin(kTwoPi * x)};
}

}  // namespace

TorusInterval TorusInterval::make(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw ValidationError("TorusInterval: endpoints must lie in [0, 1]");
  if (b == 1.0 && a > 0.0) b = 0.0;  // [a, 1) == [a, 0 wrapped)
  return TorusInterval{a, b};
}

double TorusInterval::length() const {
  if (a <= b) return b - a;
  return 1.0 - a + b;
}

Rational TorusInterval::length_exact() const {
  Rational ra(a), rb(b);
  if (a <= b) return rb - ra;
  return Rational(1) - ra + rb;
}

bool TorusInterval::is_full() const { return a == 0.0 && b == 1.0; }

bool TorusInterval::contains(double x) const {
  x -= std::floor(x);
  if (is_full()) return true;
  if (a == b) return false;  // half-open empty target
  if (a < b) return x >= a && x < b;
  return x >= a || x < b;
}

bool TorusRectangle::contains(std::span<const double> x) const {
  if (x.size() != intervals.size())
    throw ValidationError("TorusRectangle: wrong point rank");
  for (size_t i = 0; i < intervals.size(); ++i) {
    if (!intervals[i].contains(x[i])) return false;
  }
  return true;
}

BeurlingTransforms beurling_transforms(double t) {
  if (!(t > -1.0 && t < 1.0))
    throw ValidationError("beurling_transforms: |t| must be < 1");
  double at = std::fabs(t);
  BeurlingTransforms out;
  out.k_hat = 1.0 - at;
  if (t == 0.0) {
    out.j_hat = 1.0;  // continuity limit of pi t cot(pi t)
  } else {
    double pt = std::numbers::pi * t;
    out.j_hat = pt * (1.0 - at) * (std::cos(pt) / std::sin(pt)) + at;
  }
  return out;
}

VaalerAxis vaaler_axis(const TorusInterval& I, unsigned kappa) {
  if (kappa < 1) throw ValidationError("vaaler_axis: kappa must be >= 1");
  VaalerAxis axis;
  axis.kappa = kappa;
  axis.plus.resize(kappa + 1);
  axis.minus.resize(kappa + 1);
  const double kp1 = static_cast<double>(kappa) + 1.0;
  const Rational gap(1, BigInt(kappa) + 1);

  if (I.is_degenerate() || I.is_full()) {
    // Degenerate and full-cover targets are complements; their pairs mirror
    // each other through 1 - P, built on a doubled Fejer kernel so the
    // point majorant reaches 1 at the target.
    double base = I.is_full() ? 1.0 : 0.0;
    for (unsigned nu = 0; nu <= kappa; ++nu) {
      double kh = 1.0 - static_cast<double>(nu) / kp1;
      std::complex<double> c = (2.0 / kp1) * kh * e_of(-static_cast<double>(nu) * I.a);
      axis.plus[nu] = c;
      axis.minus[nu] = -c;
      if (nu == 0) {
        axis.plus[nu] += base;
        axis.minus[nu] += base;
      }
    }
    Rational rbase = I.is_full() ? Rational(1) : Rational(0);
    axis.mean_plus = rbase + 2 * gap;
    axis.mean_minus = rbase - 2 * gap;
    return axis;
  }

  double len = I.length();
  for (unsigned nu = 0; nu <= kappa; ++nu) {
    double t = static_cast<double>(nu) / kp1;
    auto [jh, kh] = beurling_transforms(t);
    std::complex<double> ea = e_of(-static_cast<double>(nu) * I.a);
    std::complex<double> eb = e_of(-static_cast<double>(nu) * I.b);
    std::complex<double> fhat;
    if (nu == 0) {
      fhat = len;
    } else {
      fhat = (ea - eb) / std::complex<double>{0.0, kTwoPi * static_cast<double>(nu)};
    }
    // Fourier-Stieltjes coefficients of the variation measure: unit point
    // masses at both jumps of the indicator.
    std::complex<double> dg = ea + eb;
    std::complex<double> correction = (kh / (2.0 * kp1)) * dg;
    axis.plus[nu] = jh * fhat + correction;
    axis.minus[nu] = jh * fhat - correction;
  }
  Rational rlen = I.length_exact();
  axis.mean_plus = rlen + gap;
  axis.mean_minus = rlen - gap;
  // Pin the stored constant coefficient to the exact value.
  axis.plus[0] = axis.mean_plus.convert_to<double>();
  axis.minus[0] = axis.mean_minus.convert_to<double>();
  return axis;
}

double VaalerAxis::eval_plus(double x) const {
  std::complex<double> w = e_of(x);
  std::complex<double> pw{1.0, 0.0};
  double acc = plus[0].real();
  for (unsigned nu = 1; nu <= kappa; ++nu) {
    pw *= w;
    acc += 2.0 * (plus[nu] * pw).real();
  }
  return acc;
}

double VaalerAxis::eval_minus(double x) const {
  std::complex<double> w = e_of(x);
  std::complex<double> pw{1.0, 0.0};
  double acc = minus[0].real();
  for (unsigned nu = 1; nu <= kappa; ++nu) {
    pw *= w;
    acc += 2.0 * (minus[nu] * pw).real();
  }
  return acc;
}

namespace {

TrigPolynomial axis_to_poly(const std::vector<std::complex<double>>& c, unsigned kappa) {
  TrigPolynomial p(1, kappa);
  for (unsigned nu = 0; nu <= kappa; ++nu) {
    int v = static_cast<int>(nu);
    p.at({v}) = c[nu];
    if (nu > 0) p.at({-v}) = std::conj(c[nu]);
  }
  return p;
}

std::vector<std::complex<double>> expand_full(const std::vector<std::complex<double>>& c,
                                              unsigned kappa) {
  std::vector<std::complex<double>> full(2 * static_cast<size_t>(kappa) + 1);
  for (unsigned nu = 0; nu <= kappa; ++nu) {
    full[kappa + nu] = c[nu];
    full[kappa - nu] = std::conj(c[nu]);
  }
  return full;
}

}  // namespace

TrigPolynomial VaalerAxis::poly_plus() const { return axis_to_poly(plus, kappa); }
TrigPolynomial VaalerAxis::poly_minus() const { return axis_to_poly(minus, kappa); }
std::vector<std::complex<double>> VaalerAxis::full_plus() const {
  return expand_full(plus, kappa);
}
std::vector<std::complex<double>> VaalerAxis::full_minus() const {
  return expand_full(minus, kappa);
}

VaalerPair vaaler_pair(const TorusInterval& I, unsigned kappa) {
  VaalerAxis axis = vaaler_axis(I, kappa);
  return VaalerPair{axis.poly_minus(), axis.poly_plus(), axis.mean_minus,
                    axis.mean_plus};
}

RectApproximant::RectApproximant(const TorusRectangle& R, unsigned kappa)
    : kappa_(kappa) {
  if (R.intervals.empty()) throw ValidationError("RectApproximant: empty rectangle");
  axes_.reserve(R.intervals.size());
  for (const auto& I : R.intervals) axes_.push_back(vaaler_axis(I, kappa));
}

double RectApproximant::majorant_value(std::span<const double> x) const {
  if (x.size() != axes_.size())
    throw ValidationError("RectApproximant: wrong point rank");
  double prod = 1.0;
  for (size_t i = 0; i < axes_.size(); ++i) prod *= axes_[i].eval_plus(x[i]);
  return prod;
}

double RectApproximant::minorant_value(std::span<const double> x) const {
  if (x.size() != axes_.size())
    throw ValidationError("RectApproximant: wrong point rank");
  size_t r = axes_.size();
  std::vector<double> plus(r), minus(r);
  for (size_t i = 0; i < r; ++i) {
    plus[i] = axes_[i].eval_plus(x[i]);
    minus[i] = axes_[i].eval_minus(x[i]);
  }
  double prod = 1.0;
  for (double v : plus) prod *= v;
  double value = prod;
  for (size_t i = 0; i < r; ++i) {
    double term = plus[i] - minus[i];
    for (size_t j = 0; j < r; ++j) {
      if (j != i) term *= plus[j];
    }
    value -= term;
  }
  return value;
}

Rational RectApproximant::majorant_mean() const {
  Rational prod = 1;
  for (const auto& a : axes_) prod *= a.mean_plus;
  return prod;
}

Rational RectApproximant::minorant_mean() const {
  Rational prod = 1;
  for (const auto& a : axes_) prod *= a.mean_plus;
  Rational value = prod;
  for (size_t i = 0; i < axes_.size(); ++i) {
    Rational term = axes_[i].mean_plus - axes_[i].mean_minus;
    for (size_t j = 0; j < axes_.size(); ++j) {
      if (j != i) term *= axes_[j].mean_plus;
    }
    value -= term;
  }
  return value;
}

TrigPolynomial RectApproximant::majorant_poly() const {
  unsigned r = rank();
  TrigPolynomial out(r, kappa_);
  std::vector<std::vector<std::complex<double>>> full;
  full.reserve(r);
  for (const auto& a : axes_) full.push_back(a.full_plus());
  auto& raw = out.raw();
  size_t side = 2 * static_cast<size_t>(kappa_) + 1;
  for (size_t idx = 0; idx < raw.size(); ++idx) {
    std::complex<double> v{1.0, 0.0};
    size_t rem = idx;
    for (unsigned a = 0; a < r; ++a) {
      v *= full[a][rem % side];
      rem /= side;
    }
    raw[idx] = v;
  }
  return out;
}

TrigPolynomial RectApproximant::minorant_poly() const {
  unsigned r = rank();
  size_t side = 2 * static_cast<size_t>(kappa_) + 1;
  std::vector<std::vector<std::complex<double>>> plus, gap;
  plus.reserve(r);
  gap.reserve(r);
  for (const auto& a : axes_) {
    plus.push_back(a.full_plus());
    auto g = a.full_plus();
    auto m = a.full_minus();
    for (size_t i = 0; i < g.size(); ++i) g[i] -= m[i];
    gap.push_back(std::move(g));
  }
  TrigPolynomial out(r, kappa_);
  auto& raw = out.raw();
  for (size_t idx = 0; idx < raw.size(); ++idx) {
    std::complex<double> prod{1.0, 0.0};
    size_t rem = idx;
    for (unsigned a = 0; a < r; ++a) {
      prod *= plus[a][rem % side];
      rem /= side;
    }
    std::complex<double> value = prod;
    for (unsigned i = 0; i < r; ++i) {
      std::complex<double> term{1.0, 0.0};
      rem = idx;
      for (unsigned a = 0; a < r; ++a) {
        size_t k = rem % side;
        rem /= side;
        term *= (a == i) ? gap[a][k] : plus[a][k];
      }
      value -= term;
    }
    raw[idx] = value;
  }
  return out;
}

RectPair rect_pair(const TorusRectangle& R, unsigned kappa) {
  RectApproximant approx(R, kappa);
  return RectPair{approx.minorant_poly(), approx.majorant_poly(),
                  approx.minorant_mean(), approx.majorant_mean()};
}

}  // namespace weilbounds
