#ifndef WEILBOUNDS_VAALER_HPP
#define WEILBOUNDS_VAALER_HPP

#include "weilbounds/trig.hpp"

#include <complex>
#include <span>
#include <vector>

namespace weilbounds {

// Half-open interval [a, b) on T = [0, 1).  a > b encodes wrap-around,
// a == b a degenerate point target, and (a, b) = (0, 1) the full torus.
struct TorusInterval {
  double a = 0.0;
  double b = 0.0;

  static TorusInterval make(double a, double b);
  double length() const;          // in [0, 1]
  Rational length_exact() const;  // the same value as an exact rational
  bool is_degenerate() const { return a == b; }
  bool is_full() const;
  bool contains(double x) const;  // x taken mod 1
};

struct TorusRectangle {
  std::vector<TorusInterval> intervals;

  unsigned rank() const { return static_cast<unsigned>(intervals.size()); }
  bool contains(std::span<const double> x) const;
};

struct BeurlingTransforms {
  double j_hat;  // pi t (1 - |t|) cot(pi t) + |t|, value 1 at t = 0
  double k_hat;  // 1 - |t|
};

// Defined for |t| < 1; throws ValidationError outside.
BeurlingTransforms beurling_transforms(double t);

// One axis of a sandwich pair: coefficients for nu = 0..kappa with the
// negative side implied by Hermitian symmetry, plus exact means.
struct VaalerAxis {
  std::vector<std::complex<double>> plus, minus;  // index nu
  Rational mean_plus, mean_minus;
  unsigned kappa = 0;

  double eval_plus(double x) const;
  double eval_minus(double x) const;
  TrigPolynomial poly_plus() const;
  TrigPolynomial poly_minus() const;
  // Full coefficient arrays, index nu + kappa.
  std::vector<std::complex<double>> full_plus() const;
  std::vector<std::complex<double>> full_minus() const;
};

VaalerAxis vaaler_axis(const TorusInterval& I, unsigned kappa);

struct VaalerPair {
  TrigPolynomial minorant;
  TrigPolynomial majorant;
  Rational minorant_mean, majorant_mean;  // exact constant coefficients
};

// Degree-kappa trigonometric minorant/majorant of the interval indicator
// with mean gap exactly 2/(kappa+1) for genuine intervals.
VaalerPair vaaler_pair(const TorusInterval& I, unsigned kappa);

// Rank-r sandwich for a rectangle: the majorant is the tensor product of
// axis majorants, the minorant the telescoping combination
// prod P_i^+ - sum_i (P_i^+ - P_i^-) prod_{j != i} P_j^+.
class RectApproximant {
 public:
  RectApproximant(const TorusRectangle& R, unsigned kappa);

  unsigned rank() const { return static_cast<unsigned>(axes_.size()); }
  unsigned kappa() const { return kappa_; }

  double majorant_value(std::span<const double> x) const;
  double minorant_value(std::span<const double> x) const;

  Rational majorant_mean() const;
  Rational minorant_mean() const;

  TrigPolynomial majorant_poly() const;
  TrigPolynomial minorant_poly() const;

 private:
  std::vector<VaalerAxis> axes_;
  unsigned kappa_;
};

struct RectPair {
  TrigPolynomial minorant;
  TrigPolynomial majorant;
  Rational minorant_mean, majorant_mean;
};

RectPair rect_pair(const TorusRectangle& R, unsigned kappa);

}  // namespace weilbounds

#endif
