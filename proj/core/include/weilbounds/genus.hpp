#ifndef WEILBOUNDS_GENUS_HPP
#define WEILBOUNDS_GENUS_HPP

#include "weilbounds/polynomial.hpp"
#include "weilbounds/quadratic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weilbounds {

// Frobenius angles in [0, pi], strictly increasing.  Angles that are exact
// rational multiples of pi carry their ratio so cosines can be evaluated
// exactly where the table allows (denominators 1, 2, 3).
struct AngleSet {
  std::vector<double> angles;
  std::vector<std::optional<Rational>> pi_multiples;  // theta / pi when exact
  std::vector<double> multiplicities;                 // optional, evaluation mode

  size_t size() const { return angles.size(); }
  bool has_multiplicities() const { return !multiplicities.empty(); }

  // "0.5pi,1pi" or plain radians like "1.0471"; rational-multiple-of-pi
  // tokens are detected exactly.
  static AngleSet parse(const std::string& csv);
  static AngleSet from_pi_multiples(const std::vector<Rational>& ratios);

  void validate() const;
};

// cos(x pi) as an exact rational, when the reduced denominator of x is
// 1, 2 or 3.
std::optional<Rational> exact_cos_pi(const Rational& x);

enum class LPMode { kAuto, kExact, kFloat };

struct GenusLPResult {
  enum class Status { kOptimal, kUnbounded };
  Status status = Status::kOptimal;
  bool exact_mode = false;
  unsigned n_max = 0;
  // Exact-mode values live in Q(sqrt(q)); in every tested instance the
  // optimum is rational and optimum_exact is set.
  std::optional<Rational> optimum_exact;
  double optimum_value = 0.0;
  std::vector<double> multiplicities;
  std::vector<Rational> multiplicities_exact;  // exact mode only
  std::vector<unsigned> binding_rows;          // values of n with tight rows
  double max_residual = 0.0;                   // float mode constraint violation
};

// Default row count: twice the lcm of the pi-multiple denominators when all
// angles are rational multiples of pi, else 16.
unsigned default_n_max(const AngleSet& S);

// Maximize sum of multiplicities subject to
//   2 q^{n/2} sum_j g_j cos(n theta_j) <= q^n + 1,  1 <= n <= n_max,  g >= 0.
GenusLPResult max_genus_lp(const BigInt& q, const AngleSet& S, unsigned n_max,
                           LPMode mode = LPMode::kAuto);

// q^n + 1 - 2 q^{n/2} sum_j g_j cos(n theta_j); the point count of a curve
// with these Frobenius angles over F_{q^n}.
double point_count(const BigInt& q, unsigned n, const AngleSet& S);

// 23 |S|^2 q^{2|S|} log q with the natural logarithm.
double ehr_bound(const BigInt& q, unsigned s);

struct FermatData {
  BigInt genus;                  // p^r (p^r - 1) / 2
  std::vector<double> angles;    // (2k+1) pi / (2r), 0 <= k < r
  double multiplicity_per_angle; // 2 genus / (2r)
  BigInt points_over_square_field;  // 1 + p^{2r} + 2 g p^r
  bool maximality_check = false; // Weil-bound equality over F_{p^{2r}}
};

FermatData fermat_data(const BigInt& p, unsigned r);

// c (g / ln^3 g)^{1/4}; requires g >= 3.
double madan_madden_min_exponent(double g, double c);

struct DejongResult {
  BigInt p1_product;                   // prod |P_i(1)|
  std::vector<IntPolynomial> factors;  // irreducible weight-1 q-Weil, deg <= 2d
  std::vector<BigInt> p1_values;
  unsigned long long genus_bound = 0;  // largest g with mm(g, c) <= product
  bool cap_hit = false;                // search cap 10^18 reached
  bool bracketing_ok = false;          // mm(g) <= P < mm(g+1) re-verified
};

DejongResult dejong_genus_bound(const BigInt& q, unsigned d, double c);

}  // namespace weilbounds

#endif
