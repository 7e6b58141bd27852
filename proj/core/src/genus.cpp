#include "weilbounds/genus.hpp"

#include "weilbounds/simplex.hpp"
#include "weilbounds/weil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace weilbounds {

namespace {

Rational parse_decimal_rational(const std::string& s) {
  // "0.5", "-2", "2/3"
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("angle parse: zero denominator");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(BigInt(s));
  std::string whole = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  bool negative = !whole.empty() && whole[0] == '-';
  if (whole == "-" || whole.empty()) whole = "0";
  BigInt w(whole);
  if (negative) w = -w;
  BigInt scale = pow_bigint(10, frac.size());
  BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
  Rational value = Rational(w) + Rational(f, scale);
  return negative ? -value : value;
}

}  // namespace

AngleSet AngleSet::parse(const std::string& csv) {
  AngleSet out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    // trim
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("angle parse: empty token");
    token = token.substr(b, e - b + 1);
    if (token.size() >= 2 && token.substr(token.size() - 2) == "pi") {
      std::string head = token.substr(0, token.size() - 2);
      if (head.empty()) head = "1";
      Rational ratio = parse_decimal_rational(head);
      out.pi_multiples.push_back(ratio);
      out.angles.push_back(ratio.convert_to<double>() * std::numbers::pi);
    } else {
      out.pi_multiples.push_back(std::nullopt);
      out.angles.push_back(std::stod(token));
    }
  }
  out.validate();
  return out;
}

AngleSet AngleSet::from_pi_multiples(const std::vector<Rational>& ratios) {
  AngleSet out;
  for (const auto& r : ratios) {
    out.pi_multiples.push_back(r);
    out.angles.push_back(r.convert_to<double>() * std::numbers::pi);
  }
  out.validate();
  return out;
}

void AngleSet::validate() const {
  if (angles.empty()) throw ValidationError("AngleSet: empty");
  for (size_t i = 0; i < angles.size(); ++i) {
    if (!(angles[i] >= 0.0 && angles[i] <= std::numbers::pi + 1e-12))
      throw ValidationError("AngleSet: angles must lie in [0, pi]");
    if (i > 0 && !(angles[i] > angles[i - 1]))
      throw ValidationError("AngleSet: angles must be strictly increasing");
  }
  if (!multiplicities.empty() && multiplicities.size() != angles.size())
    throw ValidationError("AngleSet: multiplicities misaligned");
}

std::optional<Rational> exact_cos_pi(const Rational& x) {
  // Reduce mod 2.
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt two_den = 2 * den;
  BigInt m = num % two_den;
  if (m < 0) m += two_den;
  // cos(m/den * pi) with 0 <= m < 2 den.
  if (den == 1) return m == 0 ? Rational(1) : Rational(-1);
  if (den == 2) return Rational(0);  // m odd since x is reduced
  if (den == 3) {
    // m in {1,2,4,5}: 1/2, -1/2, -1/2, 1/2
    if (m == 1 || m == 5) return Rational(1, 2);
    return Rational(-1, 2);
  }
  return std::nullopt;
}

unsigned default_n_max(const AngleSet& S) {
  BigInt l = 1;
  for (const auto& pm : S.pi_multiples) {
    if (!pm) return 16;
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(*pm));
  }
  BigInt n = 2 * l;
  if (n > 64) return 64;
  return n.convert_to<unsigned>();
}

namespace {

struct QuadOps {
  BigInt disc;
  QuadExt zero() const { return QuadExt::rational(0); }
  QuadExt one() const { return QuadExt::rational(1); }
  int sign(const QuadExt& v) const { return v.sign(); }
};

struct DoubleOps {
  double eps = 1e-9;
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  int sign(double v) const { return v > eps ? 1 : (v < -eps ? -1 : 0); }
};

bool exact_mode_available(const BigInt& /*q*/, const AngleSet& S) {
  // cos(n theta) stays rational for every n exactly when each theta is a
  // multiple of pi, pi/2 or pi/3; the sqrt(q) factor lives in QuadExt.
  for (const auto& pm : S.pi_multiples) {
    if (!pm) return false;
    BigInt den = boost::multiprecision::denominator(*pm);
    if (den > 3) return false;
  }
  return true;
}

}  // namespace

GenusLPResult max_genus_lp(const BigInt& q, const AngleSet& S, unsigned n_max,
                           LPMode mode) {
  if (n_max < 1) throw ValidationError("max_genus_lp: n_max must be >= 1");
  if (q < 2 || !is_prime_power(q))
    throw ValidationError("max_genus_lp: q must be a prime power");
  S.validate();
  bool exact_ok = exact_mode_available(q, S);
  bool use_exact;
  switch (mode) {
    case LPMode::kAuto: use_exact = exact_ok; break;
    case LPMode::kExact:
      if (!exact_ok)
        throw ValidationError(
            "max_genus_lp: exact mode needs angles with rational cosines");
      use_exact = true;
      break;
    case LPMode::kFloat: use_exact = false; break;
  }

  GenusLPResult out;
  out.exact_mode = use_exact;
  out.n_max = n_max;
  size_t nvars = S.size();

  if (use_exact) {
    using Solver = SimplexSolver<QuadExt, QuadOps>;
    std::vector<std::vector<QuadExt>> A(n_max, std::vector<QuadExt>(nvars));
    std::vector<QuadExt> b(n_max), c(nvars, QuadExt::rational(1));
    for (unsigned n = 1; n <= n_max; ++n) {
      // 2 q^{n/2} = 2 q^{floor(n/2)} sqrt(q)^{n mod 2}
      BigInt qh = pow_bigint(q, n / 2);
      QuadExt scale = (n % 2 == 0) ? QuadExt::rational(Rational(2 * qh))
                                   : QuadExt(0, Rational(2 * qh), q);
      for (size_t j = 0; j < nvars; ++j) {
        Rational cosv = *exact_cos_pi(Rational(n) * *S.pi_multiples[j]);
        A[n - 1][j] = scale * QuadExt::rational(cosv);
      }
      b[n - 1] = QuadExt::rational(Rational(pow_bigint(q, n) + 1));
    }
    auto result = Solver::maximize(A, b, c, QuadOps{q});
    if (result.status == Solver::Status::kUnbounded) {
      out.status = GenusLPResult::Status::kUnbounded;
      return out;
    }
    out.status = GenusLPResult::Status::kOptimal;
    if (result.optimum.is_rational()) out.optimum_exact = result.optimum.rational_part();
    out.optimum_value = result.optimum.to_double();
    for (const auto& v : result.solution) {
      out.multiplicities.push_back(v.to_double());
      if (v.is_rational()) out.multiplicities_exact.push_back(v.rational_part());
    }
    if (out.multiplicities_exact.size() != nvars) out.multiplicities_exact.clear();
    for (size_t r : result.binding_rows)
      out.binding_rows.push_back(static_cast<unsigned>(r + 1));
    return out;
  }

  using Solver = SimplexSolver<double, DoubleOps>;
  double qd = q.convert_to<double>();
  std::vector<std::vector<double>> A(n_max, std::vector<double>(nvars));
  std::vector<double> b(n_max), c(nvars, 1.0);
  for (unsigned n = 1; n <= n_max; ++n) {
    double scale = 2.0 * std::pow(qd, 0.5 * n);
    for (size_t j = 0; j < nvars; ++j)
      A[n - 1][j] = scale * std::cos(n * S.angles[j]);
    b[n - 1] = std::pow(qd, n) + 1.0;
  }
  auto result = Solver::maximize(A, b, c, DoubleOps{});
  if (result.status == Solver::Status::kUnbounded) {
    out.status = GenusLPResult::Status::kUnbounded;
    return out;
  }
  out.status = GenusLPResult::Status::kOptimal;
  out.optimum_value = result.optimum;
  out.multiplicities = result.solution;
  for (size_t r : result.binding_rows)
    out.binding_rows.push_back(static_cast<unsigned>(r + 1));
  double worst = 0.0;
  for (unsigned n = 1; n <= n_max; ++n) {
    double lhs = 0.0;
    for (size_t j = 0; j < nvars; ++j) lhs += A[n - 1][j] * result.solution[j];
    worst = std::max(worst, lhs - b[n - 1]);
  }
  out.max_residual = worst;
  return out;
}

double point_count(const BigInt& q, unsigned n, const AngleSet& S) {
  if (!S.has_multiplicities())
    throw ValidationError("point_count: multiplicities required");
  double qd = q.convert_to<double>();
  double total = std::pow(qd, n) + 1.0;
  double scale = 2.0 * std::pow(qd, 0.5 * n);
  for (size_t j = 0; j < S.size(); ++j)
    total -= scale * S.multiplicities[j] * std::cos(n * S.angles[j]);
  return total;
}

double ehr_bound(const BigInt& q, unsigned s) {
  if (q < 2) throw ValidationError("ehr_bound: q must be >= 2");
  if (s < 1) throw ValidationError("ehr_bound: |S| must be >= 1");
  double lq = log_bigint(q);
  return 23.0 * static_cast<double>(s) * s * std::exp(2.0 * s * lq) * lq;
}

FermatData fermat_data(const BigInt& p, unsigned r) {
  if (!is_prime(p)) throw ValidationError("fermat_data: p must be prime");
  if (r < 1) throw ValidationError("fermat_data: r must be >= 1");
  FermatData out;
  BigInt pr = pow_bigint(p, r);
  out.genus = pr * (pr - 1) / 2;
  for (unsigned k = 0; k < r; ++k)
    out.angles.push_back((2.0 * k + 1.0) * std::numbers::pi / (2.0 * r));
  out.multiplicity_per_angle = out.genus.convert_to<double>() / r;
  // Over F_{p^{2r}} every Frobenius eigenvalue becomes -p^r (angle pi), so
  // the point count is q' + 1 + 2 g sqrt(q') with q' = p^{2r}.
  BigInt qprime = pr * pr;
  out.points_over_square_field = 1 + qprime + 2 * out.genus * pr;
  BigInt from_count = qprime + 1 - 2 * pr * out.genus * BigInt(-1);
  out.maximality_check = (from_count == out.points_over_square_field);
  return out;
}

double madan_madden_min_exponent(double g, double c) {
  if (!(g >= 3.0)) throw ValidationError("madan_madden_min_exponent: g must be >= 3");
  if (!(c > 0.0)) throw ValidationError("madan_madden_min_exponent: c must be positive");
  double lg = std::log(g);
  return c * std::pow(g / (lg * lg * lg), 0.25);
}

DejongResult dejong_genus_bound(const BigInt& q, unsigned d, double c) {
  if (d < 1) throw ValidationError("dejong_genus_bound: d must be >= 1");
  if (!(c > 0.0)) throw ValidationError("dejong_genus_bound: c must be positive");
  DejongResult out;
  WeilParams params = WeilParams::make(q, 1);
  EnumerateOptions opts;
  opts.irreducible_only = true;
  out.p1_product = 1;
  for (unsigned deg = 1; deg <= 2 * d; ++deg) {
    for (auto& poly : enumerate_weil_polynomials(params, deg, opts)) {
      BigInt value = poly.evaluate(BigInt(1));
      if (value == 0)
        throw InvariantError("dejong_genus_bound: P(1) = 0 for a Weil factor");
      out.p1_values.push_back(value);
      out.p1_product *= value < 0 ? -value : value;
      out.factors.push_back(std::move(poly));
    }
  }

  const double log_p = log_bigint(out.p1_product);
  auto mm_le_product = [&](unsigned long long g) {
    double lg = std::log(static_cast<double>(g));
    double log_mm = std::log(c) + 0.25 * (lg - 3.0 * std::log(lg));
    return log_mm <= log_p;
  };

  constexpr unsigned long long kCap = 1000000000000000000ULL;  // 10^18
  // (g / ln^3 g)^{1/4} is increasing for g > e^3, so search the rising
  // branch from 21 and fall back to a scan below it.
  if (!mm_le_product(21)) {
    unsigned long long best = 0;
    for (unsigned long long g = 3; g <= 21; ++g) {
      if (mm_le_product(g)) best = g;
    }
    out.genus_bound = best;
    out.bracketing_ok =
        best == 0 || (mm_le_product(best) && !mm_le_product(best + 1));
    return out;
  }
  unsigned long long lo = 21, hi = lo;
  while (hi < kCap && mm_le_product(hi)) {
    lo = hi;
    hi = hi > kCap / 2 ? kCap : hi * 2;
  }
  if (hi >= kCap && mm_le_product(kCap)) {
    out.genus_bound = kCap;
    out.cap_hit = true;
    out.bracketing_ok = true;
    return out;
  }
  while (hi - lo > 1) {
    unsigned long long mid = lo + (hi - lo) / 2;
    if (mm_le_product(mid))
      lo = mid;
    else
      hi = mid;
  }
  out.genus_bound = lo;
  out.bracketing_ok = mm_le_product(lo) && !mm_le_product(lo + 1);
  return out;
}

}  // namespace weilbounds
