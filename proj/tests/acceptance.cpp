// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in code next to each check.

#include "weilbounds/conductor.hpp"
#include "weilbounds/genus.hpp"
#include "weilbounds/parallel.hpp"
#include "weilbounds/plancherel.hpp"
#include "weilbounds/vaaler.hpp"
#include "weilbounds/weil.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace weilbounds;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

bool same_set(std::vector<IntPolynomial> a, std::vector<IntPolynomial> b) {
  std::sort(a.begin(), a.end(), IntPolynomial::lex_less);
  std::sort(b.begin(), b.end(), IntPolynomial::lex_less);
  return a == b;
}

// 1. Weil enumeration exactness at (q=2, w=1, m=2).
bool criterion_enumeration(std::string& detail) {
  auto params = WeilParams::make(2, 1);
  auto exact = enumerate_weil_polynomials(params, 2);
  std::vector<IntPolynomial> expected;
  for (long a = -2; a <= 2; ++a) expected.push_back(IntPolynomial({2, a, 1}));
  expected.push_back(IntPolynomial({-2, 0, 1}));
  if (!same_set(exact, expected)) {
    detail = "expected the six classical polynomials";
    return false;
  }
  std::vector<IntPolynomial> oracle;
  for (auto& cand : oracles::float_weil_search(2, 2, 1e-6)) {
    if (is_weil_polynomial(cand, params).ok) oracle.push_back(std::move(cand));
  }
  if (!same_set(exact, oracle)) {
    detail = "float oracle disagrees";
    return false;
  }
  detail = "6 polynomials, oracle match";
  return true;
}

// 2. Oracle equivalence sweep over N <= 16, m <= 4.
bool criterion_oracle_sweep(std::string& detail) {
  size_t checked = 0;
  for (long N = 2; N <= 16; ++N) {
    BigInt base;
    unsigned e = 0;
    if (!is_prime_power(BigInt(N), &base, &e)) continue;
    auto params = WeilParams::make(base, e);
    for (unsigned m = 1; m <= 4; ++m) {
      auto exact = enumerate_weil_polynomials(params, m);
      std::vector<IntPolynomial> oracle;
      for (auto& cand : oracles::float_weil_search(N, m, 1e-6)) {
        if (is_weil_polynomial(cand, params).ok) oracle.push_back(std::move(cand));
      }
      if (!same_set(exact, oracle)) {
        detail = "mismatch at N=" + std::to_string(N) + " m=" + std::to_string(m);
        return false;
      }
      ++checked;
    }
  }
  // Weight-0 instance (N = 1).
  auto w0 = WeilParams::make(2, 0);
  for (unsigned m = 1; m <= 4; ++m) {
    auto exact = enumerate_weil_polynomials(w0, m);
    std::vector<IntPolynomial> oracle;
    for (auto& cand : oracles::float_weil_search(1, m, 1e-6)) {
      if (is_weil_polynomial(cand, w0).ok) oracle.push_back(std::move(cand));
    }
    if (!same_set(exact, oracle)) {
      detail = "mismatch at N=1 m=" + std::to_string(m);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " (N, m) pairs";
  return true;
}

// 3. Vaaler identities: exact gap, sandwich on a 2^16 grid, decay constant.
bool criterion_vaaler(std::string& detail) {
  std::mt19937 rng(20240501);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const size_t grid = 1 << 16;
  std::vector<char> indicator(grid);
  double decay = 0.0;
  double worst_gap_err = 0.0, worst_sandwich = 0.0;
  for (unsigned kappa : {4u, 16u, 64u, 256u}) {
    for (int trial = 0; trial < 50; ++trial) {
      double a = unif(rng), b = unif(rng);
      TorusInterval I = TorusInterval::make(a, b);
      if (I.is_degenerate()) I = TorusInterval::make(a, std::fmod(a + 0.25, 1.0));
      VaalerAxis axis = vaaler_axis(I, kappa);
      double gap = (axis.mean_plus - axis.mean_minus).convert_to<double>();
      worst_gap_err = std::max(worst_gap_err,
                               std::fabs(gap - 2.0 / (kappa + 1.0)));
      double float_gap = axis.plus[0].real() - axis.minus[0].real();
      worst_gap_err = std::max(worst_gap_err,
                               std::fabs(float_gap - 2.0 / (kappa + 1.0)));
      for (size_t k = 0; k < grid; ++k)
        indicator[k] = I.contains(static_cast<double>(k) / grid) ? 1 : 0;
      auto plus = grid_evaluate_1d(axis.full_plus(), grid);
      auto minus = grid_evaluate_1d(axis.full_minus(), grid);
      for (size_t k = 0; k < grid; ++k) {
        worst_sandwich = std::max(worst_sandwich, indicator[k] - plus[k]);
        worst_sandwich = std::max(worst_sandwich, minus[k] - indicator[k]);
        worst_sandwich = std::max(worst_sandwich, -plus[k]);  // majorant >= 0
      }
      for (unsigned nu = 1; nu <= kappa; ++nu) {
        decay = std::max(decay, std::abs(axis.plus[nu]) * nu);
        decay = std::max(decay, std::abs(axis.minus[nu]) * nu);
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "gap err %.2e (tol 1e-12), sandwich slack %.2e (tol 1e-9), decay "
                "C=%.3f (cap 2)",
                worst_gap_err, worst_sandwich, decay);
  detail = buf;
  return worst_gap_err <= 1e-12 && worst_sandwich <= 1e-9 && decay <= 2.0;
}

// 4. Small-ball rate: exact point-majorant mean scaling and decay slope.
bool criterion_small_ball(std::string& detail) {
  for (unsigned r = 1; r <= 3; ++r) {
    TorusRectangle R;
    for (unsigned a = 0; a < r; ++a)
      R.intervals.push_back(TorusInterval::make(0.15 * (a + 1), 0.15 * (a + 1)));
    for (unsigned kappa = 1; kappa <= 64; ++kappa) {
      RectApproximant approx(R, kappa);
      Rational scaled =
          approx.majorant_mean() * Rational(pow_bigint(BigInt(kappa) + 1, r));
      if (scaled != Rational(pow_bigint(2, r))) {
        detail = "mean scaling broke at rank " + std::to_string(r) +
                 " kappa " + std::to_string(kappa);
        return false;
      }
    }
  }
  std::string slopes;
  for (unsigned rank = 1; rank <= 2; ++rank) {
    auto family = sample_family(DensitySpec::lebesgue(rank), 100000, 23);
    std::vector<std::vector<double>> Z;
    for (int i = 0; i < 5; ++i) {
      std::vector<double> z;
      for (unsigned a = 0; a < rank; ++a) z.push_back(0.09 + 0.17 * i + 0.05 * a);
      Z.push_back(std::move(z));
    }
    std::vector<double> lx, ly;
    for (unsigned kappa : {8u, 16u, 32u, 64u}) {
      auto sf = sparse_fraction(family, Z, kappa);
      lx.push_back(std::log(static_cast<double>(kappa)));
      ly.push_back(std::log(sf.upper));
    }
    double slope = oracles::regression_slope(lx, ly);
    char buf[48];
    std::snprintf(buf, sizeof(buf), " r=%u slope=%.3f", rank, slope);
    slopes += buf;
    if (std::fabs(slope + static_cast<double>(rank)) > 0.2) {
      detail = "slope out of band:" + slopes;
      return false;
    }
  }
  detail = "exact 2^r/(kappa+1)^r for ranks 1-3;" + slopes + " (band +-0.2)";
  return true;
}

// 5. Serre-decay experiment.
bool criterion_serre_decay(std::string& detail) {
  auto density = DensitySpec::lebesgue(1);
  std::vector<size_t> sizes = {100, 1000, 10000, 100000};
  auto result = serre_decay_experiment(2, 2, 1, sizes, 42, density);
  if (result.admissible_points.size() != 5) {
    detail = "admissible set size " + std::to_string(result.admissible_points.size());
    return false;
  }
  auto rerun = serre_decay_experiment(2, 2, 1, sizes, 42, density);
  for (size_t i = 0; i < result.rows.size(); ++i) {
    if (result.rows[i].upper != rerun.rows[i].upper ||
        result.rows[i].exact != rerun.rows[i].exact) {
      detail = "not deterministic";
      return false;
    }
  }
  std::string uppers;
  double prev = 1e300;
  for (const auto& row : result.rows) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), " %.4f", row.upper);
    uppers += buf;
    if (!(row.upper < prev)) {
      detail = "upper bounds not strictly decreasing:" + uppers;
      return false;
    }
    prev = row.upper;
    if (!(row.upper < 10.0 * 2.0 / (row.kappa + 1.0))) {
      detail = "upper exceeds 10 * 2/(kappa+1)";
      return false;
    }
  }
  detail = "uppers:" + uppers;
  return true;
}

// 6. Genus LP exactness.
bool criterion_genus_lp(std::string& detail) {
  auto lp1 = max_genus_lp(3, AngleSet::parse("0.5pi"), 4, LPMode::kExact);
  if (!lp1.optimum_exact || *lp1.optimum_exact != Rational(41, 9)) {
    detail = "LP(3, {pi/2}, 4) != 41/9";
    return false;
  }
  auto lp2 = max_genus_lp(2, AngleSet::parse("1pi"), 4, LPMode::kExact);
  if (!lp2.optimum_exact || *lp2.optimum_exact != Rational(5, 4)) {
    detail = "LP(2, {pi}, 4) != 5/4";
    return false;
  }
  for (auto [q, angles, nmax] : {std::tuple<long, const char*, unsigned>{3, "0.5pi", 4},
                                 {2, "1pi", 4}}) {
    AngleSet S = AngleSet::parse(angles);
    auto lp = max_genus_lp(q, S, nmax, LPMode::kExact);
    AngleSet withmult = S;
    withmult.multiplicities = lp.multiplicities;
    for (unsigned n = 1; n <= nmax; ++n) {
      if (point_count(q, n, withmult) < -1e-9) {
        detail = "negative point count at n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "41/9 and 5/4 exact; point counts nonnegative";
  return true;
}

// 7. Fermat consistency.
bool criterion_fermat(std::string& detail) {
  for (long p : {2L, 3L, 5L}) {
    auto fd = fermat_data(p, 1);
    if (fd.genus != BigInt(p) * (p - 1) / 2) {
      detail = "genus formula failed at p=" + std::to_string(p);
      return false;
    }
    if (!fd.maximality_check) {
      detail = "maximality identity failed at p=" + std::to_string(p);
      return false;
    }
    BigInt expected = 1 + BigInt(p) * p + 2 * fd.genus * p;
    if (fd.points_over_square_field != expected) {
      detail = "point formula failed at p=" + std::to_string(p);
      return false;
    }
    auto lp = max_genus_lp(p, AngleSet::parse("0.5pi"), 8, LPMode::kExact);
    if (lp.status != GenusLPResult::Status::kOptimal ||
        fd.genus.convert_to<double>() > lp.optimum_value + 1e-9) {
      detail = "Fermat genus above the LP bound at p=" + std::to_string(p);
      return false;
    }
  }
  detail = "p in {2,3,5}: genus <= LP bound, 1 + p^2 + 2gp exact";
  return true;
}

// 8. de Jong pipeline.
bool criterion_dejong(std::string& detail) {
  auto dj = dejong_genus_bound(2, 1, 1.0);
  if (dj.p1_product != 120) {
    detail = "P1 product " + dj.p1_product.str();
    return false;
  }
  for (const auto& v : dj.p1_values) {
    if (v == 0) {
      detail = "zero factor";
      return false;
    }
  }
  if (!dj.bracketing_ok || dj.cap_hit) {
    detail = "bracketing failed";
    return false;
  }
  double at = madan_madden_min_exponent(static_cast<double>(dj.genus_bound), 1.0);
  double next = madan_madden_min_exponent(static_cast<double>(dj.genus_bound + 1), 1.0);
  if (!(at <= 120.0 && next > 120.0)) {
    detail = "re-evaluated bracket failed";
    return false;
  }
  char buf[80];
  std::snprintf(buf, sizeof(buf), "P1=120, genus bound %llu, bracket re-verified",
                dj.genus_bound);
  detail = buf;
  return true;
}

// 9. Bound calculators.
bool criterion_bounds(std::string& detail) {
  auto v1 = depth_bound_v1(1, 1, LocalFieldParams::make(5, 1));
  if (v1.depth != Rational(1, 2)) {
    detail = "depth_bound_v1(1,1,p=5) != 1/2";
    return false;
  }
  if (lcm_phi_le(2) != 12) {
    detail = "lcm_phi_le(2) != 12";
    return false;
  }
  for (unsigned n = 1; n <= 5; ++n) {
    Rational cap = Rational(pow_bigint(BigInt(n), n));
    for (long N = 1; N <= 10000; ++N) {
      auto r = cyclotomic_ratio(n, N);
      if (r.ratio > cap) {
        detail = "cyclotomic ratio above n^n at n=" + std::to_string(n) +
                 " N=" + std::to_string(N);
        return false;
      }
    }
  }
  detail = "depth 1/2, lcm 12, cyclotomic <= n^n over n <= 5, N <= 10^4";
  return true;
}

// 10. Count-growth shape: log count <= C d^2 log q.
bool criterion_count_growth(std::string& detail) {
  double fitted = 0.0;
  std::string counts_str;
  for (long q : {2L, 3L}) {
    auto counts = count_weil_integers(q, 1, 6, default_thread_count());
    for (auto [d, n] : counts.cumulative) {
      if (n == 0) continue;
      double c = std::log(static_cast<double>(n)) /
                 (static_cast<double>(d) * d * std::log(static_cast<double>(q)));
      fitted = std::max(fitted, c);
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), " q=%ld:[%zu,%zu,%zu]", q, counts.cumulative[2],
                  counts.cumulative[4], counts.cumulative[6]);
    counts_str += buf;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "fitted C = %.4f;%s", fitted, counts_str.c_str());
  detail = buf;
  return fitted > 0.0 && std::isfinite(fitted);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "weil-enumeration-exactness", criterion_enumeration},
      {2, "oracle-equivalence-sweep", criterion_oracle_sweep},
      {3, "vaaler-identities", criterion_vaaler},
      {4, "small-ball-rate", criterion_small_ball},
      {5, "serre-decay-experiment", criterion_serre_decay},
      {6, "genus-lp-exactness", criterion_genus_lp},
      {7, "fermat-consistency", criterion_fermat},
      {8, "dejong-pipeline", criterion_dejong},
      {9, "bound-calculators", criterion_bounds},
      {10, "count-growth-shape", criterion_count_growth},
  };
  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    std::printf("[%s] %2d. %-28s (%6.2f s) %s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
