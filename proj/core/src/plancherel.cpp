#include "weilbounds/plancherel.hpp"

#include "weilbounds/parallel.hpp"
#include "weilbounds/sturm.hpp"
#include "weilbounds/weil.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace weilbounds {

namespace {

constexpr size_t kChunk = 8192;

double weighted_average(const SpectralFamily& family,
                        const std::function<double(std::span<const double>)>& f) {
  auto chunks = chunked_map<std::pair<double, double>>(
      family.size(), kChunk, default_thread_count(),
      [&](size_t, size_t begin, size_t end) {
        KahanSum value, weight;
        for (size_t i = begin; i < end; ++i) {
          double w = family.weights[i];
          value.add(w * f(family.point(i)));
          weight.add(w);
        }
        return std::make_pair(value.sum, weight.sum);
      });
  KahanSum value, weight;
  for (const auto& [v, w] : chunks) {
    value.add(v);
    weight.add(w);
  }
  if (weight.sum <= 0.0) throw ValidationError("family has no positive weight");
  return value.sum / weight.sum;
}

bool torus_close(double x, double z, double tol) {
  double d = std::fabs(x - z);
  d -= std::floor(d);
  if (d > 0.5) d = 1.0 - d;
  return d <= tol;
}

}  // namespace

MeasureEstimate estimate_measure(const SpectralFamily& family,
                                 const TorusRectangle& R, unsigned kappa) {
  if (R.rank() != family.rank)
    throw ValidationError("estimate_measure: rank mismatch");
  RectApproximant approx(R, kappa);
  MeasureEstimate out;
  out.exact = weighted_average(
      family, [&](std::span<const double> x) { return R.contains(x) ? 1.0 : 0.0; });
  out.lower = weighted_average(
      family, [&](std::span<const double> x) { return approx.minorant_value(x); });
  out.upper = weighted_average(
      family, [&](std::span<const double> x) { return approx.majorant_value(x); });
  return out;
}

SparseFraction sparse_fraction(const SpectralFamily& family,
                               const std::vector<std::vector<double>>& Z,
                               unsigned kappa) {
  if (Z.empty()) throw ValidationError("sparse_fraction: Z must be nonempty");
  if (kappa < 1) throw ValidationError("sparse_fraction: kappa must be >= 1");
  const unsigned rank = family.rank;
  for (const auto& z : Z) {
    if (z.size() != rank) throw ValidationError("sparse_fraction: rank mismatch in Z");
  }
  SparseFraction out;
  constexpr double kPointTol = 1e-12;
  out.exact = weighted_average(family, [&](std::span<const double> x) {
    for (const auto& z : Z) {
      bool all = true;
      for (unsigned a = 0; a < rank && all; ++a) all = torus_close(x[a], z[a], kPointTol);
      if (all) return 1.0;
    }
    return 0.0;
  });

  KahanSum upper;
  for (const auto& z : Z) {
    TorusRectangle point;
    for (unsigned a = 0; a < rank; ++a)
      point.intervals.push_back(TorusInterval::make(z[a], z[a]));
    RectApproximant approx(point, kappa);
    upper.add(weighted_average(family, [&](std::span<const double> x) {
      return approx.majorant_value(x);
    }));
  }
  out.upper = upper.sum;
  out.lower = 0.0;
  double per_point = std::pow(2.0 / (static_cast<double>(kappa) + 1.0), rank);
  out.ceiling = static_cast<double>(Z.size()) * per_point;
  out.deviation = out.upper - out.ceiling;
  return out;
}

std::vector<DecayRow> decay_experiment(const std::vector<std::vector<double>>& Z,
                                       const DensitySpec& density,
                                       const std::vector<size_t>& sizes,
                                       uint64_t seed) {
  for (size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1])
      throw ValidationError("decay_experiment: sizes must be increasing");
  }
  std::vector<DecayRow> rows;
  if (Z.empty()) return rows;
  for (size_t size : sizes) {
    unsigned kappa = static_cast<unsigned>(
        std::max(1.0, std::ceil(std::log(static_cast<double>(size)))));
    SpectralFamily family = sample_family(density, size, seed);
    SparseFraction sf = sparse_fraction(family, Z, kappa);
    rows.push_back(DecayRow{size, kappa, sf.exact, sf.lower, sf.upper, sf.ceiling});
  }
  return rows;
}

SerreDecayResult serre_decay_experiment(const BigInt& q, unsigned k, unsigned A,
                                        const std::vector<size_t>& sizes,
                                        uint64_t seed,
                                        const DensitySpec& density) {
  if (density.rank() != 1)
    throw ValidationError("serre_decay_experiment: density must have rank 1");
  SerreDecayResult out;
  auto candidates = hecke_trace_candidates(q, k, A);
  BigInt Nw = pow_bigint(q, k - 1);
  double two_sqrt = 2.0 * std::sqrt(Nw.convert_to<double>());
  BigInt bound = isqrt_floor(4 * Nw) + 1;
  std::vector<double> zs;
  for (const auto& poly : candidates) {
    std::vector<double> roots;
    if (poly.degree() == 1) {
      roots.push_back((-poly.coeff(0)).convert_to<double>());
    } else {
      roots = isolate_real_roots(poly, Rational(-bound), Rational(bound));
    }
    for (double t : roots) {
      double c = t / two_sqrt;
      c = std::clamp(c, -1.0, 1.0);
      zs.push_back(std::acos(c) / (2.0 * std::numbers::pi));
    }
  }
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end(),
                       [](double x, double y) { return std::fabs(x - y) < 1e-12; }),
           zs.end());
  out.admissible_points = zs;
  if (zs.empty()) {
    out.empty_admissible_set = true;
    return out;
  }
  std::vector<std::vector<double>> Z;
  for (double z : zs) Z.push_back({z});
  out.rows = decay_experiment(Z, density, sizes, seed);
  return out;
}

int min_degree_for_count(const BigInt& q, size_t M, unsigned d_cap) {
  if (M < 1) throw ValidationError("min_degree_for_count: M must be >= 1");
  WeilParams params = WeilParams::make(q, 1);
  EnumerateOptions opts;
  opts.irreducible_only = true;
  size_t running = 0;
  for (unsigned d = 1; d <= d_cap; ++d) {
    running += enumerate_weil_polynomials(params, d, opts).size();
    if (running >= M) return static_cast<int>(d);
  }
  return -1;
}

}  // namespace weilbounds
