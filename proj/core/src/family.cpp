#include "weilbounds/family.hpp"

#include "weilbounds/parallel.hpp"

#include <cmath>

namespace weilbounds {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double uniform01(uint64_t seed, uint64_t counter) {
  uint64_t z = splitmix64(splitmix64(seed ^ 0x8AD6C2F9E1B70A34ULL) + counter);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

DensitySpec DensitySpec::lebesgue(unsigned rank) {
  if (rank < 1) throw ValidationError("DensitySpec: rank must be >= 1");
  DensitySpec d;
  d.rank_ = rank;
  d.tag_ = "lebesgue";
  return d;
}

DensitySpec DensitySpec::piecewise_linear(std::vector<std::vector<Node>> axes,
                                          bool require_bounded_below) {
  if (axes.empty()) throw ValidationError("DensitySpec: no axes");
  DensitySpec d;
  d.rank_ = static_cast<unsigned>(axes.size());
  d.tag_ = "piecewise-linear";
  d.axes_ = std::move(axes);
  d.cdf_.resize(d.axes_.size());
  for (size_t a = 0; a < d.axes_.size(); ++a) {
    auto& nodes = d.axes_[a];
    if (nodes.size() < 2) throw ValidationError("DensitySpec: need >= 2 nodes");
    if (nodes.front().x != 0.0 || nodes.back().x != 1.0)
      throw ValidationError("DensitySpec: table must span [0, 1]");
    double mass = 0.0;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (!(nodes[i + 1].x > nodes[i].x))
        throw ValidationError("DensitySpec: node positions must increase");
      if (nodes[i].value < 0.0 || nodes[i + 1].value < 0.0)
        throw ValidationError("DensitySpec: density must be nonnegative");
      mass += 0.5 * (nodes[i].value + nodes[i + 1].value) * (nodes[i + 1].x - nodes[i].x);
    }
    if (mass <= 0.0) throw ValidationError("DensitySpec: unnormalizable density");
    for (auto& n : nodes) {
      n.value /= mass;
      if (require_bounded_below && n.value <= 0.0)
        throw ValidationError("DensitySpec: density not bounded below");
    }
    auto& cdf = d.cdf_[a];
    cdf.assign(nodes.size(), 0.0);
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      cdf[i + 1] = cdf[i] + 0.5 * (nodes[i].value + nodes[i + 1].value) *
                                (nodes[i + 1].x - nodes[i].x);
    }
    cdf.back() = 1.0;  // exact after normalization
  }
  return d;
}

double DensitySpec::density_value(unsigned axis, double x) const {
  if (is_lebesgue()) return 1.0;
  const auto& nodes = axes_.at(axis);
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (x <= nodes[i + 1].x) {
      double t = (x - nodes[i].x) / (nodes[i + 1].x - nodes[i].x);
      return nodes[i].value + t * (nodes[i + 1].value - nodes[i].value);
    }
  }
  return nodes.back().value;
}

double DensitySpec::inverse_cdf(unsigned axis, double u) const {
  if (is_lebesgue()) return u;
  const auto& nodes = axes_.at(axis);
  const auto& cdf = cdf_.at(axis);
  // Segment containing u, then solve the per-segment quadratic.
  size_t i = 0;
  while (i + 2 < nodes.size() && u >= cdf[i + 1]) ++i;
  double x0 = nodes[i].x, x1 = nodes[i + 1].x;
  double v0 = nodes[i].value, v1 = nodes[i + 1].value;
  double du = u - cdf[i];
  double h = x1 - x0;
  double slope = (v1 - v0) / h;
  double t;  // offset in [0, h]
  if (std::fabs(slope) < 1e-300) {
    t = v0 > 0.0 ? du / v0 : 0.0;
  } else {
    // 0.5 slope t^2 + v0 t - du = 0, the root in [0, h]
    double disc = v0 * v0 + 2.0 * slope * du;
    if (disc < 0.0) disc = 0.0;
    t = (-v0 + std::sqrt(disc)) / slope;
  }
  if (t < 0.0) t = 0.0;
  if (t > h) t = h;
  double x = x0 + t;
  return x >= 1.0 ? std::nextafter(1.0, 0.0) : x;
}

double SpectralFamily::total_weight() const {
  KahanSum s;
  for (double w : weights) s.add(w);
  return s.sum;
}

SpectralFamily sample_family(const DensitySpec& density, size_t size, uint64_t seed) {
  if (size < 1) throw ValidationError("sample_family: size must be >= 1");
  SpectralFamily family;
  family.rank = density.rank();
  family.points.resize(size * density.rank());
  family.weights.assign(size, 1.0);
  family.meta.seed = seed;
  family.meta.density_tag = density.tag();
  family.meta.size = size;
  const unsigned rank = density.rank();
  auto chunks = chunked_map<int>(size, 8192, default_thread_count(),
                                 [&](size_t, size_t begin, size_t end) {
                                   for (size_t i = begin; i < end; ++i) {
                                     for (unsigned a = 0; a < rank; ++a) {
                                       double u = uniform01(seed, i * rank + a);
                                       family.points[i * rank + a] =
                                           density.inverse_cdf(a, u);
                                     }
                                   }
                                   return 0;
                                 });
  (void)chunks;
  return family;
}

}  // namespace weilbounds
