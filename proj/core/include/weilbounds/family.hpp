#ifndef WEILBOUNDS_FAMILY_HPP
#define WEILBOUNDS_FAMILY_HPP

#include "weilbounds/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weilbounds {

// Counter-based uniform variate: a pure function of (seed, counter), so
// sampling is reproducible and independent of evaluation order.
double uniform01(uint64_t seed, uint64_t counter);

// Product density on [0,1)^r: Lebesgue, or per-axis nonnegative
// piecewise-linear tables normalized to unit mass at load time.
class DensitySpec {
 public:
  struct Node {
    double x;
    double value;
  };

  static DensitySpec lebesgue(unsigned rank);
  // One table per axis; each table needs >= 2 nodes, x increasing from 0 to 1.
  static DensitySpec piecewise_linear(std::vector<std::vector<Node>> axes,
                                      bool require_bounded_below = false);

  unsigned rank() const { return rank_; }
  const std::string& tag() const { return tag_; }
  bool is_lebesgue() const { return axes_.empty(); }

  // Inverse CDF of the given axis at u in [0, 1).
  double inverse_cdf(unsigned axis, double u) const;

  double density_value(unsigned axis, double x) const;

 private:
  unsigned rank_ = 1;
  std::string tag_ = "lebesgue";
  std::vector<std::vector<Node>> axes_;      // normalized; empty = lebesgue
  std::vector<std::vector<double>> cdf_;     // per axis, at node positions
};

// Weighted multiset of points on T^r standing in for the Satake parameters
// of a family; weights default to 1.
struct SpectralFamily {
  unsigned rank = 1;
  std::vector<double> points;   // flat, rank-strided
  std::vector<double> weights;  // size() entries

  struct Meta {
    BigInt q = 0;
    uint64_t seed = 0;
    std::string density_tag;
    size_t size = 0;
  } meta;

  size_t size() const { return weights.size(); }
  std::span<const double> point(size_t i) const {
    return std::span<const double>(points.data() + i * rank, rank);
  }
  double total_weight() const;
};

// Deterministic i.i.d. sample of the given size: point i, axis a consumes
// the variate with counter i*rank + a.
SpectralFamily sample_family(const DensitySpec& density, size_t size, uint64_t seed);

}  // namespace weilbounds

#endif
