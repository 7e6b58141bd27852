#ifndef WEILBOUNDS_PLANCHEREL_HPP
#define WEILBOUNDS_PLANCHEREL_HPP

#include "weilbounds/family.hpp"
#include "weilbounds/vaaler.hpp"

#include <cstdint>
#include <vector>

namespace weilbounds {

struct MeasureEstimate {
  double lower = 0.0;  // family average of the rectangle minorant
  double upper = 0.0;  // family average of the rectangle majorant
  double exact = 0.0;  // weighted fraction of points inside the rectangle
};

MeasureEstimate estimate_measure(const SpectralFamily& family,
                                 const TorusRectangle& R, unsigned kappa);

struct SparseFraction {
  double exact = 0.0;    // weighted fraction of mass sitting exactly on Z
  double upper = 0.0;    // sum over z of the point-majorant family average
  double lower = 0.0;    // trivial lower bound for a finite set
  double ceiling = 0.0;  // |Z| (2/(kappa+1))^r
  double deviation = 0.0;  // upper - ceiling (sampling deviation)
};

// Z is a finite list of points on T^r.  Point membership is exact up to
// 1e-12 per coordinate (mod 1).
SparseFraction sparse_fraction(const SpectralFamily& family,
                               const std::vector<std::vector<double>>& Z,
                               unsigned kappa);

struct DecayRow {
  size_t size = 0;
  unsigned kappa = 0;
  double exact = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double ceiling = 0.0;
};

// One row per family size with kappa = ceil(log size); the family for each
// size is drawn from the density with the given seed.
std::vector<DecayRow> decay_experiment(const std::vector<std::vector<double>>& Z,
                                       const DensitySpec& density,
                                       const std::vector<size_t>& sizes,
                                       uint64_t seed);

struct SerreDecayResult {
  std::vector<double> admissible_points;  // Z on T^1, sorted
  std::vector<DecayRow> rows;
  bool empty_admissible_set = false;
};

// Admissible set from the Hecke trace candidates of weil-core: every real
// root t of a candidate maps to theta/2pi with cos(theta) = t/(2 q^{(k-1)/2}).
SerreDecayResult serre_decay_experiment(const BigInt& q, unsigned k, unsigned A,
                                        const std::vector<size_t>& sizes,
                                        uint64_t seed,
                                        const DensitySpec& density);

// Smallest degree d with at least M irreducible weight-1 q-Weil minimal
// polynomials of degree <= d; -1 when d_cap does not suffice.
int min_degree_for_count(const BigInt& q, size_t M, unsigned d_cap = 12);

}  // namespace weilbounds

#endif
