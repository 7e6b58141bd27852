#ifndef WEILBOUNDS_TRIG_HPP
#define WEILBOUNDS_TRIG_HPP

#include "weilbounds/numeric.hpp"

#include <complex>
#include <span>
#include <vector>

namespace weilbounds {

// Finite Fourier series on T^r: sum over multi-indices nu with |nu_i| <= kappa
// of c_nu e(<nu, x>), stored as a dense tensor.  Hermitian symmetry
// c_{-nu} = conj(c_nu) keeps the values real on the torus.
class TrigPolynomial {
 public:
  TrigPolynomial(unsigned rank, unsigned degree);

  unsigned rank() const { return rank_; }
  unsigned degree() const { return degree_; }

  std::complex<double>& at(std::span<const int> nu);
  const std::complex<double>& at(std::span<const int> nu) const;
  std::complex<double>& at(std::initializer_list<int> nu) {
    return at(std::span<const int>(nu.begin(), nu.size()));
  }
  const std::complex<double>& at(std::initializer_list<int> nu) const {
    return at(std::span<const int>(nu.begin(), nu.size()));
  }

  // Mean value over the torus = constant coefficient.
  double mean() const;

  bool is_hermitian(double tol = 1e-12) const;

  // Real value at x in [0,1)^r; throws InvariantError if the imaginary
  // residue exceeds 1e-10.
  double evaluate(std::span<const double> x) const;
  double evaluate(std::initializer_list<double> x) const {
    return evaluate(std::span<const double>(x.begin(), x.size()));
  }

  enum class WeylGroup {
    kPermutations,        // S_r
    kSignFlips,           // (Z/2)^r
    kSignedPermutations,  // (Z/2)^r semidirect S_r
  };

  // Coefficientwise average over the group acting on multi-indices.
  TrigPolynomial weyl_symmetrize(WeylGroup group) const;

  // Iterate all multi-indices; f(nu, coeff).
  template <typename F>
  void for_each(F&& f) const {
    std::vector<int> nu(rank_, -static_cast<int>(degree_));
    for (size_t idx = 0; idx < c_.size(); ++idx) {
      f(std::span<const int>(nu.data(), nu.size()), c_[idx]);
      for (unsigned a = 0; a < rank_; ++a) {
        if (nu[a] < static_cast<int>(degree_)) {
          ++nu[a];
          break;
        }
        nu[a] = -static_cast<int>(degree_);
      }
    }
  }

  const std::vector<std::complex<double>>& raw() const { return c_; }
  std::vector<std::complex<double>>& raw() { return c_; }

 private:
  size_t index_of(std::span<const int> nu) const;

  unsigned rank_;
  unsigned degree_;
  std::vector<std::complex<double>> c_;
};

// Values of a rank-1 coefficient array (index nu in [-kappa, kappa]) at the
// grid points k/grid_size; uses an FFT when grid_size is a power of two.
std::vector<double> grid_evaluate_1d(std::span<const std::complex<double>> coeffs,
                                     size_t grid_size);

// In-place radix-2 FFT, sign = -1 forward / +1 inverse convention
// X_k = sum_m a_m exp(sign 2 pi i m k / n); n must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

}  // namespace weilbounds

#endif
