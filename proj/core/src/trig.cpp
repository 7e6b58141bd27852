#include "weilbounds/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace weilbounds {

TrigPolynomial::TrigPolynomial(unsigned rank, unsigned degree)
    : rank_(rank), degree_(degree) {
  if (rank < 1) throw ValidationError("TrigPolynomial: rank must be >= 1");
  size_t side = 2 * static_cast<size_t>(degree) + 1;
  size_t total = 1;
  for (unsigned i = 0; i < rank; ++i) {
    if (total > (size_t(1) << 28) / side)
      throw ValidationError("TrigPolynomial: tensor too large");
    total *= side;
  }
  c_.assign(total, {0.0, 0.0});
}

size_t TrigPolynomial::index_of(std::span<const int> nu) const {
  if (nu.size() != rank_) throw ValidationError("TrigPolynomial: wrong index rank");
  size_t side = 2 * static_cast<size_t>(degree_) + 1;
  size_t idx = 0;
  size_t stride = 1;
  for (unsigned a = 0; a < rank_; ++a) {
    int v = nu[a];
    if (v < -static_cast<int>(degree_) || v > static_cast<int>(degree_))
      throw ValidationError("TrigPolynomial: index out of degree range");
    idx += stride * static_cast<size_t>(v + static_cast<int>(degree_));
    stride *= side;
  }
  return idx;
}

std::complex<double>& TrigPolynomial::at(std::span<const int> nu) {
  return c_[index_of(nu)];
}

const std::complex<double>& TrigPolynomial::at(std::span<const int> nu) const {
  return c_[index_of(nu)];
}

double TrigPolynomial::mean() const {
  std::vector<int> zero(rank_, 0);
  return at(std::span<const int>(zero.data(), zero.size())).real();
}

bool TrigPolynomial::is_hermitian(double tol) const {
  bool ok = true;
  std::vector<int> neg(rank_);
  for_each([&](std::span<const int> nu, const std::complex<double>& v) {
    if (!ok) return;
    for (unsigned a = 0; a < rank_; ++a) neg[a] = -nu[a];
    std::complex<double> w = at(std::span<const int>(neg.data(), neg.size()));
    if (std::abs(v - std::conj(w)) > tol) ok = false;
  });
  return ok;
}

double TrigPolynomial::evaluate(std::span<const double> x) const {
  if (x.size() != rank_) throw ValidationError("TrigPolynomial: wrong point rank");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // Per-axis tables of e(nu x_a).
  size_t side = 2 * static_cast<size_t>(degree_) + 1;
  std::vector<std::complex<double>> table(side * rank_);
  for (unsigned a = 0; a < rank_; ++a) {
    for (long v = -static_cast<long>(degree_); v <= static_cast<long>(degree_); ++v) {
      double angle = two_pi * static_cast<double>(v) * x[a];
      table[a * side + static_cast<size_t>(v + degree_)] = {std::cos(angle), std::sin(angle)};
    }
  }
  std::complex<double> acc{0.0, 0.0};
  std::vector<int> nu(rank_);
  for_each([&](std::span<const int> idx, const std::complex<double>& v) {
    if (v == std::complex<double>{0.0, 0.0}) return;
    std::complex<double> e{1.0, 0.0};
    for (unsigned a = 0; a < rank_; ++a)
      e *= table[a * side + static_cast<size_t>(idx[a] + static_cast<int>(degree_))];
    acc += v * e;
  });
  if (std::abs(acc.imag()) > 1e-10)
    throw InvariantError("TrigPolynomial: imaginary residue above 1e-10");
  return acc.real();
}

TrigPolynomial TrigPolynomial::weyl_symmetrize(WeylGroup group) const {
  // Enumerate the group elements as (permutation, signs) pairs.
  std::vector<unsigned> perm(rank_);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<unsigned>> perms;
  if (group == WeylGroup::kSignFlips) {
    perms.push_back(perm);
  } else {
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  unsigned sign_count = (group == WeylGroup::kPermutations) ? 1u : (1u << rank_);

  TrigPolynomial out(rank_, degree_);
  double norm = 1.0 / (perms.size() * sign_count);
  std::vector<int> image(rank_);
  for_each([&](std::span<const int> nu, const std::complex<double>& v) {
    if (v == std::complex<double>{0.0, 0.0}) return;
    for (const auto& p : perms) {
      for (unsigned smask = 0; smask < sign_count; ++smask) {
        for (unsigned a = 0; a < rank_; ++a) {
          int w = nu[p[a]];
          if (smask & (1u << a)) w = -w;
          image[a] = w;
        }
        out.at(std::span<const int>(image.data(), image.size())) += v * norm;
      }
    }
  });
  return out;
}

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ValidationError("fft_pow2: size must be a power of two");
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    std::complex<double> wlen{std::cos(angle), std::sin(angle)};
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<double> grid_evaluate_1d(std::span<const std::complex<double>> coeffs,
                                     size_t grid_size) {
  // coeffs[j] is the coefficient of e(nu x) with nu = j - kappa.
  if (coeffs.size() % 2 == 0)
    throw ValidationError("grid_evaluate_1d: coefficient array must have odd length");
  size_t kappa = coeffs.size() / 2;
  std::vector<double> out(grid_size, 0.0);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  bool pow2 = grid_size >= 2 && (grid_size & (grid_size - 1)) == 0;
  if (pow2 && grid_size > 2 * kappa) {
    // P(k/M) = sum_nu c_nu e(nu k / M): place c_nu at slot nu mod M and run
    // an exponent +1 transform.
    std::vector<std::complex<double>> slots(grid_size, {0.0, 0.0});
    for (size_t j = 0; j < coeffs.size(); ++j) {
      long nu = static_cast<long>(j) - static_cast<long>(kappa);
      size_t slot = nu >= 0 ? static_cast<size_t>(nu)
                            : grid_size - static_cast<size_t>(-nu);
      slots[slot] += coeffs[j];
    }
    fft_pow2(slots, +1);
    for (size_t k = 0; k < grid_size; ++k) out[k] = slots[k].real();
    return out;
  }
  for (size_t k = 0; k < grid_size; ++k) {
    double x = static_cast<double>(k) / static_cast<double>(grid_size);
    std::complex<double> acc{0.0, 0.0};
    for (size_t j = 0; j < coeffs.size(); ++j) {
      long nu = static_cast<long>(j) - static_cast<long>(kappa);
      double angle = two_pi * static_cast<double>(nu) * x;
      acc += coeffs[j] * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    out[k] = acc.real();
  }
  return out;
}

}  // namespace weilbounds
