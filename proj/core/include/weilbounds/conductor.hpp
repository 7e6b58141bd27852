#ifndef WEILBOUNDS_CONDUCTOR_HPP
#define WEILBOUNDS_CONDUCTOR_HPP

#include "weilbounds/numeric.hpp"

namespace weilbounds {

// Local-field data entering the ramification bounds: residue characteristic
// and absolute ramification index (residue degree is informational only).
struct LocalFieldParams {
  BigInt p;       // prime
  unsigned e_K = 1;
  unsigned f_K = 1;

  static LocalFieldParams make(const BigInt& p, unsigned e_K, unsigned f_K = 1);
};

enum class DepthMethod { kV1, kV2 };

struct DepthBoundReport {
  DepthMethod method = DepthMethod::kV1;
  BigInt f = 0;             // lcm of m with phi(m) <= nA
  BigInt l = 0;             // auxiliary prime coprime to f
  BigInt residue_order = 0; // multiplicative order of l mod f
  BigInt residue_field_size = 0;  // Q = l^order
  BigInt group_order = 0;   // |GL_n(F_Q)| for v1, the wild-order bound for v2
  Rational depth;
  Rational conductor;       // n (depth + 1)
  bool p2_caveat = false;   // v2 evaluated at p = 2, where the formula is not sharp
};

// lcm of all m >= 1 with phi(m) <= B; the search runs over m <= 2 B^2 since
// phi(m) >= sqrt(m/2).
BigInt lcm_phi_le(const BigInt& B);

// |GL_n(F_Q)| = prod_{i=0}^{n-1} (Q^n - Q^i).
BigInt gl_order(unsigned n, const BigInt& Q);

// Depth bound via the embedding of inertia into GL_n over the residue field
// of the f-th cyclotomic field at an auxiliary prime l.
DepthBoundReport depth_bound_v1(unsigned n, unsigned A, const LocalFieldParams& field);

// Exponent bound on log_p of a p-Sylow of a finite subgroup of GL_n with
// trace field of degree parameter t and cyclotomic level m.
BigInt sylow_formula(unsigned n, const BigInt& p, unsigned t, unsigned m);

// Max of p^sylow_formula over divisors t of p-1 and m >= 0 with
// phi(p^m) <= t A.
BigInt sylow_order_bound(unsigned n, const BigInt& p, unsigned A);

// Improved depth bound: wild inertia is a p-group, so the Sylow bound
// replaces |GL_n|.
DepthBoundReport depth_bound_v2(unsigned n, unsigned A, const LocalFieldParams& field);

struct CyclotomicRatio {
  Rational ratio;
  bool within_n_to_n;  // ratio <= n^n
};

// prod over p^r || N of min(phi(p^r), n, n^2/phi(p^r)).
CyclotomicRatio cyclotomic_ratio(unsigned n, const BigInt& N);

}  // namespace weilbounds

#endif
