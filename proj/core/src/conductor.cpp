#include "weilbounds/conductor.hpp"

namespace weilbounds {

LocalFieldParams LocalFieldParams::make(const BigInt& p, unsigned e_K, unsigned f_K) {
  if (!is_prime(p)) throw ValidationError("LocalFieldParams: p must be prime");
  if (e_K < 1) throw ValidationError("LocalFieldParams: e_K must be positive");
  return LocalFieldParams{p, e_K, f_K};
}

BigInt lcm_phi_le(const BigInt& B) {
  if (B < 1) throw ValidationError("lcm_phi_le: B must be >= 1");
  BigInt result = 1;
  BigInt cap = 2 * B * B;
  for (BigInt m = 1; m <= cap; ++m) {
    if (euler_phi(m) <= B) result = boost::multiprecision::lcm(result, m);
  }
  return result;
}

BigInt gl_order(unsigned n, const BigInt& Q) {
  if (n < 1) throw ValidationError("gl_order: n must be >= 1");
  if (Q < 2) throw ValidationError("gl_order: Q must be >= 2");
  BigInt qn = pow_bigint(Q, n);
  BigInt result = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    result *= qn - qi;
    qi *= Q;
  }
  return result;
}

DepthBoundReport depth_bound_v1(unsigned n, unsigned A, const LocalFieldParams& field) {
  if (n < 1 || A < 1) throw ValidationError("depth_bound_v1: n, A must be >= 1");
  DepthBoundReport report;
  report.method = DepthMethod::kV1;
  report.f = lcm_phi_le(BigInt(n) * A);
  report.l = smallest_coprime_prime(report.f);
  // (Z/f)^* is trivial for f <= 2, so the residue degree is 1 there.
  report.residue_order =
      report.f <= 2 ? BigInt(1) : multiplicative_order(report.l, report.f);
  if (report.residue_order > 1u << 24)
    throw InvariantError("depth_bound_v1: residue field size out of desk range");
  report.residue_field_size =
      pow_bigint(report.l, report.residue_order.convert_to<unsigned long>());
  report.group_order = gl_order(n, report.residue_field_size);
  report.depth = Rational(report.group_order * field.e_K, field.p - 1);
  report.conductor = Rational(n) * (report.depth + 1);
  return report;
}

BigInt sylow_formula(unsigned n, const BigInt& p, unsigned t, unsigned m) {
  if (!is_prime(p)) throw ValidationError("sylow_formula: p must be prime");
  if (t < 1) throw ValidationError("sylow_formula: t must be >= 1");
  BigInt total = BigInt(m) * (n / t);
  BigInt pit = p * t;
  while (pit <= n) {
    total += n / pit;   // floor, and the sum is finite
    pit *= p;
  }
  return total;
}

BigInt sylow_order_bound(unsigned n, const BigInt& p, unsigned A) {
  if (n < 1 || A < 1) throw ValidationError("sylow_order_bound: n, A must be >= 1");
  BigInt best = 0;
  BigInt pm1 = p - 1;
  for (BigInt t = 1; t <= pm1; ++t) {
    if (pm1 % t != 0) continue;
    unsigned tu = t.convert_to<unsigned>();
    // phi(p^m) <= t A  restricts m; phi(p^0) = 1 is always admissible.
    for (unsigned m = 0;; ++m) {
      if (m >= 1) {
        BigInt phi = pow_bigint(p, m - 1) * (p - 1);
        if (phi > t * A) break;
      }
      BigInt expo = sylow_formula(n, p, tu, m);
      if (expo > 1u << 20)
        throw InvariantError("sylow_order_bound: exponent out of desk range");
      BigInt value = pow_bigint(p, expo.convert_to<unsigned long>());
      if (value > best) best = value;
    }
  }
  return best;
}

DepthBoundReport depth_bound_v2(unsigned n, unsigned A, const LocalFieldParams& field) {
  if (n < 1 || A < 1) throw ValidationError("depth_bound_v2: n, A must be >= 1");
  DepthBoundReport report;
  report.method = DepthMethod::kV2;
  report.p2_caveat = (field.p == 2);
  report.group_order = sylow_order_bound(n, field.p, A);
  report.depth = Rational(report.group_order * field.e_K, field.p - 1);
  report.conductor = Rational(n) * (report.depth + 1);
  return report;
}

CyclotomicRatio cyclotomic_ratio(unsigned n, const BigInt& N) {
  if (n < 1 || N < 1) throw ValidationError("cyclotomic_ratio: n, N must be >= 1");
  Rational ratio = 1;
  for (const auto& [p, r] : factorize(N)) {
    BigInt pr = pow_bigint(p, r);
    BigInt phi = pr - pr / p;
    Rational m = Rational(phi);
    if (Rational(n) < m) m = Rational(n);
    Rational third = Rational(BigInt(n) * n, phi);
    if (third < m) m = third;
    ratio *= m;
  }
  CyclotomicRatio out;
  out.ratio = ratio;
  out.within_n_to_n = ratio <= Rational(pow_bigint(BigInt(n), n));
  return out;
}

}  // namespace weilbounds
