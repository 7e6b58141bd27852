#include "weilbounds/weil.hpp"

#include "weilbounds/sturm.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace weilbounds {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

}  // namespace

WeilParams WeilParams::make(const BigInt& q, unsigned w) {
  if (q < 2) throw ValidationError("WeilParams: q must be at least 2");
  if (!is_prime_power(q))
    throw ValidationError("WeilParams: q = " + q.str() + " is not a prime power");
  WeilParams p;
  p.q = q;
  p.w = w;
  p.N = pow_bigint(q, w);
  return p;
}

IntPolynomial WeilCertificate::reconstruct(const BigInt& N) const {
  IntPolynomial linear = IntPolynomial::constant(1);
  BigInt s;
  if (is_perfect_square(N, &s)) {
    for (long i = 0; i < mult_plus; ++i) linear = linear * IntPolynomial::linear_root(s);
    for (long i = 0; i < mult_minus; ++i) linear = linear * IntPolynomial::linear_root(-s);
  } else {
    if (mult_plus != mult_minus)
      throw InvariantError("certificate: sqrt(N) irrational forces equal multiplicities");
    for (long i = 0; i < mult_plus; ++i) linear = linear * IntPolynomial::x2_minus(N);
  }
  // x^g h(x + N/x) expanded over Z.
  long g = h.degree() < 0 ? 0 : h.degree();
  std::vector<BigInt> part(2 * g + 1, 0);
  for (long j = 0; j <= h.degree(); ++j) {
    const BigInt& hj = h.coeff(j);
    if (hj == 0) continue;
    BigInt npow = 1;
    for (long i = 0; i <= j; ++i) {
      part[g + j - 2 * i] += hj * binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) * npow;
      npow *= N;
    }
  }
  return linear * IntPolynomial(std::move(part));
}

const char* to_string(WeilFailStage stage) {
  switch (stage) {
    case WeilFailStage::kNone: return "none";
    case WeilFailStage::kValidation: return "validation";
    case WeilFailStage::kOddRemainder: return "odd-remainder";
    case WeilFailStage::kReversal: return "reversal-identity";
    case WeilFailStage::kTransform: return "real-weil-transform";
    case WeilFailStage::kSturm: return "sturm-localization";
  }
  return "unknown";
}

namespace {

// Coefficients of p1 must satisfy a_j = N^{g-j} a_{2g-j}.
bool reversal_identity_holds(const IntPolynomial& p1, const BigInt& N) {
  long deg = p1.degree();
  if (deg < 0 || deg % 2 != 0) return false;
  long g = deg / 2;
  BigInt npow = 1;
  for (long j = g - 1; j >= 0; --j) {
    npow *= N;  // N^{g-j}
    if (p1.coeff(j) != npow * p1.coeff(deg - j)) return false;
  }
  return true;
}

// Triangular back-substitution for h; does not verify the identity.
IntPolynomial transform_recursion(const IntPolynomial& p1, const BigInt& N) {
  long g = p1.degree() / 2;
  std::vector<BigInt> h(g + 1, 0);
  h[g] = 1;
  for (long t = g - 1; t >= 0; --t) {
    BigInt acc = p1.coeff(g + t);
    for (long j = t + 2; j <= g; j += 2) {
      BigInt npow = pow_bigint(N, static_cast<unsigned long>((j - t) / 2));
      acc -= h[j] * binomial(static_cast<unsigned>(j), static_cast<unsigned>((j - t) / 2)) * npow;
    }
    h[t] = acc;
  }
  return IntPolynomial(std::move(h));
}

IntPolynomial expand_real_part(const IntPolynomial& h, const BigInt& N) {
  WeilCertificate c;
  c.h = h;
  return c.reconstruct(N);
}

}  // namespace

IntPolynomial real_weil_transform(const IntPolynomial& p1, const BigInt& N) {
  if (N < 1) throw ValidationError("real_weil_transform: N must be positive");
  if (!p1.is_monic()) throw ValidationError("real_weil_transform: polynomial not monic");
  if (p1.degree() % 2 != 0)
    throw ValidationError("real_weil_transform: odd degree");
  QuadExt root = QuadExt::sqrt_of(N);
  if (p1.evaluate(root).is_zero() || p1.evaluate(-root).is_zero())
    throw ValidationError("real_weil_transform: root at +-sqrt(N)");
  if (!reversal_identity_holds(p1, N))
    throw ValidationError("real_weil_transform: reversal identity fails");
  IntPolynomial h = transform_recursion(p1, N);
  if (!(expand_real_part(h, N) == p1))
    throw InvariantError("real_weil_transform: expansion mismatch");
  return h;
}

WeilCheck is_weil_polynomial(const IntPolynomial& p, const WeilParams& params) {
  if (!p.is_monic()) throw ValidationError("is_weil_polynomial: polynomial not monic");
  if (p.degree() < 1) throw ValidationError("is_weil_polynomial: degree must be >= 1");
  if (params.N < 1) throw ValidationError("is_weil_polynomial: N must be positive");
  const BigInt& N = params.N;

  WeilCheck out;
  WeilCertificate cert;

  // Stage 1: strip all roots at +-sqrt(N) exactly.
  IntPolynomial rest = p;
  BigInt s;
  if (is_perfect_square(N, &s)) {
    IntPolynomial plus = IntPolynomial::linear_root(s);
    IntPolynomial minus = IntPolynomial::linear_root(-s);
    IntPolynomial q;
    while (rest.degree() >= 1 && rest.exact_divide(plus, &q)) {
      rest = q;
      ++cert.mult_plus;
    }
    while (rest.degree() >= 1 && rest.exact_divide(minus, &q)) {
      rest = q;
      ++cert.mult_minus;
    }
  } else {
    IntPolynomial quad = IntPolynomial::x2_minus(N);
    IntPolynomial q;
    while (rest.degree() >= 2 && rest.exact_divide(quad, &q)) {
      rest = q;
      ++cert.mult_plus;
      ++cert.mult_minus;
    }
  }
  cert.epsilon = (cert.mult_plus % 2 == 0) ? 1 : -1;

  // Stage 2: the remainder must have even degree and satisfy the reversal
  // identity (roots stable under alpha -> N/alpha).
  if (rest.degree() % 2 != 0) {
    out.failed_stage = WeilFailStage::kOddRemainder;
    out.message = "degree after stripping +-sqrt(N) roots is odd";
    return out;
  }
  if (!reversal_identity_holds(rest, N)) {
    out.failed_stage = WeilFailStage::kReversal;
    out.message = "reversal identity x^{2g} p1(N/x) = N^g p1(x) fails";
    return out;
  }

  // Stage 3: degree-halving substitution y = x + N/x.
  IntPolynomial h = transform_recursion(rest, N);
  if (!(expand_real_part(h, N) == rest)) {
    out.failed_stage = WeilFailStage::kTransform;
    out.message = "no integer h with p1(x) = x^g h(x + N/x)";
    return out;
  }
  cert.h = h;

  // Stage 4: h must be totally real with all roots in [-2 sqrt(N), 2 sqrt(N)].
  long g = rest.degree() / 2;
  if (g > 0) {
    QuadExt hi = QuadExt(0, 2, N);
    long count = real_root_count_with_multiplicity(h, -hi, hi);
    cert.sturm_count = count;
    if (count != g) {
      out.failed_stage = WeilFailStage::kSturm;
      out.message = "real part has roots off [-2 sqrt(N), 2 sqrt(N)]";
      return out;
    }
  }

  if (!(cert.reconstruct(N) == p))
    throw InvariantError("is_weil_polynomial: certificate reconstruction mismatch");
  out.ok = true;
  out.certificate = std::move(cert);
  return out;
}

namespace {

struct SearchBounds {
  std::vector<BigInt> coeff_bound;    // index k: |c_k| <= coeff_bound[k]
  std::vector<BigInt> powersum_bound; // index k: |p_k| <= powersum_bound[k]
};

SearchBounds make_bounds(unsigned m, const BigInt& modulus_sq) {
  // Roots have |alpha|^2 <= modulus_sq, so |e_k| <= binom(m,k) modulus^k and
  // |p_k| <= m modulus^k (Weil bounds).
  SearchBounds b;
  b.coeff_bound.resize(m + 1);
  b.powersum_bound.resize(m + 1);
  BigInt pk = 1;
  for (unsigned k = 1; k <= m; ++k) {
    pk *= modulus_sq;  // modulus_sq^k
    b.coeff_bound[k] = isqrt_floor(binomial(m, k) * binomial(m, k) * pk);
    b.powersum_bound[k] = isqrt_floor(BigInt(m) * BigInt(m) * pk);
  }
  return b;
}

// DFS over coefficient prefixes c_1..c_m (c_k multiplies x^{m-k}) with
// Newton-identity pruning: p_k = -(k c_k + sum_{j<k} c_j p_{k-j}).
template <typename Sink>
struct CoefficientDfs {
  unsigned m;
  const SearchBounds& bounds;
  const std::optional<BigInt>& final_abs;  // |c_m| pinned when set
  BigInt c1_lo, c1_hi;
  Sink& sink;
  std::vector<BigInt> c, ps;

  void run() {
    c.assign(m + 1, 0);
    ps.assign(m + 1, 0);
    descend(1);
  }

  // Admissible c_k from |p_k| <= bound with p_k = -(S + k c_k).
  void level_range(unsigned k, BigInt* lo, BigInt* hi) {
    BigInt S = 0;
    for (unsigned j = 1; j < k; ++j) S += c[j] * ps[k - j];
    const BigInt& L = bounds.powersum_bound[k];
    *lo = ceil_div(-S - L, BigInt(k));
    *hi = floor_div(-S + L, BigInt(k));
    if (*lo < -bounds.coeff_bound[k]) *lo = -bounds.coeff_bound[k];
    if (*hi > bounds.coeff_bound[k]) *hi = bounds.coeff_bound[k];
  }

  void set_level(unsigned k, const BigInt& value) {
    c[k] = value;
    BigInt S = 0;
    for (unsigned j = 1; j < k; ++j) S += c[j] * ps[k - j];
    ps[k] = -(S + BigInt(k) * value);
  }

  void descend(unsigned k) {
    if (k > m) {
      sink(c);
      return;
    }
    BigInt lo, hi;
    level_range(k, &lo, &hi);
    if (k == 1) {
      if (lo < c1_lo) lo = c1_lo;
      if (hi > c1_hi) hi = c1_hi;
    }
    if (k == m && final_abs) {
      BigInt minus = -*final_abs;
      BigInt plus = *final_abs;
      if (minus >= lo && minus <= hi) {
        set_level(k, minus);
        descend(k + 1);
      }
      if (plus != minus && plus >= lo && plus <= hi) {
        set_level(k, plus);
        descend(k + 1);
      }
      return;
    }
    for (BigInt v = lo; v <= hi; ++v) {
      set_level(k, v);
      descend(k + 1);
    }
  }
};

template <typename Sink>
void coefficient_dfs(unsigned m, const SearchBounds& bounds,
                     const std::optional<BigInt>& final_abs, BigInt c1_lo,
                     BigInt c1_hi, Sink&& sink) {
  CoefficientDfs<std::decay_t<Sink>> dfs{m,     bounds, final_abs,
                                         c1_lo, c1_hi,  sink,
                                         {},    {}};
  dfs.run();
}

IntPolynomial poly_from_top_coeffs(const std::vector<BigInt>& c, unsigned m) {
  std::vector<BigInt> coeffs(m + 1);
  coeffs[m] = 1;
  for (unsigned k = 1; k <= m; ++k) coeffs[m - k] = c[k];
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

std::vector<IntPolynomial> enumerate_weil_polynomials(const WeilParams& params,
                                                      unsigned m,
                                                      const EnumerateOptions& opts) {
  if (m < 1) throw ValidationError("enumerate_weil_polynomials: degree must be >= 1");
  const BigInt& N = params.N;

  // All roots have modulus exactly sqrt(N), so |c_m| = N^{m/2}; for odd m
  // and non-square N there is nothing to enumerate.
  BigInt final_abs;
  {
    BigInt nm = pow_bigint(N, m);
    BigInt r = isqrt_floor(nm);
    if (r * r != nm) return {};
    final_abs = r;
  }

  SearchBounds bounds = make_bounds(m, N);

  auto run_range = [&](const BigInt& lo, const BigInt& hi) {
    std::vector<IntPolynomial> found;
    coefficient_dfs(m, bounds, final_abs, lo, hi, [&](const std::vector<BigInt>& c) {
      IntPolynomial p = poly_from_top_coeffs(c, m);
      if (is_weil_polynomial(p, params).ok) found.push_back(std::move(p));
    });
    return found;
  };

  std::vector<IntPolynomial> results;
  const BigInt top = bounds.coeff_bound[1];
  unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || top < 4) {
    results = run_range(-top, top);
  } else {
    // Partition the top coefficient range; merging below restores the
    // canonical order regardless of worker count.
    BigInt span = 2 * top + 1;
    std::vector<std::future<std::vector<IntPolynomial>>> futures;
    for (unsigned t = 0; t < threads; ++t) {
      BigInt lo = -top + span * t / threads;
      BigInt hi = -top + span * (t + 1) / threads - 1;
      if (lo > hi) continue;
      futures.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& f : futures) {
      auto part = f.get();
      results.insert(results.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
    }
  }

  std::sort(results.begin(), results.end(), IntPolynomial::lex_less);
  if (opts.irreducible_only) {
    std::vector<IntPolynomial> filtered;
    for (auto& p : results) {
      if (is_irreducible_in_box(p, N, true)) filtered.push_back(std::move(p));
    }
    results = std::move(filtered);
  }
  return results;
}

WeilCountResult count_weil_integers(const BigInt& q, unsigned w, unsigned d_max,
                                    unsigned threads) {
  if (d_max < 1) throw ValidationError("count_weil_integers: d_max must be >= 1");
  WeilParams params = WeilParams::make(q, w);
  WeilCountResult out;
  EnumerateOptions opts;
  opts.irreducible_only = true;
  opts.threads = threads;
  size_t running = 0;
  for (unsigned d = 1; d <= d_max; ++d) {
    size_t n = enumerate_weil_polynomials(params, d, opts).size();
    out.by_degree[d] = n;
    running += n;
    out.cumulative[d] = running;
  }
  return out;
}

std::vector<IntPolynomial> hecke_trace_candidates(const BigInt& p, unsigned k,
                                                  unsigned A) {
  if (!is_prime(p)) throw ValidationError("hecke_trace_candidates: p must be prime");
  if (k < 2) throw ValidationError("hecke_trace_candidates: weight must be >= 2");
  if (A < 1) throw ValidationError("hecke_trace_candidates: degree bound must be >= 1");
  BigInt Nw = pow_bigint(p, k - 1);   // traces live in [-2 sqrt(Nw), 2 sqrt(Nw)]
  BigInt R2 = 4 * Nw;
  QuadExt hi = QuadExt(0, 2, Nw);

  std::vector<IntPolynomial> out;
  for (unsigned d = 1; d <= A; ++d) {
    SearchBounds bounds = make_bounds(d, R2);
    std::vector<IntPolynomial> found;
    coefficient_dfs(d, bounds, std::nullopt, -bounds.coeff_bound[1],
                    bounds.coeff_bound[1], [&](const std::vector<BigInt>& c) {
                      IntPolynomial cand = poly_from_top_coeffs(c, d);
                      if (!totally_real_in(cand, -hi, hi)) return;
                      if (!is_irreducible_in_box(cand, R2, false)) return;
                      found.push_back(std::move(cand));
                    });
    std::sort(found.begin(), found.end(), IntPolynomial::lex_less);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return out;
}

namespace {

std::vector<BigInt> divisors_up_to(const BigInt& n, const BigInt& cap) {
  // Divisors of |n| with absolute value <= cap, both signs.
  std::vector<BigInt> out;
  BigInt a = n < 0 ? -n : n;
  for (BigInt d = 1; d <= cap && d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    BigInt e = a / d;
    if (e != d && e <= cap) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  std::vector<BigInt> both;
  for (const auto& d : out) both.push_back(-d);
  std::reverse(both.begin(), both.end());
  both.insert(both.end(), out.begin(), out.end());
  return both;
}

}  // namespace

bool is_irreducible_in_box(const IntPolynomial& p, const BigInt& root_bound_sq,
                           bool roots_exactly_on_circle) {
  long deg = p.degree();
  if (deg <= 0) return false;
  if (deg == 1) return true;
  if (p.coeff(0) == 0) return false;  // divisible by x

  for (unsigned k = 1; k <= static_cast<unsigned>(deg) / 2; ++k) {
    // Constant terms of a degree-k monic divisor: divide p(0), sit in the
    // coefficient box, and on the exact circle have |d_k| = modulus^k.
    std::optional<BigInt> pinned;
    if (roots_exactly_on_circle) {
      BigInt mk = pow_bigint(root_bound_sq, k);
      BigInt r = isqrt_floor(mk);
      if (r * r != mk) continue;
      pinned = r;
    }
    SearchBounds bounds = make_bounds(k, root_bound_sq);
    bool found = false;
    coefficient_dfs(k, bounds, pinned, -bounds.coeff_bound[1], bounds.coeff_bound[1],
                    [&](const std::vector<BigInt>& c) {
                      if (found) return;
                      if (c[k] == 0 || p.coeff(0) % c[k] != 0) return;
                      IntPolynomial divisor = poly_from_top_coeffs(c, k);
                      if (p.exact_divide(divisor, nullptr)) found = true;
                    });
    if (found) return false;
  }
  return true;
}

}  // namespace weilbounds
