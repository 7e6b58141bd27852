#ifndef WEILBOUNDS_WEIL_HPP
#define WEILBOUNDS_WEIL_HPP

#include "weilbounds/polynomial.hpp"
#include "weilbounds/quadratic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weilbounds {

// Parameters (q, w) with q a prime power and N = q^w.  The predicates below
// test whether every complex root alpha of a monic integer polynomial
// satisfies |alpha|^2 = N.
struct WeilParams {
  BigInt q;
  unsigned w = 1;
  BigInt N;  // q^w

  static WeilParams make(const BigInt& q, unsigned w);
};

// Witness that a polynomial has all roots on the circle |alpha| = sqrt(N):
// linear factors at +-sqrt(N), the degree-halved totally real part h, and
// the Sturm localization count for h on [-2 sqrt(N), 2 sqrt(N)].
struct WeilCertificate {
  long mult_plus = 0;         // multiplicity of the root +sqrt(N)
  long mult_minus = 0;        // multiplicity of the root -sqrt(N)
  IntPolynomial h;            // real part, degree g
  long sturm_count = 0;       // real roots of h in the closed interval, with multiplicity
  int epsilon = 1;            // sign in x^m p(N/x) = epsilon N^{m/2} p(x)

  // (x - sqrt(N))^mult_plus (x + sqrt(N))^mult_minus x^g h(x + N/x),
  // expanded exactly over Z.
  IntPolynomial reconstruct(const BigInt& N) const;
};

enum class WeilFailStage {
  kNone,
  kValidation,     // non-monic, degree 0, bad N
  kOddRemainder,   // degree after stripping +-sqrt(N) roots is odd
  kReversal,       // x^{2g} p1(N/x) != N^g p1(x)
  kTransform,      // no integer h with p1(x) = x^g h(x + N/x)
  kSturm,          // h not totally real with roots in [-2 sqrt(N), 2 sqrt(N)]
};

struct WeilCheck {
  bool ok = false;
  WeilCertificate certificate;
  WeilFailStage failed_stage = WeilFailStage::kNone;
  std::string message;
};

const char* to_string(WeilFailStage stage);

// Exact circle-membership test; never relies on floating point.
WeilCheck is_weil_polynomial(const IntPolynomial& p, const WeilParams& params);

// The unique monic integer h of degree g with p1(x) = x^g h(x + N/x), for a
// monic p1 of even degree 2g satisfying the reversal identity and having no
// root at +-sqrt(N).  Throws ValidationError when no such h exists.
IntPolynomial real_weil_transform(const IntPolynomial& p1, const BigInt& N);

struct EnumerateOptions {
  bool irreducible_only = false;
  unsigned threads = 1;  // workers across the top coefficient range
};

// Complete, duplicate-free, lexicographically sorted list of monic integer
// polynomials of degree m whose roots all satisfy |alpha|^2 = N.
std::vector<IntPolynomial> enumerate_weil_polynomials(const WeilParams& params,
                                                      unsigned m,
                                                      const EnumerateOptions& opts = {});

struct WeilCountResult {
  std::map<unsigned, size_t> by_degree;
  std::map<unsigned, size_t> cumulative;
};

// Count of irreducible monic integer polynomials of each degree d <= d_max
// whose roots are q-Weil numbers of weight w.
WeilCountResult count_weil_integers(const BigInt& q, unsigned w, unsigned d_max,
                                    unsigned threads = 1);

// Minimal polynomials of candidate Hecke eigenvalues a_p(f): monic
// irreducible integer polynomials of degree <= A, totally real with all
// roots in [-2 p^{(k-1)/2}, 2 p^{(k-1)/2}].
std::vector<IntPolynomial> hecke_trace_candidates(const BigInt& p, unsigned k,
                                                  unsigned A);

// Exact irreducibility over Q for a monic polynomial whose roots have
// squared modulus at most root_bound_sq; searches monic integer divisors of
// degree <= deg/2 inside the matching coefficient box.  When
// roots_exactly_on_circle is set, divisor constant terms are pinned to
// +-root_bound_sq^{k/2}.
bool is_irreducible_in_box(const IntPolynomial& p, const BigInt& root_bound_sq,
                           bool roots_exactly_on_circle);

}  // namespace weilbounds

#endif
