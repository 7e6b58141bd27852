#include "weilbounds/weil.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace weilbounds;

namespace {

bool same_set(std::vector<IntPolynomial> a, std::vector<IntPolynomial> b) {
  std::sort(a.begin(), a.end(), IntPolynomial::lex_less);
  std::sort(b.begin(), b.end(), IntPolynomial::lex_less);
  return a == b;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(WeilParams::make(1, 1), ValidationError);
  CHECK_THROWS_AS(WeilParams::make(6, 1), ValidationError);  // not a prime power
  CHECK(WeilParams::make(8, 2).N == 64);
  CHECK(WeilParams::make(2, 0).N == 1);

  auto params = WeilParams::make(2, 1);
  CHECK_THROWS_AS(is_weil_polynomial(IntPolynomial({1, 2}), params),
                  ValidationError);  // not monic
  CHECK_THROWS_AS(is_weil_polynomial(IntPolynomial({1}), params),
                  ValidationError);  // degree 0
}

TEST_CASE("certificate for x^2 - 2x + 2 over q=2") {
  auto params = WeilParams::make(2, 1);
  auto chk = is_weil_polynomial(IntPolynomial({2, -2, 1}), params);
  REQUIRE(chk.ok);
  CHECK(chk.certificate.h == IntPolynomial({-2, 1}));  // y - 2
  CHECK(chk.certificate.sturm_count == 1);
  CHECK(chk.certificate.mult_plus == 0);
  CHECK(chk.certificate.mult_minus == 0);
  CHECK(chk.certificate.epsilon == 1);
  CHECK(chk.certificate.reconstruct(params.N) == IntPolynomial({2, -2, 1}));
  // Numeric cross-check: both roots on |z|^2 = 2.
  for (const auto& z : oracles::roots(IntPolynomial({2, -2, 1})))
    CHECK(std::norm(z) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("negative verdict for x^2 - 3x + 2") {
  // Roots {1, 2} are swapped by alpha -> 2/alpha, so the reversal identity
  // holds; the failure surfaces at the Sturm localization (root 3 of the
  // real part lies outside [-2 sqrt2, 2 sqrt2]).
  auto params = WeilParams::make(2, 1);
  auto chk = is_weil_polynomial(IntPolynomial({2, -3, 1}), params);
  CHECK_FALSE(chk.ok);
  CHECK(chk.failed_stage == WeilFailStage::kSturm);
  // A genuinely asymmetric polynomial fails at the reversal stage.
  auto rev = is_weil_polynomial(IntPolynomial({3, -3, 1}), params);
  CHECK_FALSE(rev.ok);
  CHECK(rev.failed_stage == WeilFailStage::kReversal);
}

TEST_CASE("weight-0 identity case") {
  auto params = WeilParams::make(5, 0);
  auto chk = is_weil_polynomial(IntPolynomial({-1, 1}), params);
  REQUIRE(chk.ok);
  CHECK(chk.certificate.mult_plus == 1);
  CHECK(chk.certificate.h.degree() == 0);
}

TEST_CASE("roots at +-sqrt(N) are stripped exactly") {
  auto params = WeilParams::make(2, 2);  // N = 4
  // (x-2)^2 (x+2) (x^2+4): all roots have |z| = 2.
  IntPolynomial p = IntPolynomial::linear_root(2) * IntPolynomial::linear_root(2) *
                    IntPolynomial::linear_root(-2) * IntPolynomial({4, 0, 1});
  auto chk = is_weil_polynomial(p, params);
  REQUIRE(chk.ok);
  CHECK(chk.certificate.mult_plus == 2);
  CHECK(chk.certificate.mult_minus == 1);
  CHECK(chk.certificate.epsilon == 1);
  CHECK(chk.certificate.reconstruct(params.N) == p);
}

TEST_CASE("real_weil_transform spec examples") {
  // (x^2 - a x + N) -> y - a for a generic quadratic.
  for (long a : {-3L, -1L, 0L, 2L}) {
    IntPolynomial p({5, -a, 1});
    CHECK(real_weil_transform(p, 5) == IntPolynomial({-a, 1}));
  }
  CHECK(real_weil_transform(IntPolynomial({4, 0, 3, 0, 1}), 2) ==
        IntPolynomial({-1, 0, 1}));  // y^2 - 1
  CHECK(real_weil_transform(IntPolynomial({4, 0, 4, 0, 1}), 2) ==
        IntPolynomial({0, 0, 1}));   // y^2

  // The transform only needs the reversal identity, not root localization:
  // x^2 - 3x + 2 maps to y - 3 even though 3 is outside [-2 sqrt2, 2 sqrt2].
  CHECK(real_weil_transform(IntPolynomial({2, -3, 1}), 2) == IntPolynomial({-3, 1}));

  CHECK_THROWS_AS(real_weil_transform(IntPolynomial({1, 1, 1, 1}), 2),
                  ValidationError);  // odd degree
  CHECK_THROWS_AS(real_weil_transform(IntPolynomial({3, -3, 1}), 2),
                  ValidationError);  // reversal identity fails
  CHECK_THROWS_AS(real_weil_transform(IntPolynomial({-2, 0, 1}), 2),
                  ValidationError);  // root at sqrt(2)
}

TEST_CASE("enumeration q=2 w=1 m=2: the six classical polynomials") {
  auto params = WeilParams::make(2, 1);
  auto polys = enumerate_weil_polynomials(params, 2);
  std::vector<IntPolynomial> expected;
  for (long a = -2; a <= 2; ++a) expected.push_back(IntPolynomial({2, a, 1}));
  expected.push_back(IntPolynomial({-2, 0, 1}));
  CHECK(same_set(polys, expected));
  // Canonical order is already sorted.
  CHECK(std::is_sorted(polys.begin(), polys.end(), IntPolynomial::lex_less));
}

TEST_CASE("parity obstruction and weight zero") {
  auto params = WeilParams::make(2, 1);
  CHECK(enumerate_weil_polynomials(params, 1).empty());
  CHECK(enumerate_weil_polynomials(params, 3).empty());
  auto w0 = WeilParams::make(2, 0);
  auto m1 = enumerate_weil_polynomials(w0, 1);
  CHECK(same_set(m1, {IntPolynomial({-1, 1}), IntPolynomial({1, 1})}));
}

TEST_CASE("round trip: every enumerated polynomial certifies and reconstructs") {
  for (auto [q, w, m] : {std::tuple<long, unsigned, unsigned>{2, 1, 4},
                         {3, 1, 2}, {4, 1, 3}, {2, 2, 2}}) {
    auto params = WeilParams::make(q, w);
    for (const auto& p : enumerate_weil_polynomials(params, m)) {
      auto chk = is_weil_polynomial(p, params);
      REQUIRE(chk.ok);
      CHECK(chk.certificate.reconstruct(params.N) == p);
      // Reversal identity for even-degree outputs with no +-sqrt(N) roots.
      if (chk.certificate.mult_plus == 0 && chk.certificate.mult_minus == 0) {
        long deg = p.degree();
        REQUIRE(deg % 2 == 0);
        long g = deg / 2;
        BigInt npow = 1;
        for (long j = g - 1; j >= 0; --j) {
          npow *= params.N;
          CHECK(p.coeff(j) == npow * p.coeff(deg - j));
        }
      }
    }
  }
}

TEST_CASE("oracle equivalence on a small sweep") {
  for (long N : {2L, 3L, 4L, 5L, 8L, 9L}) {
    BigInt base;
    unsigned e = 0;
    REQUIRE(is_prime_power(BigInt(N), &base, &e));
    auto params = WeilParams::make(base, e);
    REQUIRE(params.N == N);
    for (unsigned m = 1; m <= 3; ++m) {
      auto exact = enumerate_weil_polynomials(params, m);
      std::vector<IntPolynomial> oracle;
      for (auto& cand : oracles::float_weil_search(N, m)) {
        if (is_weil_polynomial(cand, params).ok) oracle.push_back(std::move(cand));
      }
      CAPTURE(N);
      CAPTURE(m);
      CHECK(same_set(exact, oracle));
    }
  }
}

TEST_CASE("threaded enumeration is bit-identical") {
  auto params = WeilParams::make(3, 1);
  EnumerateOptions serial, multi;
  multi.threads = 4;
  CHECK(enumerate_weil_polynomials(params, 4, serial) ==
        enumerate_weil_polynomials(params, 4, multi));
}

TEST_CASE("irreducible counts") {
  auto counts = count_weil_integers(2, 1, 2);
  CHECK(counts.by_degree[1] == 0);
  CHECK(counts.by_degree[2] == 6);
  CHECK(counts.cumulative[2] == 6);

  auto q4 = count_weil_integers(4, 1, 1);
  CHECK(q4.by_degree[1] == 2);  // x - 2 and x + 2

  auto w0 = count_weil_integers(2, 0, 1);
  CHECK(w0.by_degree[1] == 2);  // x -+ 1
}

TEST_CASE("irreducibility filter matches hand factorization") {
  // (x^2-2x+2)(x^2+2x+2) = x^4 + 4 is a reducible Weil polynomial for N=2.
  auto params = WeilParams::make(2, 1);
  IntPolynomial composite = IntPolynomial({2, -2, 1}) * IntPolynomial({2, 2, 1});
  CHECK(is_weil_polynomial(composite, params).ok);
  CHECK_FALSE(is_irreducible_in_box(composite, params.N, true));
  CHECK(is_irreducible_in_box(IntPolynomial({2, -2, 1}), params.N, true));

  auto all4 = enumerate_weil_polynomials(params, 4);
  EnumerateOptions irr;
  irr.irreducible_only = true;
  auto irr4 = enumerate_weil_polynomials(params, 4, irr);
  CHECK(irr4.size() < all4.size());
  for (const auto& p : irr4) CHECK(is_irreducible_in_box(p, params.N, true));
  // Composite membership: the product above must be in all4 but not irr4.
  CHECK(std::count(all4.begin(), all4.end(), composite) == 1);
  CHECK(std::count(irr4.begin(), irr4.end(), composite) == 0);
}

TEST_CASE("hecke trace candidates") {
  auto a1 = hecke_trace_candidates(2, 2, 1);
  std::vector<IntPolynomial> expected;
  for (long t = -2; t <= 2; ++t) expected.push_back(IntPolynomial::linear_root(t));
  CHECK(same_set(a1, expected));

  auto p3 = hecke_trace_candidates(3, 2, 1);
  CHECK(p3.size() == 7);  // |t| <= 2 sqrt3 ~ 3.46

  auto a2 = hecke_trace_candidates(2, 2, 2);
  CHECK(std::count(a2.begin(), a2.end(), IntPolynomial({-2, 0, 1})) == 1);
  // Everything in the list is monic irreducible and totally real in range.
  for (const auto& p : a2) {
    CHECK(p.is_monic());
    CHECK(is_irreducible_in_box(p, 8, false));
  }
  // x^2 - 9 = (x-3)(x+3) is reducible; x^2 - 3x + 1 has a root above 2 sqrt2.
  CHECK(std::count(a2.begin(), a2.end(), IntPolynomial({-9, 0, 1})) == 0);
}

TEST_CASE("count bound shape at desk scale") {
  // log(cumulative count through degree d) <= C d^2 log q for one C.
  double worst = 0.0;
  for (long q : {2L, 3L}) {
    auto counts = count_weil_integers(q, 1, 4);
    for (auto [d, n] : counts.cumulative) {
      if (n == 0) continue;
      double c = std::log(static_cast<double>(n)) /
                 (d * d * std::log(static_cast<double>(q)));
      worst = std::max(worst, c);
    }
  }
  CHECK(worst > 0.0);
  CHECK(worst < 2.0);  // a single desk-scale constant exists
}
