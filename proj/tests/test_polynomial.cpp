#include "weilbounds/polynomial.hpp"
#include "weilbounds/quadratic.hpp"

#include <doctest.h>

#include <random>

using namespace weilbounds;

TEST_CASE("basic arithmetic and normalization") {
  IntPolynomial p({2, -3, 1});  // x^2 - 3x + 2
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.evaluate(BigInt(1)) == 0);
  CHECK(p.evaluate(BigInt(2)) == 0);
  CHECK(p.evaluate(BigInt(3)) == 2);

  IntPolynomial zero({0, 0, 0});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);

  IntPolynomial a({1, 1});   // x + 1
  IntPolynomial b({-1, 1});  // x - 1
  CHECK(a * b == IntPolynomial({-1, 0, 1}));
  CHECK(a + b == IntPolynomial({0, 2}));
  CHECK((a - a).is_zero());
}

TEST_CASE("monic division") {
  IntPolynomial p({2, -3, 1});
  auto dm = p.divide_by_monic(IntPolynomial::linear_root(1));
  CHECK(dm.remainder.is_zero());
  CHECK(dm.quotient == IntPolynomial({-2, 1}));

  IntPolynomial q;
  CHECK(p.exact_divide(IntPolynomial::linear_root(2), &q));
  CHECK(q == IntPolynomial({-1, 1}));
  CHECK_FALSE(p.exact_divide(IntPolynomial::linear_root(3), nullptr));
}

TEST_CASE("gcd and squarefree decomposition") {
  IntPolynomial f({-1, 1});     // x - 1
  IntPolynomial g({-2, 1});     // x - 2
  IntPolynomial h = f * f * g;  // (x-1)^2 (x-2)
  CHECK(poly_gcd(h, h.derivative()) == f);
  CHECK(squarefree_part(h) == f * g);

  auto parts = squarefree_decomposition(h);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == g);  // multiplicity 1
  CHECK(parts[1] == f);  // multiplicity 2

  // Squarefree input comes back whole.
  auto single = squarefree_decomposition(f * g);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == f * g);
}

TEST_CASE("random product reconstruction through gcd machinery") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    // Random monic factors with random multiplicities.
    IntPolynomial product = IntPolynomial::constant(1);
    std::vector<IntPolynomial> factors;
    for (int i = 0; i < 3; ++i) {
      IntPolynomial f({BigInt(coeff(rng)), 1});
      int mult = 1 + (rng() % 3);
      for (int m = 0; m < mult; ++m) product = product * f;
    }
    long total = product.degree();
    auto parts = squarefree_decomposition(product);
    long rebuilt = 0;
    IntPolynomial check = IntPolynomial::constant(1);
    for (size_t i = 0; i < parts.size(); ++i) {
      rebuilt += static_cast<long>(i + 1) * parts[i].degree();
      for (size_t m = 0; m <= i; ++m) check = check * parts[i];
    }
    CHECK(rebuilt == total);
    CHECK(check == product);
  }
}

TEST_CASE("quadratic extension sign logic") {
  QuadExt s2 = QuadExt::sqrt_of(2);
  CHECK(s2.sign() == 1);
  CHECK((-s2).sign() == -1);
  CHECK((s2 - QuadExt::rational(1)).sign() == 1);            // sqrt2 > 1
  CHECK((s2 - QuadExt::rational(2)).sign() == -1);           // sqrt2 < 2
  CHECK((s2 * s2 - QuadExt::rational(2)).sign() == 0);       // exactly 2
  QuadExt mix = QuadExt(Rational(3), Rational(-2), 2);       // 3 - 2 sqrt2 > 0
  CHECK(mix.sign() == 1);
  QuadExt neg = QuadExt(Rational(2), Rational(-2), 2);       // 2 - 2 sqrt2 < 0
  CHECK(neg.sign() == -1);

  // Perfect-square discriminant folds into the rational part.
  QuadExt folded = QuadExt(Rational(1), Rational(3), 4);  // 1 + 3*2
  CHECK(folded.is_rational());
  CHECK(folded.rational_part() == 7);

  CHECK((s2 / s2 - QuadExt::rational(1)).is_zero());
}

TEST_CASE("string round trip") {
  IntPolynomial p({2, 0, -1, 5});
  auto strings = p.coeff_strings();
  CHECK(IntPolynomial::from_coeff_strings(strings) == p);
  CHECK(IntPolynomial({2, -2, 1}).to_string() == "x^2 - 2x + 2");
}
