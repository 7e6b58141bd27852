#include "weilbounds/genus.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace weilbounds;

TEST_CASE("angle parsing") {
  auto S = AngleSet::parse("0.5pi,1pi");
  REQUIRE(S.size() == 2);
  CHECK(S.angles[0] == doctest::Approx(std::numbers::pi / 2));
  CHECK(S.angles[1] == doctest::Approx(std::numbers::pi));
  REQUIRE(S.pi_multiples[0].has_value());
  CHECK(*S.pi_multiples[0] == Rational(1, 2));
  CHECK(*S.pi_multiples[1] == Rational(1));

  auto mixed = AngleSet::parse("0.7853981633974483,2/3pi");
  CHECK_FALSE(mixed.pi_multiples[0].has_value());
  CHECK(*mixed.pi_multiples[1] == Rational(2, 3));

  CHECK_THROWS_AS(AngleSet::parse("1pi,0.5pi"), ValidationError);  // not increasing
  CHECK_THROWS_AS(AngleSet::parse("1.5pi"), ValidationError);      // outside [0, pi]
}

TEST_CASE("exact cosine table") {
  CHECK(*exact_cos_pi(Rational(0)) == Rational(1));
  CHECK(*exact_cos_pi(Rational(1)) == Rational(-1));
  CHECK(*exact_cos_pi(Rational(1, 2)) == Rational(0));
  CHECK(*exact_cos_pi(Rational(3, 2)) == Rational(0));
  CHECK(*exact_cos_pi(Rational(1, 3)) == Rational(1, 2));
  CHECK(*exact_cos_pi(Rational(2, 3)) == Rational(-1, 2));
  CHECK(*exact_cos_pi(Rational(4, 3)) == Rational(-1, 2));
  CHECK(*exact_cos_pi(Rational(7, 3)) == Rational(1, 2));
  CHECK_FALSE(exact_cos_pi(Rational(1, 4)).has_value());
}

TEST_CASE("LP hand values") {
  auto lp1 = max_genus_lp(2, AngleSet::parse("1pi"), 4);
  CHECK(lp1.exact_mode);
  REQUIRE(lp1.optimum_exact.has_value());
  CHECK(*lp1.optimum_exact == Rational(5, 4));

  auto lp2 = max_genus_lp(3, AngleSet::parse("0.5pi"), 4);
  REQUIRE(lp2.optimum_exact.has_value());
  CHECK(*lp2.optimum_exact == Rational(41, 9));
  REQUIRE(lp2.binding_rows.size() >= 1);
  CHECK(lp2.binding_rows.back() == 4);

  auto lp3 = max_genus_lp(4, AngleSet::parse("2/3pi"), 6);
  REQUIRE(lp3.optimum_exact.has_value());
  CHECK(*lp3.optimum_exact == Rational(65, 16));

  // Default row counts from the angle denominators.
  CHECK(default_n_max(AngleSet::parse("0.5pi")) == 4);
  CHECK(default_n_max(AngleSet::parse("2/3pi")) == 6);
  CHECK(default_n_max(AngleSet::parse("0.77")) == 16);
}

TEST_CASE("float mode agrees with exact mode") {
  for (auto [q, angles, nmax] :
       {std::tuple<long, const char*, unsigned>{2, "1pi", 4},
        {3, "0.5pi", 4},
        {4, "2/3pi", 6},
        {5, "0.5pi,1pi", 8}}) {
    auto ex = max_genus_lp(q, AngleSet::parse(angles), nmax, LPMode::kExact);
    auto fl = max_genus_lp(q, AngleSet::parse(angles), nmax, LPMode::kFloat);
    REQUIRE(ex.status == GenusLPResult::Status::kOptimal);
    REQUIRE(fl.status == GenusLPResult::Status::kOptimal);
    CHECK(std::fabs(ex.optimum_value - fl.optimum_value) < 1e-9);
    CHECK(fl.max_residual <= 1e-9);
  }
  // Irrational angles only run in float mode.
  CHECK_THROWS_AS(max_genus_lp(2, AngleSet::parse("0.25pi"), 4, LPMode::kExact),
                  ValidationError);
  auto fl = max_genus_lp(2, AngleSet::parse("0.25pi"), 8, LPMode::kAuto);
  CHECK_FALSE(fl.exact_mode);
}

TEST_CASE("LP feasibility: point counts stay nonnegative") {
  for (auto [q, angles] : {std::pair<long, const char*>{2, "1pi"},
                           {3, "0.5pi"},
                           {5, "0.5pi,1pi"},
                           {4, "1/3pi,2/3pi"}}) {
    AngleSet S = AngleSet::parse(angles);
    unsigned nmax = default_n_max(S);
    auto lp = max_genus_lp(q, S, nmax);
    REQUIRE(lp.status == GenusLPResult::Status::kOptimal);
    AngleSet withmult = S;
    withmult.multiplicities = lp.multiplicities;
    for (unsigned n = 1; n <= nmax; ++n)
      CHECK(point_count(q, n, withmult) >= -1e-9);
  }
}

TEST_CASE("LP monotone in the row count") {
  // With two rows nothing constrains the multiplicity (the binding row is
  // n = 4), so the n_max = 2 instance is unbounded, read as +infinity.
  double prev = std::numeric_limits<double>::infinity();
  for (unsigned nmax : {2u, 4u, 6u, 8u}) {
    auto lp = max_genus_lp(3, AngleSet::parse("0.5pi"), nmax);
    double value = lp.status == GenusLPResult::Status::kOptimal
                       ? lp.optimum_value
                       : std::numeric_limits<double>::infinity();
    CHECK(value <= prev + 1e-12);
    prev = value;
  }
  CHECK(prev == doctest::Approx(41.0 / 9.0));
}

TEST_CASE("unbounded verdict") {
  // cos(n pi/2) = 0 for n = 1: with a single row nothing constrains g.
  auto lp = max_genus_lp(3, AngleSet::parse("0.5pi"), 1);
  CHECK(lp.status == GenusLPResult::Status::kUnbounded);
}

TEST_CASE("point_count examples") {
  AngleSet S = AngleSet::parse("0.5pi");
  S.multiplicities = {3.0};
  CHECK(point_count(3, 4, S) == doctest::Approx(28.0));

  AngleSet herm = AngleSet::parse("1pi");
  herm.multiplicities = {3.0};
  CHECK(point_count(9, 1, herm) == doctest::Approx(28.0));

  AngleSet empty = AngleSet::parse("0.5pi");
  empty.multiplicities = {0.0};
  CHECK(point_count(7, 3, empty) == doctest::Approx(344.0));  // q^3 + 1
}

TEST_CASE("ehr bound") {
  CHECK(ehr_bound(2, 1) == doctest::Approx(92.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(ehr_bound(2, 2) == doctest::Approx(23.0 * 4 * 16 * std::log(2.0)).epsilon(1e-12));
  // Doubling s multiplies by 4 q^{2s}: ratio identity.
  for (long q : {2L, 3L}) {
    for (unsigned s : {1u, 2u, 3u}) {
      double ratio = ehr_bound(q, 2 * s) / ehr_bound(q, s);
      CHECK(ratio == doctest::Approx(4.0 * std::pow(double(q), 2.0 * s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("fermat data") {
  auto f31 = fermat_data(3, 1);
  CHECK(f31.genus == 3);
  REQUIRE(f31.angles.size() == 1);
  CHECK(f31.angles[0] == doctest::Approx(std::numbers::pi / 2));
  CHECK(f31.maximality_check);
  CHECK(f31.points_over_square_field == 28);

  CHECK(fermat_data(2, 1).genus == 1);
  CHECK(fermat_data(2, 2).genus == 6);
  CHECK(fermat_data(2, 2).angles.size() == 2);
  CHECK(fermat_data(5, 1).genus == 10);

  // The Fermat genus respects the LP bound with S = {pi/2}.
  for (long p : {2L, 3L, 5L}) {
    auto fd = fermat_data(p, 1);
    auto lp = max_genus_lp(p, AngleSet::parse("0.5pi"), 8);
    REQUIRE(lp.status == GenusLPResult::Status::kOptimal);
    CHECK(fd.genus.convert_to<double>() <= lp.optimum_value + 1e-9);
  }
}

TEST_CASE("madan madden exponent") {
  CHECK(madan_madden_min_exponent(1e6, 1.0) == doctest::Approx(4.412).epsilon(1e-3));
  double e3 = std::exp(3.0);
  CHECK(madan_madden_min_exponent(e3, 1.0) ==
        doctest::Approx(std::pow(e3 / 27.0, 0.25)).epsilon(1e-12));
  CHECK(madan_madden_min_exponent(1e8, 1.0) > madan_madden_min_exponent(1e6, 1.0));
  CHECK_THROWS_AS(madan_madden_min_exponent(2.0, 1.0), ValidationError);
}

TEST_CASE("dejong pipeline") {
  auto dj = dejong_genus_bound(2, 1, 1.0);
  CHECK(dj.p1_product == 120);
  CHECK(dj.factors.size() == 6);
  for (const auto& v : dj.p1_values) CHECK(v != 0);
  CHECK_FALSE(dj.cap_hit);
  CHECK(dj.bracketing_ok);
  // Bracketing re-verified here as well.
  double lo = madan_madden_min_exponent(static_cast<double>(dj.genus_bound), 1.0);
  double hi = madan_madden_min_exponent(static_cast<double>(dj.genus_bound + 1), 1.0);
  CHECK(lo <= 120.0);
  CHECK(hi > 120.0);

  // Monotone in d: more factors, larger product, weaker bound.
  auto d2 = dejong_genus_bound(2, 2, 1.0);
  CHECK(d2.p1_product >= dj.p1_product);
  CHECK((d2.cap_hit || d2.genus_bound >= dj.genus_bound));
}
