#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "vlat/falsify.hpp"
#include "vlat/random.hpp"

using namespace vlat;
using vlat::testing::Big;
using vlat::testing::big;

TEST_CASE("values follow the closed form") {
  auto f = ScalarForm::polynomial({1, 0, 3}, Rational(1, 3));
  CHECK(f.value(0) == 1);
  CHECK(f.value(2) == Rational(13, 9));
  auto g = ScalarForm::rational_power(1, -2, 0, 1);
  CHECK(g.value(0) == 0);
  CHECK(g.value(4) == Rational(1, 16));
  auto h = ScalarForm::rational_power(1, -1, 1, -1).with_prefix({5});
  CHECK(h.value(0) == 5);
  CHECK(h.value(3) == Rational(-1, 4));
  CHECK(h.value_ld(3) == doctest::Approx(-0.25));
  CHECK(std::isinf(ScalarForm::finite({1, 2}).log_abs_ld(7)));
}

TEST_CASE("trend and monotone index") {
  auto f = ScalarForm::polynomial({0, 1}, Rational(9, 10));
  CHECK(f.trend() == ScalarForm::Trend::Decaying);
  CHECK(f.monotone_index() == 9);
  Rational best = 0;
  for (std::size_t n = 0; n < 400; ++n) best = std::max(best, f.value(n));
  CHECK(f.tail_sup(0) == best);
  CHECK(f.tail_sup(0) == Rational(3486784401, 1000000000));
  CHECK(ScalarForm::constant(2).trend() == ScalarForm::Trend::Steady);
  CHECK(ScalarForm::geometric(2).trend() == ScalarForm::Trend::Growing);
  CHECK(ScalarForm::finite({1}).trend() == ScalarForm::Trend::Vanishing);
}

TEST_CASE("monotone index is valid on random forms") {
  Sampler rng(3);
  for (int k = 0; k < 60; ++k) {
    ScalarForm f = random_convergent_form(rng);
    std::size_t N = f.monotone_index();
    CAPTURE(k);
    CAPTURE(N);
    for (std::size_t n = N; n < N + 150; ++n) CHECK(abs(f.value(n + 1)) <= abs(f.value(n)));
  }
}

TEST_CASE("limits, tail extremes and deviations") {
  auto f = ScalarForm::rational_power(1, -1, 1, 1);
  REQUIRE(f.limit());
  CHECK(*f.limit() == 0);
  CHECK(f.sup_abs_deviation(3) == Rational(1, 4));
  auto alt = ScalarForm::geometric(-1);
  CHECK_FALSE(alt.limit());
  CHECK(alt.limsup() == 1);
  CHECK(alt.liminf() == -1);
  CHECK(alt.tail_inf(5) == -1);
  CHECK_FALSE(ScalarForm::polynomial({0, 1}, 1).bounded());
}

TEST_CASE("root tails") {
  auto n = ScalarForm::polynomial({0, 1}, 1);
  auto b = n.root_tail_sups(5);
  // sup_{k>=m} k^{1/k} peaks at k = 3
  CHECK(static_cast<double>(b[0]) == doctest::Approx(std::cbrt(3.0)).epsilon(1e-15));
  CHECK(static_cast<double>(b[2]) == doctest::Approx(std::cbrt(3.0)).epsilon(1e-15));
  CHECK(static_cast<double>(b[3]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(static_cast<double>(b[4]) == doctest::Approx(std::pow(5.0, 0.2)).epsilon(1e-15));
  for (auto v : ScalarForm::rational_power(1, -2, 0, 1).root_tail_sups(6)) CHECK(static_cast<double>(v) == 1.0);
  CHECK(ScalarForm::polynomial({2, 1}, Rational(-3, 4)).limsup_root() == Rational(3, 4));
  CHECK(ScalarForm::finite({1, 2}).limsup_root() == 0);
}

TEST_CASE("series classes") {
  using C = ScalarForm::SeriesClass;
  CHECK(ScalarForm::finite({1, 2}).series_class() == C::Finite);
  CHECK(ScalarForm::geometric(Rational(1, 2)).series_class() == C::Absolute);
  CHECK(ScalarForm::rational_power(1, -2, 0, 1).series_class() == C::Absolute);
  CHECK(ScalarForm::rational_power(1, -1, 1, -1).series_class() == C::Conditional);
  CHECK(ScalarForm::rational_power(1, -1, 1, 1).series_class() == C::Divergent);
  CHECK(ScalarForm::geometric(-1).series_class() == C::Divergent);
}

TEST_CASE("exact sums") {
  auto geo = ScalarForm::geometric(Rational(1, 2));
  REQUIRE(geo.series_sum());
  CHECK(geo.series_sum()->value.rational() == 2);
  CHECK(geo.series_sum()->error == 0);
  CHECK(geo.remainder_bound(3) == doctest::Approx(0.125));
  auto p = ScalarForm::polynomial({1, 0, 3}, Rational(1, 3));
  CHECK(p.series_sum()->value.rational() == 6);
  CHECK(static_cast<double>(testing::oracle_sum(p)) == doctest::Approx(6.0).epsilon(1e-15));
  auto mom = power_moment_sums(Rational(1, 2), 2);
  CHECK(mom == std::vector<Rational>{2, 2, 6});
}

TEST_CASE("certified sums against high precision") {
  Big pi = testing::pi_big();
  auto z2 = ScalarForm::rational_power(1, -2, 0, 1).series_sum();
  REQUIRE(z2);
  double exact = static_cast<double>(pi * pi / 6);
  CHECK(std::fabs(z2->value.to_double() - exact) <= static_cast<double>(z2->error) + 1e-16);
  CHECK(z2->error < 1e-12L);

  auto alt = ScalarForm::rational_power(1, -1, 1, -1).series_sum();
  REQUIRE(alt);
  CHECK(std::fabs(alt->value.to_double() - std::log(2.0)) <= static_cast<double>(alt->error) + 1e-16);

  auto k3 = ScalarForm::rational_power(2, -1, 1, Rational(-1, 2)).series_sum();
  REQUIRE(k3);
  CHECK(k3->value.to_double() == doctest::Approx(4 * std::log(1.5)).epsilon(1e-15));

  auto z3 = ScalarForm::rational_power(1, -3, 2, -1).with_prefix({1}).series_sum();
  REQUIRE(z3);
  // 1 + Σ_{j>=3} (-1)^j/j^3 = 1 + 7/8 - 3ζ(3)/4
  double zeta3 = 1.2020569031595942854;
  CHECK(z3->value.to_double() == doctest::Approx(1.875 - 0.75 * zeta3).epsilon(1e-14));
}

TEST_CASE("weighted tails") {
  auto one = ScalarForm::geometric(1);
  REQUIRE(one.exact_abs_tail(Rational(9, 10), 2));
  CHECK(*one.exact_abs_tail(Rational(9, 10), 2) == Rational(729, 100));
  CHECK(std::isinf(one.abs_tail_bound(1, 2)));
  auto inv_sq = ScalarForm::rational_power(1, -2, 0, 1);
  Big tail = testing::pi_big() * testing::pi_big() / 6;
  for (int n = 1; n <= 9; ++n) tail -= Big(1) / (n * n);
  long double bound = inv_sq.abs_tail_bound(1, 9);
  CHECK(bound >= static_cast<long double>(tail));
  CHECK(bound - static_cast<long double>(tail) < 1e-6L);
  CHECK(inv_sq.abs_summable(1));
  CHECK_FALSE(ScalarForm::rational_power(1, -1, 1, 1).abs_summable(1));
}

TEST_CASE("random sums agree with direct 50-digit summation") {
  Sampler rng(17);
  for (int k = 0; k < 40; ++k) {
    ScalarForm f = random_convergent_form(rng);
    auto s = f.series_sum();
    REQUIRE(s);
    double want = static_cast<double>(testing::oracle_sum(f));
    CAPTURE(k);
    CHECK(std::fabs(s->value.to_double() - want) <= 1e-12 * std::max(1.0, std::fabs(want)) + static_cast<double>(s->error));
  }
}

TEST_CASE("coefficient families") {
  Model m = make_model(2);
  CoeffForm f(m, {ScalarForm::geometric(Rational(1, 2)), ScalarForm::finite({1, 2})});
  CHECK(f.at(1).identical(RealElement(m, {Scalar::ratio(1, 2), Scalar(2)})));
  CHECK(f.limsup_root().identical(RealElement(m, {Scalar::ratio(1, 2), Scalar(0)})));
  CoeffForm g = f.ratio_scaled(RealElement(m, {Scalar(2), Scalar(3)}));
  CHECK(g.at(2).identical(RealElement(m, {Scalar(1), Scalar(0)})));
  CHECK_THROWS(CoeffForm(m, {ScalarForm::geometric(1)}));
}
