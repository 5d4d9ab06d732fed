#include <doctest.h>

#include <cmath>

#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"
#include "vlat/sequence.hpp"

using namespace vlat;

namespace {

RealElement q(const Model& m, std::vector<Rational> v) {
  std::vector<Scalar> s(v.begin(), v.end());
  return RealElement(m, s);
}

}  // namespace

TEST_CASE("order limits of closed forms") {
  Model m = make_model(2);
  auto s = ElementSequence::closed(CoeffForm(m, {ScalarForm::rational_power(1, -1, 1, 1), ScalarForm::constant(3)}));
  LimitResult r = order_limit(s);
  REQUIRE(r.status == LimitStatus::Converges);
  CHECK(r.limit->identical(q(m, {0, 3})));
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->heuristic);
  CHECK(r.witness->q(3).identical(q(m, {Rational(1, 4), 0})));
  auto samples = r.witness->samples();
  REQUIRE(samples.size() == 8);
  CHECK(samples.back().first == 64);

  CauchyResult c = is_order_cauchy(s);
  CHECK(c.cauchy);
  CHECK(c.witness->q(3).identical(q(m, {Rational(1, 2), 0})));
}

TEST_CASE("divergent sequences name their points") {
  Model m = make_model(3);
  auto s = ElementSequence::closed(
      CoeffForm(m, {ScalarForm::constant(1), ScalarForm::geometric(-1), ScalarForm::polynomial({0, 1}, 1)}));
  LimitResult r = order_limit(s);
  CHECK(r.status == LimitStatus::Diverges);
  CHECK(r.divergent_points == std::vector<std::string>{"t2", "t3"});
  try {
    tail_sup(s, 0);
    FAIL("expected Unbounded");
  } catch (const Unbounded& e) {
    CHECK(e.points() == std::vector<std::string>{"t3"});
  }
}

TEST_CASE("limsup and liminf") {
  Model m = make_model(1);
  auto s = ElementSequence::closed(CoeffForm(m, {ScalarForm::geometric(-1)}));
  CHECK(limsup_seq(s).identical(q(m, {1})));
  CHECK(liminf_seq(s).identical(q(m, {-1})));
  CHECK(tail_sup(s, 4).identical(q(m, {1})));
}

TEST_CASE("black-box sequences are windowed and flagged") {
  Model m = make_model(1);
  auto s = ElementSequence::black_box(m, [m](std::size_t n) {
    return RealElement(m, {Scalar::approx(1.0 / (1.0 + std::pow(static_cast<double>(n), 6)))});
  });
  LimitResult r = order_limit(s);
  CHECK(r.heuristic);
  CHECK(r.status == LimitStatus::Converges);
  CHECK((*r.limit)[0].to_double() < 1e-12);
}

TEST_CASE("root transform carries exact analytics") {
  Model m = make_model(2);
  CoeffForm f(m, {ScalarForm::polynomial({0, 1}, Rational(1, 2)), ScalarForm::rational_power(1, -2, 0, 1)});
  ElementSequence r = root_transform(ElementSequence::closed(f));
  CHECK(r.first_index() == 1);
  REQUIRE(r.exact_limsup());
  CHECK(r.exact_limsup()->identical(q(m, {Rational(1, 2), 1})));
  CHECK(r.at(1)[0].rational() == Rational(1, 2));
  CHECK(r.at(8)[0].to_double() == doctest::Approx(std::pow(2.0, -5.0 / 8)).epsilon(1e-15));
  // b_m decreases to L
  double prev = 1e300;
  for (std::size_t mm : {1u, 4u, 16u, 64u, 256u}) {
    double b = tail_sup(r, mm)[0].to_double();
    CHECK(b <= prev);
    CHECK(b >= 0.5);
    for (std::size_t n = mm; n < mm + 40; ++n) CHECK(r.at(n)[0].to_double() <= b * (1 + 1e-15));
    prev = b;
  }
  CHECK(tail_sup(r, 4096)[0].to_double() == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("root transform of a geometric sequence stabilises within the window") {
  Model m = make_model(2);
  CoeffForm f(m, {ScalarForm::geometric(Rational(1, 3)), ScalarForm::geometric(Rational(-4, 5))});
  ElementSequence r = root_transform(ElementSequence::closed(f));
  RealElement L = *r.exact_limsup();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t n = 1; n <= 64; ++n) CHECK(std::fabs(r.at(n)[i].to_double() - L[i].to_double()) <= 1e-10);
}

TEST_CASE("complex root transform uses the modulus bound") {
  Model m = make_model(1);
  CoeffForm re(m, {ScalarForm::geometric(Rational(1, 2))});
  CoeffForm im(m, {ScalarForm::geometric(Rational(-1, 2))});
  ElementSequence r = root_transform(re, im);
  CHECK(r.exact_limsup()->identical(q(m, {Rational(1, 2)})));
  // |a_n| = sqrt(2)·2^{-n}, so |a_n|^{1/n} = 2^{1/(2n)}/2 <= 2^{1/(2m)}·max(b_re, b_im)
  for (std::size_t mm : {1u, 2u, 8u}) {
    double b = tail_sup(r, mm)[0].to_double();
    CHECK(b >= std::pow(2.0, 1.0 / (2.0 * mm)) / 2 * (1 - 1e-15));
    CHECK(r.at(mm)[0].to_double() <= b * (1 + 1e-15));
  }
}

TEST_CASE("AM-GM bound") {
  Model m = make_model(3);
  RealElement a = q(m, {0, 5, Rational(1, 7)});
  for (unsigned long n : {1ul, 2ul, 3ul, 9ul}) {
    AmGmResult r = am_gm_bound_check(a, n);
    CHECK(r.holds);
    CHECK(r.checks >= (n > 1 ? 2u : 1u));
  }
  CHECK_THROWS_AS(am_gm_bound_check(q(m, {-1, 1, 1}), 2), NegativeInput);
}
