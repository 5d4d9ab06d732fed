#include <doctest.h>

#include <cmath>

#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"
#include "vlat/random.hpp"

using namespace vlat;

namespace {

RealElement q(const Model& m, std::vector<Rational> v) {
  std::vector<Scalar> s(v.begin(), v.end());
  return RealElement(m, s);
}

}  // namespace

TEST_CASE("scalar modes and promotion") {
  Scalar a = Scalar::ratio(1, 3);
  CHECK(a.is_exact());
  CHECK((a + a).rational() == Rational(2, 3));
  Scalar mixed = a + Scalar::approx(0.5);
  CHECK_FALSE(mixed.is_exact());
  CHECK(mixed.to_double() == doctest::Approx(5.0 / 6));
  CHECK(parse_rational("12.375") == Rational(99, 8));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);

  Model m = make_model(2);
  RealElement x = q(m, {1, 2});
  RealElement y = RealElement::from_doubles(m, {0.5, 0.25});
  CHECK_FALSE(x.promoted());
  CHECK((x + y).promoted());
  CHECK_FALSE((x + x).promoted());
}

TEST_CASE("tolerant comparisons") {
  ToleranceConfig tol;
  CHECK(tol_leq(Scalar::approx(1 + 1e-14), Scalar(1), tol));
  CHECK_FALSE(tol_leq(Scalar(Rational(1) + Rational(1, 100000000000000L)), Scalar(1), tol));
  CHECK_FALSE(tol_positive(Scalar::approx(1e-15), tol));
  CHECK(tol_positive(Scalar(Rational(1, 1000000000000000L)), tol));
  CHECK(tol_equal(Scalar::approx(2.0), Scalar::approx(2.0 + 1e-13), 1e-12));
}

TEST_CASE("lattice operations are pointwise") {
  Model m = make_model(3);
  RealElement f = q(m, {3, -2, 0}), g = q(m, {1, 5, 0});
  CHECK(sup2(f, g).identical(q(m, {3, 5, 0})));
  CHECK(inf2(f, g).identical(q(m, {1, -2, 0})));
  CHECK(pos_part(f).identical(q(m, {3, 0, 0})));
  CHECK(neg_part(f).identical(q(m, {0, 2, 0})));
  CHECK(abs_real(f).identical(pos_part(f) + neg_part(f)));
  CHECK((pos_part(f) - neg_part(f)).identical(f));
}

TEST_CASE("square mean and complex modulus") {
  Model m = make_model(3);
  RealElement f = q(m, {3, 0, -5}), g = q(m, {4, 2, 12});
  RealElement s = square_mean(f, g);
  CHECK(s.identical(q(m, {5, 2, 13})));
  CHECK(cmodulus(ComplexElement(f, g)).identical(s));

  RealElement fa = RealElement::from_doubles(m, {1.0, -0.3, 7.25});
  RealElement ga = RealElement::from_doubles(m, {2.0, 0.4, -1.5});
  RealElement exact = square_mean(fa, ga);
  RealElement grid = square_mean_grid(fa, ga, 2048);
  for (std::size_t i = 0; i < 3; ++i) {
    double h = std::hypot(fa[i].to_double(), ga[i].to_double());
    CHECK(exact[i].to_double() == doctest::Approx(h).epsilon(1e-15));
    CHECK(grid[i].to_double() <= h);
    CHECK(h - grid[i].to_double() <= 1e-5 * h);
  }
  CHECK_THROWS_AS(square_mean_grid(fa, ga, 3), BadGrid);
}

TEST_CASE("order and strict domination") {
  Model m = make_model(2);
  RealElement e = identity(m);
  CHECK(leq(q(m, {Rational(1, 2), 0}), e));
  CHECK(strictly_dominates(q(m, {Rational(1, 2), 0}), e));
  CHECK_FALSE(strictly_dominates(q(m, {1, 0}), e));
  CHECK(is_weak_order_unit(q(m, {1, 3})));
  CHECK_FALSE(is_weak_order_unit(q(m, {0, 3})));
  auto pts = labels_where(m, [](std::size_t i) { return i == 1; });
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == "t2");
}

TEST_CASE("operands from different models are rejected") {
  RealElement a = RealElement::zero(make_model({"a", "b"}));
  RealElement b = RealElement::zero(make_model({"a", "c"}));
  CHECK_THROWS_AS(sup2(a, b), ModelMismatch);
  CHECK_THROWS(make_model({"a", "a"}));
}

TEST_CASE("sampler is deterministic") {
  Sampler s1(42), s2(42);
  Model m = make_model(4);
  CHECK(s1.exact_element(m).identical(s2.exact_element(m)));
  CHECK(s1.uniform(0, 1) == s2.uniform(0, 1));
}
