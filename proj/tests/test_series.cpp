#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"
#include "vlat/series.hpp"

using namespace vlat;

namespace {

RealElement q(const Model& m, std::vector<Rational> v) {
  std::vector<Scalar> s(v.begin(), v.end());
  return RealElement(m, s);
}

}  // namespace

TEST_CASE("geometric series of a real element") {
  Model m = make_model(2);
  GeometricResult g = geometric_sum(q(m, {Rational(1, 2), Rational(-1, 3)}));
  CHECK(g.sum.re.identical(q(m, {2, Rational(3, 4)})));
  CHECK(g.sum.im.identical(RealElement::zero(m)));
  CHECK(g.telescoping_ok);
  // 2^{-(m+1)}/(1/2) <= eps_conv
  CHECK(std::pow(0.5, static_cast<double>(g.certified_m)) <= 1e-10);
  CHECK(g.partial_gap <= 1e-10);
}

TEST_CASE("geometric series of a complex element") {
  Model m = make_model(1);
  ComplexElement a(q(m, {0}), q(m, {Rational(1, 2)}));
  GeometricResult g = geometric_sum(a);
  // 1/(1 - i/2) = (4 + 2i)/5
  CHECK(g.sum.re.identical(q(m, {Rational(4, 5)})));
  CHECK(g.sum.im.identical(q(m, {Rational(2, 5)})));
  ComplexElement one = mul(ComplexElement(identity(m)) - a, g.sum);
  CHECK(one.re.identical(identity(m)));
}

TEST_CASE("geometric series refuses |a| not << e") {
  Model m = make_model(3);
  try {
    geometric_sum(q(m, {Rational(1, 2), 1, -2}));
    FAIL("expected NotStrictlyDominated");
  } catch (const NotStrictlyDominated& e) {
    CHECK(e.points() == std::vector<std::string>{"t2", "t3"});
  }
}

TEST_CASE("partial sums") {
  Model m = make_model(1);
  Series s = Series::closed(CoeffForm(m, {ScalarForm::geometric(Rational(1, 2))}));
  CHECK(partial_sum(s, 3).re.identical(q(m, {Rational(15, 8)})));
}

TEST_CASE("root test, convergent case") {
  Model m = make_model(3);
  CoeffForm f(m, {ScalarForm::geometric(Rational(1, 2)), ScalarForm::polynomial({0, 1}, Rational(-1, 3)),
                  ScalarForm::finite({1, 1})});
  ConvergenceVerdict v = nth_root_test(Series::closed(f));
  REQUIRE(v.status == VerdictStatus::ConvergesAbsolutely);
  CHECK(v.limsup_root->identical(q(m, {Rational(1, 2), Rational(1, 3), 0})));
  // Σ n(-1/3)^n = (-1/3)/(4/3)^2
  CHECK(v.sum->re.identical(q(m, {2, Rational(-3, 16), 2})));
  CHECK_FALSE(v.has_note("band-domination-failed"));
  for (std::size_t i = 0; i < v.band_split.size(); ++i)
    for (std::size_t j = i + 1; j < v.band_split.size(); ++j) CHECK(v.band_split[i].fresh.disjoint(v.band_split[j].fresh));
  REQUIRE(v.witness);
  RealElement q0 = v.witness->q(0);
  CHECK(q0[0].to_double() >= 1.0 - 1e-15);
  CHECK(q0[0].to_double() <= 1.0 + 1e-12);
}

TEST_CASE("root test, inconclusive and divergent cases") {
  Model m = make_model(2);
  auto inv_sq = ScalarForm::rational_power(1, -2, 0, 1);
  ConvergenceVerdict v = nth_root_test(Series::closed(CoeffForm::uniform(m, inv_sq)));
  CHECK(v.status == VerdictStatus::Inconclusive);
  CHECK(v.limsup_root->identical(identity(m)));
  CHECK(v.boundary_band->support_labels() == std::vector<std::string>{"t1", "t2"});

  ConvergenceVerdict d = nth_root_test(Series::closed(CoeffForm(m, {ScalarForm::geometric(Rational(1, 2)), ScalarForm::geometric(3)})));
  CHECK(d.status == VerdictStatus::Diverges);
  CHECK(d.divergent_points == std::vector<std::string>{"t2"});
  CHECK(d.has_note(flags::scalar_coordinate));
}

TEST_CASE("convergence in order and absolute convergence") {
  Model m = make_model(1);
  Series alt = Series::closed(CoeffForm(m, {ScalarForm::rational_power(1, -1, 1, -1)}));
  ConvergenceVerdict c = converges_in_order(alt);
  REQUIRE(c.status == VerdictStatus::ConvergesInOrder);
  CHECK(c.sum->re[0].to_double() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(c.witness->q(4)[0].to_double() >= 1.0 / 6 - 1e-15);
  ConvergenceVerdict a = converges_absolutely(alt);
  CHECK(a.status == VerdictStatus::Diverges);
  CHECK(a.has_note(flags::absolute_diverges));

  Series inv_sq = Series::closed(CoeffForm(m, {ScalarForm::rational_power(1, -2, 0, 1)}));
  ConvergenceVerdict s = converges_in_order(inv_sq);
  REQUIRE(s.converges());
  double zeta2 = static_cast<double>(testing::pi_big() * testing::pi_big() / 6);
  CHECK(std::fabs(s.sum->re[0].to_double() - zeta2) <= 1e-12);
  CHECK(converges_absolutely(inv_sq).status == VerdictStatus::ConvergesAbsolutely);
}

TEST_CASE("divergence test never claims convergence") {
  Model m = make_model(2);
  DivergenceResult r = divergence_test(Series::closed(CoeffForm(m, {ScalarForm::constant(1), ScalarForm::rational_power(1, -1, 1, 1)})));
  CHECK(r.outcome == DivergenceOutcome::Diverges);
  CHECK(r.points == std::vector<std::string>{"t1"});
  DivergenceResult h = divergence_test(Series::closed(CoeffForm::uniform(m, ScalarForm::rational_power(1, -1, 1, 1))));
  CHECK(h.outcome == DivergenceOutcome::MayConverge);
}

TEST_CASE("shrinking disk demo") {
  ShrinkingDiskDemo d = gallery_shrinking_disk(4);
  CHECK(d.passed());
  CHECK(d.verdict.status == VerdictStatus::Inconclusive);
  REQUIRE(d.partial_at_zero.size() == 64);
  for (std::size_t m = 1; m <= 64; ++m) CHECK(d.partial_at_zero[m - 1] == static_cast<long>(m));
  const Model& M = d.series.model();
  CHECK(M->label(0) == "0");
  CHECK(M->label(2) == "1/2");
  // at 1/k the terms vanish after n = k
  for (std::size_t k = 1; k <= 4; ++k) CHECK(partial_sum(d.series, 64).re[k].rational() == static_cast<long>(k));
}

TEST_CASE("cb01 illustration") {
  Cb01Demo d = gallery_cb01_geometric(8);
  CHECK(d.dominated_on_grid);
  CHECK(d.pointwise_converges);
  REQUIRE(d.rows.size() >= 2);
  CHECK(d.rows[0].limit_at_t_max == doctest::Approx(9.0));
  for (std::size_t i = 1; i < d.rows.size(); ++i) {
    CHECK(d.rows[i].grid_N == 2 * d.rows[i - 1].grid_N + 1);
    CHECK(d.rows[i].max_partial_sum > d.rows[i - 1].max_partial_sum);
    // Σ_{n<=64} t^n = (1 - t^65)/(1 - t)
    double t = d.rows[i].t_max;
    CHECK(d.rows[i].max_partial_sum == doctest::Approx((1 - std::pow(t, 65)) / (1 - t)).epsilon(1e-12));
  }
}
