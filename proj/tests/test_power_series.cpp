#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <complex>

#include "support/oracles.hpp"
#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"
#include "vlat/power_series.hpp"

using namespace vlat;

namespace {

RealElement q(const Model& m, std::vector<Rational> v) {
  std::vector<Scalar> s(v.begin(), v.end());
  return RealElement(m, s);
}

ComplexElement zero_center(const Model& m) { return ComplexElement(RealElement::zero(m)); }

/// Σ (-1)ⁿ/(n+1) zⁿ = ln(1+z)/z at every point.
PowerSeries log_series(const Model& m) {
  return PowerSeries::closed(CoeffForm::uniform(m, ScalarForm::rational_power(1, -1, 1, -1)), zero_center(m));
}

std::complex<double> at(const ComplexElement& z, std::size_t i) { return {z.re[i].to_double(), z.im[i].to_double()}; }

}  // namespace

TEST_CASE("Horner and naive partial sums agree") {
  Model m = make_model(2);
  PowerSeries p = PowerSeries::closed(CoeffForm(m, {ScalarForm::polynomial({1, 2}, Rational(1, 3)), ScalarForm::geometric(-1)}),
                                      ComplexElement(q(m, {1, 0})));
  ComplexElement z(q(m, {Rational(3, 2), Rational(1, 4)}), q(m, {Rational(1, 5), Rational(-1, 2)}));
  for (std::size_t k : {0, 1, 5, 20}) {
    ComplexElement a = eval_partial(p, z, k), b = eval_partial_naive(p, z, k);
    CHECK(a.re.identical(b.re));
    CHECK(a.im.identical(b.im));
  }
}

TEST_CASE("certified evaluation against a direct oracle") {
  Model m = make_model(1);
  // Σ (1/2)ⁿ zⁿ/(n+1)(-1)ⁿ at z = 1: ln(1 + 1/2)/(1/2)
  PowerSeries p = PowerSeries::closed(CoeffForm(m, {ScalarForm::rational_power(1, -1, 1, Rational(-1, 2))}), zero_center(m));
  CertifiedValue v = eval_certified(p, ComplexElement(identity(m)));
  CHECK(std::fabs(v.value.re[0].to_double() - 2 * std::log(1.5)) <= 1e-14);
  CHECK(v.error[0].to_double() <= 1e-15);
  ComplexElement z(q(m, {Rational(1, 3)}), q(m, {Rational(1, 2)}));
  CertifiedValue w = eval_certified(p, z);
  std::complex<double> expect = testing::log1p_over({1.0 / 6, 1.0 / 4});
  CHECK(std::abs(at(w.value, 0) - expect) <= 1e-14);
}

TEST_CASE("membership in the convergence domain") {
  Model m = make_model(4);
  PowerSeries p = PowerSeries::closed(
      CoeffForm(m, {ScalarForm::constant(1), ScalarForm::rational_power(1, -2, 1, 1), ScalarForm::rational_power(1, -1, 1, 1),
                    ScalarForm::finite({1, 5})}),
      zero_center(m));
  OmegaResult inside = in_omega(p, q(m, {Rational(1, 2), 1, Rational(1, 2), 100}));
  CHECK(inside.member);
  CHECK(inside.reasons == std::vector<OmegaReason>{OmegaReason::InsideRadius, OmegaReason::BoundaryAbsolutelySummable,
                                                   OmegaReason::InsideRadius, OmegaReason::EventuallyZero});
  OmegaResult out = in_omega(p, q(m, {1, 2, 1, 0}));
  CHECK_FALSE(out.member);
  CHECK(out.reasons == std::vector<OmegaReason>{OmegaReason::BoundaryDivergent, OmegaReason::OutsideRadius,
                                                OmegaReason::BoundaryDivergent, OmegaReason::EventuallyZero});
  CHECK_THROWS_AS(in_omega(p, q(m, {Rational(-1, 2), 0, 0, 0})), NegativeInput);
}

TEST_CASE("dominator of the geometric series at one half") {
  Model m = make_model(1);
  PowerSeries p = PowerSeries::closed(CoeffForm(m, {ScalarForm::constant(1)}), zero_center(m));
  OmegaResult o = in_omega(p, q(m, {Rational(1, 2)}));
  REQUIRE(o.dominator);
  for (std::size_t k : {0, 1, 4, 10}) CHECK(o.dominator->q(k)[0] == Scalar(Rational(1, 1L << k)));
}

TEST_CASE("domain is solid and closed under lattice operations") {
  Model m = make_model(3);
  PowerSeries p = PowerSeries::closed(
      CoeffForm(m, {ScalarForm::geometric(2), ScalarForm::rational_power(1, -2, 1, 1), ScalarForm::finite({1})}), zero_center(m));
  SolidCheck s = omega_solid_check(p, q(m, {Rational(1, 4), 1, 3}), q(m, {Rational(1, 2), Rational(1, 3), 9}));
  CHECK(s.passed);
  CHECK(s.checks > 0);
}

TEST_CASE("radius of convergence") {
  Model m = make_model(2);
  SUBCASE("bounded") {
    PowerSeries p = PowerSeries::closed(CoeffForm(m, {ScalarForm::geometric(2), ScalarForm::polynomial({0, 1}, Rational(1, 3))}),
                                        zero_center(m));
    RadiusResult r = radius(p);
    CHECK(r.kind == RadiusKind::Bounded);
    CHECK(r.rho->identical(q(m, {Rational(1, 2), 3})));
    CHECK(r.all_checks_passed());
  }
  SUBCASE("band split") {
    PowerSeries p = PowerSeries::closed(CoeffForm(m, {ScalarForm::geometric(4), ScalarForm::finite({1, 1})}), zero_center(m));
    RadiusResult r = radius(p);
    CHECK(r.kind == RadiusKind::BandSplit);
    CHECK(r.bounded_band->support_labels() == std::vector<std::string>{"t1"});
    CHECK(r.unbounded_band->support_labels() == std::vector<std::string>{"t2"});
    CHECK(r.rho_on_band->identical(q(m, {Rational(1, 4), 0})));
    CHECK(r.all_checks_passed());
  }
  SUBCASE("everywhere") {
    PowerSeries p = PowerSeries::closed(CoeffForm::uniform(m, ScalarForm::finite({1, 2, 3})), zero_center(m));
    RadiusResult r = radius(p);
    CHECK(r.kind == RadiusKind::AllOfEPlus);
    CHECK(r.all_checks_passed());
  }
}

TEST_CASE("approach families") {
  Model m = make_model(1);
  RealElement e = identity(m);
  ApproachFamily rad = ApproachFamily::radial(e);
  CHECK(rad.at(3).re.identical(q(m, {Rational(7, 8)})));
  CHECK(rad.ratio_bound()->identical(e));
  ComplexElement w(q(m, {1}), q(m, {Rational(1, 2)}));
  ApproachFamily sec = ApproachFamily::sector(e, w);
  // |w| / (Re w - |w|²/2) with |w|² = 5/4
  double bound = std::sqrt(1.25) / (1 - 0.625);
  CHECK(sec.ratio_bound()->operator[](0).to_double() == doctest::Approx(bound).epsilon(1e-12));
  for (std::size_t k = 1; k <= 30; ++k) {
    ComplexElement z = sec.at(k);
    double gap = std::abs(std::complex<double>(1, 0) - at(z, 0));
    CHECK(gap / (1 - std::abs(at(z, 0))) <= bound * (1 + 1e-9));
  }
  CHECK_THROWS(ApproachFamily::sector(e, ComplexElement(q(m, {1}), q(m, {1}))));
  CHECK_FALSE(ApproachFamily::sampled(e, [&](std::size_t k) { return rad.at(k); }).ratio_bound());
}

TEST_CASE("Abel limit of the logarithm series") {
  Model m = make_model(2);
  PowerSeries p = log_series(m);
  AbelVerdict v = abel_limit(p, ApproachFamily::radial(identity(m)));
  CHECK(v.converged());
  CHECK(std::fabs(v.limit.re[0].to_double() - std::log(2.0)) <= 1e-15);
  CHECK(v.sbp_residual <= 1e-12);
  REQUIRE(v.samples.size() == 4);
  for (const AbelSample& s : v.samples) {
    std::complex<double> z = at(s.z, 0);
    double exact = std::abs(testing::log1p_over(z) - std::log(2.0));
    CHECK(std::fabs(s.error[0].to_double() - exact) <= 1e-13);
    CHECK(s.error[0].to_double() <= s.envelope[0].to_double());
  }
  CHECK(v.samples[2].error[0].to_double() < 3e-4);
}

TEST_CASE("Abel limit along sector and sampled families") {
  Model m = make_model(1);
  PowerSeries p = log_series(m);
  ComplexElement w(q(m, {1}), q(m, {Rational(1, 2)}));
  AbelVerdict s = abel_limit(p, ApproachFamily::sector(identity(m), w));
  CHECK(s.converged());
  for (const AbelSample& x : s.samples)
    CHECK(std::fabs(x.error[0].to_double() - std::abs(testing::log1p_over(at(x.z, 0)) - std::log(2.0))) <= 1e-13);

  ApproachFamily rad = ApproachFamily::radial(identity(m));
  AbelVerdict h = abel_limit(p, ApproachFamily::sampled(identity(m), [rad](std::size_t k) { return rad.at(k); }));
  CHECK(h.converged());
  CHECK_FALSE(h.ratio_closed_form);
  CHECK(std::find(h.notes.begin(), h.notes.end(), flags::heuristic) != h.notes.end());
}

TEST_CASE("Abel hypotheses are enforced") {
  Model m = make_model(1);
  PowerSeries p = log_series(m);
  auto which = [&](const ApproachFamily& f, std::vector<std::size_t> ks = {4, 8, 12, 16}) {
    try {
      abel_limit(p, f, {}, ks);
    } catch (const HypothesisFailed& e) {
      return e.which();
    }
    return std::string("none");
  };
  CHECK(which(ApproachFamily::radial(q(m, {Rational(1, 2)}))) == "i");
  auto on_circle = ApproachFamily::sampled(identity(m), [m](std::size_t k) {
    return k == 2 ? ComplexElement(q(m, {0}), q(m, {1})) : ComplexElement(q(m, {1 - Rational(1, 1L << k)}));
  });
  CHECK(which(on_circle) == "ii");
  // Tangential approach: gap/(1-|z|) grows like 2^{k/4} past the inspected window.
  auto tangent = ApproachFamily::sampled(
      identity(m),
      [m](std::size_t k) {
        double r = 1 - std::ldexp(1.0, -static_cast<int>(k));
        double th = std::ldexp(1.0, -static_cast<int>(3 * k / 4));
        return ComplexElement(RealElement(m, {Scalar::approx(r * std::cos(th))}), RealElement(m, {Scalar::approx(r * std::sin(th))}));
      },
      16);
  CHECK(which(tangent, {4, 8, 12, 16, 32}) == "iii");

  PowerSeries harmonic = PowerSeries::closed(CoeffForm(m, {ScalarForm::rational_power(1, -1, 1, 1)}), zero_center(m));
  CHECK_THROWS_AS(abel_limit(harmonic, ApproachFamily::radial(identity(m))), SeriesDiverges);
}

TEST_CASE("Abel limit at a rescaled radius") {
  Model m = make_model(2);
  // a_n = (-1)ⁿ/((n+1)2ⁿ) has radius 2 and S(2) = ln 2
  PowerSeries p = PowerSeries::closed(CoeffForm::uniform(m, ScalarForm::rational_power(1, -1, 1, Rational(-1, 2))), zero_center(m));
  RealElement two = q(m, {2, 2});
  AbelVerdict v = abel_rescaled(p, ApproachFamily::radial(two));
  CHECK(v.converged());
  CHECK(v.rho->identical(two));
  CHECK(std::fabs(v.limit.re[1].to_double() - std::log(2.0)) <= 1e-15);
  CHECK(std::find(v.notes.begin(), v.notes.end(), "scaling-lemma-verified") != v.notes.end());

  PowerSeries entire = PowerSeries::closed(CoeffForm(m, {ScalarForm::rational_power(1, -1, 1, Rational(-1, 2)), ScalarForm::finite({1})}),
                                           zero_center(m));
  try {
    abel_rescaled(entire, ApproachFamily::radial(two));
    FAIL("expected NotWeakOrderUnit");
  } catch (const NotWeakOrderUnit& e) {
    CHECK(e.points() == std::vector<std::string>{"t2"});
  }
}
