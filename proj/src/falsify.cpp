#include "vlat/falsify.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "vlat/axioms.hpp"
#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"
#include "vlat/power_series.hpp"
#include "vlat/sequence.hpp"
#include "vlat/series.hpp"

namespace vlat {

const std::vector<std::string>& falsify_suites() {
  static const std::vector<std::string> s = {"geometric", "dominance", "modulus", "nthroot",
                                             "cauchy-hadamard", "scaling", "amgm", "phi"};
  return s;
}

ScalarForm random_convergent_form(Sampler& rng) {
  Rational r = rng.rational(7, 8);
  while (abs(r) >= 1) r = rng.rational(7, 8);
  ScalarForm f = [&] {
    if (rng.chance(0.5)) {
      std::vector<Rational> c;
      long deg = rng.integer(0, 2);
      for (long i = 0; i <= deg; ++i) c.push_back(rng.rational(5, 4));
      if (c.back() == 0) c.back() = 1;
      return ScalarForm::polynomial(c, r);
    }
    Rational scale = rng.rational(5, 4);
    if (scale == 0) scale = 1;
    return ScalarForm::rational_power(scale, rng.integer(-3, 3), rng.integer(0, 2), r);
  }();
  if (rng.chance(0.3)) {
    std::vector<Rational> prefix;
    for (long i = rng.integer(1, 3); i > 0; --i) prefix.push_back(rng.rational(5, 4));
    f = f.with_prefix(prefix);
  }
  return f;
}

ScalarForm random_power_form(Sampler& rng, bool vanishing) {
  if (vanishing) {
    std::vector<Rational> v;
    for (long i = rng.integer(1, 4); i > 0; --i) v.push_back(rng.rational(5, 4));
    return ScalarForm::finite(v);
  }
  Rational r = 0;
  while (r == 0) r = abs(rng.rational(12, 4));
  if (rng.chance(0.5)) r = -r;
  if (rng.chance(0.5)) {
    std::vector<Rational> c;
    long deg = rng.integer(0, 2);
    for (long i = 0; i <= deg; ++i) c.push_back(rng.rational(5, 4));
    if (c.back() == 0) c.back() = 1;
    return ScalarForm::polynomial(c, r);
  }
  return ScalarForm::rational_power(Rational(1), rng.integer(-3, 2), rng.integer(1, 2), r);
}

namespace {

std::string show(const RealElement& x) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i].to_string();
  return os.str() + "]";
}

std::string show(const ComplexElement& z) { return "re " + show(z.re) + " im " + show(z.im); }

class Suite {
public:
  Suite(std::string name, std::size_t samples, std::uint64_t seed, const ToleranceConfig& tol)
      : samples_(samples), rng_(seed), tol_(tol) {
    r_.suite = std::move(name);
  }

  SuiteResult run() {
    for (std::size_t k = 0; k < samples_; ++k) {
      ++r_.cases;
      try {
        one(k);
      } catch (const std::exception& e) {
        fail(std::string("unexpected exception: ") + e.what());
      }
    }
    return r_;
  }

private:
  void fail(const std::string& what) {
    if (r_.failures++ == 0) r_.counterexample = "case " + std::to_string(r_.cases - 1) + ": " + what;
  }

  Model model() { return make_model(static_cast<std::size_t>(rng_.integer(1, 8))); }

  void one(std::size_t k) {
    const std::string& s = r_.suite;
    if (s == "geometric") geometric();
    else if (s == "dominance") dominance();
    else if (s == "modulus") modulus();
    else if (s == "nthroot") nthroot();
    else if (s == "cauchy-hadamard") cauchy_hadamard();
    else if (s == "scaling") scaling();
    else if (s == "amgm") amgm();
    else phi(k);
  }

  void geometric() {
    Model m = model();
    double rmax = rng_.uniform(0.0, 1.2);
    std::vector<Scalar> re, im;
    std::size_t peak = static_cast<std::size_t>(rng_.integer(0, static_cast<long>(m->size()) - 1));
    for (std::size_t i = 0; i < m->size(); ++i) {
      double rad = i == peak ? rmax : rng_.uniform(0.0, rmax);
      double th = rng_.uniform(0.0, 2 * M_PI);
      re.push_back(Scalar::approx(rad * std::cos(th)));
      im.push_back(Scalar::approx(rad * std::sin(th)));
    }
    ComplexElement a(RealElement(m, re), RealElement(m, im));
    RealElement e = identity(m);
    bool dominated = strictly_dominates(cmodulus(a), e, tol_);
    try {
      GeometricResult g = geometric_sum(a, tol_);
      if (!dominated) return fail("geometric_sum succeeded although |a| is not << e: " + show(a));
      ComplexElement one = mul(ComplexElement(e) - a, g.sum);
      for (std::size_t i = 0; i < m->size(); ++i) {
        std::complex<double> v(one.re[i].to_double(), one.im[i].to_double());
        if (std::abs(v - 1.0) > 1e-9) return fail("(e-a)*sum != e at " + m->label(i));
      }
      if (g.partial_gap > 1e-9) return fail("partial sum gap " + std::to_string(g.partial_gap));
    } catch (const NotStrictlyDominated&) {
      if (dominated) fail("geometric_sum refused although |a| << e: " + show(a));
    }
  }

  void dominance() {
    Model m = model();
    RealElement x = rng_.exact_element(m);
    RealElement y = rng_.exact_element(m);
    if (rng_.chance(0.5)) {
      y = RealElement::generate(m, [&](std::size_t i) {
        if (rng_.chance(0.3)) return x[i];
        return x[i] + Scalar(abs(rng_.rational(9, 8)));
      });
    }
    bool lhs = strictly_dominates(x, y, tol_);
    bool rhs = leq(x, y, tol_) && try_invert(y - x, tol_).has_value();
    if (lhs != rhs) fail("x = " + show(x) + ", y = " + show(y));
  }

  void modulus() {
    Model m = model();
    RealElement f = rng_.approx_element(m, -10, 10), g = rng_.approx_element(m, -10, 10);
    RealElement exact = square_mean(f, g), grid = square_mean_grid(f, g, tol_.grid_K);
    for (std::size_t i = 0; i < m->size(); ++i) {
      double a = exact[i].to_double(), b = grid[i].to_double();
      if (b > a * (1 + 1e-15) || a - b > 1e-5 * a)
        return fail("f = " + show(f) + ", g = " + show(g) + " grid " + std::to_string(b) + " vs " + std::to_string(a));
    }
  }

  void nthroot() {
    Model m = model();
    std::vector<ScalarForm> fs;
    for (std::size_t i = 0; i < m->size(); ++i) fs.push_back(random_convergent_form(rng_));
    CoeffForm f(m, fs);
    ConvergenceVerdict v = nth_root_test(Series::closed(f), tol_);
    if (v.status != VerdictStatus::ConvergesAbsolutely) return fail("root test verdict " + to_string(v.status));
    if (v.has_note("band-domination-failed")) return fail("band domination failed");
    for (std::size_t i = 0; i < m->size(); ++i) {
      long double direct = 0;
      for (std::size_t n = 0; n < 20000; ++n) direct += fs[i].value_ld(n);
      double got = v.sum->re[i].to_double();
      if (std::fabs(got - static_cast<double>(direct)) > 1e-8 * std::max(1.0, std::fabs(got)))
        return fail("sum mismatch at " + m->label(i));
    }
    if (!leq(*v.limsup_root, identity(m), tol_)) fail("convergent series with L not <= e");
  }

  void cauchy_hadamard() {
    int mode = static_cast<int>(rng_.integer(0, 2));
    Model m = make_model(static_cast<std::size_t>(rng_.integer(mode == 2 ? 2 : 1, 8)));
    std::vector<ScalarForm> fs;
    for (std::size_t i = 0; i < m->size(); ++i) {
      bool vanish = mode == 1 || (mode == 2 && (i == 0 || (i + 1 < m->size() && rng_.chance(0.5))));
      if (mode == 2 && i + 1 == m->size()) vanish = false;
      fs.push_back(random_power_form(rng_, vanish));
    }
    PowerSeries p = PowerSeries::closed(CoeffForm(m, fs), ComplexElement::zero(m));
    RadiusResult r = radius(p, tol_);
    RadiusKind want = mode == 0 ? RadiusKind::Bounded : mode == 1 ? RadiusKind::AllOfEPlus : RadiusKind::BandSplit;
    if (r.kind != want) return fail("radius kind " + to_string(r.kind) + ", expected " + to_string(want));
    for (const auto& c : r.checks)
      if (!c.passed) return fail("check failed: " + c.name);
  }

  void scaling() {
    Model m = model();
    RealElement a = rng_.exact_positive(m, 0.2);
    std::vector<RealElement> B;
    for (long n = rng_.integer(1, 8); n > 0; --n) B.push_back(rng_.exact_positive(m, 0.1));
    auto [s1, s2] = scale_sup(a, B, tol_);
    auto [i1, i2] = scale_inf(a, B, tol_);
    if (!s1.identical(s2)) return fail("sup(aB) != a sup B for a = " + show(a));
    if (!i1.identical(i2)) fail("inf(aB) != a inf B for a = " + show(a));
  }

  void amgm() {
    Model m = model();
    RealElement a = rng_.chance(0.5) ? rng_.exact_positive(m, 0.2, 99, 7) : rng_.approx_element(m, 0, 1000);
    auto n = static_cast<unsigned long>(rng_.integer(1, 12));
    AmGmResult r = am_gm_bound_check(a, n, tol_, 8, rng_.engine()());
    if (!r.holds) fail(r.witness);
  }

  void phi(std::size_t k) {
    static const std::size_t sizes[] = {1, 2, 4, 8, 16};
    Model m = make_model(sizes[k % 5]);
    AxiomReport rep = check_phi_axioms(m, 1, rng_.engine()(), tol_);
    for (const auto& a : rep.results)
      if (!a.passed) return fail("axiom " + a.axiom + ": " + a.witness);
  }

  std::size_t samples_;
  Sampler rng_;
  ToleranceConfig tol_;
  SuiteResult r_;
};

}  // namespace

SuiteResult run_falsify_suite(const std::string& suite, std::size_t samples, std::uint64_t seed,
                              const ToleranceConfig& tol) {
  bool known = false;
  for (const auto& s : falsify_suites()) known = known || s == suite;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  return Suite(suite, samples, seed, tol).run();
}

}  // namespace vlat
