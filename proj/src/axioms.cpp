#include "vlat/axioms.hpp"

#include <sstream>
#include <stdexcept>

#include "vlat/random.hpp"

namespace vlat {

namespace {

std::string show(const RealElement& x) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i].to_string();
  os << "]";
  return os.str();
}

std::string show(const ComplexElement& z) { return show(z.re) + " + i" + show(z.im); }

std::string show(const BandProjection& p) {
  std::string s = "P{";
  auto labels = p.support_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "}";
}

bool close(const RealElement& x, const RealElement& y, const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!tol_equal(x[i], y[i], tol.eps_cmp)) return false;
  return true;
}

bool close(const ComplexElement& x, const ComplexElement& y, const ToleranceConfig& tol) {
  return close(x.re, y.re, tol) && close(x.im, y.im, tol);
}

bool vanishes(const RealElement& x, const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (tol_nonzero(x[i], tol)) return false;
  return true;
}

bool vanishes(const ComplexElement& z, const ToleranceConfig& tol) {
  return vanishes(z.re, tol) && vanishes(z.im, tol);
}

class Recorder {
public:
  explicit Recorder(AxiomResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& witness) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.witness = witness();
    }
  }

private:
  AxiomResult& r_;
};

}  // namespace

const std::vector<std::string>& phi_axiom_names() {
  static const std::vector<std::string> names = {"i",  "ii", "iii", "iv-inverse",
                                                  "iv-projection", "v", "vi"};
  return names;
}

PhiOps standard_phi_ops(const ToleranceConfig& tol) {
  PhiOps ops;
  ops.mul = [](const ComplexElement& a, const ComplexElement& b) { return mul(a, b); };
  ops.invert = [tol](const RealElement& a) { return try_invert(a, tol); };
  ops.project = [](const BandProjection& p, const ComplexElement& z) { return p.apply(z); };
  return ops;
}

PhiOps injected_bug_ops(const std::string& axiom, const ToleranceConfig& tol) {
  PhiOps ops = standard_phi_ops(tol);
  if (axiom == "i") {
    ops.mul = [](const ComplexElement& a, const ComplexElement& b) {
      ComplexElement p = mul(a, b);
      return ComplexElement(p.re + a.re * a.re * b.re, p.im);
    };
  } else if (axiom == "ii") {
    ops.mul = [](const ComplexElement& a, const ComplexElement& b) {
      return ComplexElement(a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re);
    };
  } else if (axiom == "iii") {
    ops.mul = [](const ComplexElement& a, const ComplexElement& b) { return mul(a, b) + a + b; };
  } else if (axiom == "iv-inverse") {
    ops.invert = [tol](const RealElement& a) -> std::optional<RealElement> {
      auto r = try_invert(a, tol);
      if (r) return -*r;
      return r;
    };
  } else if (axiom == "iv-projection") {
    ops.project = [](const BandProjection& p, const ComplexElement& z) {
      return p.apply(z) + ComplexElement(p.apply(cmodulus(z)));
    };
  } else if (axiom == "v") {
    ops.project = [](const BandProjection& p, const ComplexElement& z) {
      ComplexElement q = p.apply(z);
      return q + q;
    };
  } else if (axiom == "vi") {
    ops.project = [](const BandProjection& p, const ComplexElement& z) { return -p.apply(z); };
  } else {
    throw std::invalid_argument("unknown axiom: " + axiom);
  }
  return ops;
}

bool AxiomReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const AxiomResult& AxiomReport::at(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return r;
  throw std::out_of_range("no axiom " + axiom);
}

AxiomReport check_phi_axioms(const Model& model, std::size_t samples, std::uint64_t seed,
                             const ToleranceConfig& tol) {
  return check_phi_axioms(model, samples, seed, standard_phi_ops(tol), tol);
}

AxiomReport check_phi_axioms(const Model& model, std::size_t samples, std::uint64_t seed,
                             const PhiOps& ops, const ToleranceConfig& tol) {
  if (samples == 0) throw std::invalid_argument("axiom suite needs at least one sample");
  AxiomReport report{model->size(), samples, seed, {}};
  const std::vector<std::string> statements = {
      "ab = ba",
      "|ab| = |a||b|",
      "|a| ^ |b| = 0 iff ab = 0",
      "a invertible and positive implies a^-1 positive",
      "P(ab) = aP(b)",
      "P(ab) = P(a)P(b)",
      "P is an order continuous Riesz homomorphism"};
  for (std::size_t k = 0; k < statements.size(); ++k)
    report.results.push_back({phi_axiom_names()[k], statements[k], 0, true, {}});
  Recorder ax1(report.results[0]), ax2(report.results[1]), ax3(report.results[2]),
      ax4a(report.results[3]), ax4b(report.results[4]), ax5(report.results[5]), ax6(report.results[6]);

  Sampler rng(seed);
  const RealElement e = identity(model);
  for (std::size_t s = 0; s < samples; ++s) {
    ComplexElement a = rng.exact_complex(model, 0.25);
    ComplexElement b = rng.exact_complex(model, 0.25);
    if (s % 2 == 1) {
      // Force disjoint supports on odd samples so (iii) sees both directions.
      RealElement ma = cmodulus(a);
      BandProjection pa = band_projection(ma, tol);
      b = pa.complement().apply(b);
    }
    BandProjection P(model, rng.support(model->size()));

    ComplexElement ab = ops.mul(a, b);
    ComplexElement ba = ops.mul(b, a);
    ax1.check(close(ab, ba, tol), [&] { return "a=" + show(a) + " b=" + show(b); });

    RealElement lhs2 = cmodulus(ab);
    RealElement rhs2 = cmodulus(a) * cmodulus(b);
    ax2.check(close(lhs2, rhs2, tol), [&] {
      return "a=" + show(a) + " b=" + show(b) + " |ab|=" + show(lhs2) + " |a||b|=" + show(rhs2);
    });

    bool disjoint = vanishes(inf2(cmodulus(a), cmodulus(b)), tol);
    bool zero_product = vanishes(ab, tol);
    ax3.check(disjoint == zero_product, [&] {
      return "a=" + show(a) + " b=" + show(b) + " disjoint=" + std::to_string(disjoint) +
             " ab=" + show(ab);
    });

    RealElement u = cmodulus(a);
    if (auto inv = ops.invert(u)) {
      bool ok = leq(RealElement::zero(model), *inv, tol) && close(u * *inv, e, tol);
      ax4a.check(ok, [&] { return "a=" + show(u) + " a^-1=" + show(*inv); });
    }

    ComplexElement pab = ops.project(P, ab);
    ComplexElement apb = ops.mul(a, ops.project(P, b));
    ax4b.check(close(pab, apb, tol), [&] {
      return show(P) + " a=" + show(a) + " b=" + show(b) + " P(ab)=" + show(pab) + " aP(b)=" + show(apb);
    });

    ComplexElement papb = ops.mul(ops.project(P, a), ops.project(P, b));
    ax5.check(close(pab, papb, tol), [&] {
      return show(P) + " a=" + show(a) + " b=" + show(b) + " P(ab)=" + show(pab) + " P(a)P(b)=" + show(papb);
    });

    // (vi): lattice homomorphism on the real part, then order continuity
    // along x_n = x + 2^{-n} d with dominator 2^{-n}|d|.
    auto Pr = [&](const RealElement& x) { return ops.project(P, ComplexElement(x)).re; };
    const RealElement& f = a.re;
    const RealElement& g = b.re;
    RealElement jl = Pr(sup2(f, g)), jr = sup2(Pr(f), Pr(g));
    RealElement ml = Pr(inf2(f, g)), mr = inf2(Pr(f), Pr(g));
    ax6.check(close(jl, jr, tol) && close(ml, mr, tol), [&] {
      return show(P) + " f=" + show(f) + " g=" + show(g) + " P(f v g)=" + show(jl) +
             " P(f) v P(g)=" + show(jr);
    });
    RealElement pabs = Pr(abs_real(f));
    ax6.check(leq(RealElement::zero(model), pabs, tol) && close(pabs, abs_real(Pr(f)), tol),
              [&] { return show(P) + " f=" + show(f) + " P|f|=" + show(pabs); });
    RealElement pd = Pr(abs_real(g));
    RealElement prev_dom = pd;
    for (unsigned n : {0u, 1u, 2u, 4u, 8u, 16u}) {
      Scalar w = Scalar::ratio(1, 1L << n);
      RealElement xn = f + w * g;
      RealElement gap = abs_real(Pr(xn) - Pr(f));
      RealElement dom = w * pd;
      ax6.check(leq(gap, dom, tol) && leq(dom, prev_dom, tol), [&] {
        return show(P) + " x=" + show(f) + " d=" + show(g) + " n=" + std::to_string(n) +
               " |P(x_n)-P(x)|=" + show(gap) + " P(q_n)=" + show(dom);
      });
      prev_dom = dom;
    }
  }
  return report;
}

}  // namespace vlat
