#include "vlat/power_series.hpp"

#include <cfloat>
#include <cmath>
#include <complex>
#include <sstream>

#include "vlat/lattice.hpp"

namespace vlat {

namespace {

using cld = std::complex<long double>;
constexpr long double kInf = std::numeric_limits<long double>::infinity();

std::vector<const ScalarForm*> parts(const Series& s, std::size_t i) {
  std::vector<const ScalarForm*> p = {&s.re().form()[i]};
  if (s.im()) p.push_back(&s.im()->form()[i]);
  return p;
}

Rational exact_of(const Scalar& x) { return x.is_exact() ? x.rational() : Rational(x.to_double()); }

double up(long double x) {
  if (std::isinf(x)) return std::numeric_limits<double>::infinity();
  double d = static_cast<double>(x);
  if (static_cast<long double>(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

struct Weighted {
  cld value;
  long double error;
  std::size_t terms;
};

// Σ a_n wⁿ for one scalar form with a certified truncation bound.
Weighted weighted_sum(const ScalarForm& f, cld w, long double target) {
  const long double x = std::abs(w);
  if (x == 0) return {cld(f.value_ld(0), 0), 0, 1};
  const long double lx = std::log(x);
  cld sum = 0, pw = 1;
  long double abs_sum = 0;
  auto z = f.zero_from();
  for (std::size_t n = 0;; ++n, pw *= w) {
    if (z && n >= *z) return {sum, 4 * (n + 1) * LDBL_EPSILON * abs_sum, n};
    cld t = f.value_ld(n) * pw;
    sum += t;
    abs_sum += std::abs(t);
    long double theta = f.term_ratio_bound(n + 1, x);
    if (theta < 1) {
      long double l = f.log_abs_ld(n + 1);
      long double next = l == -kInf ? 0.0L : std::exp(l + static_cast<long double>(n + 1) * lx);
      long double env = next / (1 - theta);
      if (env <= target || n > 200000000) return {sum, env + 4 * (n + 1) * LDBL_EPSILON * abs_sum, n + 1};
    } else if (!z && f.limsup_root() * Rational(static_cast<double>(x)) >= 1 && n > 64) {
      throw std::domain_error("point lies outside the disk of absolute convergence");
    }
  }
}

cld coord(const ComplexElement& z, std::size_t i) { return {z.re[i].to_long_double(), z.im[i].to_long_double()}; }

RealElement approx_element(const Model& m, const std::vector<long double>& v) {
  std::vector<Scalar> s;
  for (long double x : v) s.push_back(Scalar::approx(static_cast<double>(x)));
  return RealElement(m, s);
}

}  // namespace

// ---- PowerSeries --------------------------------------------------------

PowerSeries::PowerSeries(Series coefficients, ComplexElement center)
    : coeffs_(std::move(coefficients)), center_(std::move(center)) {
  if (!same_model(coeffs_.model(), center_.model())) throw ModelMismatch();
}

RealElement PowerSeries::limsup_root() const {
  if (!is_closed_form()) throw NotClosedForm();
  RealElement L = coeffs_.re().form().limsup_root();
  if (coeffs_.im()) L = sup2(L, coeffs_.im()->form().limsup_root());
  return L;
}

PowerSeries PowerSeries::rescaled(const RealElement& x) const {
  if (!is_closed_form()) throw NotClosedForm();
  if (coeffs_.im())
    return PowerSeries::closed(coeffs_.re().form().ratio_scaled(x), coeffs_.im()->form().ratio_scaled(x), center_);
  return PowerSeries::closed(coeffs_.re().form().ratio_scaled(x), center_);
}

ClosedBall::ClosedBall(ComplexElement c, RealElement r) : center(std::move(c)), radius(std::move(r)) {
  require_same_model(center.re, radius);
  std::vector<std::string> neg = labels_where(radius.model(), [&](std::size_t i) { return radius[i].sign() < 0; });
  if (!neg.empty()) throw NegativeInput(neg);
}

bool ClosedBall::contains(const ComplexElement& z, const ToleranceConfig& tol) const {
  return leq(cmodulus(z - center), radius, tol);
}

ComplexElement eval_partial(const PowerSeries& p, const ComplexElement& z, std::size_t m) {
  ComplexElement w = z - p.center();
  ComplexElement acc = p.coefficient(m);
  for (std::size_t n = m; n-- > 0;) acc = mul(acc, w) + p.coefficient(n);
  return acc;
}

ComplexElement eval_partial_naive(const PowerSeries& p, const ComplexElement& z, std::size_t m) {
  ComplexElement w = z - p.center();
  ComplexElement pw(identity(p.model()));
  ComplexElement acc = ComplexElement::zero(p.model());
  for (std::size_t n = 0; n <= m; ++n) {
    acc = acc + mul(p.coefficient(n), pw);
    pw = mul(pw, w);
  }
  return acc;
}

CertifiedValue eval_certified(const PowerSeries& p, const ComplexElement& z, long double target) {
  if (!p.is_closed_form()) throw NotClosedForm();
  const Model& M = p.model();
  ComplexElement w = z - p.center();
  std::vector<long double> re, im, err;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < M->size(); ++i) {
    cld wi = coord(w, i);
    cld v = 0;
    long double e = 0;
    auto ps = parts(p.coefficients(), i);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      Weighted ws = weighted_sum(*ps[k], wi, target);
      v += k == 0 ? ws.value : cld(0, 1) * ws.value;
      e += ws.error;
      terms = std::max(terms, ws.terms);
    }
    re.push_back(v.real());
    im.push_back(v.imag());
    err.push_back(up(e));
  }
  return {ComplexElement(approx_element(M, re), approx_element(M, im)), approx_element(M, err), terms};
}

// ---- Ω_S ----------------------------------------------------------------

std::string to_string(OmegaReason r) {
  switch (r) {
    case OmegaReason::EventuallyZero: return "eventually-zero";
    case OmegaReason::InsideRadius: return "inside-radius";
    case OmegaReason::BoundaryAbsolutelySummable: return "boundary-absolutely-summable";
    case OmegaReason::BoundaryDivergent: return "boundary-divergent";
    case OmegaReason::OutsideRadius: return "outside-radius";
  }
  return "?";
}

OmegaResult in_omega(const PowerSeries& p, const RealElement& r, const ToleranceConfig&) {
  if (!p.is_closed_form()) throw NotClosedForm();
  require_same_model(p.center().re, r);
  std::vector<std::string> neg = labels_where(r.model(), [&](std::size_t i) { return r[i].sign() < 0; });
  if (!neg.empty()) throw NegativeInput(neg);
  const Model& M = p.model();
  RealElement L = p.limsup_root();
  OmegaResult res;
  res.member = true;
  std::vector<Rational> rq;
  for (std::size_t i = 0; i < M->size(); ++i) {
    Rational ri = exact_of(r[i]);
    rq.push_back(ri);
    auto ps = parts(p.coefficients(), i);
    bool vanish = true;
    for (auto* f : ps) vanish = vanish && f->zero_from().has_value();
    OmegaReason why;
    if (vanish) {
      why = OmegaReason::EventuallyZero;
    } else {
      int c = cmp(L[i].rational() * ri, 1);
      if (c < 0) {
        why = OmegaReason::InsideRadius;
      } else if (c > 0) {
        why = OmegaReason::OutsideRadius;
      } else {
        bool ok = true;
        for (auto* f : ps) ok = ok && f->abs_summable(ri);
        why = ok ? OmegaReason::BoundaryAbsolutelySummable : OmegaReason::BoundaryDivergent;
      }
    }
    if (why == OmegaReason::BoundaryDivergent || why == OmegaReason::OutsideRadius) res.member = false;
    res.reasons.push_back(why);
  }
  if (res.member) {
    DominatorWitness w;
    Series coeffs = p.coefficients();
    w.q = [coeffs, rq](std::size_t m) {
      return RealElement::generate(coeffs.model(), [&](std::size_t i) {
        Scalar acc(0);
        for (auto* f : parts(coeffs, i)) {
          if (auto ex = f->exact_abs_tail(rq[i], static_cast<long>(m)))
            acc = acc + Scalar(*ex);
          else
            acc = acc + Scalar::approx(up(f->abs_tail_bound(rq[i], static_cast<long>(m))));
        }
        return acc;
      });
    };
    res.dominator = w;
  }
  return res;
}

SolidCheck omega_solid_check(const PowerSeries& p, const RealElement& r, const RealElement& s,
                             const ToleranceConfig& tol) {
  SolidCheck out;
  auto expect = [&](bool ok, const std::string& what) {
    ++out.checks;
    if (!ok && out.passed) {
      out.passed = false;
      out.witness = what;
    }
  };
  bool mr = in_omega(p, r, tol).member;
  bool ms = in_omega(p, s, tol).member;
  if (mr && ms) {
    expect(in_omega(p, sup2(r, s), tol).member, "r and s in Omega but r v s is not");
    expect(in_omega(p, inf2(r, s), tol).member, "r and s in Omega but r ^ s is not");
  }
  for (const auto& [x, name] : {std::pair<const RealElement&, std::string>{r, "r"}, {s, "s"}}) {
    bool member = &x == &r ? mr : ms;
    if (!member) continue;
    expect(in_omega(p, Scalar::ratio(1, 2) * x, tol).member, name + " in Omega but " + name + "/2 is not");
    expect(in_omega(p, inf2(r, s), tol).member, name + " in Omega but r ^ s is not");
    expect(in_omega(p, RealElement::zero(p.model()), tol).member, "0 is not in Omega");
    BandProjection half(p.model(), std::vector<bool>(p.model()->size(), false));
    std::vector<bool> alt(p.model()->size());
    for (std::size_t i = 0; i < alt.size(); i += 2) alt[i] = true;
    expect(in_omega(p, BandProjection(p.model(), alt).apply(x), tol).member,
           name + " in Omega but a band component of " + name + " is not");
  }
  return out;
}

// ---- radius -------------------------------------------------------------

std::string to_string(RadiusKind k) {
  switch (k) {
    case RadiusKind::Bounded: return "Bounded";
    case RadiusKind::BandSplit: return "BandSplit";
    case RadiusKind::AllOfEPlus: return "AllOfEPlus";
  }
  return "?";
}

bool RadiusResult::all_checks_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

RadiusResult radius(const PowerSeries& p, const ToleranceConfig& tol) {
  const Model& M = p.model();
  RealElement L = p.limsup_root();
  RealElement e = identity(M);
  RadiusResult res{RadiusKind::Bounded, L, {}, {}, {}, {}, {}};
  BandProjection PL = band_projection(L, tol);
  auto member = [&](const RealElement& r) { return in_omega(p, r, tol).member; };

  if (PL.is_empty()) {
    res.kind = RadiusKind::AllOfEPlus;
    for (long c : {1L, 1000L, 1000000L})
      res.checks.push_back({"every positive element: " + std::to_string(c) + "e", member(Scalar(static_cast<int>(c)) * e)});
    return res;
  }
  RealElement Lstar = pseudo_inverse(L, tol);
  if (PL.is_full()) {
    res.kind = RadiusKind::Bounded;
    res.rho = Lstar;
    res.checks.push_back({"L*rho = e", (L * Lstar).identical(e)});
    for (auto [num, den] : {std::pair{1L, 2L}, {1L, 8L}}) {
      RealElement r = (Scalar(1) - Scalar::ratio(num, den)) * Lstar;
      res.checks.push_back({"(1-" + std::to_string(num) + "/" + std::to_string(den) + ")rho in Omega", member(r)});
    }
    bool rejects = true;
    for (std::size_t t = 0; t < M->size(); ++t) {
      RealElement r = RealElement::generate(M, [&](std::size_t i) {
        return i == t ? Scalar::ratio(9, 8) * Lstar[i] : Scalar::ratio(1, 2) * Lstar[i];
      });
      if (member(r)) rejects = false;
    }
    res.checks.push_back({"r > rho at one point is rejected", rejects});
    bool ch1 = true;
    for (long den : {2L, 8L, 64L}) {
      RealElement r = (Scalar(1) - Scalar::ratio(1, den)) * Lstar;
      if (member(r) && !leq(PL.apply(r), Lstar, tol)) ch1 = false;
    }
    res.checks.push_back({"P_L(r) <= L* for sampled r in Omega", ch1});
    res.checks.push_back({"limsup of P_rho roots recovers rho*", pseudo_inverse(Lstar, tol).identical(L)});
    return res;
  }
  res.kind = RadiusKind::BandSplit;
  res.bounded_band = PL;
  res.rho_on_band = Lstar;
  res.unbounded_band = disjoint_complement(PL);
  res.checks.push_back({"L*rho = P_L(e)", (L * Lstar).identical(PL.apply(e))});
  RealElement off = res.unbounded_band->apply(e);
  for (int c : {1, 1000}) res.checks.push_back({"positive element on the zero band: " + std::to_string(c) + "P(e)", member(Scalar(c) * off)});
  res.checks.push_back({"rho/2 on supp(L) plus 7P(e) off it in Omega", member(Scalar::ratio(1, 2) * Lstar + Scalar(7) * off)});
  return res;
}

// ---- approach families --------------------------------------------------

ApproachFamily ApproachFamily::radial(RealElement target, const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("radial family needs 0 < delta < 1");
  ApproachFamily f(ApproachKind::Radial, std::move(target));
  f.delta_ = delta;
  return f;
}

ApproachFamily ApproachFamily::sector(RealElement target, ComplexElement w, const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("sector family needs 0 < delta < 1");
  require_same_model(target, w.re);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational a = exact_of(w.re[i]) - 1, b = exact_of(w.im[i]);
    if (a * a + b * b >= 1) throw std::invalid_argument("sector family needs |w - 1| < 1 at every point");
  }
  ApproachFamily f(ApproachKind::Sector, std::move(target));
  f.delta_ = delta;
  f.w_ = std::move(w);
  return f;
}

ApproachFamily ApproachFamily::sampled(RealElement target, std::function<ComplexElement(std::size_t)> gen,
                                       std::size_t window) {
  ApproachFamily f(ApproachKind::Sampled, std::move(target));
  f.gen_ = std::move(gen);
  f.window_ = window;
  return f;
}

ComplexElement ApproachFamily::at(std::size_t k) const {
  Scalar dk = pow(Scalar(delta_), k);
  switch (kind_) {
    case ApproachKind::Radial: return ComplexElement((Scalar(1) - dk) * target_);
    case ApproachKind::Sector: {
      ComplexElement step = w_->scaled(dk, Scalar(0));
      return mul(ComplexElement(target_), ComplexElement(identity(target_.model())) - step);
    }
    case ApproachKind::Sampled: return gen_(k);
  }
  throw std::logic_error("unknown approach family");
}

ApproachFamily ApproachFamily::scaled(const RealElement& x) const {
  switch (kind_) {
    case ApproachKind::Radial: return radial(x * target_, delta_);
    case ApproachKind::Sector: return sector(x * target_, *w_, delta_);
    case ApproachKind::Sampled: {
      auto g = gen_;
      return sampled(x * target_, [g, x](std::size_t k) { return mul(ComplexElement(x), g(k)); }, window_);
    }
  }
  throw std::logic_error("unknown approach family");
}

std::optional<RealElement> ApproachFamily::ratio_bound() const {
  switch (kind_) {
    case ApproachKind::Radial: return identity(target_.model());
    case ApproachKind::Sector: {
      RealElement mod = cmodulus(*w_);
      return RealElement::generate(target_.model(), [&](std::size_t i) {
        long double m = mod[i].to_long_double();
        long double denom = w_->re[i].to_long_double() - m * m / 2;
        return Scalar::approx(up(m / denom));
      });
    }
    case ApproachKind::Sampled: return std::nullopt;
  }
  return std::nullopt;
}

// ---- Abel ---------------------------------------------------------------

namespace {

std::string k_str(std::size_t k) { return "k=" + std::to_string(k); }

// min over m of |e-z|·Σ_{n<=m}|s_n - S| + υ·sup_{n>m}|s_n - S| for one coordinate.
long double abel_envelope(const std::vector<const ScalarForm*>& ps, cld S, long double ez, long double ups) {
  long double best = kInf;
  long double acc = 0;
  cld partial = 0;
  for (std::size_t m = 0; m < (std::size_t(1) << 22); ++m) {
    cld a = ps[0]->value_ld(m);
    if (ps.size() > 1) a += cld(0, 1) * ps[1]->value_ld(m);
    partial += a;
    acc += std::abs(partial - S);
    long double rb = 0;
    for (auto* f : ps) rb += f->remainder_bound(m + 1);
    long double cand = ez * acc + ups * rb;
    best = std::min(best, cand);
    if (ez * acc >= best) break;
  }
  return best;
}

}  // namespace

AbelVerdict abel_limit(const PowerSeries& p, const ApproachFamily& family, const ToleranceConfig& tol,
                       const std::vector<std::size_t>& ks) {
  if (!p.is_closed_form()) throw NotClosedForm();
  const Model& M = p.model();
  const RealElement e = identity(M);
  if (!same_model(family.target().model(), M)) throw ModelMismatch();
  for (std::size_t i = 0; i < M->size(); ++i)
    if (family.target()[i] != Scalar(1))
      throw HypothesisFailed("i", "approach target differs from e at " + M->label(i));

  ConvergenceVerdict conv = converges_in_order(p.coefficients(), tol);
  if (!conv.converges()) throw SeriesDiverges(conv.divergent_points);

  AbelVerdict v{*conv.sum, *conv.sum_error, {}, e, true, false, false, e, 0, false, std::nullopt, {}};
  std::vector<long double> ups(M->size(), 1);
  if (auto rb = family.ratio_bound()) {
    v.ratio_bound = *rb;
    for (std::size_t i = 0; i < M->size(); ++i) ups[i] = (*rb)[i].to_long_double();
  } else {
    v.ratio_closed_form = false;
    v.notes.push_back(flags::heuristic);
    std::fill(ups.begin(), ups.end(), 0.0L);
    for (std::size_t k = 1; k <= family.window(); ++k) {
      ComplexElement w = family.at(k);
      RealElement mw = cmodulus(w);
      RealElement gap = cmodulus(ComplexElement(e) - w);
      for (std::size_t i = 0; i < M->size(); ++i) {
        long double d = 1 - mw[i].to_long_double();
        if (d <= 0) throw HypothesisFailed("ii", "|z_k| reaches e at " + M->label(i) + ", " + k_str(k));
        ups[i] = std::max(ups[i], gap[i].to_long_double() / d);
      }
    }
    v.ratio_bound = approx_element(M, ups);
    ComplexElement last = family.at(family.window());
    RealElement dist = cmodulus(ComplexElement(e) - last);
    for (std::size_t i = 0; i < M->size(); ++i)
      if (dist[i].to_double() > 1e-3) throw HypothesisFailed("i", "sampled family does not approach e at " + M->label(i));
  }

  std::vector<std::vector<long double>> errs(M->size());
  std::vector<long double> cmax(M->size(), 0);
  for (std::size_t k : ks) {
    ComplexElement w = family.at(k);
    ComplexElement z = p.center() + w;
    RealElement mw = cmodulus(w);
    if (!strictly_dominates(mw, e, tol)) throw HypothesisFailed("ii", "|z_k| is not << e at " + k_str(k));
    RealElement gap = cmodulus(ComplexElement(e) - w);
    for (std::size_t i = 0; i < M->size(); ++i) {
      long double ratio = gap[i].to_long_double() / (1 - mw[i].to_long_double());
      if (ratio > ups[i] * (1 + 1e-9L)) throw HypothesisFailed("iii", "ratio bound exceeded at " + M->label(i) + ", " + k_str(k));
    }
    CertifiedValue cv = eval_certified(p, z);
    std::vector<long double> err, env;
    for (std::size_t i = 0; i < M->size(); ++i) {
      cld S = coord(v.limit, i);
      long double eS = v.limit_error[i].to_long_double();
      long double d = std::abs(coord(cv.value, i) - S);
      long double ez = gap[i].to_long_double();
      long double bound = abel_envelope(parts(p.coefficients(), i), S, ez, ups[i]);
      bound += eS * (1 + 2 * ez) + cv.error[i].to_long_double();
      err.push_back(d);
      env.push_back(bound);
      errs[i].push_back(d);
      if (ez > 0) cmax[i] = std::max(cmax[i], d / ez);
    }
    v.samples.push_back({k, z, cv.value, approx_element(M, err), approx_element(M, env)});
  }
  v.envelope_constant = approx_element(M, cmax);

  v.strictly_decreasing = true;
  v.within_envelope = true;
  for (std::size_t i = 0; i < M->size(); ++i) {
    long double noise = 1e-14L * std::max<long double>(1, std::abs(coord(v.limit, i))) +
                        v.limit_error[i].to_long_double();
    for (std::size_t j = 0; j < v.samples.size(); ++j) {
      long double ej = errs[i][j];
      if (j > 0 && !(ej < errs[i][j - 1]) && ej > noise) v.strictly_decreasing = false;
      if (ej > 10 * v.samples[j].envelope[i].to_long_double() + noise) v.within_envelope = false;
    }
  }

  // Σ_{n<=m} a_n wⁿ = (e - w)Σ_{n<m} s_n wⁿ + s_m wᵐ at m = 16, w = z_3 - c.
  const std::size_t m = 16;
  ComplexElement w = family.at(3);
  ComplexElement lhs = eval_partial_naive(p, p.center() + w, m);
  ComplexElement s = ComplexElement::zero(M), acc = s, pw(e);
  for (std::size_t n = 0; n < m; ++n) {
    s = s + p.coefficient(n);
    acc = acc + mul(s, pw);
    pw = mul(pw, w);
  }
  s = s + p.coefficient(m);
  ComplexElement rhs = mul(ComplexElement(e) - w, acc) + mul(s, pw);
  RealElement diff = cmodulus(lhs - rhs);
  RealElement scale = cmodulus(lhs);
  double worst = 0;
  bool ok = true;
  for (std::size_t i = 0; i < M->size(); ++i) {
    double d = diff[i].to_double();
    worst = std::max(worst, d);
    if (!(diff[i].is_exact() && diff[i].is_zero()) && d > 1e-12 * std::max(1.0, scale[i].to_double())) ok = false;
  }
  v.sbp_residual = worst;
  v.sbp_ok = ok;
  return v;
}

AbelVerdict abel_rescaled(const PowerSeries& p, const ApproachFamily& family, const ToleranceConfig& tol,
                          const std::vector<std::size_t>& ks) {
  RadiusResult rr = radius(p, tol);
  if (rr.kind != RadiusKind::Bounded)
    throw NotWeakOrderUnit(labels_where(p.model(), [&](std::size_t i) { return rr.limsup_root[i].is_zero(); }));
  const RealElement& rho = *rr.rho;
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (family.target()[i] != rho[i])
      throw HypothesisFailed("i", "approach target differs from rho at " + p.model()->label(i));

  PowerSeries scaled = p.rescaled(rho);
  std::vector<std::string> notes;
  if (!scaled.limsup_root().identical(identity(p.model()))) notes.push_back("rescaled-radius-not-e");

  // sup(ρB) = ρ sup B on a sample of root values, the scaling step of the proof.
  std::vector<RealElement> B;
  for (std::size_t n = 1; n <= 8; ++n) {
    RealElement mod = cmodulus(p.coefficient(n));
    B.push_back(mod.map([n](const Scalar& x) { return nth_root(x, n); }));
  }
  auto [lhs, rhs] = scale_sup(rho, B, tol);
  bool scaling_ok = true;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!tol_equal(lhs[i], rhs[i], tol.eps_cmp)) scaling_ok = false;
  notes.push_back(scaling_ok ? "scaling-lemma-verified" : "scaling-lemma-failed");

  RealElement inv = pseudo_inverse(rho, tol);
  AbelVerdict v = abel_limit(scaled, family.scaled(inv), tol, ks);
  for (auto& s : v.samples) s.z = p.center() + mul(ComplexElement(rho), s.z - p.center());
  v.rho = rho;
  v.notes.insert(v.notes.end(), notes.begin(), notes.end());
  return v;
}

}  // namespace vlat
