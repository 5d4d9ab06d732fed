#include "vlat/sequence.hpp"

#include <cmath>
#include <sstream>

#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"
#include "vlat/random.hpp"

namespace vlat {

const std::vector<std::size_t>& witness_grid() {
  static const std::vector<std::size_t> grid = {0, 1, 2, 4, 8, 16, 32, 64};
  return grid;
}

std::vector<std::pair<std::size_t, RealElement>> DominatorWitness::samples() const {
  std::vector<std::pair<std::size_t, RealElement>> out;
  for (std::size_t n : witness_grid()) out.emplace_back(n, q(n));
  return out;
}

ElementSequence ElementSequence::closed(CoeffForm form) {
  ElementSequence s;
  s.model_ = form.model();
  s.form_ = std::move(form);
  return s;
}

ElementSequence ElementSequence::black_box(Model model, std::function<RealElement(std::size_t)> gen,
                                           std::size_t window, std::size_t first) {
  if (window < 2) throw std::invalid_argument("black-box window must be at least 2");
  ElementSequence s;
  s.model_ = std::move(model);
  s.gen_ = std::move(gen);
  s.window_ = window;
  s.first_ = first;
  return s;
}

const CoeffForm& ElementSequence::form() const {
  if (!form_) throw NotClosedForm();
  return *form_;
}

RealElement ElementSequence::at(std::size_t n) const {
  if (n < first_) throw std::out_of_range("sequence index below its first index");
  if (form_) return form_->at(n);
  RealElement x = gen_(n);
  if (!same_model(x.model(), model_)) throw ModelMismatch();
  return x;
}

ElementSequence ElementSequence::with_analytics(std::function<RealElement(std::size_t)> tail_sup,
                                                RealElement limsup) const {
  ElementSequence s = *this;
  s.tail_fn_ = std::move(tail_sup);
  s.exact_limsup_ = std::move(limsup);
  return s;
}

namespace {

std::vector<std::string> labels_of(const Model& m, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(m->label(i));
  return out;
}

void require_bounded(const CoeffForm& f) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].bounded()) bad.push_back(i);
  if (!bad.empty()) throw Unbounded(labels_of(f.model(), bad));
}

RealElement window_extreme(const ElementSequence& s, std::size_t lo, std::size_t hi, bool want_max) {
  RealElement best = s.at(lo);
  for (std::size_t n = lo + 1; n <= hi; ++n) best = want_max ? sup2(best, s.at(n)) : inf2(best, s.at(n));
  return best;
}

LimitResult windowed_limit(const ElementSequence& s, const ToleranceConfig& tol) {
  LimitResult r;
  r.heuristic = true;
  const std::size_t W = s.window();
  const std::size_t lo = std::max(s.first_index(), W / 2);
  const std::size_t hi = std::max(lo + 1, W);
  RealElement last = s.at(hi);
  RealElement spread = RealElement::zero(s.model());
  for (std::size_t n = lo; n < hi; ++n) spread = sup2(spread, abs_real(s.at(n) - last));
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < spread.size(); ++i) {
    double scale = std::max(1.0, std::fabs(last[i].to_double()));
    if (spread[i].to_double() > tol.eps_conv * scale) bad.push_back(i);
  }
  if (!bad.empty()) {
    r.status = LimitStatus::Undetermined;
    r.divergent_points = labels_of(s.model(), bad);
    return r;
  }
  r.status = LimitStatus::Converges;
  r.limit = last;
  DominatorWitness w;
  w.heuristic = true;
  w.q = [s, last, hi](std::size_t n) {
    RealElement q = RealElement::zero(s.model());
    for (std::size_t k = std::max(n, s.first_index()); k <= std::max(n, hi); ++k) q = sup2(q, abs_real(s.at(k) - last));
    return q;
  };
  r.witness = w;
  return r;
}

}  // namespace

LimitResult order_limit(const ElementSequence& s, const ToleranceConfig& tol) {
  if (!s.is_closed_form()) return windowed_limit(s, tol);
  const CoeffForm& f = s.form();
  LimitResult r;
  std::vector<std::size_t> bad;
  std::vector<Scalar> lim;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto x = f[i].limit();
    if (!x) bad.push_back(i);
    lim.emplace_back(x ? *x : Rational(0));
  }
  if (!bad.empty()) {
    r.status = LimitStatus::Diverges;
    r.divergent_points = labels_of(f.model(), bad);
    return r;
  }
  r.status = LimitStatus::Converges;
  r.limit = RealElement(f.model(), lim);
  DominatorWitness w;
  w.q = [f](std::size_t n) {
    return RealElement::generate(f.model(), [&](std::size_t i) { return Scalar(f[i].sup_abs_deviation(n)); });
  };
  r.witness = w;
  return r;
}

CauchyResult is_order_cauchy(const ElementSequence& s, const ToleranceConfig& tol) {
  LimitResult l = order_limit(s, tol);
  CauchyResult c;
  c.heuristic = l.heuristic;
  c.failing_points = l.divergent_points;
  if (l.status != LimitStatus::Converges) return c;
  c.cauchy = true;
  // |x_n - x_m| <= |x_n - x| + |x_m - x| <= 2 q_n for m >= n.
  DominatorWitness w = *l.witness;
  auto q = w.q;
  w.q = [q](std::size_t n) { return Scalar(2) * q(n); };
  c.witness = w;
  return c;
}

RealElement tail_sup(const ElementSequence& s, std::size_t m) {
  if (s.has_analytic_tails()) return s.analytic_tail_sup(std::max(m, s.first_index()));
  if (!s.is_closed_form()) {
    std::size_t lo = std::max(m, s.first_index());
    return window_extreme(s, lo, lo + s.window() - 1, true);
  }
  const CoeffForm& f = s.form();
  require_bounded(f);
  return RealElement::generate(f.model(), [&](std::size_t i) { return Scalar(f[i].tail_sup(m)); });
}

RealElement tail_inf(const ElementSequence& s, std::size_t m) {
  if (!s.is_closed_form()) {
    std::size_t lo = std::max(m, s.first_index());
    return window_extreme(s, lo, lo + s.window() - 1, false);
  }
  const CoeffForm& f = s.form();
  require_bounded(f);
  return RealElement::generate(f.model(), [&](std::size_t i) { return Scalar(f[i].tail_inf(m)); });
}

RealElement limsup_seq(const ElementSequence& s) {
  if (s.exact_limsup()) return *s.exact_limsup();
  if (!s.is_closed_form()) return tail_sup(s, std::max(s.first_index(), s.window() / 2));
  const CoeffForm& f = s.form();
  require_bounded(f);
  return RealElement::generate(f.model(), [&](std::size_t i) { return Scalar(f[i].limsup()); });
}

RealElement liminf_seq(const ElementSequence& s) {
  if (!s.is_closed_form()) return tail_inf(s, std::max(s.first_index(), s.window() / 2));
  const CoeffForm& f = s.form();
  require_bounded(f);
  return RealElement::generate(f.model(), [&](std::size_t i) { return Scalar(f[i].liminf()); });
}

namespace {

constexpr std::size_t kExactRootLimit = 256;

Scalar scalar_root(const ScalarForm& f, std::size_t n) {
  if (n <= kExactRootLimit) return nth_root(abs(Scalar(f.value(n))), n);
  return Scalar::approx(static_cast<double>(f.root_value(n)));
}

RealElement tail_sups_at(const CoeffForm& f, std::size_t m) {
  return RealElement::generate(f.model(), [&](std::size_t i) {
    return Scalar::approx(static_cast<double>(f[i].root_tail_sups(m).back()));
  });
}

}  // namespace

ElementSequence root_transform(const ElementSequence& a) {
  if (!a.is_closed_form()) {
    ElementSequence base = a;
    return ElementSequence::black_box(
        a.model(),
        [base](std::size_t n) {
          return base.at(n).map([n](const Scalar& v) { return nth_root(abs(v), n); });
        },
        a.window(), 1);
  }
  CoeffForm f = a.form();
  ElementSequence out = ElementSequence::black_box(
      f.model(),
      [f](std::size_t n) {
        return RealElement::generate(f.model(), [&](std::size_t i) { return scalar_root(f[i], n); });
      },
      256, 1);
  return out.with_analytics([f](std::size_t m) { return tail_sups_at(f, m); }, f.limsup_root());
}

ElementSequence root_transform(const CoeffForm& re, const CoeffForm& im) {
  if (!same_model(re.model(), im.model())) throw ModelMismatch();
  ElementSequence out = ElementSequence::black_box(
      re.model(),
      [re, im](std::size_t n) {
        RealElement mod = square_mean(re.at(n), im.at(n));
        return mod.map([n](const Scalar& v) { return nth_root(v, n); });
      },
      256, 1);
  RealElement L = sup2(re.limsup_root(), im.limsup_root());
  return out.with_analytics(
      [re, im](std::size_t m) {
        long double f = std::pow(2.0L, 1.0L / (2.0L * static_cast<long double>(m)));
        return RealElement::generate(re.model(), [&](std::size_t i) {
          long double b = std::max(re[i].root_tail_sups(m).back(), im[i].root_tail_sups(m).back());
          return Scalar::approx(static_cast<double>(f * b));
        });
      },
      L);
}

AmGmResult am_gm_bound_check(const RealElement& a, unsigned long n, const ToleranceConfig& tol,
                             std::size_t samples, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("AM-GM check needs n >= 1");
  RealElement root = nth_root(a, n, tol);
  const Model& m = a.model();
  const Scalar w = Scalar::ratio(1, static_cast<long>(n));
  const Scalar w1 = Scalar(1) - w;
  AmGmResult r;
  auto fail = [&](const std::string& what) {
    if (r.holds) {
      r.holds = false;
      r.witness = what;
    }
  };
  RealElement rhs = w * a + w1 * identity(m);
  ++r.checks;
  if (!leq(root, rhs, tol)) fail("nth_root(a,n) exceeds (1/n)a + (1-1/n)e at n=" + std::to_string(n));

  // Admissible pairs: θ2 = θ1^{-1/(n-1)}. The minimizer θ1 = a^{1/n-1} is
  // included per coordinate, where the combination equals the root.
  if (n == 1) return r;
  Sampler rng(seed);
  const long double inv = 1.0L / static_cast<long double>(n);
  for (std::size_t k = 0; k <= samples; ++k) {
    double draw = rng.uniform(-3.0, 3.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      long double ai = a[i].to_long_double();
      long double t1 = std::pow(10.0L, static_cast<long double>(draw));
      if (k == samples) {
        if (ai <= 0) continue;
        t1 = std::pow(ai, inv - 1);
      }
      long double t2 = std::pow(t1, -1.0L / static_cast<long double>(n - 1));
      long double comb = inv * t1 * ai + (1 - inv) * t2;
      long double rt = root[i].to_long_double();
      ++r.checks;
      long double scale = std::max<long double>({1.0L, std::fabs(comb), std::fabs(rt)});
      if (rt > comb + tol.eps_cmp * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "at " << m->label(i) << ": theta1=" << static_cast<double>(t1) << " combination "
           << static_cast<double>(comb) << " < root " << static_cast<double>(rt);
        fail(os.str());
      }
    }
  }
  return r;
}

}  // namespace vlat
