#include "vlat/series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>

#include "vlat/lattice.hpp"

namespace vlat {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ConvergesInOrder: return "ConvergesInOrder";
    case VerdictStatus::ConvergesAbsolutely: return "ConvergesAbsolutely";
    case VerdictStatus::Diverges: return "Diverges";
    case VerdictStatus::Inconclusive: return "Inconclusive";
    case VerdictStatus::Heuristic: return "Heuristic";
  }
  return "?";
}

bool ConvergenceVerdict::has_note(const std::string& n) const {
  return std::find(notes.begin(), notes.end(), n) != notes.end();
}

Series::Series(ElementSequence re) : re_(std::move(re)) {}

Series::Series(ElementSequence re, ElementSequence im) : re_(std::move(re)), im_(std::move(im)) {
  if (!same_model(re_.model(), im_->model())) throw ModelMismatch();
}

bool Series::is_closed_form() const { return re_.is_closed_form() && (!im_ || im_->is_closed_form()); }

ComplexElement Series::term(std::size_t n) const {
  if (im_) return {re_.at(n), im_->at(n)};
  return ComplexElement(re_.at(n));
}

ComplexElement partial_sum(const Series& s, std::size_t m) {
  ComplexElement acc = ComplexElement::zero(s.model());
  for (std::size_t n = 0; n <= m; ++n) acc = acc + s.term(n);
  return acc;
}

namespace {

// Round a certified long double bound up to a double that still bounds it.
double up(long double x) {
  if (std::isinf(x)) return std::numeric_limits<double>::infinity();
  double d = static_cast<double>(x);
  if (static_cast<long double>(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

std::vector<const ScalarForm*> parts(const Series& s, std::size_t i) {
  std::vector<const ScalarForm*> p = {&s.re().form()[i]};
  if (s.im()) p.push_back(&s.im()->form()[i]);
  return p;
}

// Σ_{n>m} |a_n| for one part, exact where the closed form allows.
Scalar abs_tail_scalar(const ScalarForm& f, std::size_t m) {
  if (auto ex = f.exact_abs_tail(Rational(1), static_cast<long>(m))) return Scalar(*ex);
  return Scalar::approx(up(f.abs_tail_bound(Rational(1), static_cast<long>(m))));
}

Scalar remainder_scalar(const ScalarForm& f, std::size_t m) {
  if (f.series_class() == ScalarForm::SeriesClass::Conditional)
    return Scalar::approx(up(f.remainder_bound(m)));
  return abs_tail_scalar(f, m);
}

struct SumParts {
  RealElement re, im, err;
};

SumParts closed_sum(const Series& s) {
  const Model& M = s.model();
  std::vector<Scalar> re, im, err;
  for (std::size_t i = 0; i < M->size(); ++i) {
    auto ps = parts(s, i);
    long double e = 0;
    auto r = ps[0]->series_sum();
    re.push_back(r->value);
    e += r->error;
    if (ps.size() > 1) {
      auto q = ps[1]->series_sum();
      im.push_back(q->value);
      e += q->error;
    } else {
      im.emplace_back(0);
    }
    err.push_back(e == 0 ? Scalar(0) : Scalar::approx(up(e)));
  }
  return {RealElement(M, re), RealElement(M, im), RealElement(M, err)};
}

DominatorWitness remainder_witness(const Series& s, bool absolute) {
  DominatorWitness w;
  Series copy = s;
  w.q = [copy, absolute](std::size_t m) {
    return RealElement::generate(copy.model(), [&](std::size_t i) {
      Scalar acc(0);
      for (const ScalarForm* f : parts(copy, i)) acc = acc + (absolute ? abs_tail_scalar(*f, m) : remainder_scalar(*f, m));
      return acc;
    });
  };
  return w;
}

void fill_sum(ConvergenceVerdict& v, const Series& s) {
  SumParts sp = closed_sum(s);
  v.sum = ComplexElement(sp.re, sp.im);
  v.sum_error = sp.err;
  if (v.sum->promoted()) v.notes.push_back(flags::promoted);
}

ConvergenceVerdict heuristic_sum(const Series& s, const ToleranceConfig& tol) {
  ConvergenceVerdict v;
  v.notes.push_back(flags::heuristic);
  std::size_t W = s.re().window();
  ComplexElement acc = ComplexElement::zero(s.model());
  ComplexElement half = acc;
  for (std::size_t n = 0; n <= W; ++n) {
    acc = acc + s.term(n);
    if (n == W / 2) half = acc;
  }
  RealElement gap = cmodulus(acc - half);
  bool settled = true;
  for (std::size_t i = 0; i < gap.size(); ++i)
    if (gap[i].to_double() > tol.eps_conv * std::max(1.0, cmodulus(acc)[i].to_double())) settled = false;
  v.status = settled ? VerdictStatus::Heuristic : VerdictStatus::Inconclusive;
  if (settled) v.sum = acc;
  return v;
}

std::vector<std::string> labels_if(const Model& m, const std::function<bool(std::size_t)>& pred) {
  return labels_where(m, pred);
}

}  // namespace

ConvergenceVerdict converges_in_order(const Series& s, const ToleranceConfig& tol) {
  if (!s.is_closed_form()) return heuristic_sum(s, tol);
  ConvergenceVerdict v;
  v.divergent_points = labels_if(s.model(), [&](std::size_t i) {
    for (const ScalarForm* f : parts(s, i))
      if (f->series_class() == ScalarForm::SeriesClass::Divergent) return true;
    return false;
  });
  if (!v.divergent_points.empty()) {
    v.status = VerdictStatus::Diverges;
    return v;
  }
  v.status = VerdictStatus::ConvergesInOrder;
  fill_sum(v, s);
  v.witness = remainder_witness(s, false);
  return v;
}

ConvergenceVerdict converges_absolutely(const Series& s, const ToleranceConfig& tol) {
  if (!s.is_closed_form()) return heuristic_sum(s, tol);
  ConvergenceVerdict v;
  v.divergent_points = labels_if(s.model(), [&](std::size_t i) {
    for (const ScalarForm* f : parts(s, i))
      if (!f->abs_summable(Rational(1))) return true;
    return false;
  });
  if (!v.divergent_points.empty()) {
    v.status = VerdictStatus::Diverges;
    v.notes.push_back(flags::absolute_diverges);
    return v;
  }
  v.status = VerdictStatus::ConvergesAbsolutely;
  fill_sum(v, s);
  v.witness = remainder_witness(s, true);
  return v;
}

DivergenceResult divergence_test(const Series& s, const ToleranceConfig& tol) {
  DivergenceResult r;
  if (!s.is_closed_form()) {
    auto check = [&](const ElementSequence& seq) {
      LimitResult l = order_limit(seq, tol);
      if (l.status != LimitStatus::Converges) return;
      for (std::size_t i = 0; i < l.limit->size(); ++i)
        if (tol_nonzero((*l.limit)[i], tol)) r.points.push_back(s.model()->label(i));
    };
    check(s.re());
    if (s.im()) check(*s.im());
  } else {
    r.points = labels_if(s.model(), [&](std::size_t i) {
      for (const ScalarForm* f : parts(s, i)) {
        auto x = f->limit();
        if (!x || *x != 0) return true;
      }
      return false;
    });
  }
  std::sort(r.points.begin(), r.points.end());
  r.points.erase(std::unique(r.points.begin(), r.points.end()), r.points.end());
  if (!r.points.empty()) r.outcome = DivergenceOutcome::Diverges;
  return r;
}

// ---- geometric series ---------------------------------------------------

namespace {

using cld = std::complex<long double>;

// Σ_{n=0}^{m} aⁿ by halving: S_{2k+1} = (1 + a^{k+1}) S_k, S_{m} = 1 + a·S_{m-1}.
cld geometric_partial(cld a, std::size_t m) {
  if (m == 0) return 1;
  if ((m + 1) % 2 == 0) {
    std::size_t k = (m - 1) / 2;
    cld p = 1, base = a;
    for (std::size_t e = k + 1; e; e >>= 1, base *= base)
      if (e & 1) p *= base;
    return (1.0L + p) * geometric_partial(a, k);
  }
  return 1.0L + a * geometric_partial(a, m - 1);
}

}  // namespace

GeometricResult geometric_sum(const ComplexElement& a, const ToleranceConfig& tol) {
  const Model& M = a.model();
  RealElement mod = cmodulus(a);
  RealElement e = identity(M);
  if (!strictly_dominates(mod, e, tol)) {
    throw NotStrictlyDominated(labels_where(M, [&](std::size_t i) { return !tol_positive(Scalar(1) - mod[i], tol); }));
  }
  ComplexElement sum = invert(ComplexElement(e) - a, tol);

  long double q = 0;
  for (std::size_t i = 0; i < mod.size(); ++i) q = std::max(q, mod[i].to_long_double());
  std::size_t m = 0;
  if (q > 0) {
    long double target = tol.eps_conv * (1 - q);
    long double mm = std::ceil(std::log(target) / std::log(q)) - 1;
    m = static_cast<std::size_t>(std::max<long double>(0, mm));
    while (std::pow(q, static_cast<long double>(m + 1)) > target) ++m;
  }

  std::vector<Scalar> pre, pim;
  double gap = 0;
  for (std::size_t i = 0; i < M->size(); ++i) {
    cld ai(a.re[i].to_long_double(), a.im[i].to_long_double());
    cld p = geometric_partial(ai, m);
    pre.push_back(Scalar::approx(static_cast<double>(p.real())));
    pim.push_back(Scalar::approx(static_cast<double>(p.imag())));
    cld si(sum.re[i].to_long_double(), sum.im[i].to_long_double());
    gap = std::max(gap, static_cast<double>(std::abs(p - si)));
  }

  RealElement acc = RealElement::zero(M), pw = e;
  for (int n = 0; n <= 8; ++n) {
    acc = acc + pw;
    pw = pw * mod;
  }
  RealElement lhs = (e - mod) * acc;
  RealElement rhs = e - pw;
  bool tele = true;
  for (std::size_t i = 0; i < M->size(); ++i)
    if (!tol_equal(lhs[i], rhs[i], tol.eps_cmp)) tele = false;

  return GeometricResult{sum, m, ComplexElement(RealElement(M, pre), RealElement(M, pim)), gap, tele};
}

GeometricResult geometric_sum(const RealElement& a, const ToleranceConfig& tol) {
  return geometric_sum(ComplexElement(a), tol);
}

// ---- root test ----------------------------------------------------------

namespace {

std::vector<long double> combined_root_tails(const Series& s, std::size_t i, std::size_t count) {
  std::vector<long double> b = s.re().form()[i].root_tail_sups(count);
  if (!s.im()) return b;
  std::vector<long double> c = s.im()->form()[i].root_tail_sups(count);
  for (std::size_t m = 1; m <= count; ++m)
    b[m - 1] = std::pow(2.0L, 1.0L / (2.0L * static_cast<long double>(m))) * std::max(b[m - 1], c[m - 1]);
  return b;
}

constexpr std::size_t kMaxBands = std::size_t(1) << 20;

}  // namespace

ConvergenceVerdict nth_root_test(const Series& s, const ToleranceConfig& tol) {
  const Model& M = s.model();
  const RealElement e = identity(M);
  if (!s.is_closed_form()) {
    ConvergenceVerdict v;
    v.status = VerdictStatus::Heuristic;
    v.notes.push_back(flags::heuristic);
    RealElement L = limsup_seq(root_transform(s.re()));
    if (s.im()) L = sup2(L, limsup_seq(root_transform(*s.im())));
    v.limsup_root = L;
    if (!strictly_dominates(L, e, tol)) v.status = VerdictStatus::Inconclusive;
    return v;
  }
  RealElement L = s.re().form().limsup_root();
  if (s.im()) L = sup2(L, s.im()->form().limsup_root());

  ConvergenceVerdict v;
  v.limsup_root = L;
  if (strictly_dominates(L, e, tol)) {
    std::size_t count = 16;
    std::vector<std::vector<long double>> tails;
    for (;;) {
      tails.clear();
      bool all_below = true;
      for (std::size_t i = 0; i < M->size(); ++i) {
        tails.push_back(combined_root_tails(s, i, count));
        if (!(tails.back().back() < 1)) all_below = false;
      }
      if (all_below) break;
      if (count >= kMaxBands) throw std::runtime_error("root tail sups do not drop below 1 within the supported range");
      count *= 2;
    }
    // Trim to the first m where every coordinate is below 1.
    std::size_t last = count;
    while (last > 1) {
      bool ok = true;
      for (const auto& t : tails)
        if (!(t[last - 2] < 1)) ok = false;
      if (!ok) break;
      --last;
    }
    std::vector<RealElement> b;
    for (std::size_t m = 1; m <= last; ++m) {
      b.push_back(RealElement::generate(M, [&](std::size_t i) {
        return Scalar::approx(static_cast<double>(tails[i][m - 1]));
      }));
    }
    v.band_split = threshold_projection_family(b, tol);

    bool domination = true;
    const long double factor = s.im() ? 2 : 1;
    for (const ThresholdBand& band : v.band_split) {
      if (band.m == 0) continue;
      for (std::size_t i = 0; i < M->size(); ++i) {
        if (!band.fresh.contains(i)) continue;
        long double bm = tails[i][band.m - 1];
        if (!(bm < 1)) {
          domination = false;
          continue;
        }
        long double bound = factor * std::pow(bm, static_cast<long double>(band.m)) / (1 - bm);
        long double actual = 0;
        for (const ScalarForm* f : parts(s, i)) actual += f->abs_tail_bound(Rational(1), static_cast<long>(band.m) - 1);
        if (actual > bound * (1 + 1e-9L) + 1e-300L) domination = false;
      }
    }
    if (!domination) v.notes.push_back("band-domination-failed");
    v.status = VerdictStatus::ConvergesAbsolutely;
    fill_sum(v, s);
    v.witness = remainder_witness(s, true);
    return v;
  }
  if (!leq(L, e, tol)) {
    v.status = VerdictStatus::Diverges;
    v.divergent_points = labels_where(M, [&](std::size_t i) { return L[i] > Scalar(1); });
    v.notes.push_back(flags::scalar_coordinate);
    return v;
  }
  v.status = VerdictStatus::Inconclusive;
  std::vector<bool> boundary(M->size());
  for (std::size_t i = 0; i < M->size(); ++i) boundary[i] = L[i] == Scalar(1);
  v.boundary_band = BandProjection(M, boundary);
  return v;
}

// ---- gallery ------------------------------------------------------------

ShrinkingDiskDemo gallery_shrinking_disk(std::size_t N, const ToleranceConfig& tol) {
  if (N < 2) throw std::invalid_argument("shrinking-disk demo needs N >= 2");
  std::vector<std::string> labels = {"0"};
  for (std::size_t k = 1; k <= N; ++k) labels.push_back(k == 1 ? "1" : "1/" + std::to_string(k));
  Model model = make_model(labels);
  std::vector<ScalarForm> forms;
  forms.push_back(ScalarForm::constant(1).with_prefix({Rational(0)}));
  for (std::size_t k = 1; k <= N; ++k) {
    std::vector<Rational> v(k + 1, Rational(1));
    v[0] = 0;
    forms.push_back(ScalarForm::finite(v));
  }
  Series series = Series::closed(CoeffForm(model, forms));
  RealElement expected_L = RealElement::generate(model, [](std::size_t i) { return Scalar(i == 0 ? 1 : 0); });

  ConvergenceVerdict verdict = nth_root_test(series, tol);
  std::vector<Rational> at_zero;
  bool equal_m = true;
  ComplexElement acc = ComplexElement::zero(model);
  acc = acc + series.term(0);
  for (std::size_t m = 1; m <= 64; ++m) {
    acc = acc + series.term(m);
    Rational v = acc.re[0].rational();
    at_zero.push_back(v);
    if (v != Rational(static_cast<unsigned long>(m))) equal_m = false;
  }
  ConvergenceVerdict conv = converges_in_order(series, tol);
  bool others = true;
  for (std::size_t i = 1; i < model->size(); ++i)
    if (std::find(conv.divergent_points.begin(), conv.divergent_points.end(), model->label(i)) != conv.divergent_points.end())
      others = false;
  others = others && conv.divergent_points == std::vector<std::string>{"0"};
  bool L_matches = verdict.limsup_root && verdict.limsup_root->identical(expected_L);
  bool not_dom = !strictly_dominates(expected_L, identity(model), tol);
  return ShrinkingDiskDemo{N, series, VerdictStatus::Inconclusive, expected_L, verdict, at_zero,
                           equal_m, L_matches, others, not_dom};
}

Cb01Demo gallery_cb01_geometric(std::size_t grid_N, std::size_t m, std::size_t refinements,
                                const ToleranceConfig& tol) {
  if (grid_N < 8) throw std::invalid_argument("cb01 demo needs grid_N >= 8");
  Cb01Demo d;
  d.grid_N = grid_N;
  d.m = m;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= grid_N; ++k) labels.push_back(std::to_string(k) + "/" + std::to_string(grid_N + 1));
  Model model = make_model(labels);
  RealElement f = RealElement::generate(model, [&](std::size_t i) {
    return Scalar::ratio(static_cast<long>(i + 1), static_cast<long>(grid_N + 1));
  });
  d.dominated_on_grid = strictly_dominates(f, identity(model), tol);
  std::vector<ScalarForm> forms;
  for (std::size_t i = 0; i < model->size(); ++i) forms.push_back(ScalarForm::geometric(f[i].rational()));
  d.pointwise_converges = converges_in_order(Series::closed(CoeffForm(model, forms)), tol).converges();

  std::size_t N = grid_N;
  for (std::size_t r = 0; r < refinements; ++r, N = 2 * N + 1) {
    long double best = 0, t_max = 0;
    for (std::size_t k = 1; k <= N; ++k) {
      long double t = static_cast<long double>(k) / static_cast<long double>(N + 1);
      long double acc = 0, p = 1;
      for (std::size_t n = 0; n <= m; ++n, p *= t) acc += p;
      if (acc > best) best = acc;
      t_max = std::max(t_max, t);
    }
    d.rows.push_back({N, static_cast<double>(t_max), static_cast<double>(best), static_cast<double>(1 / (1 - t_max))});
  }
  return d;
}

}  // namespace vlat
