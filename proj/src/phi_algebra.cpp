#include "vlat/phi_algebra.hpp"

#include <cmath>

namespace vlat {

namespace {

void require_positive(const RealElement& a, const ToleranceConfig& tol) {
  auto bad = labels_where(a.model(), [&](std::size_t i) { return !tol_leq(Scalar(0), a[i], tol); });
  if (!bad.empty()) throw NegativeInput(std::move(bad));
}

bool fragile_coordinate(const Scalar& v, const ToleranceConfig& tol) {
  if (v.is_exact() || v.is_zero()) return false;
  double a = std::fabs(v.to_double());
  return a <= 1e3 * tol.eps_cmp * std::max(1.0, a);
}

}  // namespace

RealElement identity(const Model& m) { return RealElement::constant(m, Scalar(1)); }

RealElement mul(const RealElement& a, const RealElement& b) { return a * b; }

ComplexElement mul(const ComplexElement& a, const ComplexElement& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexElement conj(const ComplexElement& z) { return {z.re, -z.im}; }

RealElement nth_root(const RealElement& a, unsigned long n, const ToleranceConfig& tol) {
  require_positive(a, tol);
  return a.map([n](const Scalar& s) { return nth_root(s.sign() < 0 ? Scalar(0) : s, n); });
}

std::optional<RealElement> try_invert(const RealElement& a, const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!tol_nonzero(a[i], tol)) return std::nullopt;
  return a.map([](const Scalar& s) { return Scalar(1) / s; });
}

RealElement invert(const RealElement& a, const ToleranceConfig& tol) {
  if (auto r = try_invert(a, tol)) return *r;
  throw NotInvertible(labels_where(a.model(), [&](std::size_t i) { return !tol_nonzero(a[i], tol); }));
}

std::optional<ComplexElement> try_invert(const ComplexElement& a, const ToleranceConfig& tol) {
  RealElement norm2 = a.re * a.re + a.im * a.im;
  // |a(t)| and |a(t)|² vanish together; test the modulus so the threshold matches the real case.
  RealElement mod = cmodulus(a);
  for (std::size_t i = 0; i < mod.size(); ++i)
    if (!tol_nonzero(mod[i], tol)) return std::nullopt;
  RealElement inv = norm2.map([](const Scalar& s) { return Scalar(1) / s; });
  return ComplexElement(a.re * inv, -(a.im * inv));
}

ComplexElement invert(const ComplexElement& a, const ToleranceConfig& tol) {
  if (auto r = try_invert(a, tol)) return *r;
  RealElement mod = cmodulus(a);
  throw NotInvertible(labels_where(a.model(), [&](std::size_t i) { return !tol_nonzero(mod[i], tol); }));
}

RealElement pseudo_inverse(const RealElement& a, const ToleranceConfig& tol) {
  require_positive(a, tol);
  return a.map([&](const Scalar& s) { return tol_nonzero(s, tol) ? Scalar(1) / s : Scalar(0); });
}

BandProjection::BandProjection(Model model, std::vector<bool> support, std::vector<std::string> fragile)
    : model_(std::move(model)), support_(std::move(support)), fragile_(std::move(fragile)) {
  if (support_.size() != model_->size())
    throw std::invalid_argument("band support does not match the model size");
}

BandProjection BandProjection::full(const Model& m) { return {m, std::vector<bool>(m->size(), true)}; }

BandProjection BandProjection::none(const Model& m) { return {m, std::vector<bool>(m->size(), false)}; }

std::size_t BandProjection::support_size() const {
  std::size_t n = 0;
  for (bool b : support_) n += b;
  return n;
}

std::vector<std::string> BandProjection::support_labels() const {
  return labels_where(model_, [&](std::size_t i) { return support_[i]; });
}

RealElement BandProjection::apply(const RealElement& x) const {
  if (!same_model(model_, x.model())) throw ModelMismatch();
  std::vector<Scalar> v(x.values().begin(), x.values().end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!support_[i]) v[i] = Scalar(0);
  return RealElement(x.model(), std::move(v)).with_promoted(x.promoted());
}

ComplexElement BandProjection::apply(const ComplexElement& z) const { return {apply(z.re), apply(z.im)}; }

BandProjection BandProjection::complement() const {
  std::vector<bool> s(support_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = !support_[i];
  return {model_, std::move(s), fragile_};
}

BandProjection BandProjection::minus(const BandProjection& other) const {
  if (!same_model(model_, other.model_)) throw ModelMismatch();
  std::vector<bool> s(support_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = support_[i] && !other.support_[i];
  return {model_, std::move(s)};
}

BandProjection BandProjection::unite(const BandProjection& other) const {
  if (!same_model(model_, other.model_)) throw ModelMismatch();
  std::vector<bool> s(support_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = support_[i] || other.support_[i];
  return {model_, std::move(s)};
}

bool BandProjection::disjoint(const BandProjection& other) const {
  for (std::size_t i = 0; i < support_.size(); ++i)
    if (support_[i] && other.support_.at(i)) return false;
  return true;
}

bool BandProjection::subset_of(const BandProjection& other) const {
  for (std::size_t i = 0; i < support_.size(); ++i)
    if (support_[i] && !other.support_.at(i)) return false;
  return true;
}

BandProjection band_projection(const RealElement& a, const ToleranceConfig& tol) {
  std::vector<bool> s(a.size());
  std::vector<std::string> fragile;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s[i] = tol_nonzero(a[i], tol);
    if (fragile_coordinate(a[i], tol)) fragile.push_back(a.model()->label(i));
  }
  return {a.model(), std::move(s), std::move(fragile)};
}

BandProjection disjoint_complement(const BandProjection& p) { return p.complement(); }

std::vector<ThresholdBand> threshold_projection_family(const std::vector<RealElement>& tail_sups,
                                                       const ToleranceConfig& tol) {
  if (tail_sups.empty()) return {};
  const Model& m = tail_sups.front().model();
  RealElement e = identity(m);
  std::vector<ThresholdBand> out;
  out.push_back({0, e, BandProjection::none(m), BandProjection::none(m)});
  for (std::size_t k = 0; k < tail_sups.size(); ++k) {
    const RealElement& b = tail_sups[k];
    require_same_model(b, e);
    if (k > 0 && !leq(b, tail_sups[k - 1], tol)) throw NotDecreasing(k);
    // P_{b_m<e} is the band of (e - b_m)^+.
    BandProjection below = band_projection(pos_part(e - b), tol);
    // With b decreasing the supports are nested; the union keeps Q_m a
    // genuine projection even when a fragile coordinate flips back.
    below = below.unite(out.back().below);
    BandProjection fresh = below.minus(out.back().below);
    out.push_back({k + 1, b, std::move(below), std::move(fresh)});
  }
  return out;
}

namespace {

std::pair<RealElement, RealElement> scale_extremum(const RealElement& a, const std::vector<RealElement>& B,
                                                   const ToleranceConfig& tol, bool take_sup) {
  if (B.empty()) throw EmptySet();
  require_positive(a, tol);
  auto pick = [take_sup](const RealElement& x, const RealElement& y) {
    return take_sup ? sup2(x, y) : inf2(x, y);
  };
  RealElement lhs = a * B.front();
  RealElement ext = B.front();
  require_positive(ext, tol);
  for (std::size_t i = 1; i < B.size(); ++i) {
    require_positive(B[i], tol);
    lhs = pick(lhs, a * B[i]);
    ext = pick(ext, B[i]);
  }
  return {lhs, a * ext};
}

}  // namespace

std::pair<RealElement, RealElement> scale_sup(const RealElement& a, const std::vector<RealElement>& B,
                                              const ToleranceConfig& tol) {
  return scale_extremum(a, B, tol, true);
}

std::pair<RealElement, RealElement> scale_inf(const RealElement& a, const std::vector<RealElement>& B,
                                              const ToleranceConfig& tol) {
  return scale_extremum(a, B, tol, false);
}

}  // namespace vlat
