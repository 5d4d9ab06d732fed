#include "vlat/lattice.hpp"

#include <cmath>
#include <numbers>

namespace vlat {

RealElement sup2(const RealElement& f, const RealElement& g) {
  return f.zip(g, [](const Scalar& a, const Scalar& b) { return max(a, b); });
}

RealElement inf2(const RealElement& f, const RealElement& g) {
  return f.zip(g, [](const Scalar& a, const Scalar& b) { return min(a, b); });
}

RealElement pos_part(const RealElement& f) { return sup2(f, RealElement::zero(f.model())); }

RealElement neg_part(const RealElement& f) { return sup2(-f, RealElement::zero(f.model())); }

RealElement abs_real(const RealElement& f) { return sup2(f, -f); }

RealElement square_mean(const RealElement& f, const RealElement& g) {
  return f.zip(g, [](const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return abs(a);
    if (a.is_zero()) return abs(b);
    if (a.is_exact() && b.is_exact()) return sqrt(a * a + b * b);
    return Scalar::approx(std::hypot(a.to_double(), b.to_double()));
  });
}

RealElement square_mean_grid(const RealElement& f, const RealElement& g, long K) {
  if (K < 4) throw BadGrid(K);
  require_same_model(f, g);
  std::vector<long double> c(K), s(K);
  for (long k = 0; k < K; ++k) {
    long double theta = 2.0L * std::numbers::pi_v<long double> * k / K;
    c[k] = std::cos(theta);
    s[k] = std::sin(theta);
  }
  // The quarter-turn angles are exact; cos(π/2) from libm is only ~1e-20.
  for (long k = 0; k < K; ++k) {
    if ((4 * k) % K == 0) {
      long q = 4 * k / K;
      c[k] = (q == 0) ? 1 : (q == 2 ? -1 : 0);
      s[k] = (q == 1) ? 1 : (q == 3 ? -1 : 0);
    }
  }
  auto fd = f.to_doubles();
  auto gd = g.to_doubles();
  std::vector<Scalar> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    long double best = -INFINITY;
    for (long k = 0; k < K; ++k) best = std::max(best, c[k] * fd[i] + s[k] * gd[i]);
    out.push_back(Scalar::approx(static_cast<double>(best)));
  }
  return RealElement(f.model(), std::move(out));
}

RealElement cmodulus(const ComplexElement& z) { return square_mean(z.re, z.im); }

bool leq(const RealElement& f, const RealElement& g, const ToleranceConfig& tol) {
  require_same_model(f, g);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!tol_leq(f[i], g[i], tol)) return false;
  return true;
}

bool is_weak_order_unit(const RealElement& u, const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!tol_positive(u[i], tol)) return false;
  return true;
}

bool strictly_dominates(const RealElement& x, const RealElement& y, const ToleranceConfig& tol) {
  return is_weak_order_unit(pos_part(y - x), tol);
}

std::vector<std::string> labels_where(const Model& m, const std::function<bool(std::size_t)>& pred) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m->size(); ++i)
    if (pred(i)) out.push_back(m->label(i));
  return out;
}

}  // namespace vlat
