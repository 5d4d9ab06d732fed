#pragma once

#include "vlat/element.hpp"

namespace vlat {

// Lattice operations. All are coordinatewise and throw ModelMismatch when the
// operands live on different index sets.

RealElement sup2(const RealElement& f, const RealElement& g);
RealElement inf2(const RealElement& f, const RealElement& g);
RealElement pos_part(const RealElement& f);
RealElement neg_part(const RealElement& f);
RealElement abs_real(const RealElement& f);

/// f ⊞ g in closed pointwise form sqrt(f² + g²). Stays exact when every
/// f(t)² + g(t)² is a rational square.
RealElement square_mean(const RealElement& f, const RealElement& g);

/// sup over θ_k = 2πk/K of cos(θ_k) f + sin(θ_k) g, coordinatewise. This is
/// the defining supremum restricted to a K-point grid; it never exceeds
/// square_mean and falls short by at most a factor (1 - cos(π/K)).
/// Throws BadGrid when K < 4.
RealElement square_mean_grid(const RealElement& f, const RealElement& g, long K);

/// |f + ig| := f ⊞ g.
RealElement cmodulus(const ComplexElement& z);

/// Coordinatewise f <= g under the Approx comparison rule of `tol`.
bool leq(const RealElement& f, const RealElement& g, const ToleranceConfig& tol = {});

/// u >= 0 and u(t) > 0 at every point (the finite-model weak order units).
bool is_weak_order_unit(const RealElement& u, const ToleranceConfig& tol = {});

/// x ≪ y: (y - x)^+ is a weak order unit.
bool strictly_dominates(const RealElement& x, const RealElement& y,
                        const ToleranceConfig& tol = {});

/// Labels of the points where pred(i) holds.
std::vector<std::string> labels_where(const Model& m, const std::function<bool(std::size_t)>& pred);

}  // namespace vlat
