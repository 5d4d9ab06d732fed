#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vlat/coeff_form.hpp"

namespace vlat {

/// Sample points used for every reported dominator: n in {0,1,2,4,8,16,32,64}.
const std::vector<std::size_t>& witness_grid();

/// q with |x_n - x| <= q_n, q decreasing to 0.
struct DominatorWitness {
  std::function<RealElement(std::size_t)> q;
  bool decreasing = true;
  bool limit_zero = true;
  bool heuristic = false;

  std::vector<std::pair<std::size_t, RealElement>> samples() const;
};

/// A sequence of real elements: either closed form (exact tail questions) or a
/// black-box generator inspected over a finite window.
class ElementSequence {
public:
  static ElementSequence closed(CoeffForm form);
  static ElementSequence black_box(Model model, std::function<RealElement(std::size_t)> gen,
                                   std::size_t window = 256, std::size_t first = 0);

  bool is_closed_form() const noexcept { return form_.has_value(); }
  /// Throws NotClosedForm for black-box sequences.
  const CoeffForm& form() const;
  const Model& model() const noexcept { return model_; }
  std::size_t window() const noexcept { return window_; }
  /// Smallest valid index (1 for root sequences).
  std::size_t first_index() const noexcept { return first_; }
  RealElement at(std::size_t n) const;

  /// Analytic tail sups and limsup attached by transforms that know them.
  bool has_analytic_tails() const noexcept { return static_cast<bool>(tail_fn_); }
  RealElement analytic_tail_sup(std::size_t m) const { return tail_fn_(m); }
  const std::optional<RealElement>& exact_limsup() const noexcept { return exact_limsup_; }
  ElementSequence with_analytics(std::function<RealElement(std::size_t)> tail_sup, RealElement limsup) const;

private:
  ElementSequence() = default;

  Model model_;
  std::optional<CoeffForm> form_;
  std::function<RealElement(std::size_t)> gen_;
  std::size_t window_ = 0;
  std::size_t first_ = 0;
  std::function<RealElement(std::size_t)> tail_fn_;
  std::optional<RealElement> exact_limsup_;
};

enum class LimitStatus { Converges, Diverges, Undetermined };

struct LimitResult {
  LimitStatus status = LimitStatus::Undetermined;
  std::optional<RealElement> limit;
  std::optional<DominatorWitness> witness;
  std::vector<std::string> divergent_points;
  bool heuristic = false;
};

LimitResult order_limit(const ElementSequence& s, const ToleranceConfig& tol = {});

struct CauchyResult {
  bool cauchy = false;
  std::optional<DominatorWitness> witness;
  std::vector<std::string> failing_points;
  bool heuristic = false;
};

CauchyResult is_order_cauchy(const ElementSequence& s, const ToleranceConfig& tol = {});

/// sup_{n>=m} s_n (exact for closed forms; windowed for black boxes).
/// Throws Unbounded with the offending points.
RealElement tail_sup(const ElementSequence& s, std::size_t m);
RealElement tail_inf(const ElementSequence& s, std::size_t m);
RealElement limsup_seq(const ElementSequence& s);
RealElement liminf_seq(const ElementSequence& s);

/// n ↦ |a_n|^{1/n} (n >= 1). Closed forms carry the exact limsup and the tail
/// sups b_m as analytics.
ElementSequence root_transform(const ElementSequence& a);
/// Root transform of the complex sequence re_n + i·im_n. The attached tail
/// sups are the upper bounds 2^{1/(2m)}·max(b_m(re), b_m(im)).
ElementSequence root_transform(const CoeffForm& re, const CoeffForm& im);

struct AmGmResult {
  bool holds = true;
  std::size_t checks = 0;
  std::string witness;
};

/// nth_root(a, n) <= (1/n)a + (1-1/n)e, plus sampled (θ1, θ2) with
/// θ1^{1/n}θ2^{1-1/n} = 1, each combination (1/n)θ1·a + (1-1/n)θ2·e dominating
/// nth_root(a, n). Requires a >= 0 (NegativeInput otherwise).
AmGmResult am_gm_bound_check(const RealElement& a, unsigned long n, const ToleranceConfig& tol = {},
                             std::size_t samples = 16, std::uint64_t seed = 1);

}  // namespace vlat
