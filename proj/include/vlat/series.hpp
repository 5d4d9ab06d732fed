#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlat/phi_algebra.hpp"
#include "vlat/sequence.hpp"

namespace vlat {

enum class VerdictStatus { ConvergesInOrder, ConvergesAbsolutely, Diverges, Inconclusive, Heuristic };

std::string to_string(VerdictStatus s);

/// Report flags.
namespace flags {
inline const std::string heuristic = "heuristic";
inline const std::string support_fragile = "support-fragile";
inline const std::string scalar_coordinate = "scalar-coordinate-reasoning";
inline const std::string promoted = "mode-promoted";
inline const std::string absolute_diverges = "absolute-series-diverges";
}  // namespace flags

struct ConvergenceVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<ComplexElement> sum;
  /// Certified |true sum - sum| per coordinate (0 where exact).
  std::optional<RealElement> sum_error;
  /// Remainder envelope: |Σ_{n>m} a_n| <= q_m.
  std::optional<DominatorWitness> witness;
  std::optional<RealElement> limsup_root;
  /// Q_m decomposition from the root test.
  std::vector<ThresholdBand> band_split;
  /// Inconclusive root test: the band where L(t) = 1.
  std::optional<BandProjection> boundary_band;
  std::vector<std::string> divergent_points;
  std::vector<std::string> notes;

  bool converges() const {
    return status == VerdictStatus::ConvergesInOrder || status == VerdictStatus::ConvergesAbsolutely;
  }
  bool has_note(const std::string& n) const;
};

/// Σ a_n with a_n = re_n + i·im_n.
class Series {
public:
  explicit Series(ElementSequence re);
  Series(ElementSequence re, ElementSequence im);
  static Series closed(CoeffForm re) { return Series(ElementSequence::closed(std::move(re))); }
  static Series closed(CoeffForm re, CoeffForm im) {
    return Series(ElementSequence::closed(std::move(re)), ElementSequence::closed(std::move(im)));
  }

  const Model& model() const noexcept { return re_.model(); }
  const ElementSequence& re() const noexcept { return re_; }
  const std::optional<ElementSequence>& im() const noexcept { return im_; }
  bool is_complex() const noexcept { return im_.has_value(); }
  bool is_closed_form() const;
  ComplexElement term(std::size_t n) const;

private:
  ElementSequence re_;
  std::optional<ElementSequence> im_;
};

/// Σ_{n=0}^{m} a_n, exact for exact terms.
ComplexElement partial_sum(const Series& s, std::size_t m);

/// ConvergesInOrder (with sum and remainder envelope) or Diverges.
ConvergenceVerdict converges_in_order(const Series& s, const ToleranceConfig& tol = {});
/// ConvergesAbsolutely when Σ|a_n| converges, Diverges otherwise.
ConvergenceVerdict converges_absolutely(const Series& s, const ToleranceConfig& tol = {});

enum class DivergenceOutcome { MayConverge, Diverges };

struct DivergenceResult {
  DivergenceOutcome outcome = DivergenceOutcome::MayConverge;
  std::vector<std::string> points;  // where a_n does not tend to 0
};

/// Diverges iff the terms do not order-converge to 0. Never claims convergence.
DivergenceResult divergence_test(const Series& s, const ToleranceConfig& tol = {});

struct GeometricResult {
  ComplexElement sum;          // (e - a)^{-1}
  std::size_t certified_m = 0; // |a|^{m+1}/(1-|a|) <= eps_conv everywhere
  ComplexElement partial;      // Σ_{n<=m} aⁿ, computed without the inverse
  double partial_gap = 0;      // max |partial - sum|
  bool telescoping_ok = false; // (e-|a|)Σ_{n<=8}|a|ⁿ = e - |a|⁹
};

/// Σ aⁿ = (e - a)^{-1} when |a| ≪ e; NotStrictlyDominated otherwise.
GeometricResult geometric_sum(const ComplexElement& a, const ToleranceConfig& tol = {});
GeometricResult geometric_sum(const RealElement& a, const ToleranceConfig& tol = {});

/// L = limsup |a_n|^{1/n}. L ≪ e: ConvergesAbsolutely with the Q_m band split;
/// L ≰ e: Diverges (scalar-coordinate reasoning); otherwise Inconclusive.
ConvergenceVerdict nth_root_test(const Series& s, const ToleranceConfig& tol = {});

struct ShrinkingDiskDemo {
  std::size_t N = 0;
  Series series;
  VerdictStatus expected = VerdictStatus::Inconclusive;
  RealElement expected_L;
  ConvergenceVerdict verdict;
  std::vector<Rational> partial_at_zero;  // m = 1..64
  bool partial_sums_equal_m = false;
  bool L_matches = false;
  bool others_converge = false;
  bool L_not_dominated = false;

  bool passed() const {
    return partial_sums_equal_m && L_matches && others_converge && L_not_dominated && verdict.status == expected;
  }
};

/// Index set {0} ∪ {1/k : 1 <= k <= N}; a_0 = 0 and a_n = indicator{|t| <= 1/n}.
ShrinkingDiskDemo gallery_shrinking_disk(std::size_t N, const ToleranceConfig& tol = {});

struct Cb01Row {
  std::size_t grid_N = 0;
  double t_max = 0;
  double max_partial_sum = 0;  // at the demo's m
  double limit_at_t_max = 0;   // 1/(1 - t_max) = grid_N + 1
};

struct Cb01Demo {
  std::string label = "illustration, not a model-theorem";
  std::size_t grid_N = 0;
  std::size_t m = 64;
  bool dominated_on_grid = false;   // f ≪ 1 at every grid point
  bool pointwise_converges = false; // each coordinate's geometric series converges
  std::vector<Cb01Row> rows;        // grid_N, 2grid_N+1, ... refinements
};

Cb01Demo gallery_cb01_geometric(std::size_t grid_N, std::size_t m = 64, std::size_t refinements = 4,
                                const ToleranceConfig& tol = {});

}  // namespace vlat
