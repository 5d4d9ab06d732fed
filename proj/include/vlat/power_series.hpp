#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vlat/series.hpp"

namespace vlat {

/// S(z) = Σ a_n (z - c)ⁿ.
class PowerSeries {
public:
  PowerSeries(Series coefficients, ComplexElement center);
  static PowerSeries closed(CoeffForm re, ComplexElement center) {
    return PowerSeries(Series::closed(std::move(re)), std::move(center));
  }
  static PowerSeries closed(CoeffForm re, CoeffForm im, ComplexElement center) {
    return PowerSeries(Series::closed(std::move(re), std::move(im)), std::move(center));
  }

  const Model& model() const noexcept { return coeffs_.model(); }
  const Series& coefficients() const noexcept { return coeffs_; }
  const ComplexElement& center() const noexcept { return center_; }
  bool is_closed_form() const { return coeffs_.is_closed_form(); }
  ComplexElement coefficient(std::size_t n) const { return coeffs_.term(n); }
  /// limsup |a_n|^{1/n}, exact. Requires closed-form coefficients.
  RealElement limsup_root() const;
  /// The same series with coefficients a_n·xⁿ (x exact).
  PowerSeries rescaled(const RealElement& x) const;

private:
  Series coeffs_;
  ComplexElement center_;
};

struct ClosedBall {
  ComplexElement center;
  RealElement radius;

  ClosedBall(ComplexElement c, RealElement r);
  bool contains(const ComplexElement& z, const ToleranceConfig& tol = {}) const;
};

/// Σ_{n<=m} a_n (z-c)ⁿ by Horner's rule, and by accumulating powers.
ComplexElement eval_partial(const PowerSeries& p, const ComplexElement& z, std::size_t m);
ComplexElement eval_partial_naive(const PowerSeries& p, const ComplexElement& z, std::size_t m);

struct CertifiedValue {
  ComplexElement value;
  RealElement error;  // certified |S(z) - value| per coordinate
  std::size_t terms = 0;
};

/// S(z) for |z - c| with Σ|a_n||z-c|ⁿ < ∞ everywhere, truncated at a
/// certified remainder below `target`.
CertifiedValue eval_certified(const PowerSeries& p, const ComplexElement& z, long double target = 1e-15L);

enum class OmegaReason {
  EventuallyZero,
  InsideRadius,
  BoundaryAbsolutelySummable,
  BoundaryDivergent,
  OutsideRadius,
};

std::string to_string(OmegaReason r);

struct OmegaResult {
  bool member = false;
  std::vector<OmegaReason> reasons;
  /// Uniform dominator on the closed ball: p_m = Σ_{n>m} |a_n| rⁿ.
  std::optional<DominatorWitness> dominator;
};

/// r ∈ Ω_S, decided per coordinate by Σ_n |a_n(t)| r(t)ⁿ < ∞.
OmegaResult in_omega(const PowerSeries& p, const RealElement& r, const ToleranceConfig& tol = {});

struct SolidCheck {
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;
};

/// Lattice and solidity properties of Ω_S at r and s.
SolidCheck omega_solid_check(const PowerSeries& p, const RealElement& r, const RealElement& s,
                             const ToleranceConfig& tol = {});

enum class RadiusKind { Bounded, BandSplit, AllOfEPlus };

std::string to_string(RadiusKind k);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct RadiusResult {
  RadiusKind kind = RadiusKind::Bounded;
  RealElement limsup_root;
  std::optional<RealElement> rho;               // Bounded
  std::optional<BandProjection> bounded_band;   // BandSplit: supp(L)
  std::optional<RealElement> rho_on_band;       // BandSplit: L* on supp(L), 0 elsewhere
  std::optional<BandProjection> unbounded_band; // BandSplit: complement of supp(L)
  std::vector<NamedCheck> checks;

  bool all_checks_passed() const;
};

RadiusResult radius(const PowerSeries& p, const ToleranceConfig& tol = {});

enum class ApproachKind { Radial, Sector, Sampled };

/// Approach sequences z_k → target with |z_k| ≪ target, measured from the
/// center of the series they are used with.
///   Radial:  z_k = (1 - δᵏ)·target
///   Sector:  z_k = target·(e - δᵏ·w), |w - 1| < 1 per coordinate
///   Sampled: arbitrary generator, inspected over a window
class ApproachFamily {
public:
  static ApproachFamily radial(RealElement target, const Rational& delta = Rational(1, 2));
  static ApproachFamily sector(RealElement target, ComplexElement w, const Rational& delta = Rational(1, 2));
  static ApproachFamily sampled(RealElement target, std::function<ComplexElement(std::size_t)> gen,
                                std::size_t window = 64);

  ApproachKind kind() const noexcept { return kind_; }
  const RealElement& target() const noexcept { return target_; }
  const Rational& delta() const noexcept { return delta_; }
  ComplexElement at(std::size_t k) const;
  /// The same family seen through z ↦ x·z for an exact positive x.
  ApproachFamily scaled(const RealElement& x) const;
  /// Closed-form bound on |target - z_k| / (target - |z_k|) per coordinate;
  /// nullopt for sampled families.
  std::optional<RealElement> ratio_bound() const;
  std::size_t window() const noexcept { return window_; }

private:
  ApproachFamily(ApproachKind k, RealElement target) : kind_(k), target_(std::move(target)) {}

  ApproachKind kind_;
  RealElement target_;
  Rational delta_{1, 2};
  std::optional<ComplexElement> w_;
  std::function<ComplexElement(std::size_t)> gen_;
  std::size_t window_ = 0;
};

struct AbelSample {
  std::size_t k = 0;
  ComplexElement z;
  ComplexElement value;   // S(z_k)
  RealElement error;      // |S(z_k) - S(target)|
  RealElement envelope;   // certified bound on error
};

struct AbelVerdict {
  ComplexElement limit;          // S(target)
  RealElement limit_error;       // certified error of `limit`
  std::vector<AbelSample> samples;
  RealElement ratio_bound;       // hypothesis (iii) constant
  bool ratio_closed_form = true;
  bool strictly_decreasing = false;
  bool within_envelope = false;
  RealElement envelope_constant; // max_k error_k / |target - z_k|
  double sbp_residual = 0;       // summation by parts at (m=16, k=3)
  bool sbp_ok = false;
  std::optional<RealElement> rho;  // abel_rescaled only
  std::vector<std::string> notes;

  bool converged() const { return strictly_decreasing && within_envelope && sbp_ok; }
};

/// Abel's theorem along `family` (target e relative to the center).
/// Throws HypothesisFailed{i|ii|iii}, SeriesDiverges, NotClosedForm.
AbelVerdict abel_limit(const PowerSeries& p, const ApproachFamily& family, const ToleranceConfig& tol = {},
                       const std::vector<std::size_t>& ks = {4, 8, 12, 16});

/// Abel's theorem at ρ_S by rescaling to S'(z) = Σ a_n ρⁿ zⁿ. Throws
/// NotWeakOrderUnit unless radius() is Bounded.
AbelVerdict abel_rescaled(const PowerSeries& p, const ApproachFamily& family, const ToleranceConfig& tol = {},
                          const std::vector<std::size_t>& ks = {4, 8, 12, 16});

}  // namespace vlat
