#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vlat/lattice.hpp"

namespace vlat {

/// The multiplicative identity e (value 1 at every point).
RealElement identity(const Model& m);

RealElement mul(const RealElement& a, const RealElement& b);
ComplexElement mul(const ComplexElement& a, const ComplexElement& b);
ComplexElement conj(const ComplexElement& z);

/// Coordinatewise a(t)^{1/n}. Throws NegativeInput when a is not positive.
RealElement nth_root(const RealElement& a, unsigned long n, const ToleranceConfig& tol = {});

/// Coordinatewise reciprocal; throws NotInvertible naming the vanishing points.
RealElement invert(const RealElement& a, const ToleranceConfig& tol = {});
ComplexElement invert(const ComplexElement& a, const ToleranceConfig& tol = {});
std::optional<RealElement> try_invert(const RealElement& a, const ToleranceConfig& tol = {});
std::optional<ComplexElement> try_invert(const ComplexElement& a, const ToleranceConfig& tol = {});

/// a*: the inverse of a inside its principal band, 0 off the band (0* = 0).
/// Requires a >= 0 (NegativeInput otherwise).
RealElement pseudo_inverse(const RealElement& a, const ToleranceConfig& tol = {});

/// An order projection of the finite model, stored as the support set of its
/// band. Off-support coordinates are mapped to an exact zero.
class BandProjection {
public:
  BandProjection(Model model, std::vector<bool> support, std::vector<std::string> fragile = {});

  static BandProjection full(const Model& m);
  static BandProjection none(const Model& m);

  const Model& model() const noexcept { return model_; }
  bool contains(std::size_t i) const { return support_.at(i); }
  const std::vector<bool>& support() const noexcept { return support_; }
  std::size_t support_size() const;
  std::vector<std::string> support_labels() const;
  bool is_full() const { return support_size() == support_.size(); }
  bool is_empty() const { return support_size() == 0; }

  /// Points whose membership was decided within a few eps_cmp of zero.
  const std::vector<std::string>& fragile() const noexcept { return fragile_; }

  RealElement apply(const RealElement& x) const;
  ComplexElement apply(const ComplexElement& z) const;

  /// P^d: support is the complement, and P + P^d is the identity map.
  BandProjection complement() const;
  /// Support set difference this \ other.
  BandProjection minus(const BandProjection& other) const;
  BandProjection unite(const BandProjection& other) const;
  bool disjoint(const BandProjection& other) const;
  bool subset_of(const BandProjection& other) const;

  friend bool operator==(const BandProjection& a, const BandProjection& b) {
    return same_model(a.model_, b.model_) && a.support_ == b.support_;
  }

private:
  Model model_;
  std::vector<bool> support_;
  std::vector<std::string> fragile_;
};

/// P_a: projection onto the principal band generated by a, support {a(t) != 0}.
BandProjection band_projection(const RealElement& a, const ToleranceConfig& tol = {});
BandProjection disjoint_complement(const BandProjection& p);

/// One step of the band decomposition used by the root test: `below` is
/// P_{b_m<e} (support {b_m(t) < 1}) and `fresh` is Q_m = P_{b_m<e} - P_{b_{m-1}<e}.
struct ThresholdBand {
  std::size_t m;
  RealElement b;
  BandProjection below;
  BandProjection fresh;
};

/// Builds P_{b_m<e} and Q_m for m = 0..tail_sups.size(), where tail_sups[m-1]
/// is b_m and b_0 := e. Throws NotDecreasing if some b_{m+1} exceeds b_m.
std::vector<ThresholdBand> threshold_projection_family(const std::vector<RealElement>& tail_sups,
                                                       const ToleranceConfig& tol = {});

/// (sup{a·b : b ∈ B}, a·sup B); the scaling identity says they coincide.
std::pair<RealElement, RealElement> scale_sup(const RealElement& a, const std::vector<RealElement>& B,
                                              const ToleranceConfig& tol = {});
/// (inf{a·b : b ∈ B}, a·inf B).
std::pair<RealElement, RealElement> scale_inf(const RealElement& a, const std::vector<RealElement>& B,
                                              const ToleranceConfig& tol = {});

}  // namespace vlat
