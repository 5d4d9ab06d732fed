#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "vlat/element.hpp"

namespace vlat {

/// A scalar sequence in the decidable coefficient class:
///
///   a_n = prefix[n]                      for n < prefix.size()
///   a_n = base(n) · ratioⁿ               otherwise
///
/// where base is either a polynomial p(n) (coefficients low to high degree) or
/// a rational power scale·(n+shift)^exponent with an integer exponent of any
/// sign. A rational power with n+shift = 0 and a negative exponent is taken as
/// 0, which is how sums such as Σ_{n≥1} 1/n² are written. The ratio may be
/// negative; every tail question depends on |ratio| and on the sign pattern.
class ScalarForm {
public:
  enum class Kind { Polynomial, RationalPower };

  /// Eventual behaviour of |a_n| past monotone_index().
  enum class Trend {
    Vanishing,  // a_n = 0 from some index on
    Decaying,   // |a_n| decreases to 0
    Steady,     // |a_n| constant and nonzero (|ratio| = 1, constant base)
    Growing,    // |a_n| increases without bound
  };

  enum class SeriesClass { Finite, Absolute, Conditional, Divergent };

  struct SeriesSum {
    Scalar value;
    long double error = 0;  // certified |true - value| <= error; 0 when exact
  };

  static ScalarForm polynomial(std::vector<Rational> coeffs, const Rational& ratio);
  static ScalarForm rational_power(const Rational& scale, long exponent, long shift, const Rational& ratio);
  static ScalarForm constant(const Rational& c) { return polynomial({c}, Rational(1)); }
  static ScalarForm geometric(const Rational& ratio) { return polynomial({Rational(1)}, ratio); }
  /// Finitely many explicit terms followed by zeros.
  static ScalarForm finite(std::vector<Rational> values);

  ScalarForm with_prefix(std::vector<Rational> prefix) const;
  ScalarForm negated() const;
  /// n ↦ c·a_n.
  ScalarForm scaled(const Rational& c) const;
  /// n ↦ a_n·xⁿ.
  ScalarForm ratio_scaled(const Rational& x) const;

  Kind kind() const noexcept { return kind_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& scale() const noexcept { return scale_; }
  long exponent() const noexcept { return exponent_; }
  long shift() const noexcept { return shift_; }
  const Rational& ratio() const noexcept { return ratio_; }
  const std::vector<Rational>& prefix() const noexcept { return prefix_; }
  /// Polynomial degree (-1 for the zero polynomial), or the exponent.
  long degree() const;

  Rational value(std::size_t n) const;
  long double value_ld(std::size_t n) const;
  /// ln|a_n|, -inf when a_n = 0. Stable for large n.
  long double log_abs_ld(std::size_t n) const;

  /// First index from which every term vanishes, if any.
  std::optional<std::size_t> zero_from() const;
  Trend trend() const;
  /// N such that for n >= N: |a_n| is monotone in the direction of trend()
  /// and base(n) keeps one sign. Refined to the smallest such N when cheap.
  std::size_t monotone_index() const;
  bool bounded() const;

  /// limsup |a_n|^{1/n}: |ratio|, or 0 for eventually vanishing sequences.
  Rational limsup_root() const;

  /// Order limit of (a_n), when it exists.
  std::optional<Rational> limit() const;
  /// sup_{n>=m} a_n and inf_{n>=m} a_n. Require bounded().
  Rational tail_sup(std::size_t m) const;
  Rational tail_inf(std::size_t m) const;
  Rational limsup() const;
  Rational liminf() const;
  /// sup_{n>=m} |a_n - x| where x = *limit(). This is the canonical dominator.
  Rational sup_abs_deviation(std::size_t m) const;

  /// |a_n|^{1/n} for n >= 1 (0 when a_n = 0).
  long double root_value(std::size_t n) const;
  /// b_m = sup_{n>=m} |a_n|^{1/n} for m = 1..count.
  std::vector<long double> root_tail_sups(std::size_t count) const;

  SeriesClass series_class() const;
  /// Σ a_n: exact for eventually vanishing and polynomial·geometric forms,
  /// certified approximation otherwise. nullopt when the series diverges.
  std::optional<SeriesSum> series_sum() const;
  /// Certified bound on |Σ_{n>m} a_n|, nonincreasing in m; +inf when divergent.
  long double remainder_bound(std::size_t m) const;
  /// Certified upper bound on Σ_{n>m} |a_n| xⁿ for x >= 0 (m = -1 sums from
  /// n = 0). +inf when the weighted series diverges.
  long double abs_tail_bound(const Rational& x, long m) const;
  long double abs_tail_bound_ld(long double x, long m) const;
  /// The same tail computed exactly, available when the base is polynomial
  /// (or a nonnegative power) and |ratio|·x < 1, or the sequence vanishes.
  std::optional<Rational> exact_abs_tail(const Rational& x, long m) const;
  /// True when Σ |a_n| xⁿ < ∞ (decided exactly).
  bool abs_summable(const Rational& x) const;
  /// Bound on sup_{k>=n} |a_{k+1}|xᵏ⁺¹ / (|a_k|xᵏ); +inf when none holds from n on.
  long double term_ratio_bound(std::size_t n, long double x) const;

  /// Polynomial coefficients of the base when it is a polynomial or a rational
  /// power with exponent >= 0.
  std::optional<std::vector<Rational>> polynomial_base() const;

  friend bool operator==(const ScalarForm& a, const ScalarForm& b);

private:
  Rational base(std::size_t n) const;
  long double base_ld(std::size_t n) const;
  long double log_abs_base_ld(std::size_t n) const;
  int base_sign(std::size_t n) const;
  bool base_is_zero() const;
  bool base_is_constant() const;
  long double cauchy_bound() const;
  std::size_t analytic_monotone_index() const;
  std::size_t analytic_root_index(int& root_trend) const;
  // Envelope ratio sup_{n>=M} |a_{n+1}/a_n| / |ratio|; +inf if not available at M.
  long double base_growth_bound(std::size_t M) const;
  long double tail_core(long double x, int rho_vs_one, long m) const;
  Rational extreme_over(std::size_t lo, std::size_t hi, bool want_max, bool absolute) const;

  // Floating views of the exact data, filled on first use and dropped on copy.
  struct Numeric {
    bool ready = false;
    long double ratio = 0, log_ratio = 0, scale = 0, log_scale = 0, cauchy = 0;
    std::vector<long double> coeffs;
    std::optional<std::size_t> monotone;
  };
  struct NumericSlot {
    Numeric n;
    NumericSlot() = default;
    NumericSlot(const NumericSlot&) {}
    NumericSlot& operator=(const NumericSlot&) { n = Numeric{}; return *this; }
  };
  const Numeric& numeric() const;

  Kind kind_ = Kind::Polynomial;
  std::vector<Rational> coeffs_;
  Rational scale_{0};
  long exponent_ = 0;
  long shift_ = 0;
  Rational ratio_{1};
  std::vector<Rational> prefix_;
  mutable NumericSlot cache_;
};

/// One ScalarForm per point of a model: the closed-form element sequences.
class CoeffForm {
public:
  CoeffForm(Model model, std::vector<ScalarForm> forms);
  static CoeffForm uniform(const Model& m, const ScalarForm& f);

  const Model& model() const noexcept { return model_; }
  std::size_t size() const noexcept { return forms_.size(); }
  const ScalarForm& operator[](std::size_t i) const { return forms_.at(i); }
  const std::vector<ScalarForm>& forms() const noexcept { return forms_; }

  RealElement at(std::size_t n) const;
  RealElement at_approx(std::size_t n) const;
  RealElement limsup_root() const;
  CoeffForm negated() const;
  CoeffForm ratio_scaled(const RealElement& x) const;
  CoeffForm map(const std::function<ScalarForm(const ScalarForm&)>& f) const;

  friend bool operator==(const CoeffForm& a, const CoeffForm& b) {
    return same_model(a.model_, b.model_) && a.forms_ == b.forms_;
  }

private:
  Model model_;
  std::vector<ScalarForm> forms_;
};

/// Σ_{n>=0} nʲ rⁿ for j = 0..max_j, exact, |r| < 1.
std::vector<Rational> power_moment_sums(const Rational& r, std::size_t max_j);

}  // namespace vlat
