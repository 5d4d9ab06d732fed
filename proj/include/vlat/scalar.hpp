#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "vlat/tolerance.hpp"

namespace vlat {

using Rational = mpq_class;

/// Parse "p", "p/q", "-p/q" or a plain decimal "12.375" into an exact rational.
Rational parse_rational(const std::string& text);

/// One coordinate value. Exact mode holds an arbitrary-precision rational,
/// Approx mode a binary64 float. Arithmetic on mixed operands yields Approx.
class Scalar {
public:
  Scalar() = default;
  Scalar(const Rational& q) : v_(q) {}  // NOLINT: implicit by design of the value type
  Scalar(int v) : v_(Rational(v)) {}    // NOLINT

  static Scalar exact(const Rational& q) { return Scalar(q); }
  static Scalar approx(double v) {
    Scalar s;
    s.v_ = v;
    return s;
  }
  static Scalar ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;
  double to_double() const;
  long double to_long_double() const;

  /// "p/q" for exact values, 17 significant digits otherwise.
  std::string to_string() const;

  /// Same mode and same value (bitwise for Approx).
  bool identical(const Scalar& other) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws std::domain_error on exact division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Raw numeric ordering (no tolerance). Mixed operands compare as doubles.
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }

private:
  std::variant<Rational, double> v_;
};

Scalar abs(const Scalar& a);
Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);

/// Exact when both the numerator and denominator are perfect n-th powers.
/// Requires a >= 0.
Scalar nth_root(const Scalar& a, unsigned long n);
Scalar sqrt(const Scalar& a);
Scalar pow(const Scalar& a, unsigned long n);

/// max(1, |a|, |b|): the scale used by relative Approx comparisons.
double comparison_scale(const Scalar& a, const Scalar& b);

/// a <= b. Exact operands compare exactly; otherwise a <= b + eps_cmp*scale.
bool tol_leq(const Scalar& a, const Scalar& b, const ToleranceConfig& tol);
/// a > 0 strictly. Approx: a > eps_cmp*max(1,|a|).
bool tol_positive(const Scalar& a, const ToleranceConfig& tol);
/// a != 0. Approx: |a| > eps_cmp*max(1,|a|).
bool tol_nonzero(const Scalar& a, const ToleranceConfig& tol);
/// |a - b| <= eps*max(1,|a|,|b|) (exact equality when both exact).
bool tol_equal(const Scalar& a, const Scalar& b, double eps);

}  // namespace vlat
