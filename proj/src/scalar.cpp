#include "vlat/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vlat {

namespace {

// r = a^{1/n} if exact, nullopt otherwise. a >= 0.
std::optional<mpz_class> exact_root(const mpz_class& a, unsigned long n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) != 0) return r;
  return std::nullopt;
}

template <class F>
Scalar combine(const Scalar& a, const Scalar& b, F&& op_exact, double (*op_float)(double, double)) {
  if (a.is_exact() && b.is_exact()) return Scalar(op_exact(a.rational(), b.rational()));
  return Scalar::approx(op_float(a.to_double(), b.to_double()));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad number: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return q;
  }
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  bool neg = !whole.empty() && whole[0] == '-';
  if (neg) whole.erase(0, 1);
  if (whole.empty()) whole = "0";
  for (char c : whole + frac)
    if (c < '0' || c > '9') throw std::invalid_argument("bad number: " + text);
  mpz_class num(whole + frac, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw std::logic_error("Scalar::rational on an Approx value");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<Rational>(v_).get_d();
  return std::get<double>(v_);
}

long double Scalar::to_long_double() const {
  if (!is_exact()) return std::get<double>(v_);
  const Rational& q = std::get<Rational>(v_);
  if (q == 0) return 0.0L;
  mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  // Scale so the integer quotient carries about 128 significant bits.
  long shift = 128 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  mpz_class t;
  if (shift >= 0) {
    mpz_mul_2exp(t.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_tdiv_q(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_class d2;
    mpz_mul_2exp(d2.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(t.get_mpz_t(), num.get_mpz_t(), d2.get_mpz_t());
  }
  mpz_class hi, lo;
  mpz_tdiv_q_2exp(hi.get_mpz_t(), t.get_mpz_t(), 64);
  mpz_tdiv_r_2exp(lo.get_mpz_t(), t.get_mpz_t(), 64);
  auto as_ld = [](const mpz_class& v) {
    // v < 2^64 fits a long double mantissa exactly.
    long double r = 0;
    mpz_class w = v;
    mpz_class part;
    mpz_tdiv_r_2exp(part.get_mpz_t(), w.get_mpz_t(), 32);
    r = static_cast<long double>(part.get_ui());
    mpz_tdiv_q_2exp(w.get_mpz_t(), w.get_mpz_t(), 32);
    r += std::ldexp(static_cast<long double>(w.get_ui()), 32);
    return r;
  };
  long double r = std::ldexp(as_ld(hi), static_cast<int>(64 - shift)) +
                  std::ldexp(as_ld(lo), static_cast<int>(-shift));
  return q < 0 ? -r : r;
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<Rational>(v_).get_str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
  return buf;
}

bool Scalar::identical(const Scalar& other) const {
  if (is_exact() != other.is_exact()) return false;
  if (is_exact()) return rational() == other.rational();
  return std::get<double>(v_) == std::get<double>(other.v_);
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(v_));
  double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-rational()));
  return approx(-std::get<double>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                 [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                 [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                 [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_exact() && b.rational() == 0) throw std::domain_error("exact division by zero");
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
                 [](double x, double y) { return x / y; });
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

Scalar max(const Scalar& a, const Scalar& b) {
  Scalar r = (a < b) ? b : a;
  if (a.is_exact() && b.is_exact()) return r;
  return Scalar::approx(r.to_double());
}

Scalar min(const Scalar& a, const Scalar& b) {
  Scalar r = (b < a) ? b : a;
  if (a.is_exact() && b.is_exact()) return r;
  return Scalar::approx(r.to_double());
}

Scalar nth_root(const Scalar& a, unsigned long n) {
  if (n == 0) throw std::invalid_argument("nth_root with n = 0");
  if (a.sign() < 0) throw std::domain_error("nth_root of a negative scalar");
  if (n == 1) return a;
  if (a.is_exact()) {
    const Rational& q = a.rational();
    auto num = exact_root(q.get_num(), n);
    auto den = num ? exact_root(q.get_den(), n) : std::nullopt;
    if (num && den) {
      Rational r(*num, *den);
      r.canonicalize();
      return Scalar(r);
    }
  }
  long double v = a.to_long_double();
  return Scalar::approx(static_cast<double>(std::pow(v, 1.0L / static_cast<long double>(n))));
}

Scalar sqrt(const Scalar& a) { return nth_root(a, 2); }

Scalar pow(const Scalar& a, unsigned long n) {
  if (a.is_exact()) {
    const Rational& q = a.rational();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), n);
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
  }
  return Scalar::approx(std::pow(a.to_double(), static_cast<double>(n)));
}

double comparison_scale(const Scalar& a, const Scalar& b) {
  return std::max({1.0, std::fabs(a.to_double()), std::fabs(b.to_double())});
}

bool tol_leq(const Scalar& a, const Scalar& b, const ToleranceConfig& tol) {
  if (a.is_exact() && b.is_exact()) return a.rational() <= b.rational();
  return a.to_double() <= b.to_double() + tol.eps_cmp * comparison_scale(a, b);
}

bool tol_positive(const Scalar& a, const ToleranceConfig& tol) {
  if (a.is_exact()) return a.sign() > 0;
  double v = a.to_double();
  return v > tol.eps_cmp * std::max(1.0, std::fabs(v));
}

bool tol_nonzero(const Scalar& a, const ToleranceConfig& tol) {
  if (a.is_exact()) return a.sign() != 0;
  double v = std::fabs(a.to_double());
  return v > tol.eps_cmp * std::max(1.0, v);
}

bool tol_equal(const Scalar& a, const Scalar& b, double eps) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return std::fabs(a.to_double() - b.to_double()) <= eps * comparison_scale(a, b);
}

}  // namespace vlat
