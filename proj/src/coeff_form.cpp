#include "vlat/coeff_form.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace vlat {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();
constexpr std::size_t kExactScanLimit = 4096;
constexpr std::size_t kIndexCap = 100000000;

long double ld(const Rational& q) { return Scalar(q).to_long_double(); }

Rational rpow(const Rational& q, unsigned long n) { return pow(Scalar(q), n).rational(); }

Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int rsign(const Rational& q) { return sgn(q); }

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::size_t clamp_index(long double x) {
  if (!(x < static_cast<long double>(kIndexCap))) throw std::overflow_error("monotonicity index exceeds the supported range");
  if (x <= 0) return 0;
  return static_cast<std::size_t>(std::ceil(x));
}

Rational poly_eval(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational poly_total(const std::vector<Rational>& c, const Rational& r) {
  if (c.empty()) return 0;
  std::vector<Rational> S = power_moment_sums(r, c.size() - 1);
  Rational total = 0;
  for (std::size_t j = 0; j < c.size(); ++j) total += c[j] * S[j];
  return total;
}

struct Bracketed {
  long double value;
  long double error;
};

// Σ_{j>=1} j^{-K}, K >= 2: explicit head plus the convex trapezoid bracket
// [I + f(M)/2, I + f(M)/2 + |f'(M)|/8] for the tail.
Bracketed zeta_sum(long K) {
  long double target = 1e-18L;
  long double M = std::ceil(std::pow(static_cast<long double>(K) / (8 * target), 1.0L / (K + 1)));
  M = std::max<long double>(M, 16);
  std::size_t m = static_cast<std::size_t>(M);
  long double head = 0;
  for (std::size_t j = m - 1; j >= 1; --j) head += std::pow(static_cast<long double>(j), -static_cast<long double>(K));
  long double fM = std::pow(M, -static_cast<long double>(K));
  long double I = std::pow(M, 1.0L - K) / (K - 1);
  long double width = K * std::pow(M, -static_cast<long double>(K) - 1) / 8;
  long double value = head + I + fM / 2 + width / 2;
  return {value, width / 2 + 4 * M * LDBL_EPSILON * value};
}

// Σ_{j>=1} σ^j j^{-K} for σ = ±1.
Bracketed signed_zeta(int sigma, long K) {
  if (K == 1) {
    if (sigma > 0) throw std::logic_error("harmonic series has no sum");
    return {-std::log(2.0L), 4 * LDBL_EPSILON};
  }
  Bracketed z = zeta_sum(K);
  if (sigma > 0) return z;
  long double f = 1 - std::pow(2.0L, 1.0L - K);
  return {-f * z.value, f * z.error};
}

}  // namespace

std::vector<Rational> power_moment_sums(const Rational& r, std::size_t max_j) {
  if (rabs(r) >= 1) throw std::domain_error("power moment sums need |r| < 1");
  std::vector<Rational> S(max_j + 1);
  Rational q = r / (1 - r);
  S[0] = 1 / (1 - r);
  for (std::size_t j = 1; j <= max_j; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < j; ++i) acc += binomial(j, i) * S[i];
    S[j] = q * acc;
  }
  return S;
}

// ---- construction -------------------------------------------------------

ScalarForm ScalarForm::polynomial(std::vector<Rational> coeffs, const Rational& ratio) {
  ScalarForm f;
  f.kind_ = Kind::Polynomial;
  trim(coeffs);
  f.coeffs_ = std::move(coeffs);
  f.ratio_ = ratio;
  return f;
}

ScalarForm ScalarForm::rational_power(const Rational& scale, long exponent, long shift, const Rational& ratio) {
  if (shift < 0) throw std::invalid_argument("rational power shift must be >= 0");
  ScalarForm f;
  f.kind_ = Kind::RationalPower;
  f.scale_ = scale;
  f.exponent_ = exponent;
  f.shift_ = shift;
  f.ratio_ = ratio;
  return f;
}

ScalarForm ScalarForm::finite(std::vector<Rational> values) {
  ScalarForm f = polynomial({}, Rational(1));
  f.prefix_ = std::move(values);
  return f;
}

ScalarForm ScalarForm::with_prefix(std::vector<Rational> prefix) const {
  ScalarForm f = *this;
  f.prefix_ = std::move(prefix);
  return f;
}

ScalarForm ScalarForm::scaled(const Rational& c) const {
  ScalarForm f = *this;
  for (auto& x : f.coeffs_) x *= c;
  trim(f.coeffs_);
  f.scale_ *= c;
  for (auto& x : f.prefix_) x *= c;
  return f;
}

ScalarForm ScalarForm::negated() const { return scaled(Rational(-1)); }

ScalarForm ScalarForm::ratio_scaled(const Rational& x) const {
  ScalarForm f = *this;
  f.ratio_ *= x;
  Rational p = 1;
  for (auto& v : f.prefix_) {
    v *= p;
    p *= x;
  }
  return f;
}

long ScalarForm::degree() const {
  if (kind_ == Kind::Polynomial) return static_cast<long>(coeffs_.size()) - 1;
  return exponent_;
}

bool operator==(const ScalarForm& a, const ScalarForm& b) {
  return a.kind_ == b.kind_ && a.coeffs_ == b.coeffs_ && a.scale_ == b.scale_ &&
         a.exponent_ == b.exponent_ && a.shift_ == b.shift_ && a.ratio_ == b.ratio_ && a.prefix_ == b.prefix_;
}

std::optional<std::vector<Rational>> ScalarForm::polynomial_base() const {
  if (kind_ == Kind::Polynomial) return coeffs_;
  if (exponent_ < 0) return std::nullopt;
  auto k = static_cast<unsigned long>(exponent_);
  std::vector<Rational> c(k + 1);
  Rational s(shift_);
  for (unsigned long i = 0; i <= k; ++i) c[i] = scale_ * binomial(k, i) * rpow(s, k - i);
  trim(c);
  return c;
}

// ---- evaluation ---------------------------------------------------------

const ScalarForm::Numeric& ScalarForm::numeric() const {
  Numeric& n = cache_.n;
  if (n.ready) return n;
  n.ratio = ld(ratio_);
  n.log_ratio = ratio_ == 0 ? -kInf : std::log(std::fabs(n.ratio));
  n.scale = ld(scale_);
  n.log_scale = scale_ == 0 ? -kInf : std::log(std::fabs(n.scale));
  n.coeffs.clear();
  for (const auto& c : coeffs_) n.coeffs.push_back(ld(c));
  n.ready = true;
  n.cauchy = cauchy_bound();
  return n;
}

Rational ScalarForm::base(std::size_t n) const {
  if (kind_ == Kind::Polynomial) return poly_eval(coeffs_, Rational(static_cast<unsigned long>(n)));
  unsigned long m = n + static_cast<unsigned long>(shift_);
  if (m == 0) return exponent_ == 0 ? scale_ : Rational(0);
  Rational p = rpow(Rational(m), static_cast<unsigned long>(std::labs(exponent_)));
  return exponent_ >= 0 ? Rational(scale_ * p) : Rational(scale_ / p);
}

long double ScalarForm::base_ld(std::size_t n) const {
  const Numeric& c = numeric();
  if (kind_ == Kind::Polynomial) {
    long double acc = 0, x = static_cast<long double>(n);
    for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  long double m = static_cast<long double>(n) + shift_;
  if (m == 0) return exponent_ == 0 ? c.scale : 0.0L;
  return c.scale * std::pow(m, static_cast<long double>(exponent_));
}

long double ScalarForm::log_abs_base_ld(std::size_t n) const {
  if (kind_ == Kind::RationalPower) {
    long double m = static_cast<long double>(n) + shift_;
    if (scale_ == 0 || (m == 0 && exponent_ != 0)) return -kInf;
    if (m == 0) return numeric().log_scale;
    return numeric().log_scale + exponent_ * std::log(m);
  }
  long double v = base_ld(n);
  if (v == 0) {
    if (base(n) == 0) return -kInf;
    return std::log(std::fabs(ld(base(n))));
  }
  return std::log(std::fabs(v));
}

int ScalarForm::base_sign(std::size_t n) const {
  if (kind_ == Kind::RationalPower) {
    if (scale_ == 0) return 0;
    if (n + static_cast<unsigned long>(shift_) == 0 && exponent_ != 0) return 0;
    return rsign(scale_);
  }
  if (n > kExactScanLimit && !coeffs_.empty() && static_cast<long double>(n) > numeric().cauchy)
    return rsign(coeffs_.back());
  return rsign(base(n));
}

Rational ScalarForm::value(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return base(n) * rpow(ratio_, n);
}

long double ScalarForm::log_abs_ld(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n] == 0 ? -kInf : std::log(std::fabs(ld(prefix_[n])));
  if (ratio_ == 0) return n == 0 ? log_abs_base_ld(0) : -kInf;
  long double lb = log_abs_base_ld(n);
  if (lb == -kInf) return lb;
  return lb + static_cast<long double>(n) * numeric().log_ratio;
}

long double ScalarForm::value_ld(std::size_t n) const {
  if (n < prefix_.size()) return ld(prefix_[n]);
  long double l = log_abs_ld(n);
  if (l == -kInf) return 0;
  int s = base_sign(n);
  if (ratio_ < 0 && n % 2 == 1) s = -s;
  return s * std::exp(l);
}

// ---- structure ----------------------------------------------------------

bool ScalarForm::base_is_zero() const {
  return kind_ == Kind::Polynomial ? coeffs_.empty() : scale_ == 0;
}

bool ScalarForm::base_is_constant() const {
  return kind_ == Kind::Polynomial ? coeffs_.size() <= 1 : exponent_ == 0;
}

std::optional<std::size_t> ScalarForm::zero_from() const {
  if (base_is_zero()) return prefix_.size();
  if (ratio_ == 0) return std::max<std::size_t>(prefix_.size(), 1);
  return std::nullopt;
}

ScalarForm::Trend ScalarForm::trend() const {
  if (zero_from()) return Trend::Vanishing;
  int c = cmp(rabs(ratio_), 1);
  if (c < 0) return Trend::Decaying;
  if (c > 0) return Trend::Growing;
  if (base_is_constant()) return Trend::Steady;
  if (kind_ == Kind::RationalPower && exponent_ < 0) return Trend::Decaying;
  return Trend::Growing;
}

bool ScalarForm::bounded() const { return trend() != Trend::Growing; }

Rational ScalarForm::limsup_root() const {
  if (zero_from()) return 0;
  return rabs(ratio_);
}

long double ScalarForm::cauchy_bound() const {
  if (kind_ != Kind::Polynomial || coeffs_.size() <= 1) return 0;
  Rational best = 0;
  const Rational& lead = coeffs_.back();
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) best = std::max(best, rabs(coeffs_[i] / lead));
  return 1 + ld(best) * (1 + 4 * LDBL_EPSILON);
}

std::size_t ScalarForm::analytic_monotone_index() const {
  if (auto z = zero_from()) return *z;
  long double lr = std::fabs(ld(ratio_));
  long double N0 = 0;
  if (kind_ == Kind::Polynomial) {
    long d = degree();
    long double R = cauchy_bound();
    if (d >= 1) {
      if (lr < 1)
        N0 = R + 1 / std::expm1(-std::log(lr) / d);
      else
        N0 = R;
      N0 = std::ceil(N0) + 1;
    }
  } else {
    long k = exponent_;
    long double b0 = shift_ >= 1 ? 0 : 1;
    N0 = b0;
    if (k > 0 && lr < 1) N0 = std::max(b0, std::ceil(1 / std::expm1(-std::log(lr) / k) - shift_) + 1);
    if (k < 0 && lr > 1) N0 = std::max(b0, std::ceil(1 / std::expm1(std::log(lr) / -k) - shift_) + 1);
  }
  return std::max(clamp_index(N0), prefix_.size());
}

std::size_t ScalarForm::monotone_index() const {
  auto& cached = cache_.n.monotone;
  if (cached) return *cached;
  std::size_t N = analytic_monotone_index();
  Trend t = trend();
  if (t == Trend::Vanishing || t == Trend::Steady) return *(cached = N);
  bool decaying = t == Trend::Decaying;
  const std::size_t P = prefix_.size();
  if (N <= kExactScanLimit) {
    Rational cur = rabs(value(N));
    while (N > P) {
      int s0 = base_sign(N - 1);
      if (s0 == 0 || s0 != base_sign(N)) break;
      Rational prev = rabs(value(N - 1));
      if (decaying ? prev < cur : prev > cur) break;
      cur = prev;
      --N;
    }
    return *(cached = N);
  }
  long double cur = log_abs_ld(N);
  const long double margin = 1e-12L;
  while (N > P) {
    int s0 = base_sign(N - 1);
    if (s0 == 0 || s0 != base_sign(N)) break;
    long double prev = log_abs_ld(N - 1);
    if (decaying ? !(prev > cur + margin) : !(prev < cur - margin)) break;
    cur = prev;
    --N;
  }
  return *(cached = N);
}

// ---- tails --------------------------------------------------------------

Rational ScalarForm::extreme_over(std::size_t lo, std::size_t hi, bool want_max, bool absolute) const {
  auto better = [&](const Rational& a, const Rational& b) { return want_max ? a > b : a < b; };
  auto val = [&](std::size_t n) { return absolute ? rabs(value(n)) : value(n); };
  if (hi - lo <= kExactScanLimit) {
    Rational best = val(lo);
    for (std::size_t n = lo + 1; n <= hi; ++n) {
      Rational v = val(n);
      if (better(v, best)) best = v;
    }
    return best;
  }
  auto val_ld = [&](std::size_t n) { return absolute ? std::fabs(value_ld(n)) : value_ld(n); };
  long double best = val_ld(lo);
  for (std::size_t n = lo + 1; n <= hi; ++n) {
    long double v = val_ld(n);
    if (want_max ? v > best : v < best) best = v;
  }
  long double slack = 1e-9L * std::max<long double>(1, std::fabs(best));
  std::optional<Rational> exact;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (std::fabs(val_ld(n) - best) > slack) continue;
    Rational v = val(n);
    if (!exact || better(v, *exact)) exact = v;
  }
  return *exact;
}

Rational ScalarForm::tail_sup(std::size_t m) const {
  Trend t = trend();
  if (t == Trend::Growing) throw Unbounded({});
  if (t == Trend::Vanishing) {
    std::size_t Z = *zero_from();
    if (m >= Z) return 0;
    return std::max(extreme_over(m, Z - 1, true, false), Rational(0));
  }
  std::size_t hi = std::max(m, monotone_index()) + 1;
  Rational best = extreme_over(m, hi, true, false);
  if (t == Trend::Decaying) best = std::max(best, Rational(0));
  return best;
}

Rational ScalarForm::tail_inf(std::size_t m) const { return -negated().tail_sup(m); }

Rational ScalarForm::limsup() const {
  switch (trend()) {
    case Trend::Growing: throw Unbounded({});
    case Trend::Steady: {
      Rational c = base(prefix_.size());
      return ratio_ > 0 ? c : rabs(c);
    }
    default: return 0;
  }
}

Rational ScalarForm::liminf() const { return -negated().limsup(); }

std::optional<Rational> ScalarForm::limit() const {
  switch (trend()) {
    case Trend::Vanishing:
    case Trend::Decaying: return Rational(0);
    case Trend::Steady:
      if (ratio_ > 0) return base(prefix_.size());
      return std::nullopt;
    default: return std::nullopt;
  }
}

Rational ScalarForm::sup_abs_deviation(std::size_t m) const {
  auto x = limit();
  if (!x) throw std::logic_error("sequence has no order limit");
  Trend t = trend();
  if (t == Trend::Vanishing) {
    std::size_t Z = *zero_from();
    if (m >= Z) return 0;
    return extreme_over(m, Z - 1, true, true);
  }
  if (t == Trend::Decaying) return extreme_over(m, std::max(m, monotone_index()), true, true);
  Rational best = 0;
  for (std::size_t n = m; n < prefix_.size(); ++n) best = std::max(best, rabs(prefix_[n] - *x));
  return best;
}

// ---- roots --------------------------------------------------------------

long double ScalarForm::root_value(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("root sequence starts at n = 1");
  long double l = log_abs_ld(n);
  if (l == -kInf) return 0;
  return std::exp(l / static_cast<long double>(n));
}

// root_trend: -1 decreasing, +1 increasing, 0 constant, past the returned index.
std::size_t ScalarForm::analytic_root_index(int& root_trend) const {
  auto constant_trend = [](long double abs_c) { return abs_c > 1 ? -1 : (abs_c < 1 ? 1 : 0); };
  long double N = 1;
  if (kind_ == Kind::Polynomial) {
    long d = degree();
    if (d <= 0) {
      root_trend = constant_trend(std::fabs(ld(coeffs_.front())));
    } else {
      root_trend = -1;
      long double R = cauchy_bound();
      long double cd = std::fabs(ld(coeffs_.back()));
      N = std::max(2 * R, R + std::exp(2 - std::log(cd) / d));
      N = std::ceil(N) + 1;
    }
  } else {
    long k = exponent_;
    long double lc = std::log(std::fabs(ld(scale_)));
    if (k == 0) {
      root_trend = constant_trend(std::fabs(ld(scale_)));
    } else if (k > 0) {
      root_trend = -1;
      N = std::ceil(std::exp(1 - lc / k) - shift_) + 1;
    } else {
      root_trend = 1;
      N = std::ceil(std::exp(1 + lc / -k) - shift_) + 1;
    }
  }
  return std::max<std::size_t>({clamp_index(N), prefix_.size(), 1});
}

std::vector<long double> ScalarForm::root_tail_sups(std::size_t count) const {
  std::vector<long double> b(count, 0);
  if (count == 0) return b;
  std::size_t start;
  long double running;
  if (auto z = zero_from()) {
    start = std::max(*z, count + 1);
    running = 0;
  } else {
    int rt = 0;
    start = std::max(analytic_root_index(rt), count + 1);
    running = rt > 0 ? std::fabs(ld(ratio_)) : root_value(start);
  }
  for (std::size_t n = start - 1; n >= 1; --n) {
    running = std::max(running, root_value(n));
    if (n <= count) b[n - 1] = running;
  }
  return b;
}

// ---- series -------------------------------------------------------------

ScalarForm::SeriesClass ScalarForm::series_class() const {
  Trend t = trend();
  if (t == Trend::Vanishing) return SeriesClass::Finite;
  int c = cmp(rabs(ratio_), 1);
  if (c < 0) return SeriesClass::Absolute;
  if (c > 0 || kind_ != Kind::RationalPower) return SeriesClass::Divergent;
  if (exponent_ <= -2) return SeriesClass::Absolute;
  if (exponent_ == -1 && ratio_ < 0) return SeriesClass::Conditional;
  return SeriesClass::Divergent;
}

std::optional<ScalarForm::SeriesSum> ScalarForm::series_sum() const {
  SeriesClass cls = series_class();
  if (cls == SeriesClass::Divergent) return std::nullopt;
  const std::size_t P = prefix_.size();
  if (cls == SeriesClass::Finite) {
    Rational s = 0;
    for (std::size_t n = 0; n < *zero_from(); ++n) s += value(n);
    return SeriesSum{Scalar(s), 0};
  }
  auto pb = polynomial_base();
  if (pb && rabs(ratio_) < 1) {
    Rational s = poly_total(*pb, ratio_);
    for (std::size_t n = 0; n < P; ++n) s += prefix_[n] - base(n) * rpow(ratio_, n);
    return SeriesSum{Scalar(s), 0};
  }
  if (rabs(ratio_) < 1) {
    // Negative exponent inside the disk: |base| is nonincreasing once n+s >= 1,
    // so the term ratio is at most |r|.
    long double lr = std::fabs(ld(ratio_));
    long double sum = 0, abs_sum = 0;
    std::size_t n = 0;
    for (;; ++n) {
      long double t = value_ld(n);
      sum += t;
      abs_sum += std::fabs(t);
      if (n >= P && n + shift_ >= 1) {
        long double env = std::fabs(t) * lr / (1 - lr);
        if (env <= 1e-21L * std::max<long double>(1, abs_sum) || n > kIndexCap) {
          long double err = env + 4 * (n + 1) * LDBL_EPSILON * abs_sum;
          return SeriesSum{Scalar::approx(static_cast<double>(sum)), err + std::fabs(sum - static_cast<long double>(static_cast<double>(sum)))};
        }
      }
    }
  }
  // |ratio| = 1, negative exponent: reduce to signed zeta sums over j = n + s.
  int sigma = ratio_ > 0 ? 1 : -1;
  long K = -exponent_;
  Bracketed full = signed_zeta(sigma, K);
  std::size_t j0 = std::max<long>(shift_, 1);
  long double head = 0;
  for (std::size_t j = 1; j < j0; ++j)
    head += ((sigma < 0 && j % 2 == 1) ? -1.0L : 1.0L) * std::pow(static_cast<long double>(j), -static_cast<long double>(K));
  long double tail = full.value - head;
  if (sigma < 0 && shift_ % 2 == 1) tail = -tail;
  long double c = ld(scale_);
  long double total = c * tail;
  long double adjust = 0;
  for (std::size_t n = 0; n < P; ++n) adjust += ld(prefix_[n] - base(n) * rpow(ratio_, n));
  total += adjust;
  long double err = std::fabs(c) * (full.error + 4 * j0 * LDBL_EPSILON * (1 + std::fabs(head))) +
                    8 * LDBL_EPSILON * (std::fabs(total) + std::fabs(adjust));
  double rounded = static_cast<double>(total);
  return SeriesSum{Scalar::approx(rounded), err + std::fabs(total - static_cast<long double>(rounded))};
}

long double ScalarForm::remainder_bound(std::size_t m) const {
  switch (series_class()) {
    case SeriesClass::Divergent: return kInf;
    case SeriesClass::Absolute:
    case SeriesClass::Finite: return abs_tail_bound(Rational(1), static_cast<long>(m));
    case SeriesClass::Conditional: {
      std::size_t N = monotone_index();
      if (m + 1 >= N) return std::fabs(value_ld(m + 1)) * (1 + 8 * LDBL_EPSILON);
      long double s = 0;
      for (std::size_t n = m + 1; n <= N; ++n) s += std::fabs(value_ld(n));
      return s * (1 + 8 * (N - m) * LDBL_EPSILON);
    }
  }
  return kInf;
}

long double ScalarForm::base_growth_bound(std::size_t M) const {
  const long double fudge = 1 + 16 * LDBL_EPSILON;
  if (kind_ == Kind::Polynomial) {
    long d = degree();
    if (d <= 0) return 1;
    long double R = numeric().cauchy;
    if (static_cast<long double>(M) <= R) return kInf;
    return std::pow(1 + 1 / (static_cast<long double>(M) - R), static_cast<long double>(d)) * fudge;
  }
  long double m = static_cast<long double>(M) + shift_;
  if (m < 1) return kInf;
  if (exponent_ <= 0) return 1;
  return std::pow(1 + 1 / m, static_cast<long double>(exponent_)) * fudge;
}

long double ScalarForm::tail_core(long double x, int rho_vs_one, long m) const {
  const std::size_t start = static_cast<std::size_t>(m + 1);
  const std::size_t P = prefix_.size();
  if (x == 0) return start == 0 ? std::fabs(value_ld(0)) : 0.0L;
  const long double lx = std::log(x);
  auto term = [&](std::size_t n) {
    long double l = log_abs_ld(n);
    return l == -kInf ? 0.0L : std::exp(l + static_cast<long double>(n) * lx);
  };
  if (auto z = zero_from()) {
    long double s = 0;
    for (std::size_t n = start; n < *z; ++n) s += term(n);
    return s * (1 + 8 * LDBL_EPSILON);
  }
  if (rho_vs_one < 0) {
    long double rho = std::fabs(ld(ratio_)) * x;
    long double sum = 0;
    std::size_t steps = 0;
    for (std::size_t M = start;; ++M, ++steps) {
      long double tM = term(M);
      if (M >= P) {
        long double theta = base_growth_bound(M) * rho;
        if (theta < 1) {
          long double env = tM / (1 - theta);
          if (env <= 1e-19L * sum || env == 0 || steps > kIndexCap)
            return (sum + env) * (1 + 8 * LDBL_EPSILON * (steps + 1));
        }
      }
      sum += tM;
    }
  }
  if (rho_vs_one == 0 && kind_ == Kind::RationalPower && exponent_ <= -2) {
    long K = -exponent_;
    std::size_t M = std::max<std::size_t>({start, P, static_cast<std::size_t>(std::max<long>(2 - shift_, 0))});
    M = std::max<std::size_t>(M, start + 64);
    long double sum = 0;
    for (std::size_t n = start; n < M; ++n) sum += term(n);
    long double y = static_cast<long double>(M) + shift_;
    long double c = std::fabs(ld(scale_));
    long double tail = c * (std::pow(y, 1.0L - K) / (K - 1) + std::pow(y, -static_cast<long double>(K)) / 2 +
                            K * std::pow(y, -static_cast<long double>(K) - 1) / 8);
    return (sum + tail) * (1 + 8 * LDBL_EPSILON * (M - start + 1));
  }
  return kInf;
}

long double ScalarForm::abs_tail_bound(const Rational& x, long m) const {
  if (x < 0) throw std::invalid_argument("abs_tail_bound needs x >= 0");
  return tail_core(ld(x), cmp(rabs(ratio_) * x, 1), m);
}

long double ScalarForm::abs_tail_bound_ld(long double x, long m) const {
  if (x < 0) throw std::invalid_argument("abs_tail_bound needs x >= 0");
  long double rho = std::fabs(ld(ratio_)) * x;
  return tail_core(x, rho < 1 ? -1 : (rho == 1 ? 0 : 1), m);
}

long double ScalarForm::term_ratio_bound(std::size_t n, long double x) const {
  if (n < prefix_.size()) return kInf;
  return base_growth_bound(n) * std::fabs(numeric().ratio) * x;
}

bool ScalarForm::abs_summable(const Rational& x) const {
  if (x == 0 || zero_from()) return true;
  int c = cmp(rabs(ratio_) * x, 1);
  if (c < 0) return true;
  if (c > 0) return false;
  return kind_ == Kind::RationalPower && exponent_ <= -2;
}

std::optional<Rational> ScalarForm::exact_abs_tail(const Rational& x, long m) const {
  const std::size_t start = static_cast<std::size_t>(m + 1);
  if (x == 0) return start == 0 ? rabs(value(0)) : Rational(0);
  if (auto z = zero_from()) {
    Rational s = 0;
    Rational xp = rpow(x, start);
    for (std::size_t n = start; n < *z; ++n, xp *= x) s += rabs(value(n)) * xp;
    return s;
  }
  auto pb = polynomial_base();
  Rational rho = rabs(ratio_) * x;
  if (!pb || rho >= 1) return std::nullopt;
  const auto& c = *pb;
  Rational R = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) R = std::max(R, rabs(c[i] / c.back()));
  if (c.size() > 1) R += 1;
  mpz_class Rc;
  mpz_cdiv_q(Rc.get_mpz_t(), R.get_num_mpz_t(), R.get_den_mpz_t());
  std::size_t M = std::max<std::size_t>({start, prefix_.size(), static_cast<std::size_t>(Rc.get_ui()) + 1});
  Rational s = 0;
  Rational xp = rpow(x, start);
  for (std::size_t n = start; n < M; ++n, xp *= x) s += rabs(value(n)) * xp;
  Rational head = 0, rp = 1;
  for (std::size_t n = 0; n < M; ++n, rp *= rho) head += poly_eval(c, Rational(static_cast<unsigned long>(n))) * rp;
  s += rabs(poly_total(c, rho) - head);
  return s;
}

// ---- CoeffForm ----------------------------------------------------------

CoeffForm::CoeffForm(Model model, std::vector<ScalarForm> forms) : model_(std::move(model)), forms_(std::move(forms)) {
  if (forms_.size() != model_->size()) throw ModelMismatch();
}

CoeffForm CoeffForm::uniform(const Model& m, const ScalarForm& f) {
  return CoeffForm(m, std::vector<ScalarForm>(m->size(), f));
}

RealElement CoeffForm::at(std::size_t n) const {
  return RealElement::generate(model_, [&](std::size_t i) { return Scalar(forms_[i].value(n)); });
}

RealElement CoeffForm::at_approx(std::size_t n) const {
  return RealElement::generate(model_, [&](std::size_t i) {
    return Scalar::approx(static_cast<double>(forms_[i].value_ld(n)));
  });
}

RealElement CoeffForm::limsup_root() const {
  return RealElement::generate(model_, [&](std::size_t i) { return Scalar(forms_[i].limsup_root()); });
}

CoeffForm CoeffForm::negated() const {
  return map([](const ScalarForm& f) { return f.negated(); });
}

CoeffForm CoeffForm::ratio_scaled(const RealElement& x) const {
  if (!same_model(model_, x.model())) throw ModelMismatch();
  if (!x.is_exact()) throw std::invalid_argument("ratio scaling needs an exact element");
  std::vector<ScalarForm> out;
  for (std::size_t i = 0; i < forms_.size(); ++i) out.push_back(forms_[i].ratio_scaled(x[i].rational()));
  return CoeffForm(model_, std::move(out));
}

CoeffForm CoeffForm::map(const std::function<ScalarForm(const ScalarForm&)>& f) const {
  std::vector<ScalarForm> out;
  out.reserve(forms_.size());
  for (const auto& x : forms_) out.push_back(f(x));
  return CoeffForm(model_, std::move(out));
}

}  // namespace vlat
