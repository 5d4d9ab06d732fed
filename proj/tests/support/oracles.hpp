#pragma once

#include <cmath>
#include <complex>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vlat/coeff_form.hpp"

namespace vlat::testing {

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big big(const Rational& q) { return Big(q.get_num().get_str()) / Big(q.get_den().get_str()); }

/// a_n recomputed from the form's parameters alone.
inline Big oracle_term(const ScalarForm& f, std::size_t n) {
  if (n < f.prefix().size()) return big(f.prefix()[n]);
  Big base = 0;
  if (f.kind() == ScalarForm::Kind::Polynomial) {
    Big x = 1;
    for (const auto& c : f.coefficients()) {
      base += big(c) * x;
      x *= n;
    }
  } else {
    Big m = Big(n) + f.shift();
    if (m == 0)
      base = f.exponent() == 0 ? big(f.scale()) : Big(0);
    else
      base = big(f.scale()) * boost::multiprecision::pow(m, f.exponent());
  }
  return base * boost::multiprecision::pow(big(f.ratio()), static_cast<int>(n));
}

/// Σ a_n for |ratio| < 1 by direct summation in 50-digit arithmetic, stopped
/// once 64 consecutive terms are below 1e-40.
inline Big oracle_sum(const ScalarForm& f) {
  Big s = 0;
  int quiet = 0;
  for (std::size_t n = 0; n < 2000000; ++n) {
    Big t = oracle_term(f, n);
    s += t;
    if (n > f.prefix().size() + 8 && boost::multiprecision::abs(t) < Big("1e-40")) {
      if (++quiet == 64) break;
    } else {
      quiet = 0;
    }
  }
  return s;
}

inline Big pi_big() { return boost::multiprecision::default_ops::get_constant_pi<Big::backend_type>(); }

/// ln(1+z)/z for |z| < 1, z != 0, in 50-digit arithmetic.
inline std::complex<double> log1p_over(std::complex<double> z) {
  using std::complex;
  Big re = z.real(), im = z.imag();
  Big r2 = (1 + re) * (1 + re) + im * im;
  Big lre = boost::multiprecision::log(r2) / 2;
  Big lim = boost::multiprecision::atan2(im, 1 + re);
  Big d = re * re + im * im;
  Big qre = (lre * re + lim * im) / d;
  Big qim = (lim * re - lre * im) / d;
  return {static_cast<double>(qre), static_cast<double>(qim)};
}

}  // namespace vlat::testing
