#include "vlat/random.hpp"

namespace vlat {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool Sampler::chance(double p) { return uniform(0.0, 1.0) < p; }

Rational Sampler::rational(long max_num, long max_den) {
  long p = integer(-max_num, max_num);
  long q = integer(1, max_den);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational Sampler::unit_rational(long max_den) {
  long q = integer(1, max_den);
  long p = integer(0, q - 1);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

RealElement Sampler::exact_element(const Model& m, double zero_prob, long max_num, long max_den) {
  return RealElement::generate(m, [&](std::size_t) {
    if (zero_prob > 0 && chance(zero_prob)) return Scalar(0);
    Rational r = rational(max_num, max_den);
    while (r == 0 && zero_prob == 0) r = rational(max_num, max_den);
    return Scalar(r);
  });
}

RealElement Sampler::exact_positive(const Model& m, double zero_prob, long max_num, long max_den) {
  return exact_element(m, zero_prob, max_num, max_den).map([](const Scalar& s) { return abs(s); });
}

ComplexElement Sampler::exact_complex(const Model& m, double zero_prob) {
  RealElement re = exact_element(m, 0.0);
  RealElement im = exact_element(m, 0.0);
  std::vector<bool> zero(m->size());
  for (std::size_t i = 0; i < zero.size(); ++i) zero[i] = zero_prob > 0 && chance(zero_prob);
  auto mask = [&](const RealElement& x) {
    return RealElement::generate(m, [&](std::size_t i) { return zero[i] ? Scalar(0) : x[i]; });
  };
  return {mask(re), mask(im)};
}

RealElement Sampler::approx_element(const Model& m, double lo, double hi) {
  return RealElement::generate(m, [&](std::size_t) { return Scalar::approx(uniform(lo, hi)); });
}

std::vector<bool> Sampler::support(std::size_t n, double p) {
  std::vector<bool> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = chance(p);
  return s;
}

}  // namespace vlat
