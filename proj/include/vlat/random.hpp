#pragma once

#include <cstdint>
#include <random>

#include "vlat/element.hpp"

namespace vlat {

/// Deterministic generators for property checks. Every draw goes through the
/// one engine, so (seed, call order) fixes the whole sample.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  double uniform(double lo, double hi);
  long integer(long lo, long hi);
  bool chance(double p);

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 9, long max_den = 8);
  /// Rational in [0, 1) with denominator at most max_den.
  Rational unit_rational(long max_den = 16);

  /// Exact element; each coordinate is zero with probability zero_prob.
  RealElement exact_element(const Model& m, double zero_prob = 0.0, long max_num = 9, long max_den = 8);
  RealElement exact_positive(const Model& m, double zero_prob = 0.0, long max_num = 9, long max_den = 8);
  ComplexElement exact_complex(const Model& m, double zero_prob = 0.0);
  RealElement approx_element(const Model& m, double lo, double hi);
  std::vector<bool> support(std::size_t n, double p = 0.5);

private:
  std::mt19937_64 rng_;
};

}  // namespace vlat
