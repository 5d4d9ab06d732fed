#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlat/coeff_form.hpp"
#include "vlat/random.hpp"
#include "vlat/tolerance.hpp"

namespace vlat {

struct SuiteResult {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failure

  bool passed() const { return failures == 0; }
};

/// geometric, dominance, modulus, nthroot, cauchy-hadamard, scaling, amgm, phi
const std::vector<std::string>& falsify_suites();

/// Randomized theorem identities. Throws std::invalid_argument for an unknown suite.
SuiteResult run_falsify_suite(const std::string& suite, std::size_t samples, std::uint64_t seed,
                              const ToleranceConfig& tol = {});

/// A closed-form coefficient sequence with |ratio| < 1, so Σ a_n converges absolutely.
ScalarForm random_convergent_form(Sampler& rng);
/// |ratio| drawn from {0} ∪ (0, 3]; ratio 0 makes the sequence eventually zero.
ScalarForm random_power_form(Sampler& rng, bool vanishing);

}  // namespace vlat
