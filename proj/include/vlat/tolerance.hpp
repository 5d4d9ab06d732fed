#pragma once

#include <stdexcept>

namespace vlat {

/// Comparison and convergence tolerances for Approx-mode scalars. Exact-mode
/// comparisons ignore these.
struct ToleranceConfig {
  double eps_cmp = 1e-12;   // relative comparison tolerance
  double eps_conv = 1e-10;  // convergence-detection tolerance
  long grid_K = 2048;       // default modulus grid size

  void validate() const {
    if (!(eps_cmp > 0) || !(eps_conv > 0) || grid_K < 4)
      throw std::invalid_argument("tolerances must be positive and grid_K >= 4");
  }
};

}  // namespace vlat
