#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vlat/phi_algebra.hpp"

namespace vlat {

/// The operations the Φ-algebra axiom checker exercises. Swapping one of them
/// for a broken version is how the harness proves it can fail.
struct PhiOps {
  std::function<ComplexElement(const ComplexElement&, const ComplexElement&)> mul;
  std::function<std::optional<RealElement>(const RealElement&)> invert;
  std::function<ComplexElement(const BandProjection&, const ComplexElement&)> project;
};

PhiOps standard_phi_ops(const ToleranceConfig& tol = {});

/// Axiom identifiers: "i", "ii", "iii", "iv-inverse", "iv-projection", "v", "vi".
const std::vector<std::string>& phi_axiom_names();

/// Standard ops with one operation replaced so that the named axiom breaks.
PhiOps injected_bug_ops(const std::string& axiom, const ToleranceConfig& tol = {});

struct AxiomResult {
  std::string axiom;
  std::string statement;
  std::size_t checks = 0;
  bool passed = true;
  std::string witness;  // first counterexample, empty when passed
};

struct AxiomReport {
  std::size_t points = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult& at(const std::string& axiom) const;
};

/// Randomized checks of (i) ab = ba, (ii) |ab| = |a||b|, (iii) |a|∧|b| = 0 iff
/// ab = 0, (iv) positive inverses and P(ab) = aP(b), (v) P(ab) = P(a)P(b),
/// (vi) P is an order continuous Riesz homomorphism.
AxiomReport check_phi_axioms(const Model& model, std::size_t samples, std::uint64_t seed,
                             const PhiOps& ops, const ToleranceConfig& tol = {});
AxiomReport check_phi_axioms(const Model& model, std::size_t samples, std::uint64_t seed,
                             const ToleranceConfig& tol = {});

}  // namespace vlat
