#pragma once

#include <cstdint>

#include "vlat/dsl/ast.hpp"
#include "vlat/report.hpp"
#include "vlat/tolerance.hpp"

namespace vlat::dsl {

struct EvalOptions {
  ToleranceConfig tol;
  std::uint64_t seed = 7;
  std::size_t axiom_samples = 500;
  std::size_t disk_n = 4;     // query demo shrinking_disk
  std::size_t cb01_grid = 8;  // query demo cb01
};

struct Evaluation {
  report::Json report;
  bool all_passed = true;  // every verdict computed and every check passed
};

/// Runs each query in order. Failures become report entries.
Evaluation evaluate(const Program& program, const EvalOptions& opts = {});

}  // namespace vlat::dsl

namespace vlat::report {

/// Verdict objects shared by the DSL and the CLI subcommands.
Json axioms_verdict(const Model& m, std::size_t samples, std::uint64_t seed, const ToleranceConfig& tol);
Json shrinking_disk_verdict(std::size_t n, const ToleranceConfig& tol);
Json cb01_verdict(std::size_t grid, const ToleranceConfig& tol);

bool checks_passed(const Json& verdict);

/// Adds the known report flags found in a verdict's notes to report["flags"].
void collect_flags(Json& report, const Json& verdict);

}  // namespace vlat::report
