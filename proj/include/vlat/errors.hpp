#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vlat {

/// Base class for every failure raised by the library. `code()` is a stable
/// identifier used in diagnostics and JSON reports.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// An error that names the coordinates (point labels) it concerns.
class PointwiseError : public Error {
public:
  PointwiseError(std::string code, const std::string& message,
                 std::vector<std::string> points)
      : Error(std::move(code), message + describe(points)),
        points_(std::move(points)) {}

  const std::vector<std::string>& points() const noexcept { return points_; }

private:
  static std::string describe(const std::vector<std::string>& points) {
    std::string s = " {";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) s += ",";
      s += points[i];
    }
    return s + "}";
  }

  std::vector<std::string> points_;
};

struct ModelMismatch : Error {
  ModelMismatch() : Error("ModelMismatch", "operands live on different index sets") {}
};

struct BadGrid : Error {
  explicit BadGrid(long k)
      : Error("BadGrid", "modulus grid needs K >= 4, got " + std::to_string(k)) {}
};

struct NegativeInput : PointwiseError {
  explicit NegativeInput(std::vector<std::string> pts)
      : PointwiseError("NegativeInput", "element is not positive at", std::move(pts)) {}
};

struct NotInvertible : PointwiseError {
  explicit NotInvertible(std::vector<std::string> pts)
      : PointwiseError("NotInvertible", "element vanishes at", std::move(pts)) {}
};

struct NotDecreasing : Error {
  explicit NotDecreasing(std::size_t m)
      : Error("NotDecreasing",
              "threshold sequence increases between m=" + std::to_string(m) +
                  " and m=" + std::to_string(m + 1)) {}
};

struct EmptySet : Error {
  EmptySet() : Error("EmptySet", "operation needs a nonempty family") {}
};

struct Unbounded : PointwiseError {
  explicit Unbounded(std::vector<std::string> pts)
      : PointwiseError("Unbounded", "sequence is not order bounded at", std::move(pts)) {}
};

struct NotStrictlyDominated : PointwiseError {
  explicit NotStrictlyDominated(std::vector<std::string> pts)
      : PointwiseError("NotStrictlyDominated", "|a| >= 1 at", std::move(pts)) {}
};

struct NotClosedForm : Error {
  NotClosedForm()
      : Error("NotClosedForm", "exact verdict requires closed-form coefficients") {}
};

struct HypothesisFailed : Error {
  HypothesisFailed(std::string which, const std::string& why)
      : Error("HypothesisFailed", "Abel hypothesis (" + which + ") fails: " + why),
        which_(std::move(which)) {}

  const std::string& which() const noexcept { return which_; }

private:
  std::string which_;
};

struct SeriesDiverges : PointwiseError {
  explicit SeriesDiverges(std::vector<std::string> pts)
      : PointwiseError("SeriesDiverges", "coefficient series diverges at", std::move(pts)) {}
};

struct NotWeakOrderUnit : PointwiseError {
  explicit NotWeakOrderUnit(std::vector<std::string> pts)
      : PointwiseError("NotWeakOrderUnit", "radius vanishes at", std::move(pts)) {}
};

}  // namespace vlat
