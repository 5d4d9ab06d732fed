#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vlat/errors.hpp"
#include "vlat/scalar.hpp"

namespace vlat {

/// The finite set of points a model is built on. Labels are unique, nonempty
/// and keep their construction order, which is the canonical coordinate order.
class IndexSet {
public:
  explicit IndexSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Position of a label, or size() when absent.
  std::size_t find(const std::string& label) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.labels_ == b.labels_; }

private:
  std::vector<std::string> labels_;
};

using Model = std::shared_ptr<const IndexSet>;

Model make_model(std::vector<std::string> labels);
/// Points labelled t1..tN.
Model make_model(std::size_t n);

/// An element of the real part of the model: one scalar per point.
class RealElement {
public:
  RealElement(Model model, std::vector<Scalar> values);

  static RealElement constant(Model model, const Scalar& c);
  static RealElement zero(Model model) { return constant(std::move(model), Scalar(0)); }
  static RealElement from_doubles(Model model, const std::vector<double>& v);
  static RealElement generate(Model model, const std::function<Scalar(std::size_t)>& f);

  const Model& model() const noexcept { return model_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Scalar> values() const noexcept { return values_; }

  /// All coordinates exact.
  bool is_exact() const;
  /// Set when this element, or anything it was computed from, mixed
  /// Exact and Approx operands.
  bool promoted() const noexcept { return promoted_; }
  RealElement with_promoted(bool p) const;

  std::vector<double> to_doubles() const;
  RealElement to_approx() const;

  /// Pointwise map / zip; zip checks that the models agree.
  RealElement map(const std::function<Scalar(const Scalar&)>& f) const;
  RealElement zip(const RealElement& other,
                  const std::function<Scalar(const Scalar&, const Scalar&)>& f) const;

  RealElement operator-() const;
  friend RealElement operator+(const RealElement& a, const RealElement& b);
  friend RealElement operator-(const RealElement& a, const RealElement& b);
  /// Pointwise (f-algebra) product.
  friend RealElement operator*(const RealElement& a, const RealElement& b);
  friend RealElement operator*(const Scalar& c, const RealElement& a);

  /// Same model and identical scalars, mode included.
  bool identical(const RealElement& other) const;

private:
  Model model_;
  std::vector<Scalar> values_;
  bool promoted_ = false;
};

void require_same_model(const RealElement& a, const RealElement& b);
bool same_model(const Model& a, const Model& b);

/// f + ig with f, g in the real part.
struct ComplexElement {
  RealElement re;
  RealElement im;

  ComplexElement(RealElement re_part, RealElement im_part);
  explicit ComplexElement(RealElement re_part);

  static ComplexElement zero(const Model& m);
  const Model& model() const noexcept { return re.model(); }
  std::size_t size() const noexcept { return re.size(); }
  bool is_real() const;
  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool promoted() const { return re.promoted() || im.promoted(); }

  ComplexElement operator-() const { return {-re, -im}; }
  friend ComplexElement operator+(const ComplexElement& a, const ComplexElement& b);
  friend ComplexElement operator-(const ComplexElement& a, const ComplexElement& b);
  /// Multiplication by a complex scalar alpha = (ar + i ai).
  ComplexElement scaled(const Scalar& ar, const Scalar& ai) const;
  bool identical(const ComplexElement& other) const {
    return re.identical(other.re) && im.identical(other.im);
  }
};

}  // namespace vlat
