#include "vlat/element.hpp"

#include <set>
#include <stdexcept>

namespace vlat {

IndexSet::IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("index set needs at least one point");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty point label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate point label: " + l);
  }
}

std::size_t IndexSet::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return labels_.size();
}

Model make_model(std::vector<std::string> labels) {
  return std::make_shared<const IndexSet>(std::move(labels));
}

Model make_model(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("t" + std::to_string(i));
  return make_model(std::move(labels));
}

bool same_model(const Model& a, const Model& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_model(const RealElement& a, const RealElement& b) {
  if (!same_model(a.model(), b.model())) throw ModelMismatch();
}

RealElement::RealElement(Model model, std::vector<Scalar> values)
    : model_(std::move(model)), values_(std::move(values)) {
  if (!model_) throw std::invalid_argument("element without a model");
  if (values_.size() != model_->size())
    throw std::invalid_argument("element has " + std::to_string(values_.size()) +
                                " values for a model of " + std::to_string(model_->size()) +
                                " points");
}

RealElement RealElement::constant(Model model, const Scalar& c) {
  std::vector<Scalar> v(model->size(), c);
  return RealElement(std::move(model), std::move(v));
}

RealElement RealElement::from_doubles(Model model, const std::vector<double>& v) {
  std::vector<Scalar> s;
  s.reserve(v.size());
  for (double d : v) s.push_back(Scalar::approx(d));
  return RealElement(std::move(model), std::move(s));
}

RealElement RealElement::generate(Model model, const std::function<Scalar(std::size_t)>& f) {
  std::vector<Scalar> v;
  v.reserve(model->size());
  for (std::size_t i = 0; i < model->size(); ++i) v.push_back(f(i));
  return RealElement(std::move(model), std::move(v));
}

bool RealElement::is_exact() const {
  for (const auto& s : values_)
    if (!s.is_exact()) return false;
  return true;
}

RealElement RealElement::with_promoted(bool p) const {
  RealElement r = *this;
  r.promoted_ = p;
  return r;
}

std::vector<double> RealElement::to_doubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& s : values_) out.push_back(s.to_double());
  return out;
}

RealElement RealElement::to_approx() const {
  return from_doubles(model_, to_doubles()).with_promoted(promoted_);
}

RealElement RealElement::map(const std::function<Scalar(const Scalar&)>& f) const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (const auto& s : values_) v.push_back(f(s));
  RealElement r(model_, std::move(v));
  r.promoted_ = promoted_;
  return r;
}

RealElement RealElement::zip(const RealElement& other,
                             const std::function<Scalar(const Scalar&, const Scalar&)>& f) const {
  require_same_model(*this, other);
  std::vector<Scalar> v;
  v.reserve(values_.size());
  bool mixed = false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    mixed = mixed || (values_[i].is_exact() != other.values_[i].is_exact());
    v.push_back(f(values_[i], other.values_[i]));
  }
  RealElement r(model_, std::move(v));
  r.promoted_ = promoted_ || other.promoted_ || mixed;
  return r;
}

RealElement RealElement::operator-() const {
  return map([](const Scalar& s) { return -s; });
}

RealElement operator+(const RealElement& a, const RealElement& b) {
  return a.zip(b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

RealElement operator-(const RealElement& a, const RealElement& b) {
  return a.zip(b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

RealElement operator*(const RealElement& a, const RealElement& b) {
  return a.zip(b, [](const Scalar& x, const Scalar& y) { return x * y; });
}

RealElement operator*(const Scalar& c, const RealElement& a) {
  return a.zip(RealElement::constant(a.model(), c),
               [](const Scalar& x, const Scalar& y) { return y * x; });
}

bool RealElement::identical(const RealElement& other) const {
  if (!same_model(model_, other.model_)) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!values_[i].identical(other.values_[i])) return false;
  return true;
}

ComplexElement::ComplexElement(RealElement re_part, RealElement im_part)
    : re(std::move(re_part)), im(std::move(im_part)) {
  require_same_model(re, im);
}

ComplexElement::ComplexElement(RealElement re_part)
    : re(std::move(re_part)), im(RealElement::zero(re.model())) {}

ComplexElement ComplexElement::zero(const Model& m) {
  return ComplexElement(RealElement::zero(m), RealElement::zero(m));
}

bool ComplexElement::is_real() const {
  for (const auto& s : im.values())
    if (!s.is_zero()) return false;
  return true;
}

ComplexElement operator+(const ComplexElement& a, const ComplexElement& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexElement operator-(const ComplexElement& a, const ComplexElement& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexElement ComplexElement::scaled(const Scalar& ar, const Scalar& ai) const {
  return {ar * re - ai * im, ar * im + ai * re};
}

}  // namespace vlat
