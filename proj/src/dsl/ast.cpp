#include "vlat/dsl/ast.hpp"

#include <sstream>

namespace vlat::dsl {

bool ElemDecl::is_complex() const {
  for (const auto& v : values)
    if (v.complex) return true;
  return false;
}

bool same_ast(const Program& a, const Program& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i)
    if (!(a.decls[i].node == b.decls[i].node)) return false;
  return true;
}

const std::string& decl_name(const DeclNode& d) {
  return std::visit(
      [](const auto& x) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, QueryDecl>)
          return x.target;
        else
          return x.name;
      },
      d);
}

std::string decl_kind(const DeclNode& d) {
  static const char* names[] = {"model", "elem", "seq", "series", "pseries", "query"};
  return names[d.index()];
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string cnum(const CNum& c) {
  std::string s = format_rational(c.re);
  if (!c.complex) return s;
  Rational im = c.im;
  s += im < 0 ? " - " : " + ";
  if (im < 0) im = -im;
  return s + format_rational(im) + "i";
}

template <class T, class F>
std::string joined(const std::vector<T>& xs, F f, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += f(xs[i]);
  }
  return out;
}

struct Printer {
  std::ostringstream& os;

  void operator()(const ModelDecl& d) {
    os << "model " << d.name << " = points{" << joined(d.points, [](auto& s) { return s; }, ",") << "}";
  }
  void operator()(const ElemDecl& d) {
    os << "elem " << d.name << " = ";
    if (d.identity)
      os << "e";
    else
      os << "[" << joined(d.values, cnum) << "]";
  }
  void operator()(const SeqDecl& d) {
    os << "seq " << d.name << "(n) = ";
    if (d.form == SeqDecl::Form::Poly) {
      os << "poly[" << joined(d.poly, format_rational) << "] * pow([" << joined(d.ratios, format_rational) << "], n)";
    } else {
      os << "npow(" << d.exponent << ", [" << joined(d.ratios, format_rational) << "]";
      if (d.shift != 0) os << ", " << d.shift;
      os << ")";
    }
  }
  void operator()(const SeriesDecl& d) { os << "series " << d.name << " = sum " << d.seq; }
  void operator()(const PSeriesDecl& d) { os << "pseries " << d.name << " = sum " << d.seq << " center " << d.center; }
  void operator()(const QueryDecl& d) {
    os << "query " << d.verb << " " << d.target;
    for (const auto& a : d.args) os << " " << a;
  }
};

}  // namespace

std::string pretty_print(const Program& p) {
  std::ostringstream os;
  for (const auto& d : p.decls) {
    std::visit(Printer{os}, d.node);
    os << "\n";
  }
  return os.str();
}

}  // namespace vlat::dsl
