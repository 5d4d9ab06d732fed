#include <doctest.h>

#include <cmath>

#include "vlat/axioms.hpp"
#include "vlat/lattice.hpp"
#include "vlat/phi_algebra.hpp"

using namespace vlat;

namespace {

RealElement q(const Model& m, std::vector<Rational> v) {
  std::vector<Scalar> s(v.begin(), v.end());
  return RealElement(m, s);
}

}  // namespace

TEST_CASE("multiplication, conjugation and the unit") {
  Model m = make_model(2);
  ComplexElement a(q(m, {1, 2}), q(m, {3, -1}));
  ComplexElement b(q(m, {2, 0}), q(m, {-1, 5}));
  ComplexElement ab = mul(a, b);
  // (1+3i)(2-i) = 5+5i, (2-i)(5i) = 5+10i
  CHECK(ab.re.identical(q(m, {5, 5})));
  CHECK(ab.im.identical(q(m, {5, 10})));
  CHECK(mul(a, ComplexElement(identity(m))).re.identical(a.re));
  CHECK(conj(a).im.identical(q(m, {-3, 1})));
  CHECK(mul(a, conj(a)).re.identical(q(m, {10, 5})));
}

TEST_CASE("inverses") {
  Model m = make_model(2);
  CHECK(invert(q(m, {2, -4})).identical(q(m, {Rational(1, 2), Rational(-1, 4)})));
  CHECK_FALSE(try_invert(q(m, {2, 0})).has_value());
  try {
    invert(q(m, {2, 0}));
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    REQUIRE(e.points().size() == 1);
    CHECK(e.points()[0] == "t2");
  }
  CHECK(pseudo_inverse(q(m, {2, 0})).identical(q(m, {Rational(1, 2), 0})));
  ComplexElement z(q(m, {0, 3}), q(m, {1, 4}));
  ComplexElement zi = invert(z);
  CHECK(mul(z, zi).re.identical(identity(m)));
  CHECK(mul(z, zi).im.identical(RealElement::zero(m)));
}

TEST_CASE("nth roots are exact on perfect powers") {
  Model m = make_model(3);
  CHECK(nth_root(q(m, {8, Rational(1, 27), 0}), 3).identical(q(m, {2, Rational(1, 3), 0})));
  RealElement r = nth_root(q(m, {2, 1, 4}), 2);
  CHECK_FALSE(r[0].is_exact());
  CHECK(r[0].to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r[2].rational() == 2);
  CHECK_THROWS_AS(nth_root(q(m, {-1, 1, 1}), 2), NegativeInput);
}

TEST_CASE("band projections") {
  Model m = make_model(3);
  BandProjection p = band_projection(q(m, {0, 3, -1}));
  CHECK(p.support_labels() == std::vector<std::string>{"t2", "t3"});
  BandProjection d = disjoint_complement(p);
  CHECK(d.support_labels() == std::vector<std::string>{"t1"});
  CHECK(p.disjoint(d));
  RealElement x = q(m, {5, 6, 7});
  CHECK((p.apply(x) + d.apply(x)).identical(x));
  CHECK(p.apply(p.apply(x)).identical(p.apply(x)));
}

TEST_CASE("threshold family partitions the support") {
  Model m = make_model(3);
  std::vector<RealElement> b = {q(m, {Rational(1, 2), 2, Rational(3, 2)}), q(m, {Rational(1, 2), Rational(3, 4), Rational(3, 2)}),
                                q(m, {Rational(1, 2), Rational(1, 2), Rational(1, 2)})};
  auto fam = threshold_projection_family(b);
  REQUIRE(fam.size() == 4);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK(fam[i].fresh.disjoint(fam[j].fresh));
  CHECK(fam[1].fresh.support_labels() == std::vector<std::string>{"t1"});
  CHECK(fam[2].fresh.support_labels() == std::vector<std::string>{"t2"});
  CHECK(fam[3].fresh.support_labels() == std::vector<std::string>{"t3"});
  std::vector<RealElement> bad = {q(m, {Rational(1, 2), 1, 1}), q(m, {Rational(3, 4), 1, 1})};
  CHECK_THROWS_AS(threshold_projection_family(bad), NotDecreasing);
}

TEST_CASE("scaling lemma on a small set") {
  Model m = make_model(2);
  RealElement a = q(m, {3, 0});
  std::vector<RealElement> B = {q(m, {1, 2}), q(m, {4, 1}), q(m, {2, 7})};
  auto [lhs, rhs] = scale_sup(a, B);
  CHECK(lhs.identical(rhs));
  CHECK(lhs.identical(q(m, {12, 0})));
  auto [il, ir] = scale_inf(a, B);
  CHECK(il.identical(ir));
  CHECK_THROWS_AS(scale_sup(a, {}), EmptySet);
}

TEST_CASE("axioms hold and injected bugs are caught") {
  for (std::size_t n : {1u, 2u, 5u}) {
    AxiomReport r = check_phi_axioms(make_model(n), 40, 11);
    CHECK(r.all_passed());
  }
  for (const auto& name : phi_axiom_names()) {
    CAPTURE(name);
    AxiomReport r = check_phi_axioms(make_model(4), 60, 5, injected_bug_ops(name));
    CHECK_FALSE(r.at(name).passed);
    CHECK_FALSE(r.at(name).witness.empty());
  }
}
