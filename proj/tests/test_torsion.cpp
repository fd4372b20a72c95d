#include <doctest.h>

#include "catalog.hpp"
#include "torsion.hpp"

using namespace su2curv;

namespace {

const Su2& s = Su2::standard();

const Coframe5& by_name(const std::string& n) {
  const CatalogEntry* e = find_catalog(n);
  REQUIRE(e != nullptr);
  return e->cf;
}

// Rebuild d(alpha) and d(omega_r) from the components; the splitting's
// correctness oracle.
void check_reassembly(const Coframe5& cf, const TorsionForms& t) {
  Form da = wedge(s.alpha(), t.nu[3]) + t.sigma[3];
  for (int i = 1; i <= 3; ++i) da += t.phi_(i) * s.omega(i);
  CHECK(da == cf.d(s.alpha()));
  for (int r = 1; r <= 3; ++r) {
    Form dw = wedge(t.nu[r - 1], s.omega(r)) + wedge(s.alpha(), t.sigma[r - 1]);
    for (int j = 1; j <= 3; ++j) dw += t.f_(r, j) * wedge(s.alpha(), s.omega(j));
    CHECK(dw == cf.d(s.omega(r)));
  }
}

TorsionForms sasaki_einstein_pattern() {
  TorsionForms t;
  t.phi[0] = Rational(-2);
  t.f[1][2] = Rational(3);
  t.f[2][1] = Rational(-3);
  return t;
}

}  // namespace

TEST_CASE("abelian torsion vanishes") {
  TorsionForms t = extract_torsion(by_name("abelian"));
  for (auto& n : t.nu) CHECK(n.is_zero());
  for (auto& sg : t.sigma) CHECK(sg.is_zero());
  for (auto& p : t.phi) CHECK(p.is_zero());
  for (auto& row : t.f)
    for (auto& v : row) CHECK(v.is_zero());
}

TEST_CASE("heisenberg torsion is phi_1 = -2 only") {
  TorsionForms t = extract_torsion(by_name("heisenberg"));
  CHECK(t.phi_(1) == Rational(-2));
  CHECK(t.phi_(2).is_zero());
  CHECK(t.phi_(3).is_zero());
  for (auto& n : t.nu) CHECK(n.is_zero());
  for (auto& sg : t.sigma) CHECK(sg.is_zero());
  for (auto& row : t.f)
    for (auto& v : row) CHECK(v.is_zero());
  check_reassembly(by_name("heisenberg"), t);
}

TEST_CASE("perturbed instances have the advertised nonzero components") {
  TorsionForms a = extract_torsion(by_name("h3_r2"));
  CHECK(a.phi_(1) == Rational(1, 2));
  CHECK(a.sigma[3] == Rational(1, 2) * (Form::monomial({1, 2}) - Form::monomial({3, 4})));

  TorsionForms b = extract_torsion(by_name("nil_12_13"));
  CHECK(b.nu[0] == -Form::basis(3));
  CHECK(b.phi_(2) == Rational(1, 2));
  CHECK(b.sigma[3] == Rational(1, 2) * (Form::monomial({1, 3}) + Form::monomial({2, 4})));

  TorsionForms c = extract_torsion(by_name("solv_nu4"));
  CHECK(c.nu[3] == Form::basis(1));
  for (int i = 0; i < 3; ++i) CHECK(c.nu[i].is_zero());
  for (auto& sg : c.sigma) CHECK(sg.is_zero());
}

TEST_CASE("extraction components live in the right subspaces, catalog-wide") {
  for (const auto& e : catalog()) {
    TorsionForms t = extract_torsion(e.cf);
    for (auto& n : t.nu) CHECK(transverse(n) == n);
    for (auto& sg : t.sigma) {
      if (!sg.is_zero()) CHECK(s.in_lambda23(sg));
    }
    check_reassembly(e.cf, t);
    CHECK(verify_d2_constraints(t));
  }
}

TEST_CASE("extract_torsion rejects non-Jacobi input") {
  std::array<Form, 5> d{Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[0] = Form::monomial({2, 4});
  d[1] = Form::monomial({1, 3});
  CHECK_THROWS_AS(extract_torsion(Coframe5("bad", d)), std::invalid_argument);
}

TEST_CASE("d2 constraint checker") {
  TorsionForms t = extract_torsion(by_name("heisenberg"));
  CHECK(verify_d2_constraints(t));

  TorsionForms bad;
  bad.f[0][1] = Rational(1);
  bad.f[1][0] = Rational(1);  // symmetric instead of antisymmetric
  CHECK(!verify_d2_constraints(bad));

  TorsionForms bad2;
  bad2.f[0][0] = Rational(1);  // f11 != f22
  CHECK(!verify_d2_constraints(bad2));
}

TEST_CASE("classification of catalog instances") {
  auto heis = classify(extract_torsion(by_name("heisenberg")));
  CHECK(heis.hypo);
  CHECK(heis.contact_hypo);
  CHECK(heis.kahler_cone);
  CHECK(!heis.sasaki_einstein);
  CHECK(!heis.half_flat_cone);  // f_23 = 0, not 3
  CHECK(!heis.nearly_hypo);

  auto h5 = classify(extract_torsion(by_name("h5_hypo")));
  CHECK(h5.hypo);
  CHECK(!h5.contact_hypo);  // phi_1 = 1, not -2

  auto ab = classify(extract_torsion(by_name("abelian")));
  CHECK(ab.hypo);  // trivially: all listed components vanish
  CHECK(!ab.contact_hypo);
  CHECK(!ab.nearly_hypo);
  CHECK(!ab.sasaki_einstein);

  auto nil = classify(extract_torsion(by_name("nil_12_13")));
  CHECK(!nil.hypo);  // nu_1 != 0
}

TEST_CASE("classification of torsion patterns") {
  auto se = classify(sasaki_einstein_pattern());
  CHECK(se.sasaki_einstein);
  CHECK(se.contact_hypo);
  CHECK(se.hypo);
  CHECK(se.nearly_hypo);
  CHECK(se.double_hypo);
  CHECK(se.half_flat_cone);
  CHECK(se.kahler_cone);

  // Monotonicity: the implications the flags must satisfy.
  for (const auto& e : catalog()) {
    auto c = classify(extract_torsion(e.cf));
    if (c.sasaki_einstein) {
      CHECK(c.double_hypo);
      CHECK(c.contact_hypo);
    }
    if (c.double_hypo) {
      CHECK(c.hypo);
      CHECK(c.nearly_hypo);
    }
    if (c.half_flat_cone) CHECK(c.contact_hypo);
  }
}

TEST_CASE("double hypo transform of the structure forms") {
  StructureQuadruple q{s.alpha(), s.omega(1), s.omega(2), s.omega(3)};
  StructureQuadruple tq = double_hypo_forms(q);
  CHECK(tq.alpha == Form::basis(5));
  CHECK(tq.omega1 == s.omega(1));
  CHECK(tq.omega2 == -(Form::monomial({1, 4}) + Form::monomial({2, 3})));
  CHECK(tq.omega3 == Form::monomial({1, 3}) - Form::monomial({2, 4}));

  // The transformed quadruple satisfies the same compatibility conditions.
  Form v = wedge(tq.omega1, tq.omega1);
  const Form* w[3] = {&tq.omega1, &tq.omega2, &tq.omega3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(wedge(*w[i], *w[j]) == (i == j ? v : Form(4)));
  CHECK(!wedge(v, tq.alpha).is_zero());
}

TEST_CASE("double hypo transform preserves the metric") {
  // The relabeling what = A w is orthogonal: sum_i what^i (x) what^i equals
  // sum_i w^i (x) w^i entry by entry.
  Rational a[kDim][kDim] = {};
  a[0][1] = Rational(-1);
  a[1][0] = Rational(1);
  a[2][2] = a[3][3] = a[4][4] = Rational(1);
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q) {
      Rational g(0);
      for (int i = 0; i < kDim; ++i) g += a[i][p] * a[i][q];
      CHECK(g == (p == q ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("transformed coframe keeps Jacobi and swaps the omega_2/omega_3 roles") {
  for (const auto& e : catalog()) {
    Coframe5 tcf = double_hypo_coframe(e.cf);
    CHECK(!tcf.validate_jacobi().has_value());
    // d omega_1 is preserved, d omega_2 of the transform matches -d omega_3
    // of the original rewritten in the new coframe, and vice versa.
    TorsionForms t0 = extract_torsion(e.cf);
    TorsionForms t1 = extract_torsion(tcf);
    CHECK(t0.phi_(1) == t1.phi_(1));
    CHECK(t0.f_(1, 1) == t1.f_(1, 1));
    CHECK(t1.f_(2, 3) == t0.f_(2, 3));
    // transform twice = conjugation by a rotation fixing the structure
    Coframe5 tt = double_hypo_coframe(tcf);
    TorsionForms t2 = extract_torsion(tt);
    CHECK(t2.phi_(1) == t0.phi_(1));
  }
}
