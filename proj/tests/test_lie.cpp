#include <doctest.h>

#include "catalog.hpp"
#include "coframe.hpp"

using namespace su2curv;

namespace {

Coframe5 heisenberg() {
  std::array<Form, 5> d{Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[4] = -2 * Form::monomial({1, 2}) - 2 * Form::monomial({3, 4});
  return Coframe5("heisenberg", d);
}

Coframe5 abelian() {
  return Coframe5("abelian", {Form(2), Form(2), Form(2), Form(2), Form(2)});
}

// Test-local Leibniz oracle: d(w^{i1} ^ rest) = dw^{i1} ^ rest - w^{i1} ^ d(rest),
// recursing on the first factor only.
Form d_oracle(const Coframe5& cf, const Form& a) {
  if (a.degree() == 0 || a.is_zero()) return Form(a.degree() + (a.degree() < kDim ? 1 : 0));
  Form out(a.degree() + 1);
  for (auto& [m, c] : a.terms()) {
    int first = mono_indices(m).front();
    Mono rest = Mono(m & ~(1u << (first - 1)));
    Form rest_form(mono_degree(rest));
    rest_form.add(rest, Rational(1));
    Form term = wedge(cf.d_basis(first), rest_form);
    if (mono_degree(rest) > 0) term -= wedge(Form::basis(first), d_oracle(cf, rest_form));
    out += c * term;
  }
  return out;
}

}  // namespace

TEST_CASE("jacobi examples") {
  CHECK(!abelian().validate_jacobi().has_value());
  CHECK(!heisenberg().validate_jacobi().has_value());

  // dw1 = w^{24}, dw2 = w^{13} breaks Jacobi: d(dw1) = dw2 ^ w4 = w^{134}.
  std::array<Form, 5> d{Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[0] = Form::monomial({2, 4});
  d[1] = Form::monomial({1, 3});
  Coframe5 bad("bad", d);
  auto fail = bad.validate_jacobi();
  REQUIRE(fail.has_value());
  CHECK(fail->index == 1);
  CHECK(fail->d2 == d_oracle(bad, bad.d_basis(1)));
  CHECK(fail->d2 == Form::monomial({1, 3, 4}));
}

TEST_CASE("exterior derivative examples") {
  Coframe5 h = heisenberg();
  CHECK(h.d(Form::basis(5)) == -2 * Form::monomial({1, 2}) - 2 * Form::monomial({3, 4}));
  CHECK(h.d(Form::monomial({1, 2})).is_zero());
  CHECK(h.d(Form::monomial({1, 2, 3, 4})).is_zero());
  CHECK(h.d(Form::scalar(Rational(7))).is_zero());
}

TEST_CASE("exterior derivative agrees with the recursive Leibniz oracle") {
  for (const auto& e : catalog())
    for (Mono m = 1; m <= kFullMask; ++m) {
      Form f(mono_degree(m));
      f.add(m, Rational(1));
      CHECK(e.cf.d(f) == d_oracle(e.cf, f));
    }
}

TEST_CASE("d squared vanishes on every monomial for catalog instances") {
  for (const auto& e : catalog()) {
    REQUIRE(!e.cf.validate_jacobi().has_value());
    for (Mono m = 1; m <= kFullMask; ++m) {
      Form f(mono_degree(m));
      f.add(m, Rational(1));
      CHECK(e.cf.d(e.cf.d(f)).is_zero());
    }
  }
}

TEST_CASE("structure constants of the Heisenberg algebra") {
  StructureConstants sc = structure_constants(heisenberg());
  CHECK(sc.c[5][1][2] == Rational(2));
  CHECK(sc.c[5][2][1] == Rational(-2));
  CHECK(sc.c[5][3][4] == Rational(2));
  CHECK(sc.c[5][4][3] == Rational(-2));
  int nonzero = 0;
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        if (!sc.c[k][i][j].is_zero()) ++nonzero;
  CHECK(nonzero == 4);

  // [e1, e2] = 2 e5
  TangentVector b = sc.bracket(TangentVector::basis(1), TangentVector::basis(2));
  CHECK(b == 2 * TangentVector::basis(5));
}

TEST_CASE("structure constants of the abelian algebra vanish") {
  StructureConstants sc = structure_constants(abelian());
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) CHECK(sc.c[k][i][j].is_zero());
}

TEST_CASE("round trip between d images and structure constants") {
  for (const auto& e : catalog()) {
    auto back = d_images_from(structure_constants(e.cf));
    for (int i = 1; i <= kDim; ++i) CHECK(back[i - 1] == e.cf.d_basis(i));
  }
}

TEST_CASE("antisymmetry of structure constants on catalog instances") {
  for (const auto& e : catalog()) {
    StructureConstants sc = structure_constants(e.cf);
    for (int k = 1; k <= kDim; ++k)
      for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j) CHECK(sc.c[k][i][j] == -sc.c[k][j][i]);
  }
}

TEST_CASE("coframe change round trip") {
  // Rotating by an orthogonal relabeling and back reproduces the equations.
  Mat a(kDim, kDim);
  a(0, 1) = Rational(-1);
  a(1, 0) = Rational(1);
  a(2, 2) = a(3, 3) = a(4, 4) = Rational(1);
  Mat ainv(kDim, kDim);
  ainv(0, 1) = Rational(1);
  ainv(1, 0) = Rational(-1);
  ainv(2, 2) = ainv(3, 3) = ainv(4, 4) = Rational(1);
  for (const auto& e : catalog()) {
    Coframe5 once = change_coframe(e.cf, a, "hat");
    Coframe5 back = change_coframe(once, ainv, "round");
    CHECK(back == e.cf);
    CHECK(!once.validate_jacobi().has_value());
  }
}
