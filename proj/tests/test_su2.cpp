#include <doctest.h>

#include "su2.hpp"

using namespace su2curv;

namespace {

const Su2& s = Su2::standard();

Form mono(Mono m) {
  Form f(mono_degree(m));
  f.add(m, Rational(1));
  return f;
}

std::vector<Mono> transverse_monos(int degree) {
  std::vector<Mono> out;
  for (Mono m : monomials_of_degree(degree))
    if (!(m & (1u << 4))) out.push_back(m);
  return out;
}

// Lambda^2_3 basis: anti-self-dual transverse 2-forms.
const Form l23_a = Form::monomial({1, 2}) - Form::monomial({3, 4});
const Form l23_b = Form::monomial({1, 3}) + Form::monomial({2, 4});
const Form l23_c = Form::monomial({1, 4}) - Form::monomial({2, 3});

SymTensor sym(std::initializer_list<std::array<int, 3>> entries) {
  SymTensor h;
  for (auto& e : entries) h.set(e[0], e[1], Rational(e[2]));
  return h;
}

}  // namespace

TEST_CASE("epsilon table") {
  CHECK(epsilon(1, 1, 2) == 1);
  CHECK(epsilon(1, 3, 4) == 1);
  CHECK(epsilon(2, 1, 3) == 1);
  CHECK(epsilon(2, 2, 4) == -1);
  CHECK(epsilon(3, 1, 4) == 1);
  CHECK(epsilon(3, 2, 3) == 1);
  CHECK(epsilon(1, 2, 1) == -1);
  CHECK(epsilon(1, 1, 1) == 0);
  // omega_r = 1/2 eps^r_ij w^i ^ w^j reproduces the standard model
  for (int r = 1; r <= 3; ++r) {
    Form w(2);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (int e = epsilon(r, i, j); e && i < j) w.add(mono_of({i, j}), Rational(e));
    CHECK(w == s.omega(r));
  }
  // eps^r_ij eps^s_ij = 4 delta_rs
  for (int r = 1; r <= 3; ++r)
    for (int t = 1; t <= 3; ++t) {
      int acc = 0;
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) acc += epsilon(r, i, j) * epsilon(t, i, j);
      CHECK(acc == (r == t ? 4 : 0));
    }
}

TEST_CASE("eta symbol embeds R^4 into so(5)") {
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        int expect = (i == k && j == 5) ? 1 : (j == k && i == 5) ? -1 : 0;
        CHECK(eta(i, j, k) == expect);
      }
}

TEST_CASE("standard model invariants") {
  CHECK(s.alpha() == Form::basis(5));
  CHECK(s.omega(1) == Form::monomial({1, 2}) + Form::monomial({3, 4}));
  CHECK(s.omega(2) == Form::monomial({1, 3}) - Form::monomial({2, 4}));
  CHECK(s.omega(3) == Form::monomial({1, 4}) + Form::monomial({2, 3}));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Form expect = (i == j) ? 2 * s.vol4() : Form(4);
      CHECK(wedge(s.omega(i), s.omega(j)) == expect);
    }
  CHECK(!wedge(wedge(s.omega(1), s.omega(1)), s.alpha()).is_zero());
  for (int r = 1; r <= 3; ++r) CHECK(interior(s.reeb(), s.omega(r)).is_zero());
  CHECK(interior(s.reeb(), s.alpha()) == Form::scalar(Rational(1)));
}

TEST_CASE("validate_adapted") {
  CHECK(s.validate_adapted(s.alpha(), s.omega(1), s.omega(2), s.omega(3)).ok);

  auto swapped = s.validate_adapted(s.alpha(), s.omega(1), s.omega(3), s.omega(2));
  CHECK(!swapped.ok);
  CHECK(swapped.diagnostic.find("orientation") != std::string::npos);

  auto scaled = s.validate_adapted(s.alpha(), 2 * s.omega(1), s.omega(2), s.omega(3));
  CHECK(!scaled.ok);
  CHECK(scaled.diagnostic.find("compatibility fails") != std::string::npos);

  auto negated = s.validate_adapted(s.alpha(), -s.omega(1), -s.omega(2), s.omega(3));
  CHECK(!negated.ok);
}

TEST_CASE("star_r on transverse 1-forms is wedge with omega_r") {
  for (int r = 1; r <= 3; ++r)
    for (int i = 1; i <= 4; ++i)
      CHECK(s.star_r(r, Form::basis(i)) == wedge(Form::basis(i), s.omega(r)));
  CHECK(s.star_r(1, Form::basis(1)) == Form::monomial({1, 3, 4}));
  CHECK(s.star_r(2, Form::basis(2)) == -Form::monomial({1, 2, 3}));
}

TEST_CASE("star_r satisfies its defining relation on 1-forms") {
  // gamma ^ star_r beta = omega_r(gamma, beta) omega_r^2/2, with
  // omega_r(w^i, w^j) = eps^r_ij in the adapted frame.
  for (int r = 1; r <= 3; ++r)
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        Form lhs = wedge(Form::basis(i), s.star_r(r, Form::basis(j)));
        Form rhs = Rational(epsilon(r, i, j)) * s.vol4();
        CHECK(lhs == rhs);
      }
}

TEST_CASE("star_r is an involution on transverse 1- and 3-forms") {
  for (int r = 1; r <= 3; ++r) {
    for (int i = 1; i <= 4; ++i) {
      Form f = Form::basis(i);
      CHECK(s.star_r(r, s.star_r(r, f)) == f);
    }
    for (Mono m : transverse_monos(3)) {
      CHECK(s.star_r(r, s.star_r(r, mono(m))) == mono(m));
    }
  }
  CHECK(s.star_r(1, s.star_r(1, Form::basis(1))) == Form::basis(1));
}

TEST_CASE("star_r rejects non-transverse input") {
  CHECK_THROWS_AS(s.star_r(1, Form::basis(5)), std::invalid_argument);
  CHECK_THROWS_AS(s.star_r(2, Form::monomial({1, 5})), std::invalid_argument);
}

TEST_CASE("star_r on 2-forms fixes omega_r") {
  for (int r = 1; r <= 3; ++r) CHECK(s.star_r(r, s.omega(r)) == s.omega(r));
}

TEST_CASE("J_r on basis vectors matches the standard action") {
  CHECK(s.j_vec(1, TangentVector::basis(1)) == TangentVector::basis(2));
  CHECK(s.j_vec(2, TangentVector::basis(1)) == TangentVector::basis(3));
  CHECK(s.j_vec(3, TangentVector::basis(1)) == TangentVector::basis(4));
  CHECK(s.j_vec(1, TangentVector::basis(3)) == TangentVector::basis(4));
  CHECK(s.j_vec(2, TangentVector::basis(4)) == TangentVector::basis(2));
  CHECK(s.j_vec(3, TangentVector::basis(2)) == TangentVector::basis(3));
  CHECK(s.j_vec(3, s.j_vec(3, TangentVector::basis(2))) == -TangentVector::basis(2));
  for (int r = 1; r <= 3; ++r) CHECK(s.j_vec(r, s.reeb()).is_zero());
}

TEST_CASE("J_r squared is -I + R (x) alpha") {
  for (int r = 1; r <= 3; ++r) {
    for (int i = 1; i <= kDim; ++i) {
      TangentVector v = TangentVector::basis(i);
      TangentVector expect = (i == 5) ? TangentVector() : -v;
      CHECK(s.j_vec(r, s.j_vec(r, v)) == expect);
      Form f = Form::basis(i);
      Form fexpect = (i == 5) ? Form(1) : -f;
      CHECK(s.j_form(r, s.j_form(r, f)) == fexpect);
    }
  }
}

TEST_CASE("quaternionic relations") {
  for (int i = 1; i <= kDim; ++i) {
    TangentVector v = TangentVector::basis(i);
    // anticommutation for r != s
    for (int r = 1; r <= 3; ++r)
      for (int t = 1; t <= 3; ++t) {
        if (r == t) continue;
        CHECK(s.j_vec(r, s.j_vec(t, v)) == -s.j_vec(t, s.j_vec(r, v)));
      }
    // J1 J2 = J3 on vectors, J1 J2 = -J3 on 1-forms
    CHECK(s.j_vec(1, s.j_vec(2, v)) == s.j_vec(3, v));
    Form f = Form::basis(i);
    CHECK(s.j_form(1, s.j_form(2, f)) == -s.j_form(3, f));
  }
}

TEST_CASE("J_r is a g-isometry on the contact distribution") {
  // g(J X, J Y) = g(X,Y) - alpha(X) alpha(Y)
  for (int r = 1; r <= 3; ++r)
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        TangentVector ji = s.j_vec(r, TangentVector::basis(i));
        TangentVector jj = s.j_vec(r, TangentVector::basis(j));
        Rational g(0);
        for (int k = 1; k <= kDim; ++k) g += ji[k] * jj[k];
        Rational expect = (i == j ? Rational(1) : Rational(0)) -
                          Rational(i == 5 ? 1 : 0) * Rational(j == 5 ? 1 : 0);
        CHECK(g == expect);
      }
}

TEST_CASE("transverse Hodge operator") {
  for (int r = 1; r <= 3; ++r) CHECK(s.transverse_hodge(s.omega(r)) == s.omega(r));
  CHECK(s.transverse_hodge(Form::basis(1)) == Form::monomial({2, 3, 4}));
  CHECK(s.transverse_hodge(l23_a) == -l23_a);
  CHECK(s.transverse_hodge(l23_b) == -l23_b);
  CHECK(s.transverse_hodge(l23_c) == -l23_c);
  CHECK_THROWS_AS(s.transverse_hodge(Form::basis(5)), std::invalid_argument);
}

TEST_CASE("transverse Hodge squares to (-1)^{k(4-k)} on transverse k-forms") {
  for (int k = 0; k <= 4; ++k) {
    int sign = (k * (4 - k)) % 2 == 0 ? 1 : -1;
    for (Mono m : transverse_monos(k))
      CHECK(s.transverse_hodge(s.transverse_hodge(mono(m))) == Rational(sign) * mono(m));
  }
}

TEST_CASE("E projection examples") {
  CHECK(s.project_E(s.omega(1)).is_zero());
  CHECK(s.project_E(l23_a) == l23_a);
  Form in = wedge(Form::basis(5), Form::basis(1)) + Form::monomial({1, 2});
  CHECK(s.project_E(in) == Rational(1, 2) * l23_a);
}

TEST_CASE("E is idempotent on a spanning set of 2-forms") {
  for (Mono m : monomials_of_degree(2)) {
    Form e = s.project_E(mono(m));
    CHECK(s.project_E(e) == e);
    if (!e.is_zero()) CHECK(s.in_lambda23(e));
  }
}

TEST_CASE("E commutes with the star through iota_R on 3-forms") {
  // E(*psi) = *^T E(iota_R psi) for every 3-form monomial
  for (Mono m : monomials_of_degree(3)) {
    Form lhs = s.project_E(hodge(mono(m)));
    Form inner_part = s.project_E(interior(5, mono(m)));
    Form rhs = inner_part.is_zero() ? inner_part : s.transverse_hodge(inner_part);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Lambda^2_3 membership and properties") {
  for (const Form* f : {&l23_a, &l23_b, &l23_c}) {
    CHECK(s.in_lambda23(*f));
    for (int r = 1; r <= 3; ++r) CHECK(wedge(*f, s.omega(r)).is_zero());
    CHECK(hodge(*f) == -wedge(*f, s.alpha()));
    for (int r = 1; r <= 3; ++r) CHECK(s.j_2form(r, *f) == *f);
  }
  CHECK(!s.in_lambda23(s.omega(1)));
  CHECK(!s.in_lambda23(Form::monomial({1, 5})));
}

TEST_CASE("iota_1 example and round trip") {
  SymTensor h = sym({{{1, 3, 1}}, {{2, 4, 1}}});
  // Sigma_1 membership via the J-eigenvalue oracle
  CHECK(s.j_sym(1, h) == h);
  CHECK(s.j_sym(2, h) == -h);
  CHECK(s.j_sym(3, h) == -h);
  CHECK(s.in_sigma(1, h));

  Form i1 = s.iota(1, h);
  CHECK(i1 == Form::monomial({1, 4}) - Form::monomial({2, 3}));
  CHECK(s.in_lambda23(i1));
  CHECK(s.iota_inverse(1, i1) == h);
}

TEST_CASE("iota_r round trips on bases of each Sigma_r") {
  // Spanning sets generated through iota_r^{-1} of the Lambda^2_3 basis.
  for (int r = 1; r <= 3; ++r) {
    for (const Form* f : {&l23_a, &l23_b, &l23_c}) {
      SymTensor h = s.iota_inverse(r, *f);
      CHECK(s.in_sigma(r, h));
      CHECK(s.iota(r, h) == *f);
      CHECK(h.transverse_trace().is_zero());
    }
  }
  Form z(2);
  SymTensor hz;
  CHECK(s.iota(2, hz).is_zero());
}

TEST_CASE("iota rejects inputs outside the stated subspaces") {
  SymTensor not_sigma1 = sym({{{1, 1, 1}}});
  CHECK_THROWS_AS(s.iota(1, not_sigma1), std::invalid_argument);
  CHECK_THROWS_AS(s.iota_inverse(1, s.omega(2)), std::invalid_argument);
  SymTensor mixed = sym({{{1, 3, 1}}, {{2, 4, 1}}, {{1, 5, 1}}});
  CHECK_THROWS_AS(s.iota(1, mixed), std::invalid_argument);
}

TEST_CASE("sym_decompose on the canonical pieces") {
  auto d1 = s.sym_decompose(s.g_transverse());
  CHECK(d1.c_t == Rational(1));
  CHECK(d1.c_alpha.is_zero());
  CHECK(d1.beta.is_zero());
  for (auto& h : d1.sigma) CHECK(h.is_zero());

  auto d2 = s.sym_decompose(s.alpha_tensor_alpha());
  CHECK(d2.c_alpha == Rational(1));
  CHECK(d2.c_t.is_zero());

  SymTensor h = sym({{{1, 3, 1}}, {{2, 4, 1}}});
  auto d3 = s.sym_decompose(h);
  CHECK(d3.sigma[0] == h);
  CHECK(d3.c_t.is_zero());
  CHECK(d3.sigma[1].is_zero());
  CHECK(d3.sigma[2].is_zero());
}

TEST_CASE("sym_decompose reassembles exactly with orthogonal components") {
  // A generic symmetric tensor.
  SymTensor h;
  int v = 1;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) h.set(i, j, Rational(v++, 3));

  auto d = s.sym_decompose(h);
  SymTensor back = d.c_t * s.g_transverse() + d.c_alpha * s.alpha_tensor_alpha();
  for (auto& part : d.sigma) back += part;
  back += sym_product(d.beta, s.alpha());
  // sym_product(beta, alpha) has entries beta_i on the (i,5) slots
  CHECK(back == h);

  for (int r = 1; r <= 3; ++r) CHECK(s.in_sigma(r, d.sigma[r - 1]));

  // pairwise trace-orthogonality
  auto dot = [](const SymTensor& a, const SymTensor& b) {
    Rational t(0);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) t += a.at(i, j) * b.at(i, j);
    return t;
  };
  std::vector<SymTensor> parts{d.c_t * s.g_transverse(), d.c_alpha * s.alpha_tensor_alpha(),
                               d.sigma[0], d.sigma[1], d.sigma[2],
                               sym_product(d.beta, s.alpha())};
  for (size_t a = 0; a < parts.size(); ++a)
    for (size_t b = a + 1; b < parts.size(); ++b) CHECK(dot(parts[a], parts[b]).is_zero());
}

TEST_CASE("musical isomorphisms") {
  TangentVector v = TangentVector::basis(2) - TangentVector::basis(5);
  CHECK(sharp(flat(v)) == v);
  CHECK(flat(TangentVector::basis(3)) == Form::basis(3));
}
