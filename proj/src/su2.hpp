#pragma once

#include <array>
#include <string>

#include "coframe.hpp"
#include "form.hpp"

namespace su2curv {

// omega_r = (1/2) eps^r_ij w^i ^ w^j; indices r in 1..3, i,j in 1..4.
int epsilon(int r, int i, int j);

// eta_ijk = delta_ik delta_j5 - delta_jk delta_i5; i,j in 1..5, k in 1..4.
int eta(int i, int j, int k);

// Symmetric 5x5 tensor with exact entries; houses Ric, g^T, Sigma_r pieces.
class SymTensor {
public:
  SymTensor() = default;

  const Rational& at(int i, int j) const { return a_[i - 1][j - 1]; }  // 1-based
  void set(int i, int j, const Rational& v) { a_[i - 1][j - 1] = a_[j - 1][i - 1] = v; }

  bool is_zero() const;
  Rational trace() const;
  Rational transverse_trace() const;  // sum of the first four diagonal entries

  SymTensor operator-() const;
  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const Rational& c, SymTensor h);
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

  std::string str() const;

private:
  std::array<std::array<Rational, kDim>, kDim> a_{};
};

// Musical isomorphisms; the metric is the identity in the adapted coframe.
Form flat(const TangentVector& v);
TangentVector sharp(const Form& a);

// a (.) b = a (x) b + b (x) a for 1-forms.
SymTensor sym_product(const Form& a, const Form& b);

struct AdaptedCheck {
  bool ok = false;
  std::string diagnostic;  // empty when ok
};

// The adapted-coframe SU(2)-structure: standard model forms and the operator
// algebra built on them (star_r, J_r, transverse Hodge, E, iota_r, the
// symmetric-tensor decomposition). All operator tables are fixed once; the
// geometry of an instance lives entirely in its structure equations.
class Su2 {
public:
  static const Su2& standard();

  const Form& alpha() const { return alpha_; }
  const Form& omega(int r) const { return omega_.at(r - 1); }
  const TangentVector& reeb() const { return reeb_; }
  const Form& vol4() const { return vol4_; }  // omega_1^2 / 2 = w^{1234}
  const Form& vol5() const { return vol5_; }

  // True iff the quadruple is literally the standard model; otherwise the
  // diagnostic names the compatibility condition that fails.
  AdaptedCheck validate_adapted(const Form& alpha, const Form& w1, const Form& w2,
                                const Form& w3) const;

  // star_r on transverse forms of degree 1..3, defined by
  // gamma ^ star_r beta = omega_r(gamma, beta) omega_r^2/2.
  // On 1-forms it is phi |-> phi ^ omega_r; on 3-forms the inverse of that.
  Form star_r(int r, const Form& a) const;

  // *^T gamma = *(alpha ^ gamma) on transverse forms.
  Form transverse_hodge(const Form& a) const;

  Form j_form(int r, const Form& a) const;  // degree-1 forms, J_r alpha = 0
  TangentVector j_vec(int r, const TangentVector& v) const;
  Form j_2form(int r, const Form& s) const;     // s(J_r ., J_r .)
  SymTensor j_sym(int r, const SymTensor& h) const;

  // Projection onto Lambda^2_3: E(phi) = phi^T - sum_r 1/2 *(phi^T^omega_r^alpha) omega_r.
  Form project_E(const Form& a) const;
  bool in_lambda23(const Form& s) const;

  // iota_r(h) = 1/2 eps^r_ik h_kj w^i ^ w^j, an isomorphism Sigma_r -> Lambda^2_3.
  // Inputs outside the stated subspaces are rejected (std::invalid_argument).
  Form iota(int r, const SymTensor& h) const;
  SymTensor iota_inverse(int r, const Form& s) const;

  bool in_sigma(int r, const SymTensor& h) const;

  struct SymDecomposition {
    Rational c_t;       // coefficient of g^T
    Rational c_alpha;   // coefficient of alpha (x) alpha
    std::array<SymTensor, 3> sigma;
    Form beta;          // transverse 1-form; alpha (.) beta part
  };
  SymDecomposition sym_decompose(const SymTensor& h) const;

  SymTensor g_transverse() const;
  SymTensor alpha_tensor_alpha() const;

private:
  Su2();

  Form alpha_;
  std::array<Form, 3> omega_;
  TangentVector reeb_;
  Form vol4_, vol5_;
  // J_r matrices: vector action J(e_j) = sum_i jv[r][i][j] e_i, and the
  // 1-form action J(w^i) = sum_j jf[r][i][j] w^j.
  Rational jv_[3][kDim][kDim];
  Rational jf_[3][kDim][kDim];
};

}  // namespace su2curv
