#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "coframe.hpp"
#include "su2.hpp"
#include "torsion.hpp"

namespace su2curv {

// 5x5 matrix of forms, 1-based; slot 0 unused.
using FormMat = std::array<std::array<Form, kDim + 1>, kDim + 1>;

FormMat wedge_mm(const FormMat& a, const FormMat& b);
FormMat add_mm(FormMat a, const FormMat& b);
FormMat sub_mm(FormMat a, const FormMat& b);
bool equal_mm(const FormMat& a, const FormMat& b);
FormMat d_mm(const Coframe5& cf, const FormMat& a);

// [[v]]_ij = eta_ijk v_k for a 4-vector of forms (degree-agnostic).
FormMat eta_embed(const std::array<Form, kDim + 1>& v);
// [t]_r : entries t * eps^r_ij.
FormMat eps_embed(const Form& t, int r);

// Levi-Civita data in the orthonormal adapted frame.
// gamma[i][j][k] = <nabla_{e_i} e_j, e_k>; psi_ij(e_k) = gamma[k][j][i].
struct Connection {
  Rational gamma[kDim + 1][kDim + 1][kDim + 1];
  FormMat psi;
};

// Koszul formula; throws if the first structure equation dw = -psi ^ w or
// skew-symmetry fails (cannot happen for a valid bracket).
Connection levi_civita(const StructureConstants& sc, const Coframe5& cf);

struct CurvatureOracle {
  // riem[i][j][k][l] = <R(e_i,e_j)e_k, e_l> with
  // R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
  Rational riem[kDim + 1][kDim + 1][kDim + 1][kDim + 1];
  SymTensor ric;
  Rational s;
  bool first_bianchi_ok = false;
  bool pair_symmetry_ok = false;
};

CurvatureOracle curvature_oracle(const Connection& conn, const StructureConstants& sc);

// Curvature 2-form Psi_ij = d psi_ij + psi_ik ^ psi_kj.
FormMat psi_curvature(const Connection& conn, const Coframe5& cf);

// psi = theta + [[tau]] + [mu_1]_1 + [mu_2]_2 + [mu_3]_3.
struct PsiDecomposition {
  FormMat theta;                          // su(2)-valued
  std::array<Form, kDim + 1> tau;         // tau[1..4]; tau[5] identically 0
  std::array<Form, 4> mu;                 // mu[1..3]
  Rational T[kDim + 1][kDim + 1];         // tau_i = T[i][j] w^j
  Rational M[4][kDim + 1];                // mu_r = M[r][j] w^j
};

PsiDecomposition psi_decompose(const Connection& conn);

// Dtheta, Dtau, Dmu_r with their quadratic corrections, plus the extracted
// coefficients S_ijkl, T_ijk, N^r_kl. Construction verifies that Dtheta is
// su(2)-valued and that Psi and the Riemann coefficients reassemble exactly.
struct DQuantities {
  FormMat dtheta;
  std::array<Form, kDim + 1> dtau;
  std::array<Form, 4> dmu;
  Rational S[kDim + 1][kDim + 1][kDim + 1][kDim + 1];
  Rational Td[kDim + 1][kDim + 1][kDim + 1];
  Rational N[4][kDim + 1][kDim + 1];
};

DQuantities d_quantities(const PsiDecomposition& dec, const Connection& conn,
                         const Coframe5& cf);

// Ricci from the N and T coefficients alone; the S_ijkl never enter.
std::pair<SymTensor, Rational> ricci_from_frame(const DQuantities& dq);

// Fixed convention choices, each pinned by a calibration instance whose
// oracle agreement breaks under the alternative.
struct Conventions {
  bool flip_codifferential_sign = false;  // delta = (-1)^k * d * on k-forms
  bool halve_sym_product = false;         // a (.) b = a(x)b + b(x)a
  bool double_phi1_cross_term = false;    // nu_2 ^ J_1 nu_3 enters once
};

// Codifferential d* = (-1)^k * d * on k-forms in dimension 5.
Form codifferential(const Coframe5& cf, const Form& a,
                    const Conventions& cv = {});

Rational scalar_from_torsion(const TorsionForms& t, const Coframe5& cf,
                             const Conventions& cv = {});

// (lambda, mu) of Ric = (lambda/4) g^T + mu alpha (x) alpha + Ric_0.
std::pair<Rational, Rational> lambda_mu_from_torsion(const TorsionForms& t, const Coframe5& cf,
                                                     const Conventions& cv = {});

struct PhiForms {
  std::array<Form, 3> phi;  // 2-forms feeding E then iota_r^{-1}
  Form phi4;                // transverse 1-form
};

PhiForms phi_from_torsion(const TorsionForms& t, const Coframe5& cf,
                          const Conventions& cv = {});

SymTensor ricci0_from_torsion(const TorsionForms& t, const Coframe5& cf,
                              const Conventions& cv = {});

// Specialized contact-Hypo traceless Ricci; requires classify(t).contact_hypo.
SymTensor contact_hypo_ricci0(const TorsionForms& t, const Coframe5& cf,
                              const Conventions& cv = {});

// The pullback formulas relating (T_ij, M^r_i) to the torsion forms.
struct PullbackCheck {
  bool ok = true;
  std::vector<std::string> failures;  // "name: lhs != rhs"
};

PullbackCheck pullback_torsion_check(const PsiDecomposition& dec, const TorsionForms& t);

struct RicciReport {
  SymTensor ric_oracle;
  Rational s_oracle;
  SymTensor ric_frame;     // from (T, N) coefficients
  Rational s_frame;
  Rational s_torsion;      // torsion-form scalar curvature formula
  Rational lambda, mu;
  std::array<Form, 3> phi; // Phi_1..Phi_3
  Form phi4;
  SymTensor ric0;
  SymTensor ric_assembled; // (lambda/4) g^T + mu alpha(x)alpha + Ric_0
};

RicciReport curvature_report(const Coframe5& cf, const Conventions& cv = {});

}  // namespace su2curv
