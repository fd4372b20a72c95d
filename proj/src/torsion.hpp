#pragma once

#include <array>

#include "coframe.hpp"
#include "su2.hpp"

namespace su2curv {

// Components of d(alpha) and d(omega_r) under the SU(2)-module splitting:
//   d omega_r = nu_r ^ omega_r + sum_j f_rj alpha ^ omega_j + alpha ^ sigma_r
//   d alpha   = alpha ^ nu_4 + sum_i phi_i omega_i + sigma_4
struct TorsionForms {
  std::array<Form, 4> nu{Form(1), Form(1), Form(1), Form(1)};        // transverse
  std::array<Form, 4> sigma{Form(2), Form(2), Form(2), Form(2)};     // in Lambda^2_3
  std::array<Rational, 3> phi{};
  std::array<std::array<Rational, 3>, 3> f{};  // f[r-1][j-1]

  const Form& nu_(int i) const { return nu.at(i - 1); }
  const Form& sigma_(int i) const { return sigma.at(i - 1); }
  const Rational& phi_(int i) const { return phi.at(i - 1); }
  const Rational& f_(int r, int j) const { return f.at(r - 1).at(j - 1); }
};

struct ClassificationReport {
  bool hypo = false;
  bool contact_hypo = false;
  bool nearly_hypo = false;
  bool double_hypo = false;
  bool sasaki_einstein = false;
  bool half_flat_cone = false;
  bool kahler_cone = false;
};

// Splits d of the structure forms. Requires the coframe to satisfy Jacobi;
// the exact reassembly of d(alpha), d(omega_r) from the components is checked
// and a failure throws (it cannot happen for a valid structure).
TorsionForms extract_torsion(const Coframe5& cf);

// f_11 = f_22 = f_33 and f_ij = -f_ji for i != j.
bool verify_d2_constraints(const TorsionForms& t);

ClassificationReport classify(const TorsionForms& t);

struct StructureQuadruple {
  Form alpha, omega1, omega2, omega3;
};

// (alpha, omega_1, -omega_3, omega_2): the second structure induced by a
// symplectic half-flat cone; it has the same metric.
StructureQuadruple double_hypo_forms(const StructureQuadruple& q);

// The same transform at the coframe level: rewrites the structure equations
// in the coframe adapted to the transformed quadruple (an orthogonal
// relabeling, so the metric tensor is unchanged).
Coframe5 double_hypo_coframe(const Coframe5& cf);

}  // namespace su2curv
