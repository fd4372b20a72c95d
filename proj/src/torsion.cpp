#include "torsion.hpp"

#include <stdexcept>

namespace su2curv {

TorsionForms extract_torsion(const Coframe5& cf) {
  if (auto fail = cf.validate_jacobi())
    throw std::invalid_argument("extract_torsion: Jacobi fails at dw^" +
                                std::to_string(fail->index));
  const Su2& s = Su2::standard();
  TorsionForms t;

  Form da = cf.d(s.alpha());
  t.nu[3] = interior(5, da);
  Form dat = transverse(da);
  for (int i = 1; i <= 3; ++i) t.phi[i - 1] = Rational(1, 2) * inner(dat, s.omega(i));
  t.sigma[3] = s.project_E(da);

  for (int r = 1; r <= 3; ++r) {
    Form dw = cf.d(s.omega(r));
    Form idw = interior(5, dw);
    for (int j = 1; j <= 3; ++j) t.f[r - 1][j - 1] = Rational(1, 2) * inner(idw, s.omega(j));
    t.sigma[r - 1] = s.project_E(idw);
    // nu_r from (d omega_r)^T = nu_r ^ omega_r, a 4x4 system.
    Form rhs3 = transverse(dw);
    Mat m(4, 4);
    std::vector<Rational> rhs(4);
    auto t3 = monomials_of_degree(3);
    std::vector<Mono> tm;
    for (Mono mo : t3)
      if (!(mo & (1u << 4))) tm.push_back(mo);
    for (int row = 0; row < 4; ++row) {
      for (int col = 1; col <= 4; ++col)
        m(row, col - 1) = wedge(Form::basis(col), s.omega(r)).coeff(tm[row]);
      rhs[row] = rhs3.coeff(tm[row]);
    }
    auto sol = solve(m, rhs);
    if (!sol) throw std::logic_error("extract_torsion: nu_r system not solvable");
    Form nu(1);
    for (int col = 1; col <= 4; ++col) nu.add(Mono(1u << (col - 1)), (*sol)[col - 1]);
    t.nu[r - 1] = nu;
  }

  // Exact reassembly is the correctness oracle for the splitting.
  Form da_back = wedge(s.alpha(), t.nu[3]) + t.sigma[3];
  for (int i = 1; i <= 3; ++i) da_back += t.phi[i - 1] * s.omega(i);
  if (!(da_back == da)) throw std::logic_error("extract_torsion: d(alpha) reassembly failed");
  for (int r = 1; r <= 3; ++r) {
    Form back = wedge(t.nu[r - 1], s.omega(r)) + wedge(s.alpha(), t.sigma[r - 1]);
    for (int j = 1; j <= 3; ++j) back += t.f[r - 1][j - 1] * wedge(s.alpha(), s.omega(j));
    if (!(back == cf.d(s.omega(r))))
      throw std::logic_error("extract_torsion: d(omega_" + std::to_string(r) +
                             ") reassembly failed");
  }
  for (int i = 0; i < 4; ++i) {
    if (!(transverse(t.nu[i]) == t.nu[i]))
      throw std::logic_error("extract_torsion: nu component not transverse");
    if (!s.in_lambda23(t.sigma[i]) && !t.sigma[i].is_zero())
      throw std::logic_error("extract_torsion: sigma component not in Lambda^2_3");
  }
  return t;
}

bool verify_d2_constraints(const TorsionForms& t) {
  if (!(t.f_(1, 1) == t.f_(2, 2)) || !(t.f_(2, 2) == t.f_(3, 3))) return false;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      if (!(t.f_(i, j) == -t.f_(j, i))) return false;
  return true;
}

ClassificationReport classify(const TorsionForms& t) {
  ClassificationReport c;
  const Rational zero(0);
  auto f1_zero = t.f_(1, 1) == zero && t.f_(1, 2) == zero && t.f_(1, 3) == zero;
  auto all_nu_zero =
      t.nu[0].is_zero() && t.nu[1].is_zero() && t.nu[2].is_zero() && t.nu[3].is_zero();

  c.hypo = t.nu[0].is_zero() && f1_zero && t.sigma[0].is_zero() && t.nu[1] == t.nu[2] &&
           t.nu[2] == t.nu[3] && t.phi_(2) == zero && t.phi_(3) == zero;

  c.contact_hypo = all_nu_zero && f1_zero && t.sigma[0].is_zero() && t.sigma[3].is_zero() &&
                   t.phi_(1) == Rational(-2) && t.phi_(2) == zero && t.phi_(3) == zero;

  c.nearly_hypo = t.phi_(1) == Rational(-2) && t.phi_(3) == zero && t.sigma[1].is_zero() &&
                  t.nu[3] == t.nu[2] && t.nu[2] == t.nu[0] && t.nu[1].is_zero() &&
                  t.f_(2, 3) == Rational(3) && t.f_(1, 2) == zero && t.f_(1, 1) == zero;

  c.double_hypo = c.hypo && c.nearly_hypo;

  c.sasaki_einstein = t.phi_(1) == Rational(-2) && t.f_(2, 3) == Rational(3) &&
                      t.phi_(2) == zero && t.phi_(3) == zero && f1_zero && all_nu_zero &&
                      t.sigma[0].is_zero() && t.sigma[1].is_zero() && t.sigma[2].is_zero() &&
                      t.sigma[3].is_zero();

  c.half_flat_cone = c.contact_hypo && t.f_(2, 3) == Rational(3) && t.sigma[2].is_zero();

  // Cone Kaehler: contact form plus a closed (3,0)-form on the cone, which in
  // the invariant setting means sigma_2 = sigma_3 = 0 on top of contact-Hypo.
  c.kahler_cone = c.contact_hypo && t.sigma[1].is_zero() && t.sigma[2].is_zero();

  return c;
}

StructureQuadruple double_hypo_forms(const StructureQuadruple& q) {
  return StructureQuadruple{q.alpha, q.omega1, -q.omega3, q.omega2};
}

Coframe5 double_hypo_coframe(const Coframe5& cf) {
  // what^1 = -w^2, what^2 = w^1 puts (alpha, omega_1, -omega_3, omega_2) in
  // standard form; the matrix is orthogonal and orientation-preserving.
  Mat a(kDim, kDim);
  a(0, 1) = Rational(-1);
  a(1, 0) = Rational(1);
  a(2, 2) = a(3, 3) = a(4, 4) = Rational(1);
  return change_coframe(cf, a, cf.name() + "~");
}

}  // namespace su2curv
