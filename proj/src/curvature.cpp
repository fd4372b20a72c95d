#include "curvature.hpp"

#include <sstream>
#include <stdexcept>

namespace su2curv {

namespace {

Form zero1() { return Form(1); }

const Su2& su2() { return Su2::standard(); }

}  // namespace

FormMat wedge_mm(const FormMat& a, const FormMat& b) {
  FormMat out;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Form s(0);
      for (int k = 1; k <= kDim; ++k) s += wedge(a[i][k], b[k][j]);
      out[i][j] = s;
    }
  return out;
}

FormMat add_mm(FormMat a, const FormMat& b) {
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) a[i][j] += b[i][j];
  return a;
}

FormMat sub_mm(FormMat a, const FormMat& b) {
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) a[i][j] -= b[i][j];
  return a;
}

bool equal_mm(const FormMat& a, const FormMat& b) {
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

FormMat d_mm(const Coframe5& cf, const FormMat& a) {
  FormMat out;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) out[i][j] = cf.d(a[i][j]);
  return out;
}

FormMat eta_embed(const std::array<Form, kDim + 1>& v) {
  FormMat out;
  for (int i = 1; i <= 4; ++i) {
    out[i][5] = v[i];
    out[5][i] = -v[i];
  }
  return out;
}

FormMat eps_embed(const Form& t, int r) {
  FormMat out;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      int e = epsilon(r, i, j);
      if (e == 1) out[i][j] = t;
      else if (e == -1) out[i][j] = -t;
    }
  return out;
}

Connection levi_civita(const StructureConstants& sc, const Coframe5& cf) {
  Connection conn;
  // c_ijk = <[e_i,e_j], e_k>; Koszul for an orthonormal left-invariant frame.
  auto c = [&sc](int i, int j, int k) { return sc.c[k][i][j]; };
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        conn.gamma[i][j][k] = Rational(1, 2) * (c(i, j, k) - c(j, k, i) + c(k, i, j));

  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Form p(1);
      for (int k = 1; k <= kDim; ++k) p.add(Mono(1u << (k - 1)), conn.gamma[k][j][i]);
      conn.psi[i][j] = p;
    }

  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      if (!(conn.psi[i][j] == -conn.psi[j][i]))
        throw std::logic_error("levi_civita: psi not skew-symmetric");
  for (int i = 1; i <= kDim; ++i) {
    Form lhs = cf.d_basis(i);
    for (int j = 1; j <= kDim; ++j) lhs += wedge(conn.psi[i][j], Form::basis(j));
    if (!lhs.is_zero())
      throw std::logic_error("levi_civita: first structure equation fails at i=" +
                             std::to_string(i));
  }
  return conn;
}

CurvatureOracle curvature_oracle(const Connection& conn, const StructureConstants& sc) {
  CurvatureOracle o;
  // nabla_{e_i} e_j as vectors
  TangentVector nabla[kDim + 1][kDim + 1];
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) nabla[i][j][k] = conn.gamma[i][j][k];

  auto nabla_vec = [&](int i, const TangentVector& v) {
    TangentVector out;
    for (int j = 1; j <= kDim; ++j)
      if (!v[j].is_zero()) out += v[j] * nabla[i][j];
    return out;
  };

  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        TangentVector r = nabla_vec(i, nabla[j][k]) - nabla_vec(j, nabla[i][k]);
        TangentVector br = sc.bracket(TangentVector::basis(i), TangentVector::basis(j));
        for (int m = 1; m <= kDim; ++m)
          if (!br[m].is_zero()) r -= br[m] * nabla[m][k];
        for (int l = 1; l <= kDim; ++l) o.riem[i][j][k][l] = r[l];
      }

  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) {
      Rational s(0);
      for (int k = 1; k <= kDim; ++k) s += o.riem[k][i][j][k];
      o.ric.set(i, j, s);
      // Symmetry of the sum in (i,j) is checked below via pair symmetry.
    }
  o.s = o.ric.trace();

  o.first_bianchi_ok = true;
  for (int i = 1; i <= kDim && o.first_bianchi_ok; ++i)
    for (int j = 1; j <= kDim && o.first_bianchi_ok; ++j)
      for (int k = 1; k <= kDim && o.first_bianchi_ok; ++k)
        for (int l = 1; l <= kDim; ++l) {
          Rational b = o.riem[i][j][k][l] + o.riem[j][k][i][l] + o.riem[k][i][j][l];
          if (!b.is_zero()) { o.first_bianchi_ok = false; break; }
        }
  o.pair_symmetry_ok = true;
  for (int i = 1; i <= kDim && o.pair_symmetry_ok; ++i)
    for (int j = 1; j <= kDim && o.pair_symmetry_ok; ++j)
      for (int k = 1; k <= kDim && o.pair_symmetry_ok; ++k)
        for (int l = 1; l <= kDim; ++l) {
          if (!(o.riem[i][j][k][l] == o.riem[k][l][i][j])) { o.pair_symmetry_ok = false; break; }
        }
  return o;
}

FormMat psi_curvature(const Connection& conn, const Coframe5& cf) {
  return add_mm(d_mm(cf, conn.psi), wedge_mm(conn.psi, conn.psi));
}

PsiDecomposition psi_decompose(const Connection& conn) {
  PsiDecomposition dec;
  for (auto& t : dec.tau) t = zero1();
  for (auto& m : dec.mu) m = zero1();

  for (int i = 1; i <= 4; ++i) dec.tau[i] = conn.psi[i][5];
  for (int r = 1; r <= 3; ++r) {
    Form m(1);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        int e = epsilon(r, i, j);
        if (e) m += Rational(e, 4) * conn.psi[i][j];
      }
    dec.mu[r] = m;
  }
  FormMat rest = conn.psi;
  rest = sub_mm(rest, eta_embed(dec.tau));
  for (int r = 1; r <= 3; ++r) rest = sub_mm(rest, eps_embed(dec.mu[r], r));
  dec.theta = rest;

  // theta must be su(2)-valued and the splitting must reassemble psi.
  for (int i = 1; i <= kDim; ++i)
    if (!dec.theta[i][5].is_zero() || !dec.theta[5][i].is_zero())
      throw std::logic_error("psi_decompose: theta has a fifth row/column");
  for (int r = 1; r <= 3; ++r) {
    Form contraction(1);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        int e = epsilon(r, i, j);
        if (e) contraction += Rational(e) * dec.theta[i][j];
      }
    if (!contraction.is_zero())
      throw std::logic_error("psi_decompose: eps contraction of theta nonzero");
  }
  FormMat back = add_mm(dec.theta, eta_embed(dec.tau));
  for (int r = 1; r <= 3; ++r) back = add_mm(back, eps_embed(dec.mu[r], r));
  if (!equal_mm(back, conn.psi)) throw std::logic_error("psi_decompose: reassembly failed");

  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= kDim; ++j) dec.T[i][j] = dec.tau[i].coeff(Mono(1u << (j - 1)));
  for (int r = 1; r <= 3; ++r)
    for (int j = 1; j <= kDim; ++j) dec.M[r][j] = dec.mu[r].coeff(Mono(1u << (j - 1)));
  return dec;
}

DQuantities d_quantities(const PsiDecomposition& dec, const Connection& conn,
                         const Coframe5& cf) {
  DQuantities dq;
  const FormMat bb_tau = eta_embed(dec.tau);

  // Dtheta = d theta + theta^theta + [[tau]]^[[tau]] + 1/4 sum_r [eps^r_pq tau_p ^ tau_q]_r
  FormMat dtheta = add_mm(d_mm(cf, dec.theta), wedge_mm(dec.theta, dec.theta));
  dtheta = add_mm(dtheta, wedge_mm(bb_tau, bb_tau));
  for (int r = 1; r <= 3; ++r) {
    Form q(2);
    for (int p = 1; p <= 4; ++p)
      for (int s = 1; s <= 4; ++s) {
        int e = epsilon(r, p, s);
        if (e) q += Rational(e) * wedge(dec.tau[p], dec.tau[s]);
      }
    dtheta = add_mm(dtheta, eps_embed(Rational(1, 4) * q, r));
  }
  dq.dtheta = dtheta;

  // Dtau_i = d tau_i + theta_ik ^ tau_k + sum_r eps^r_ik mu_r ^ tau_k
  for (int i = 0; i <= kDim; ++i) dq.dtau[i] = Form(2);
  for (int i = 1; i <= 4; ++i) {
    Form s = cf.d(dec.tau[i]);
    for (int k = 1; k <= 4; ++k) {
      s += wedge(dec.theta[i][k], dec.tau[k]);
      for (int r = 1; r <= 3; ++r) {
        int e = epsilon(r, i, k);
        if (e) s += Rational(e) * wedge(dec.mu[r], dec.tau[k]);
      }
    }
    dq.dtau[i] = s;
  }

  // Dmu_r = d mu_r - 1/4 eps^r_ij tau_i ^ tau_j - 2 mu_{r+1} ^ mu_{r+2} (cyclic)
  for (int r = 1; r <= 3; ++r) {
    int r2 = r % 3 + 1, r3 = r2 % 3 + 1;
    Form s = cf.d(dec.mu[r]);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        int e = epsilon(r, i, j);
        if (e) s -= Rational(e, 4) * wedge(dec.tau[i], dec.tau[j]);
      }
    s -= 2 * wedge(dec.mu[r2], dec.mu[r3]);
    dq.dmu[r] = s;
  }

  // Dtheta takes values in su(2).
  for (int i = 1; i <= kDim; ++i)
    if (!dq.dtheta[i][5].is_zero() || !dq.dtheta[5][i].is_zero())
      throw std::logic_error("d_quantities: Dtheta has a fifth row/column");
  for (int r = 1; r <= 3; ++r) {
    Form contraction(2);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        int e = epsilon(r, i, j);
        if (e) contraction += Rational(e) * dq.dtheta[i][j];
      }
    if (!contraction.is_zero())
      throw std::logic_error("d_quantities: eps contraction of Dtheta nonzero");
  }

  // Psi = Dtheta + [[Dtau]] + sum_r [Dmu_r]_r, exactly.
  FormMat back = add_mm(dq.dtheta, eta_embed(dq.dtau));
  for (int r = 1; r <= 3; ++r) back = add_mm(back, eps_embed(dq.dmu[r], r));
  if (!equal_mm(back, psi_curvature(conn, cf)))
    throw std::logic_error("d_quantities: curvature reassembly failed");

  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        for (int l = 1; l <= kDim; ++l) dq.S[i][j][k][l] = eval_on_basis(dq.dtheta[i][j], {k, l});
        dq.Td[i][j][k] = (i <= 4) ? eval_on_basis(dq.dtau[i], {j, k}) : Rational(0);
      }
    }
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= kDim; ++k)
      for (int l = 1; l <= kDim; ++l) dq.N[r][k][l] = eval_on_basis(dq.dmu[r], {k, l});
  return dq;
}

std::pair<SymTensor, Rational> ricci_from_frame(const DQuantities& dq) {
  Rational full[kDim + 1][kDim + 1];
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Rational v(0);
      for (int r = 1; r <= 3; ++r) {
        for (int k = 1; k <= 4; ++k) {
          if (int e = epsilon(r, i, k); e) v += Rational(e) * dq.N[r][j][k];
          if (int e = epsilon(r, j, k); e) v += Rational(e) * dq.N[r][i][k];
        }
        for (int l = 1; l <= 4; ++l) {
          if (int h = eta(i, j, l); h)
            for (int k = 1; k <= 4; ++k)
              if (int e = epsilon(r, l, k); e) v -= Rational(h * e) * dq.N[r][k][5];
        }
      }
      if (i == 5 && j == 5)
        for (int k = 1; k <= 4; ++k) v += dq.Td[k][k][5];
      if (i <= 4) v += dq.Td[i][j][5];
      full[i][j] = v;
    }
  SymTensor ric;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) {
      if (!(full[i][j] == full[j][i]))
        throw std::logic_error("ricci_from_frame: formula output not symmetric");
      ric.set(i, j, full[i][j]);
    }
  Rational s(0);
  for (int r = 1; r <= 3; ++r)
    for (int i = 1; i <= 4; ++i)
      for (int k = 1; k <= 4; ++k)
        if (int e = epsilon(r, i, k); e) s += Rational(2 * e) * dq.N[r][i][k];
  for (int k = 1; k <= 4; ++k) s += 2 * dq.Td[k][k][5];
  if (!(s == ric.trace()))
    throw std::logic_error("ricci_from_frame: scalar formula disagrees with trace");
  return {ric, s};
}

Form codifferential(const Coframe5& cf, const Form& a, const Conventions& cv) {
  int k = a.degree();
  int sign = (k % 2 == 0) ? 1 : -1;
  if (cv.flip_codifferential_sign) sign = -sign;
  return Rational(sign) * hodge(cf.d(hodge(a)));
}

namespace {

Rational norm2(const Form& a) { return inner(a, a); }

Rational codiff_scalar(const Coframe5& cf, const Form& a, const Conventions& cv) {
  return codifferential(cf, a, cv).scalar_value();
}

// -2 * (d f11 ^ omega_1^2) and friends vanish on invariant structures but are
// evaluated anyway so the transcription is complete.
Rational star_df_omega2(const Coframe5& cf, const Rational& f) {
  Form df = cf.d(Form::scalar(f));
  Form w2 = wedge(su2().omega(1), su2().omega(1));
  return hodge(wedge(df, w2)).scalar_value();
}

}  // namespace

Rational scalar_from_torsion(const TorsionForms& t, const Coframe5& cf, const Conventions& cv) {
  const Rational f11 = t.f_(1, 1);
  Rational s = Rational(-5) * f11 * f11;
  for (int i = 1; i <= 3; ++i) s -= t.phi_(i) * t.phi_(i);
  s -= 4 * t.phi_(1) * t.f_(2, 3);
  s += 4 * t.phi_(2) * t.f_(1, 3);
  s -= 4 * t.phi_(3) * t.f_(1, 2);
  for (int i = 0; i < 3; ++i) s += codiff_scalar(cf, t.nu[i], cv);
  s -= 2 * codiff_scalar(cf, t.nu[3], cv);
  for (int i = 0; i < 3; ++i) s -= Rational(1, 2) * norm2(t.nu[i]);
  s += inner(t.nu[0], t.nu[1]) + inner(t.nu[0], t.nu[2]) - inner(t.nu[0], t.nu[3]) +
       inner(t.nu[1], t.nu[2]) - inner(t.nu[1], t.nu[3]) - inner(t.nu[2], t.nu[3]);
  s -= 2 * star_df_omega2(cf, f11);
  for (int i = 0; i < 4; ++i) s -= Rational(1, 2) * norm2(t.sigma[i]);
  return s;
}

std::pair<Rational, Rational> lambda_mu_from_torsion(const TorsionForms& t, const Coframe5& cf,
                                                     const Conventions& cv) {
  const Rational f11 = t.f_(1, 1);
  Rational lambda = Rational(-4) * f11 * f11;
  for (int i = 1; i <= 3; ++i) lambda -= 2 * t.phi_(i) * t.phi_(i);
  lambda -= 4 * t.phi_(1) * t.f_(2, 3);
  lambda += 4 * t.phi_(2) * t.f_(1, 3);
  lambda -= 4 * t.phi_(3) * t.f_(1, 2);
  for (int i = 0; i < 3; ++i) lambda += codiff_scalar(cf, t.nu[i], cv);
  lambda -= codiff_scalar(cf, t.nu[3], cv);
  for (int i = 0; i < 3; ++i) lambda -= Rational(1, 2) * norm2(t.nu[i]);
  lambda += inner(t.nu[0], t.nu[1]) + inner(t.nu[0], t.nu[2]) - inner(t.nu[0], t.nu[3]) +
            inner(t.nu[1], t.nu[2]) - inner(t.nu[1], t.nu[3]) - inner(t.nu[2], t.nu[3]);
  lambda -= norm2(t.sigma[3]);
  lambda -= star_df_omega2(cf, f11);

  Rational mu = -f11 * f11;
  for (int i = 1; i <= 3; ++i) mu += t.phi_(i) * t.phi_(i);
  mu -= codiff_scalar(cf, t.nu[3], cv);
  for (int i = 0; i < 3; ++i) mu -= Rational(1, 2) * norm2(t.sigma[i]);
  mu += Rational(1, 2) * norm2(t.sigma[3]);
  mu -= star_df_omega2(cf, f11);
  return {lambda, mu};
}

PhiForms phi_from_torsion(const TorsionForms& t, const Coframe5& cf, const Conventions& cv) {
  const Su2& s = su2();
  auto J = [&](int r, const Form& a) { return s.j_form(r, a); };
  auto dJ = [&](int r, const Form& a) { return cf.d(s.j_form(r, a)); };
  auto iR = [](const Form& a) { return interior(5, a); };
  const Form &n1 = t.nu[0], &n2 = t.nu[1], &n3 = t.nu[2], &n4 = t.nu[3];
  const Form &s1 = t.sigma[0], &s2 = t.sigma[1], &s3 = t.sigma[2], &s4 = t.sigma[3];
  const Rational half(1, 2), quarter(1, 4);

  PhiForms out;

  Form p1 = -half * t.f_(1, 1) * s1 + half * t.f_(1, 2) * s2 + half * t.f_(1, 3) * s3 -
            t.f_(2, 3) * s4 + t.phi_(3) * s2 - t.phi_(2) * s3 - t.phi_(1) * s4;
  p1 -= quarter * wedge(n1, J(1, n1));
  p1 += half * wedge(n1, J(1, n4));
  p1 += quarter * wedge(n2, J(1, n2));
  p1 += quarter * wedge(n3, J(1, n3));
  p1 += half * wedge(n4, J(1, n4));
  p1 += (cv.double_phi1_cross_term ? Rational(-1) : -half) * wedge(n2, J(1, n3));
  p1 += half * iR(cf.d(s1));
  p1 -= half * dJ(1, n1);
  p1 += half * dJ(1, n2);
  p1 += half * dJ(1, n3);
  out.phi[0] = p1;

  Form p2 = -half * t.f_(1, 2) * s1 - half * t.f_(1, 1) * s2 + half * t.f_(2, 3) * s3 +
            t.f_(1, 3) * s4 - t.phi_(3) * s1 + t.phi_(1) * s3 - t.phi_(2) * s4;
  p2 += half * hodge(cf.d(s2));
  p2 += half * dJ(2, n1);
  p2 -= half * dJ(2, n2);
  p2 += half * dJ(2, n3);
  p2 -= half * dJ(2, n4);
  p2 += quarter * wedge(n1, J(2, n1));
  p2 -= half * wedge(n1, J(2, n3));
  p2 -= quarter * wedge(n2, J(2, n2));
  p2 += half * wedge(n2, J(2, n4));
  p2 += half * wedge(n4, J(2, n4));
  p2 += quarter * wedge(n3, J(2, n3));
  out.phi[1] = p2;

  Form p3 = -half * (t.f_(1, 3) * s1 + t.f_(2, 3) * s2 + t.f_(1, 1) * s3) + t.phi_(2) * s1 -
            t.phi_(1) * s2 - t.phi_(3) * s4 - t.f_(1, 2) * s4;
  p3 += half * hodge(cf.d(s3));
  p3 += quarter * (wedge(n1, J(3, n1)) + wedge(n2, J(3, n2)) - wedge(n3, J(3, n3)));
  p3 -= half * wedge(n1, J(3, n2));
  p3 += half * wedge(n3, J(3, n4));
  p3 += half * wedge(n4, J(3, n4));
  p3 += half * (dJ(3, n1) + dJ(3, n2) - dJ(3, n3) - dJ(3, n4));
  out.phi[2] = p3;

  const Rational threehalf(3, 2);
  Form df11 = cf.d(Form::scalar(t.f_(1, 1)));
  Form df12 = cf.d(Form::scalar(t.f_(1, 2)));
  Form df13 = cf.d(Form::scalar(t.f_(1, 3)));
  Form df23 = cf.d(Form::scalar(t.f_(2, 3)));

  Form p4 = 3 * transverse(df11);
  p4 -= threehalf * t.f_(1, 1) * n4;
  p4 -= half * transverse(codifferential(cf, s4, cv));
  p4 -= half * J(2, transverse(codifferential(cf, s2, cv)));
  p4 -= half * t.f_(2, 3) * J(1, n4);
  p4 -= half * t.f_(1, 2) * J(3, n4);
  p4 += threehalf * (t.phi_(1) * J(1, n4) + t.phi_(2) * J(2, n4) + t.phi_(3) * J(3, n4));
  p4 -= half * iR(cf.d(n1) + cf.d(n2) + cf.d(n3));
  p4 += iR(cf.d(n4) + hodge(wedge(df12, s.omega(3))) - hodge(wedge(df13, s.omega(2))) +
           hodge(wedge(df23, s.omega(1))) + half * hodge(cf.d(s4)));
  p4 -= J(1, iR(hodge(cf.d(s1))));
  p4 -= threehalf * J(2, iR(hodge(cf.d(s2))));
  p4 -= J(3, iR(hodge(cf.d(s3))));
  p4 += half * J(1, iR(dJ(1, n4)));
  p4 += half * J(3, iR(dJ(3, n4)));
  out.phi4 = p4;
  return out;
}

SymTensor ricci0_from_torsion(const TorsionForms& t, const Coframe5& cf, const Conventions& cv) {
  const Su2& s = su2();
  PhiForms p = phi_from_torsion(t, cf, cv);
  SymTensor ric0;
  for (int r = 1; r <= 3; ++r) {
    Form e = s.project_E(p.phi[r - 1]);
    if (!e.is_zero()) ric0 += s.iota_inverse(r, e);
  }
  SymTensor mixed = sym_product(p.phi4, s.alpha());
  if (cv.halve_sym_product) mixed = Rational(1, 2) * mixed;
  ric0 += mixed;
  return ric0;
}

SymTensor contact_hypo_ricci0(const TorsionForms& t, const Coframe5& cf, const Conventions& cv) {
  if (!classify(t).contact_hypo)
    throw std::invalid_argument("contact_hypo_ricci0: structure is not contact-Hypo");
  const Su2& s = su2();
  const Rational half(1, 2), quarter(1, 4);
  SymTensor ric0;

  auto block = [&](const Form& sig_self, const Form& sig_other, const Rational& coef) {
    // coef * sig_other + 1/2 *^T(i_R d sig_self) - 1/4 sum_r *(i_R d sig_self ^ w_r ^ a) w_r
    Form acc = coef * sig_other;
    Form ir = interior(5, cf.d(sig_self));
    acc += half * s.transverse_hodge(ir);
    for (int r = 1; r <= 3; ++r)
      acc -= quarter * hodge(wedge(wedge(ir, s.omega(r)), s.alpha())).scalar_value() * s.omega(r);
    return acc;
  };

  Form e2 = block(t.sigma[1], t.sigma[2], half * t.f_(2, 3) - 2);
  Form e3 = block(t.sigma[2], t.sigma[1], -half * t.f_(2, 3) + 2);
  if (!e2.is_zero()) ric0 += s.iota_inverse(2, e2);
  if (!e3.is_zero()) ric0 += s.iota_inverse(3, e3);

  Form df23 = cf.d(Form::scalar(t.f_(2, 3)));
  Form phi4 = 3 * s.j_form(1, transverse(df23));
  SymTensor mixed = sym_product(phi4, s.alpha());
  if (cv.halve_sym_product) mixed = Rational(1, 2) * mixed;
  ric0 += mixed;
  return ric0;
}

namespace {

std::string ident_fail(const std::string& name, const std::string& extracted,
                       const std::string& frame) {
  return name + ": extracted=" + extracted + " frame=" + frame;
}

}  // namespace

PullbackCheck pullback_torsion_check(const PsiDecomposition& dec, const TorsionForms& t) {
  PullbackCheck out;
  auto expect_scalar = [&](const std::string& name, const Rational& lhs, const Rational& rhs) {
    if (!(lhs == rhs)) {
      out.ok = false;
      out.failures.push_back(ident_fail(name, lhs.str(), rhs.str()));
    }
  };
  auto expect_form = [&](const std::string& name, const Form& lhs, const Form& rhs) {
    if (!(lhs == rhs)) {
      out.ok = false;
      out.failures.push_back(ident_fail(name, lhs.str(), rhs.str()));
    }
  };

  auto eps_T = [&](int r) {
    Rational v(0);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (int e = epsilon(r, i, j); e) v += Rational(e) * dec.T[i][j];
    return v;
  };

  Rational trT(0);
  for (int i = 1; i <= 4; ++i) trT += dec.T[i][i];

  expect_scalar("f11 = 1/2 T_ii", t.f_(1, 1), Rational(1, 2) * trT);
  expect_scalar("f12 = 1/2 eps3_ij T_ij - 2 M3_5", t.f_(1, 2),
                Rational(1, 2) * eps_T(3) - 2 * dec.M[3][5]);
  expect_scalar("f13 = -1/2 eps2_ij T_ij + 2 M2_5", t.f_(1, 3),
                Rational(-1, 2) * eps_T(2) + 2 * dec.M[2][5]);
  expect_scalar("f23 = 1/2 eps1_ij T_ij - 2 M1_5", t.f_(2, 3),
                Rational(1, 2) * eps_T(1) - 2 * dec.M[1][5]);
  for (int r = 1; r <= 3; ++r)
    expect_scalar("phi" + std::to_string(r) + " = -1/2 eps" + std::to_string(r) + "_ij T_ij",
                  t.phi_(r), Rational(-1, 2) * eps_T(r));

  // nu_1..nu_3 from the transverse mu components, nu_4 from T_i5.
  auto nu_from_m = [&](int ra, int rb) {
    Form nu(1);
    for (int j = 1; j <= 4; ++j) {
      Rational v(0);
      for (int i = 1; i <= 4; ++i) {
        if (int e = epsilon(ra, i, j); e) v += Rational(2 * e) * dec.M[ra][i];
        if (int e = epsilon(rb, i, j); e) v += Rational(2 * e) * dec.M[rb][i];
      }
      nu.add(Mono(1u << (j - 1)), v);
    }
    return nu;
  };
  expect_form("nu1 = 2(eps2 M2 + eps3 M3)", t.nu[0], nu_from_m(2, 3));
  expect_form("nu2 = 2(eps1 M1 + eps3 M3)", t.nu[1], nu_from_m(1, 3));
  expect_form("nu3 = 2(eps1 M1 + eps2 M2)", t.nu[2], nu_from_m(1, 2));
  Form nu4(1);
  for (int i = 1; i <= 4; ++i) nu4.add(Mono(1u << (i - 1)), dec.T[i][5]);
  expect_form("nu4 = T_i5 w^i", t.nu[3], nu4);

  // sigma_r from the symmetrized T block: matrices eps^r S -+ eps^a S eps^b
  // with S = T + T^t, realized as 2-forms via 1/4 A_ij w^i ^ w^j.
  Rational S[5][5];
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) S[i][j] = dec.T[i][j] + dec.T[j][i];
  auto mat_form = [&](auto&& entry) {
    Form f(2);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) f.add(mono_of({i, j}), entry(i, j) - entry(j, i));
    return f;
  };
  auto epsS = [&](int r, int i, int j) {
    Rational v(0);
    for (int p = 1; p <= 4; ++p)
      if (int e = epsilon(r, i, p); e) v += Rational(e) * S[p][j];
    return v;
  };
  auto epsSeps = [&](int ra, int rb, int i, int j) {
    Rational v(0);
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        int ea = epsilon(ra, i, p), eb = epsilon(rb, q, j);
        if (ea && eb) v += Rational(ea * eb) * S[p][q];
      }
    return v;
  };
  const Rational quarter(1, 4);
  Form sig1 = quarter * mat_form([&](int i, int j) { return epsS(1, i, j) + epsSeps(2, 3, i, j); });
  Form sig2 = quarter * mat_form([&](int i, int j) { return epsS(2, i, j) - epsSeps(1, 3, i, j); });
  Form sig3 = quarter * mat_form([&](int i, int j) { return epsS(3, i, j) + epsSeps(1, 2, i, j); });
  expect_form("sigma1 = 1/4(eps1 S + eps2 S eps3)", t.sigma[0], sig1);
  expect_form("sigma2 = 1/4(eps2 S - eps1 S eps3)", t.sigma[1], sig2);
  expect_form("sigma3 = 1/4(eps3 S + eps1 S eps2)", t.sigma[2], sig3);

  // sigma_4: antisymmetric part of T with its omega components removed.
  Form sig4 = mat_form([&](int i, int j) {
    Rational v = dec.T[j][i];
    for (int r = 1; r <= 3; ++r)
      if (int e = epsilon(r, i, j); e) {
        Rational epsT(0);
        for (int p = 1; p <= 4; ++p)
          for (int q = 1; q <= 4; ++q)
            if (int e2 = epsilon(r, p, q); e2) epsT += Rational(e2) * dec.T[p][q];
        v += Rational(e, 4) * epsT;
      }
    return v;
  });
  expect_form("sigma4 = (T_ji + 1/4 eps^r_pq eps^r_ij T_pq) w^i^w^j", t.sigma[3], sig4);

  return out;
}

RicciReport curvature_report(const Coframe5& cf, const Conventions& cv) {
  RicciReport rep;
  StructureConstants sc = structure_constants(cf);
  Connection conn = levi_civita(sc, cf);
  CurvatureOracle oracle = curvature_oracle(conn, sc);
  rep.ric_oracle = oracle.ric;
  rep.s_oracle = oracle.s;

  PsiDecomposition dec = psi_decompose(conn);
  DQuantities dq = d_quantities(dec, conn, cf);
  auto [ric_frame, s_frame] = ricci_from_frame(dq);
  rep.ric_frame = ric_frame;
  rep.s_frame = s_frame;

  TorsionForms t = extract_torsion(cf);
  rep.s_torsion = scalar_from_torsion(t, cf, cv);
  auto [lambda, mu] = lambda_mu_from_torsion(t, cf, cv);
  rep.lambda = lambda;
  rep.mu = mu;

  PhiForms p = phi_from_torsion(t, cf, cv);
  rep.phi = p.phi;
  rep.phi4 = p.phi4;
  rep.ric0 = ricci0_from_torsion(t, cf, cv);

  const Su2& s = su2();
  rep.ric_assembled =
      (Rational(1, 4) * lambda) * s.g_transverse() + mu * s.alpha_tensor_alpha() + rep.ric0;
  return rep;
}

}  // namespace su2curv
