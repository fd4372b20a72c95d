#include "su2.hpp"

#include <sstream>
#include <stdexcept>

namespace su2curv {

namespace {

// Pairs (r; i,j) with eps^r_ij = +1; all other nonzero entries follow by
// antisymmetry in (i,j).
constexpr int kEpsPlus[3][2][2] = {{{1, 2}, {3, 4}}, {{1, 3}, {4, 2}}, {{1, 4}, {2, 3}}};

}  // namespace

int epsilon(int r, int i, int j) {
  if (r < 1 || r > 3) throw std::out_of_range("epsilon: r out of range");
  if (i < 1 || i > 4 || j < 1 || j > 4) return 0;
  for (auto& p : kEpsPlus[r - 1]) {
    if (p[0] == i && p[1] == j) return 1;
    if (p[0] == j && p[1] == i) return -1;
  }
  return 0;
}

int eta(int i, int j, int k) {
  if (k < 1 || k > 4) return 0;
  return (i == k && j == 5 ? 1 : 0) - (j == k && i == 5 ? 1 : 0);
}

bool SymTensor::is_zero() const {
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

Rational SymTensor::trace() const {
  Rational s(0);
  for (int i = 1; i <= kDim; ++i) s += at(i, i);
  return s;
}

Rational SymTensor::transverse_trace() const {
  Rational s(0);
  for (int i = 1; i <= 4; ++i) s += at(i, i);
  return s;
}

SymTensor SymTensor::operator-() const {
  SymTensor h;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) h.set(i, j, -at(i, j));
  return h;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) set(i, j, at(i, j) + o.at(i, j));
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) { return *this += -o; }

SymTensor operator*(const Rational& c, SymTensor h) {
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) h.set(i, j, c * h.at(i, j));
  return h;
}

std::string SymTensor::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= kDim; ++i) {
    os << (i == 1 ? "[" : " [");
    for (int j = 1; j <= kDim; ++j) os << at(i, j).str() << (j < kDim ? "," : "");
    os << "]" << (i < kDim ? "\n" : "");
  }
  os << "]";
  return os.str();
}

Form flat(const TangentVector& v) {
  Form f(1);
  for (int i = 1; i <= kDim; ++i) f.add(Mono(1u << (i - 1)), v[i]);
  return f;
}

TangentVector sharp(const Form& a) {
  if (a.degree() != 1) throw std::invalid_argument("sharp expects a 1-form");
  TangentVector v;
  for (int i = 1; i <= kDim; ++i) v[i] = a.coeff(Mono(1u << (i - 1)));
  return v;
}

SymTensor sym_product(const Form& a, const Form& b) {
  TangentVector va = sharp(a), vb = sharp(b);
  SymTensor h;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) h.set(i, j, va[i] * vb[j] + va[j] * vb[i]);
  return h;
}

const Su2& Su2::standard() {
  static const Su2 instance;
  return instance;
}

Su2::Su2()
    : alpha_(Form::basis(5)),
      omega_{Form(2), Form(2), Form(2)},
      reeb_(TangentVector::basis(5)) {
  for (int r = 1; r <= 3; ++r) {
    Form w(2);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        int e = epsilon(r, i, j);
        if (e) w.add(mono_of({i, j}), Rational(e));
      }
    omega_[r - 1] = w;
  }
  vol4_ = Form::monomial({1, 2, 3, 4});
  vol5_ = Form::monomial({1, 2, 3, 4, 5});

  // 1-form action from the defining star-compositions:
  //   J_1 phi = star_1(omega_3 ^ star_1(omega_2 ^ phi)), and cyclically.
  constexpr int kInner[3] = {2, 3, 1};
  constexpr int kOuter[3] = {3, 1, 2};
  for (int r = 1; r <= 3; ++r) {
    for (int i = 1; i <= 4; ++i) {
      Form img = star_r(r, wedge(omega(kOuter[r - 1]), star_r(r, wedge(omega(kInner[r - 1]), Form::basis(i)))));
      for (int j = 1; j <= kDim; ++j) jf_[r - 1][i - 1][j - 1] = img.coeff(Mono(1u << (j - 1)));
    }
    for (int j = 1; j <= kDim; ++j) jf_[r - 1][4][j - 1] = Rational(0);  // J_r alpha = 0
  }

  // Vector action J_r X = -sharp_r^{-1}(J_r(sharp_r X)) with sharp_r X = iota_X omega_r.
  for (int r = 1; r <= 3; ++r) {
    for (int j = 1; j <= 4; ++j) {
      Form y = interior(j, omega(r));
      Form z = j_form(r, y);
      // Solve iota_Y omega_r = z for transverse Y.
      Mat m(4, 4);
      std::vector<Rational> rhs(4);
      for (int row = 1; row <= 4; ++row) {
        for (int col = 1; col <= 4; ++col)
          m(row - 1, col - 1) = interior(col, omega(r)).coeff(Mono(1u << (row - 1)));
        rhs[row - 1] = z.coeff(Mono(1u << (row - 1)));
      }
      auto sol = solve(m, rhs);
      if (!sol) throw std::logic_error("sharp_r not invertible");
      for (int i = 1; i <= 4; ++i) jv_[r - 1][i - 1][j - 1] = -(*sol)[i - 1];
      jv_[r - 1][4][j - 1] = Rational(0);
    }
    for (int i = 1; i <= kDim; ++i) jv_[r - 1][i - 1][4] = Rational(0);  // J_r R = 0
  }
}

AdaptedCheck Su2::validate_adapted(const Form& a, const Form& w1, const Form& w2,
                                   const Form& w3) const {
  if (a == alpha_ && w1 == omega(1) && w2 == omega(2) && w3 == omega(3)) return {true, ""};

  // Not the standard model; explain which structural condition breaks.
  const Form* w[3] = {&w1, &w2, &w3};
  if (a.degree() != 1) return {false, "alpha is not a 1-form"};
  for (int r = 0; r < 3; ++r)
    if (w[r]->degree() != 2)
      return {false, "omega_" + std::to_string(r + 1) + " is not a 2-form"};

  Form v = wedge(w1, w1);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Form p = wedge(*w[i], *w[j]);
      Form expect = (i == j) ? v : Form(4);
      if (p != expect)
        return {false, "compatibility fails: omega_" + std::to_string(i + 1) + " ^ omega_" +
                           std::to_string(j + 1) + " != " + (i == j ? "v" : "0")};
    }
  if (wedge(v, a).is_zero()) return {false, "degenerate: v ^ alpha = 0"};
  if (v != 2 * vol4_)
    return {false, "normalization fails: omega_1 ^ omega_1 = " + v.str() + " != 2*1234"};

  // Orientation probe: iota_X omega_1 = iota_Y omega_2 must give omega_3(X,Y) >= 0.
  for (int x = 1; x <= 4; ++x) {
    Form u = interior(x, w1);
    Mat m(4, 4);
    std::vector<Rational> rhs(4);
    for (int row = 1; row <= 4; ++row) {
      for (int col = 1; col <= 4; ++col)
        m(row - 1, col - 1) = interior(col, w2).coeff(Mono(1u << (row - 1)));
      rhs[row - 1] = u.coeff(Mono(1u << (row - 1)));
    }
    auto y = solve(m, rhs);
    if (!y) return {false, "degenerate: omega_2 not symplectic on the contact distribution"};
    Rational val(0);
    for (int j = 1; j <= 4; ++j)
      if (!(*y)[j - 1].is_zero()) val += (*y)[j - 1] * eval_on_basis(w3, {x, j});
    if (val.sign() < 0)
      return {false, "orientation/compatibility fails: omega_3(X,Y) < 0 for iota_X omega_1 = iota_Y omega_2"};
  }
  return {false, "forms satisfy the compatibility conditions but are not the standard model"};
}

namespace {

// Extension of the bilinear form omega_r to degree-k monomials by the usual
// determinant rule.
Rational omega_pair(int r, Mono mi, Mono mj) {
  auto I = mono_indices(mi), J = mono_indices(mj);
  size_t k = I.size();
  if (k != J.size()) throw std::invalid_argument("omega_pair degree mismatch");
  if (k == 0) return Rational(1);
  // det of the k x k matrix omega_r(e_Ip, e_Jq)
  std::vector<std::vector<Rational>> mat(k, std::vector<Rational>(k));
  for (size_t p = 0; p < k; ++p)
    for (size_t q = 0; q < k; ++q) mat[p][q] = Rational(epsilon(r, I[p], J[q]));
  // Laplace expansion is fine at k <= 3.
  std::function<Rational(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> Rational {
    if (rows.size() == 1) return mat[rows[0]][cols[0]];
    Rational s(0);
    for (size_t q = 0; q < cols.size(); ++q) {
      std::vector<int> rs(rows.begin() + 1, rows.end());
      std::vector<int> cs;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != q) cs.push_back(cols[t]);
      Rational minor = det(rs, cs);
      Rational term = mat[rows[0]][cols[q]] * minor;
      s += (q % 2 == 0) ? term : -term;
    }
    return s;
  };
  std::vector<int> rows(k), cols(k);
  for (size_t p = 0; p < k; ++p) rows[p] = cols[p] = int(p);
  return det(rows, cols);
}

}  // namespace

Form Su2::star_r(int r, const Form& a) const {
  if (r < 1 || r > 3) throw std::out_of_range("star_r: r out of range");
  int k = a.degree();
  if (k < 1 || k > 3) throw std::invalid_argument("star_r: degree must be 1..3");
  if (transverse(a) != a) throw std::invalid_argument("star_r: input must be transverse");

  if (k == 1) return wedge(a, omega(r));

  if (k == 3) {
    // Inverse of phi |-> phi ^ omega_r from transverse 1-forms to 3-forms.
    auto basis3 = monomials_of_degree(3);
    std::vector<Mono> t3;
    for (Mono m : basis3)
      if (!(m & (1u << 4))) t3.push_back(m);
    Mat m(4, 4);
    std::vector<Rational> rhs(4);
    for (int row = 0; row < 4; ++row) {
      for (int col = 1; col <= 4; ++col)
        m(row, col - 1) = wedge(Form::basis(col), omega(r)).coeff(t3[row]);
      rhs[row] = a.coeff(t3[row]);
    }
    auto sol = solve(m, rhs);
    if (!sol) throw std::logic_error("star_r: wedge map not invertible");
    Form out(1);
    for (int col = 1; col <= 4; ++col) out.add(Mono(1u << (col - 1)), (*sol)[col - 1]);
    return out;
  }

  // k == 2: gamma ^ star_r beta = omega_r(gamma, beta) vol4 over transverse gamma.
  auto basis2 = monomials_of_degree(2);
  std::vector<Mono> t2;
  for (Mono m : basis2)
    if (!(m & (1u << 4))) t2.push_back(m);
  Mat m(6, 6);
  std::vector<Rational> rhs(6);
  for (int row = 0; row < 6; ++row) {
    Form g(2);
    g.add(t2[row], Rational(1));
    for (int col = 0; col < 6; ++col) {
      Form x(2);
      x.add(t2[col], Rational(1));
      m(row, col) = wedge(g, x).coeff(mono_of({1, 2, 3, 4}));
    }
    Rational v(0);
    for (auto& [mb, cb] : a.terms()) v += cb * omega_pair(r, t2[row], mb);
    rhs[row] = v;
  }
  auto sol = solve(m, rhs);
  if (!sol) throw std::logic_error("star_r: degree-2 pairing not invertible");
  Form out(2);
  for (int col = 0; col < 6; ++col) out.add(t2[col], (*sol)[col]);
  return out;
}

Form Su2::transverse_hodge(const Form& a) const {
  if (transverse(a) != a)
    throw std::invalid_argument("transverse_hodge: input must be transverse");
  return hodge(wedge(alpha_, a));
}

Form Su2::j_form(int r, const Form& a) const {
  if (a.degree() != 1) throw std::invalid_argument("j_form expects a 1-form");
  Form out(1);
  for (int i = 1; i <= kDim; ++i) {
    Rational c = a.coeff(Mono(1u << (i - 1)));
    if (c.is_zero()) continue;
    for (int j = 1; j <= kDim; ++j) {
      const Rational& g = jf_[r - 1][i - 1][j - 1];
      if (!g.is_zero()) out.add(Mono(1u << (j - 1)), c * g);
    }
  }
  return out;
}

TangentVector Su2::j_vec(int r, const TangentVector& v) const {
  TangentVector out;
  for (int i = 1; i <= kDim; ++i) {
    Rational s(0);
    for (int j = 1; j <= kDim; ++j)
      if (!jv_[r - 1][i - 1][j - 1].is_zero()) s += jv_[r - 1][i - 1][j - 1] * v[j];
    out[i] = s;
  }
  return out;
}

Form Su2::j_2form(int r, const Form& s) const {
  if (s.degree() != 2) throw std::invalid_argument("j_2form expects a 2-form");
  Form out(2);
  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j) {
      // s(J e_i, J e_j)
      TangentVector ji = j_vec(r, TangentVector::basis(i));
      TangentVector jj = j_vec(r, TangentVector::basis(j));
      Rational val(0);
      for (int p = 1; p <= kDim; ++p)
        for (int q = 1; q <= kDim; ++q) {
          if (ji[p].is_zero() || jj[q].is_zero() || p == q) continue;
          val += ji[p] * jj[q] * eval_on_basis(s, {p, q});
        }
      out.add(mono_of({i, j}), val);
    }
  return out;
}

SymTensor Su2::j_sym(int r, const SymTensor& h) const {
  SymTensor out;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) {
      TangentVector ji = j_vec(r, TangentVector::basis(i));
      TangentVector jj = j_vec(r, TangentVector::basis(j));
      Rational val(0);
      for (int p = 1; p <= kDim; ++p)
        for (int q = 1; q <= kDim; ++q) {
          if (ji[p].is_zero() || jj[q].is_zero()) continue;
          val += ji[p] * jj[q] * h.at(p, q);
        }
      out.set(i, j, val);
    }
  return out;
}

Form Su2::project_E(const Form& a) const {
  if (a.degree() != 2) throw std::invalid_argument("project_E expects a 2-form");
  Form t = transverse(a);
  Form out = t;
  for (int r = 1; r <= 3; ++r) {
    Rational c = hodge(wedge(wedge(t, omega(r)), alpha_)).scalar_value();
    out -= (Rational(1, 2) * c) * omega(r);
  }
  return out;
}

bool Su2::in_lambda23(const Form& s) const {
  if (s.degree() != 2) return false;
  if (transverse(s) != s) return false;
  for (int r = 1; r <= 3; ++r)
    if (!wedge(s, omega(r)).is_zero()) return false;
  return true;
}

bool Su2::in_sigma(int r, const SymTensor& h) const {
  for (int i = 1; i <= kDim; ++i)
    if (!h.at(i, 5).is_zero()) return false;
  for (int s = 1; s <= 3; ++s) {
    SymTensor jh = j_sym(s, h);
    if (s == r ? !(jh == h) : !(jh == -h)) return false;
  }
  return true;
}

Form Su2::iota(int r, const SymTensor& h) const {
  if (!in_sigma(r, h))
    throw std::invalid_argument("iota: tensor is not in Sigma_" + std::to_string(r));
  Form out(2);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      // coefficient of w^{ij}: antisymmetrized (eps^r h)_{ij}
      Rational v(0);
      for (int k = 1; k <= 4; ++k) {
        if (int e = epsilon(r, i, k); e) v += Rational(e) * h.at(k, j);
        if (int e = epsilon(r, j, k); e) v -= Rational(e) * h.at(k, i);
      }
      out.add(mono_of({i, j}), Rational(1, 2) * v);
    }
  return out;
}

SymTensor Su2::iota_inverse(int r, const Form& s) const {
  if (!in_lambda23(s))
    throw std::invalid_argument("iota_inverse: form is not in Lambda^2_3");
  // s has antisymmetric matrix A_ij = s(e_i,e_j); invert A = eps^r h by
  // h = -eps^r A, using (eps^r)^2 = -I.
  SymTensor h;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      Rational v(0);
      for (int k = 1; k <= 4; ++k)
        if (int e = epsilon(r, i, k); e) v -= Rational(e) * eval_on_basis(s, {k, j});
      h.set(i, j, v);
    }
  if (!in_sigma(r, h) || !(iota(r, h) == s))
    throw std::logic_error("iota_inverse: inversion failed the Sigma_r round-trip");
  return h;
}

Su2::SymDecomposition Su2::sym_decompose(const SymTensor& h) const {
  SymDecomposition d;
  d.c_t = Rational(1, 4) * h.transverse_trace();
  d.c_alpha = h.at(5, 5);
  d.beta = Form(1);
  for (int i = 1; i <= 4; ++i) d.beta.add(Mono(1u << (i - 1)), h.at(i, 5));

  SymTensor h0;  // traceless transverse block
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) h0.set(i, j, h.at(i, j) - (i == j ? d.c_t : Rational(0)));

  std::array<SymTensor, 3> p{j_sym(1, h0), j_sym(2, h0), j_sym(3, h0)};
  for (int r = 0; r < 3; ++r) {
    SymTensor acc = h0 + p[r];
    for (int s = 0; s < 3; ++s)
      if (s != r) acc -= p[s];
    d.sigma[r] = Rational(1, 4) * acc;
  }
  return d;
}

SymTensor Su2::g_transverse() const {
  SymTensor g;
  for (int i = 1; i <= 4; ++i) g.set(i, i, Rational(1));
  return g;
}

SymTensor Su2::alpha_tensor_alpha() const {
  SymTensor g;
  g.set(5, 5, Rational(1));
  return g;
}

}  // namespace su2curv
