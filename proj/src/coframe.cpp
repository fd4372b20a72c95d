#include "coframe.hpp"

#include <stdexcept>

namespace su2curv {

Coframe5::Coframe5(std::string name, std::array<Form, 5> d_images)
    : name_(std::move(name)), d_images_(std::move(d_images)) {
  for (const Form& f : d_images_)
    if (f.degree() != 2 && !f.is_zero())
      throw std::invalid_argument("structure equation dw^i must be a 2-form");
}

Form Coframe5::d(const Form& a) const {
  if (a.degree() >= kDim) return Form(kDim);  // d of top degree would exceed 5
  Form out(a.degree() + 1);
  for (auto& [m, c] : a.terms()) {
    // d(w^{i1..ik}) = sum_p (-1)^{p-1} dw^{ip} ^ w^{I minus ip}
    int pos = 0;
    for (int i = 1; i <= kDim; ++i) {
      Mono bit = Mono(1u << (i - 1));
      if (!(m & bit)) continue;
      Form rest(a.degree() - 1);
      rest.add(Mono(m & ~bit), (pos % 2 == 0) ? c : -c);
      out += wedge(d_basis(i), rest);
      ++pos;
    }
  }
  return out;
}

std::optional<JacobiFailure> Coframe5::validate_jacobi() const {
  for (int i = 1; i <= kDim; ++i) {
    Form d2 = d(d_basis(i));
    if (!d2.is_zero()) return JacobiFailure{i, d2};
  }
  return std::nullopt;
}

TangentVector StructureConstants::bracket(const TangentVector& x, const TangentVector& y) const {
  TangentVector out;
  for (int k = 1; k <= kDim; ++k) {
    Rational s(0);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        if (c[k][i][j].is_zero()) continue;
        s += c[k][i][j] * x[i] * y[j];
      }
    out[k] = s;
  }
  return out;
}

StructureConstants structure_constants(const Coframe5& cf) {
  StructureConstants sc;
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        sc.c[k][i][j] = -eval_on_basis(cf.d_basis(k), {i, j});
  return sc;
}

std::array<Form, 5> d_images_from(const StructureConstants& sc) {
  std::array<Form, 5> out{Form(2), Form(2), Form(2), Form(2), Form(2)};
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = i + 1; j <= kDim; ++j)
        out[k - 1].add(mono_of({i, j}), -sc.c[k][i][j]);
  return out;
}

Form substitute(const Form& a, const std::array<Form, 5>& images) {
  Form out(a.degree());
  for (auto& [m, c] : a.terms()) {
    Form prod = Form::scalar(c);
    for (int i : mono_indices(m)) prod = wedge(prod, images[i - 1]);
    out += prod;
  }
  return out;
}

Coframe5 change_coframe(const Coframe5& cf, const Mat& a, std::string new_name) {
  if (a.rows() != kDim || a.cols() != kDim)
    throw std::invalid_argument("coframe change must be 5x5");
  // Invert column by column: w^i = (A^-1)_ij what^j.
  std::array<Form, 5> w_in_hat{Form(1), Form(1), Form(1), Form(1), Form(1)};
  for (int j = 0; j < kDim; ++j) {
    std::vector<Rational> e(kDim);
    Mat m = a;
    e[j] = Rational(1);
    // Column j of A^-1.
    auto col = solve(m, e);
    if (!col) throw std::invalid_argument("coframe change matrix is singular");
    for (int i = 0; i < kDim; ++i) w_in_hat[i].add(Mono(1u << j), (*col)[i]);
  }
  std::array<Form, 5> d_hat{Form(2), Form(2), Form(2), Form(2), Form(2)};
  for (int i = 0; i < kDim; ++i) {
    Form dwhat(2);
    for (int j = 0; j < kDim; ++j) {
      const Rational& aij = a(i, j);
      if (!aij.is_zero()) dwhat += aij * cf.d_basis(j + 1);
    }
    d_hat[i] = substitute(dwhat, w_in_hat);
  }
  return Coframe5(std::move(new_name), std::move(d_hat));
}

}  // namespace su2curv
