#pragma once

#include <array>
#include <optional>
#include <string>

#include "form.hpp"
#include "linalg.hpp"

namespace su2curv {

struct JacobiFailure {
  int index;   // first i with d(dw^i) != 0
  Form d2;     // the offending 3-form
};

// A 5-dimensional Lie algebra presented by its Maurer-Cartan structure
// equations dw^i in the adapted coframe. Only left-invariant
// (constant-coefficient) forms are differentiated.
class Coframe5 {
public:
  Coframe5(std::string name, std::array<Form, 5> d_images);

  const std::string& name() const { return name_; }
  const Form& d_basis(int i) const { return d_images_.at(i - 1); }  // dw^i

  // Leibniz extension of the structure equations; d of a constant is zero.
  Form d(const Form& a) const;

  std::optional<JacobiFailure> validate_jacobi() const;

  friend bool operator==(const Coframe5& a, const Coframe5& b) {
    return a.d_images_ == b.d_images_;
  }

private:
  std::string name_;
  std::array<Form, 5> d_images_;
};

// c[k][i][j] with [e_i,e_j] = c^k_ij e_k and c^k_ij = -dw^k(e_i,e_j).
struct StructureConstants {
  Rational c[kDim + 1][kDim + 1][kDim + 1];  // 1-based
  TangentVector bracket(const TangentVector& x, const TangentVector& y) const;
};

StructureConstants structure_constants(const Coframe5& cf);
std::array<Form, 5> d_images_from(const StructureConstants& sc);

// Rewrites a form in a new coframe given the substitution w^i -> images[i-1].
Form substitute(const Form& a, const std::array<Form, 5>& images);

// Structure equations in the coframe what^i = A_ij w^j (A invertible).
Coframe5 change_coframe(const Coframe5& cf, const Mat& a, std::string new_name);

}  // namespace su2curv
