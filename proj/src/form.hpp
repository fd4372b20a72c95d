#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace su2curv {

// A basis monomial w^{i1} ^ ... ^ w^{ik} (i1 < ... < ik, indices in 1..5) is
// stored as a bitmask: bit i-1 set iff index i occurs.
using Mono = std::uint8_t;

constexpr int kDim = 5;
constexpr Mono kFullMask = 0x1f;

Mono mono_of(std::initializer_list<int> indices);
std::vector<int> mono_indices(Mono m);
int mono_degree(Mono m);

// Sign of reordering the concatenation (A, B) into the increasing monomial
// A|B; 0 if the index sets overlap.
int merge_sign(Mono a, Mono b);

// Tangent vector in the frame e_1..e_5 dual to the coframe.
class TangentVector {
public:
  TangentVector() = default;
  static TangentVector basis(int i);

  Rational& operator[](int i) { return c_.at(i - 1); }          // 1-based
  const Rational& operator[](int i) const { return c_.at(i - 1); }
  bool is_zero() const;

  TangentVector operator-() const;
  TangentVector& operator+=(const TangentVector& o);
  TangentVector& operator-=(const TangentVector& o);
  friend TangentVector operator+(TangentVector a, const TangentVector& b) { return a += b; }
  friend TangentVector operator-(TangentVector a, const TangentVector& b) { return a -= b; }
  friend TangentVector operator*(const Rational& c, TangentVector v);
  friend bool operator==(const TangentVector&, const TangentVector&) = default;

  std::string str() const;

private:
  std::array<Rational, kDim> c_{};
};

// Degree-k exterior form over the fixed coframe {w^1,...,w^5} with exact
// rational coefficients. Only nonzero coefficients are stored; every stored
// mask has popcount equal to the degree.
class Form {
public:
  explicit Form(int degree = 0);

  static Form scalar(const Rational& c);
  static Form basis(int i);  // w^i
  static Form monomial(std::initializer_list<int> indices, const Rational& c = Rational(1));

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rational>& terms() const { return terms_; }
  Rational coeff(Mono m) const;
  Rational coeff(std::initializer_list<int> indices) const;

  // Adds c * w^m, dropping the term if the total cancels.
  void add(Mono m, const Rational& c);

  // Value of a degree-0 form.
  Rational scalar_value() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Rational& c, Form a);
  friend Form operator*(long c, const Form& a) { return Rational(c) * a; }
  friend bool operator==(const Form&, const Form&) = default;

  // Canonical compact notation, e.g. "-2*12 - 2*34"; "0" for the zero form.
  std::string str() const;

private:
  int degree_;
  std::map<Mono, Rational> terms_;
};

Form wedge(const Form& a, const Form& b);
Form interior(int i, const Form& a);                    // iota_{e_i}
Form interior(const TangentVector& v, const Form& a);
Form hodge(const Form& a);                              // vol = w^{12345}
Rational inner(const Form& a, const Form& b);           // monomials orthonormal
Form transverse(const Form& a);                         // a - alpha ^ iota_{e5} a

// a(e_{j1},...,e_{jk}) for a degree-k form, determinant convention.
Rational eval_on_basis(const Form& a, const std::vector<int>& js);

// All C(5,k) basis monomials of the given degree, ascending mask order.
std::vector<Mono> monomials_of_degree(int k);

}  // namespace su2curv
