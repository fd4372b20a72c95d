#include "form.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace su2curv {

Mono mono_of(std::initializer_list<int> indices) {
  Mono m = 0;
  for (int i : indices) {
    if (i < 1 || i > kDim) throw std::out_of_range("coframe index out of range 1..5");
    Mono bit = Mono(1u << (i - 1));
    if (m & bit) throw std::invalid_argument("repeated coframe index");
    m |= bit;
  }
  return m;
}

std::vector<int> mono_indices(Mono m) {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i)
    if (m & (1u << (i - 1))) out.push_back(i);
  return out;
}

int mono_degree(Mono m) { return std::popcount(unsigned(m & kFullMask)); }

int merge_sign(Mono a, Mono b) {
  if (a & b) return 0;
  // Inversions between (a, b) in concatenated order: pairs i in a, j in b
  // with j < i.
  int inv = 0;
  for (int i = 1; i <= kDim; ++i) {
    if (!(a & (1u << (i - 1)))) continue;
    for (int j = 1; j < i; ++j)
      if (b & (1u << (j - 1))) ++inv;
  }
  return (inv % 2 == 0) ? 1 : -1;
}

TangentVector TangentVector::basis(int i) {
  TangentVector v;
  v[i] = Rational(1);
  return v;
}

bool TangentVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TangentVector TangentVector::operator-() const {
  TangentVector v;
  for (int i = 0; i < kDim; ++i) v.c_[i] = -c_[i];
  return v;
}

TangentVector& TangentVector::operator+=(const TangentVector& o) {
  for (int i = 0; i < kDim; ++i) c_[i] += o.c_[i];
  return *this;
}

TangentVector& TangentVector::operator-=(const TangentVector& o) {
  for (int i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

TangentVector operator*(const Rational& c, TangentVector v) {
  for (int i = 1; i <= kDim; ++i) v[i] = c * v[i];
  return v;
}

std::string TangentVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= kDim; ++i) {
    const Rational& c = (*this)[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.abs();
    if (a != Rational(1)) os << a.str() << "*";
    os << "e" << i;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Form::Form(int degree) : degree_(degree) {
  if (degree < 0 || degree > kDim) throw std::out_of_range("form degree out of range 0..5");
}

Form Form::scalar(const Rational& c) {
  Form f(0);
  f.add(0, c);
  return f;
}

Form Form::basis(int i) { return monomial({i}); }

Form Form::monomial(std::initializer_list<int> indices, const Rational& c) {
  Form f(int(indices.size()));
  f.add(mono_of(indices), c);
  return f;
}

Rational Form::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Form::coeff(std::initializer_list<int> indices) const { return coeff(mono_of(indices)); }

void Form::add(Mono m, const Rational& c) {
  if (c.is_zero()) return;
  if (mono_degree(m) != degree_) throw std::invalid_argument("monomial degree mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Form::scalar_value() const {
  if (degree_ != 0) throw std::invalid_argument("scalar_value on nonzero degree");
  return coeff(Mono(0));
}

Form Form::operator-() const {
  Form f(degree_);
  for (auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (degree_ != o.degree_) {
    if (is_zero()) { degree_ = o.degree_; }
    else if (!o.is_zero()) throw std::invalid_argument("degree mismatch in form sum");
  }
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Rational& c, Form a) {
  if (c.is_zero()) return Form(a.degree_);
  for (auto& [m, v] : a.terms_) v = c * v;
  return a;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  if (degree_ == 0) return scalar_value().str();
  // Sort by index tuple, lexicographically.
  std::vector<std::pair<std::vector<int>, Rational>> rows;
  for (auto& [m, c] : terms_) rows.emplace_back(mono_indices(m), c);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (auto& [idx, c] : rows) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.abs();
    if (a != Rational(1)) os << a.str() << "*";
    for (int i : idx) os << i;
    first = false;
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  int deg = a.degree() + b.degree();
  if (deg > kDim) return Form(kDim);  // identically zero above top degree
  Form out(deg);
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      out.add(Mono(ma | mb), Rational(s) * ca * cb);
    }
  return out;
}

Form interior(int i, const Form& a) {
  if (a.degree() == 0) return Form(0);
  Form out(a.degree() - 1);
  Mono bit = Mono(1u << (i - 1));
  for (auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    int below = 0;
    for (int j = 1; j < i; ++j)
      if (m & (1u << (j - 1))) ++below;
    out.add(Mono(m & ~bit), (below % 2 == 0 ? c : -c));
  }
  return out;
}

Form interior(const TangentVector& v, const Form& a) {
  if (a.degree() == 0) return Form(0);
  Form out(a.degree() - 1);
  for (int i = 1; i <= kDim; ++i)
    if (!v[i].is_zero()) out += v[i] * interior(i, a);
  return out;
}

Form hodge(const Form& a) {
  Form out(kDim - a.degree());
  for (auto& [m, c] : a.terms()) {
    Mono mc = Mono(kFullMask & ~m);
    out.add(mc, Rational(merge_sign(m, mc)) * c);
  }
  return out;
}

Rational inner(const Form& a, const Form& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("inner product of forms of different degree");
  Rational s(0);
  for (auto& [m, c] : a.terms()) {
    Rational cb = b.coeff(m);
    if (!cb.is_zero()) s += c * cb;
  }
  return s;
}

Form transverse(const Form& a) {
  // Equals a - alpha ^ iota_{e5} a: monomials containing w^5 drop out.
  Form out(a.degree());
  for (auto& [m, c] : a.terms())
    if (!(m & (1u << 4))) out.add(m, c);
  return out;
}

Rational eval_on_basis(const Form& a, const std::vector<int>& js) {
  if (int(js.size()) != a.degree())
    throw std::invalid_argument("eval_on_basis arity mismatch");
  Mono m = 0;
  for (int j : js) {
    if (j < 1 || j > kDim) throw std::out_of_range("basis index out of range");
    Mono bit = Mono(1u << (j - 1));
    if (m & bit) return Rational(0);
    m |= bit;
  }
  Rational c = a.coeff(m);
  if (c.is_zero()) return c;
  // Parity of js relative to increasing order.
  int inv = 0;
  for (size_t p = 0; p < js.size(); ++p)
    for (size_t q = p + 1; q < js.size(); ++q)
      if (js[p] > js[q]) ++inv;
  return (inv % 2 == 0) ? c : -c;
}

std::vector<Mono> monomials_of_degree(int k) {
  std::vector<Mono> out;
  for (Mono m = 0; m <= kFullMask; ++m)
    if (mono_degree(m) == k) out.push_back(m);
  return out;
}

}  // namespace su2curv
