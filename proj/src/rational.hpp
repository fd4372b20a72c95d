#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace su2curv {

// Exact rational number. Always canonical: denominator > 0, gcd(num,den) = 1.
// Every quantity in the engine is one of these; there is no floating point.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, unsigned long d) : q_(n, d) { q_.canonicalize(); }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q".
  static Rational parse(const std::string& s);

  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class q_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

}  // namespace su2curv
