#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace su2curv {

// Dense exact-rational matrix, just big enough for the 4x4 and 6x6 systems
// that show up when inverting the wedge and star maps.
class Mat {
public:
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

private:
  int r_, c_;
  std::vector<Rational> a_;
};

// Unique solution of A x = b; nullopt when the system is singular or
// inconsistent.
std::optional<std::vector<Rational>> solve(Mat a, std::vector<Rational> b);

}  // namespace su2curv
