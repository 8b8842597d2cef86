#pragma once

#include <vector>

#include "numeric.hpp"

namespace weylsig {

// Dense exact rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& o) const = default;

  Rational trace() const;
  RatMatrix transpose() const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RatMatrix kron(const RatMatrix& x, const RatMatrix& y);
int rank(RatMatrix m);
// Throws if singular.
RatMatrix inverse(const RatMatrix& m);
// Columns form a basis of the null space.
RatMatrix nullspace(RatMatrix m);

}  // namespace weylsig
