#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace monoclass {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& x);
Vec scaled(const Vec& x, double s);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);

/// Dense real matrix, row-major.  Entries are validated to be finite.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled
  Matrix(int rows, int cols, Vec entries);

  static Matrix identity(int n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  const Vec& entries() const { return a_; }

  Matrix transpose() const;
  Matrix symmetrized() const;  // (M + Mᵀ)/2, square only

  /// Largest absolute entry (the max-norm used by every tolerance scale).
  double max_abs() const;
  double frobenius() const;
  bool is_symmetric(double tol_abs) const;

  Vec apply(const Vec& x) const;  // M·x
  Vec column(int j) const;

  /// Copies `block` into this matrix with its (0,0) entry at (i0,j0).
  void add_block(int i0, int j0, const Matrix& block, double factor = 1.0);

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& m);

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec a_;
};

std::string to_string(const Matrix& m);

}  // namespace monoclass
