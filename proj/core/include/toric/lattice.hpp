#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

/// An element of Z^n. Exponent vectors, cone generators and facet normals all
/// use this type.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : entries_(dim) {}
  explicit LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<Integer> entries) : entries_(entries) {}

  static LatticeVector unit(std::size_t dim, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  auto begin() noexcept { return entries_.begin(); }
  auto end() noexcept { return entries_.end(); }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& k);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  /// Lexicographic.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> entries_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a);
LatticeVector operator*(const Integer& k, LatticeVector a);
Integer dot(const LatticeVector& a, const LatticeVector& b);
Integer gcd_of_entries(const LatticeVector& v);

/// "(1,-2,1)"
std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// v / gcd(v). Throws DomainError on the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// Rows must share a common length; `cols` is used when `rows` is empty.
  static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols = 0);
  static IntegerMatrix from_columns(const std::vector<LatticeVector>& columns, std::size_t rows = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  std::vector<LatticeVector> row_vectors() const;
  std::vector<LatticeVector> column_vectors() const;
  IntegerMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntegerMatrix& a, const IntegerMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v);
std::string to_string(const IntegerMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

struct HermiteForm {
  IntegerMatrix hermite;     // H
  IntegerMatrix transform;   // U, unimodular, U * m = H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: H is in row echelon form, pivots are
/// positive, and entries above each pivot lie in [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix diagonal;  // D = P * m * Q
  IntegerMatrix left;      // P, unimodular
  IntegerMatrix right;     // Q, unimodular
  std::vector<Integer> invariants;  // nonzero diagonal entries, d_i | d_{i+1}
};

SmithForm smith_normal_form(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const std::vector<LatticeVector>& vectors, std::size_t dim);

/// Lattice basis of {v in Z^cols : m v = 0}, returned as the rows of the
/// kernel lattice's Hermite normal form.
std::vector<LatticeVector> integer_kernel(const IntegerMatrix& m);

/// Fraction-free Bareiss elimination. Throws DomainError unless square.
Integer determinant(const IntegerMatrix& m);
bool is_unimodular(const IntegerMatrix& m);

/// Exact rational inverse; throws DomainError when singular or non-square.
std::vector<std::vector<Rational>> rational_inverse(const IntegerMatrix& m);

/// Solve m x = b over Q for square nonsingular m.
std::vector<Rational> solve_rational(const IntegerMatrix& m, const LatticeVector& b);

}  // namespace toric
