#include "toric/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric {

// ---------------------------------------------------------------- vectors

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t i) {
  LatticeVector v(dim);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.size() != size()) throw DomainError("lattice vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.size() != size()) throw DomainError("lattice vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
  for (auto& x : entries_) x *= k;
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }
LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DomainError("lattice vector dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of_entries(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = gcd_of_entries(v);
  if (g == 0) throw DomainError("primitive: zero vector has no primitive representative");
  if (g == 1) return v;
  LatticeVector out = v;
  for (auto& x : out) x /= g;
  return out;
}

// ---------------------------------------------------------------- matrices

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
  const std::size_t c = rows.empty() ? cols : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<LatticeVector>& columns,
                                          std::size_t rows) {
  return from_rows(columns, rows).transpose();
}

LatticeVector IntegerMatrix::row(std::size_t i) const {
  return LatticeVector(std::vector<Integer>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

LatticeVector IntegerMatrix::column(std::size_t j) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<LatticeVector> IntegerMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<LatticeVector> IntegerMatrix::column_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += k * (*this)(source, j);
}

void IntegerMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += k * (*this)(i, source);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw DomainError("matrix-vector dimension mismatch");
  LatticeVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) { return os << to_string(m); }

// ---------------------------------------------------------------- normal forms

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on column `col` among rows [pivot_row, rows).
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best == h.rows() || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best == h.rows()) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        const Integer q = floor_div(h(r, col), h(pivot_row, col));
        h.add_row_multiple(r, pivot_row, -q);
        u.add_row_multiple(r, pivot_row, -q);
        if (h(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      const Integer q = floor_div(h(r, col), h(pivot_row, col));
      h.add_row_multiple(r, pivot_row, -q);
      u.add_row_multiple(r, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u), pivot_row};
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix p = IntegerMatrix::identity(m.rows());
  IntegerMatrix q = IntegerMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t br = d.rows(), bc = d.cols();
    for (std::size_t r = t; r < d.rows(); ++r)
      for (std::size_t c = t; c < d.cols(); ++c)
        if (d(r, c) != 0 && (br == d.rows() || abs(d(r, c)) < abs(d(br, bc)))) {
          br = r;
          bc = c;
        }
    if (br == d.rows()) break;
    d.swap_rows(t, br);
    p.swap_rows(t, br);
    d.swap_columns(t, bc);
    q.swap_columns(t, bc);

    for (;;) {
      bool changed = false;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        const Integer k = floor_div(d(r, t), d(t, t));
        d.add_row_multiple(r, t, -k);
        p.add_row_multiple(r, t, -k);
        if (d(r, t) != 0) {
          d.swap_rows(r, t);
          p.swap_rows(r, t);
          changed = true;
        }
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        const Integer k = floor_div(d(t, c), d(t, t));
        d.add_column_multiple(c, t, -k);
        q.add_column_multiple(c, t, -k);
        if (d(t, c) != 0) {
          d.swap_columns(c, t);
          q.swap_columns(c, t);
          changed = true;
        }
      }
      if (changed) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      bool folded = false;
      for (std::size_t r = t + 1; r < d.rows() && !folded; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(r, c) % d(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            p.add_row_multiple(t, r, 1);
            folded = true;
            break;
          }
      if (!folded) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      p.negate_row(t);
    }
  }
  std::vector<Integer> invariants;
  for (std::size_t i = 0; i < t; ++i) invariants.push_back(d(i, i));
  return {std::move(d), std::move(p), std::move(q), std::move(invariants)};
}

std::size_t rank(const IntegerMatrix& m) { return hermite_normal_form(m).rank; }

std::size_t rank(const std::vector<LatticeVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntegerMatrix::from_rows(vectors, dim));
}

std::vector<LatticeVector> integer_kernel(const IntegerMatrix& m) {
  const HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<LatticeVector> basis;
  for (std::size_t i = hf.rank; i < hf.transform.rows(); ++i) basis.push_back(hf.transform.row(i));
  if (basis.empty()) return basis;
  const HermiteForm canonical = hermite_normal_form(IntegerMatrix::from_rows(basis));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < canonical.rank; ++i) out.push_back(canonical.hermite.row(i));
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) {
  if (!m.is_square()) throw DomainError("is_unimodular: matrix is not square");
  return abs(determinant(m)) == 1;
}

std::vector<std::vector<Rational>> rational_inverse(const IntegerMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("inverse: matrix is singular");
    std::swap(a[c], a[piv]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::vector<Rational> solve_rational(const IntegerMatrix& m, const LatticeVector& b) {
  const auto inv = rational_inverse(m);
  if (b.size() != m.rows()) throw DomainError("solve: dimension mismatch");
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) x[i] += inv[i][j] * Rational(b[j]);
  return x;
}

}  // namespace toric
