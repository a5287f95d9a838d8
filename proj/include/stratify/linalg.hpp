#pragma once

/// Dense exact linear algebra over a prime field F_p.
///
/// Matrices carry their characteristic so that values from different fields
/// are never mixed silently. All routines are deterministic: equal inputs give
/// bit-identical outputs, which the higher layers rely on for reproducible
/// reports.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "stratify/errors.hpp"

namespace stratify {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Largest supported characteristic; keeps every product inside 64 bits.
inline constexpr Scalar kMaxCharacteristic = 65521;

inline void require_prime(Scalar p) {
  if (!is_prime(p) || p > kMaxCharacteristic) {
    throw ValidationError("field characteristic " + std::to_string(p) +
                          " is not a supported prime");
  }
}

namespace fp {

inline Scalar add(Scalar a, Scalar b, Scalar p) { return static_cast<Scalar>((std::uint64_t{a} + b) % p); }
inline Scalar sub(Scalar a, Scalar b, Scalar p) { return static_cast<Scalar>((std::uint64_t{a} + p - b) % p); }
inline Scalar neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }
inline Scalar mul(Scalar a, Scalar b, Scalar p) { return static_cast<Scalar>((std::uint64_t{a} * b) % p); }

inline Scalar pow(Scalar a, std::uint64_t e, Scalar p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<Scalar>(result);
}

inline Scalar inv(Scalar a, Scalar p) {
  if (a % p == 0) throw InvariantViolation("division by zero in F_p");
  return pow(a, p - 2, p);
}

inline Scalar from_int(long long v, Scalar p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Scalar>(r);
}

}  // namespace fp

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Scalar p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, Scalar p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
    return m;
  }

  static Matrix from_rows(Scalar p, std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c, p);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ValidationError("ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m.set(i, j++, fp::from_int(v, p));
      ++i;
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, Scalar p, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size(), p);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw ValidationError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar characteristic() const { return p_; }
  const std::vector<Scalar>& data() const { return data_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v % p_; }
  void add_to(std::size_t r, std::size_t c, Scalar v) {
    auto& x = data_[r * cols_ + c];
    x = fp::add(x, v % p_, p_);
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw InvariantViolation("matrix product shape mismatch");
    Matrix out(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Scalar b = o(k, j);
          if (b != 0) out.data_[i * o.cols_ + j] = fp::add(out.data_[i * o.cols_ + j], fp::mul(a, b, p_), p_);
        }
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fp::add(data_[i], o.data_[i], p_);
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fp::sub(data_[i], o.data_[i], p_);
    return out;
  }

  Matrix scaled(Scalar c) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = fp::mul(x, c % p_, p_);
    return out;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw InvariantViolation("matrix-vector shape mismatch");
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{(*this)(i, j)} * v[j] % p_;
      out[i] = static_cast<Scalar>(acc % p_);
    }
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) data_[(r0 + i) * cols_ + c0 + j] = b(i, j);
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size(), p_);
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) out.data_[i * idx.size() + j] = (*this)(i, idx[j]);
    return out;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = (*this)(idx[i], j);
    return out;
  }

 private:
  void check_field(const Matrix& o) const {
    if (p_ != o.p_) throw InvariantViolation("matrices over different fields");
  }
  void check_same_shape(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantViolation("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Scalar p_ = 2;
  std::vector<Scalar> data_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvariantViolation("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols(), a.characteristic());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvariantViolation("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols(), a.characteristic());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination, pivoting on the
/// first nonzero entry of each column.
inline RowEchelon rref(Matrix m) {
  const Scalar p = m.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar t = m(row, j);
        m.set(row, j, m(sel, j));
        m.set(sel, j, t);
      }
    }
    const Scalar scale = fp::inv(m(row, col), p);
    for (std::size_t j = col; j < m.cols(); ++j) m.set(row, j, fp::mul(m(row, j), scale, p));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Scalar f = m(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.set(i, j, fp::sub(m(i, j), fp::mul(f, m(row, j), p), p));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// Basis of {x : m x = 0}, one vector per free column, in increasing order of
/// the free column.
inline std::vector<Vector> nullspace_basis(const Matrix& m) {
  const Scalar p = m.characteristic();
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1 % p;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = fp::neg(ech.reduced(r, free), p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Nullspace basis packed as the columns of a cols(m) x nullity matrix.
inline Matrix kernel_matrix(const Matrix& m) {
  return Matrix::from_columns(m.cols(), m.characteristic(), nullspace_basis(m));
}

/// Rows spanning {y : y m = 0}.
inline Matrix left_kernel_matrix(const Matrix& m) { return kernel_matrix(m.transposed()).transposed(); }

/// Solves a x = b; absent when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw InvariantViolation("solve: right-hand side length mismatch");
  const Scalar p = a.characteristic();
  Matrix aug(a.rows(), a.cols() + 1, p);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug.set(i, a.cols(), b[i]);
  const auto ech = rref(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
  return x;
}

/// Solves a X = b column by column.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw InvariantViolation("solve: row mismatch");
  const Scalar p = a.characteristic();
  const auto ech = rref(hstack(a, b));
  Matrix x(a.cols(), b.cols(), p);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(ech.pivots[r], j, ech.reduced(r, a.cols() + j));
  }
  return x;
}

/// The pivot columns of m: a basis of its column space drawn from m itself.
inline Matrix column_space_basis(const Matrix& m) {
  if (m.cols() == 0) return Matrix(m.rows(), 0, m.characteristic());
  return m.select_columns(rref(m).pivots);
}

/// Basis of the intersection of the column spaces of a and b.
inline Matrix intersect_column_spaces(const Matrix& a, const Matrix& b) {
  const Scalar p = a.characteristic();
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0, p);
  const Matrix k = kernel_matrix(hstack(a, b));
  const Matrix top = k.block(0, 0, a.cols(), k.cols());
  return column_space_basis(a * top);
}

/// Standard basis vectors (by increasing index) that extend the columns of
/// `basis` to a basis of the ambient space.
inline Matrix complement_columns(const Matrix& basis) {
  const Scalar p = basis.characteristic();
  const std::size_t n = basis.rows();
  const auto ech = rref(hstack(basis, Matrix::identity(n, p)));
  std::vector<std::size_t> picked;
  for (auto c : ech.pivots) {
    if (c >= basis.cols()) picked.push_back(c - basis.cols());
  }
  return Matrix::identity(n, p).select_columns(picked);
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows(), m.characteristic()));
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline Matrix matrix_power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.rows(), m.characteristic());
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

}  // namespace stratify
