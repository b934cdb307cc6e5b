#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace yblab {

using Complex = std::complex<double>;

/// Thrown when a request would exceed the dense-size guards
/// (chain dimension n^N <= 2^12, brute-force configurations n^(2NM) <= 2^24).
class size_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base^exp, throwing size_guard_error if the result would exceed `limit`.
std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit);

constexpr std::size_t kChainDimGuard = std::size_t{1} << 12;
constexpr std::size_t kBruteForceGuard = std::size_t{1} << 24;

/// Dense complex matrix, row-major storage.  Rows index outputs, columns
/// inputs: (A v)[r] = sum_c A(r,c) v[c].
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return data_; }

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator*(Complex scalar) const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const;

  Complex trace() const;

  /// Largest entry modulus (the max norm used by every residual here).
  double max_abs() const;
  /// Infinity norm (max absolute row sum); used to pick the exp scaling.
  double max_row_sum() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// exp(scale * a) by scaling-and-squaring around a fixed-order truncated
/// series.  Deterministic; no pivoting.  Throws on non-square input.
Matrix mat_exp(const Matrix& a, Complex scale);

/// a^p by repeated left-to-right multiplication (fixed order).
Matrix mat_pow(const Matrix& a, std::size_t p);

Matrix commutator(const Matrix& a, const Matrix& b);

/// Gauss-Jordan inverse with partial pivoting; throws on singular input.
Matrix inverse(const Matrix& a);

/// ||a - a^dagger||_max.
double hermiticity_defect(const Matrix& a);

/// Composite index k*n + l for a pair of link indices.
std::size_t composite_index(std::size_t k, std::size_t l, std::size_t n);

/// Rank-4 vertex weight tensor T[i][j][k][l], all indices in 0..n-1.
/// (i,j) is the incoming pair, (k,l) the outgoing one.  Stored entries are
/// required to be finite.
class VertexTensor {
 public:
  VertexTensor() = default;
  explicit VertexTensor(std::size_t n) : n_(n), data_(n * n * n * n) {}
  VertexTensor(std::size_t n, std::vector<Complex> entries);

  /// T[i][j][k][l] = delta_i^k delta_j^l.
  static VertexTensor identity(std::size_t n);
  /// T[i][j][k][l] = delta_i^l delta_j^k (the flip R = P).
  static VertexTensor permutation(std::size_t n);

  std::size_t n() const { return n_; }

  Complex& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const Complex& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  const std::vector<Complex>& entries() const { return data_; }

  /// T'[i][j][k][l] = T[i][j][l][k]: swaps the outgoing pair.  This is the
  /// involution connecting R and B forms, R_ij^kl = B_ij^lk.
  VertexTensor swapped_outputs() const;

  VertexTensor operator*(Complex scalar) const;
  VertexTensor operator-(const VertexTensor& other) const;
  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// M[(k*n+l)][(i*n+j)] = T[i][j][k][l]: rows are the outgoing composite
/// pair, columns the incoming one.  Under this reading the usual 4x4
/// six-vertex displays are reproduced verbatim.
Matrix tensor_to_matrix(const VertexTensor& t);

/// Inverse of tensor_to_matrix; input must be n^2 x n^2.
VertexTensor matrix_to_tensor(const Matrix& m);

/// P (u (x) v) = v (x) u on C^n (x) C^n; P^2 = 1, P = P^dagger.
Matrix permutation_op(std::size_t n);

/// Dense operator on the full n^N-dimensional chain space.
struct ChainOperator {
  std::size_t local_dim = 0;
  std::size_t sites = 0;
  Matrix matrix;
};

/// Embeds a two-site operator at sites (k, k+1) of a periodic chain of N
/// sites (1-based k; k = N acts on the pair (N, 1)).  Site 1 is the most
/// significant digit of the basis index.
ChainOperator embed_two_site(const Matrix& op4, std::size_t k, std::size_t sites,
                             std::size_t local_dim);

}  // namespace yblab
