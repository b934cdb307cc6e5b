#include "yblab/linalg.hpp"

#include <cmath>

namespace yblab {

namespace {
constexpr int kExpSeriesOrder = 24;

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}
}  // namespace

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base)
      throw size_guard_error("size guard exceeded: dimension above " + std::to_string(limit));
    result *= base;
    if (result > limit)
      throw size_guard_error("size guard exceeded: dimension above " + std::to_string(limit));
  }
  return result;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_shape(*this, other, "Matrix::operator+");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_same_shape(*this, other, "Matrix::operator-");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("Matrix::operator*: inner dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = data_[r * cols_ + k];
      if (a == Complex{}) continue;
      const Complex* brow = &other.data_[k * other.cols_];
      Complex* orow = &out.data_[r * other.cols_];
      for (std::size_t c = 0; c < other.cols_; ++c) orow[c] += a * brow[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(Complex scalar) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::conj() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::trace: non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::max_row_sum() const {
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
    m = std::max(m, s);
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const Complex v = a(ra, ca);
      if (v == Complex{}) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = v * b(rb, cb);
    }
  return out;
}

Matrix mat_exp(const Matrix& a, Complex scale) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_exp: matrix must be square");
  const std::size_t n = a.rows();
  Matrix b = a * scale;

  // Halve until the norm is at most 1/2, keeping the scale a power of two.
  int squarings = 0;
  const double norm = b.max_row_sum();
  if (std::isfinite(norm) && norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    b = b * Complex(std::ldexp(1.0, -squarings), 0.0);
  }

  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= kExpSeriesOrder; ++k) {
    term = term * b * Complex(1.0 / k, 0.0);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Matrix mat_pow(const Matrix& a, std::size_t p) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: matrix must be square");
  Matrix out = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < p; ++i) out = out * a;
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    if (std::abs(work(pivot, col)) < 1e-300)
      throw std::invalid_argument("inverse: singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Complex d = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

double hermiticity_defect(const Matrix& a) { return (a - a.adjoint()).max_abs(); }

std::size_t composite_index(std::size_t k, std::size_t l, std::size_t n) {
  if (k >= n || l >= n) throw std::invalid_argument("composite_index: index out of range");
  return k * n + l;
}

VertexTensor::VertexTensor(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n * n * n)
    throw std::invalid_argument("VertexTensor: entries length must be n^4");
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("VertexTensor: entries must be finite");
}

VertexTensor VertexTensor::identity(std::size_t n) {
  VertexTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j, i, j) = 1.0;
  return t;
}

VertexTensor VertexTensor::permutation(std::size_t n) {
  VertexTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j, j, i) = 1.0;
  return t;
}

VertexTensor VertexTensor::swapped_outputs() const {
  VertexTensor out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) out.at(i, j, k, l) = at(i, j, l, k);
  return out;
}

VertexTensor VertexTensor::operator*(Complex scalar) const {
  VertexTensor out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

VertexTensor VertexTensor::operator-(const VertexTensor& other) const {
  if (n_ != other.n_) throw std::invalid_argument("VertexTensor::operator-: dimension mismatch");
  VertexTensor out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

double VertexTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Matrix tensor_to_matrix(const VertexTensor& t) {
  const std::size_t n = t.n();
  Matrix m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) m(k * n + l, i * n + j) = t.at(i, j, k, l);
  return m;
}

VertexTensor matrix_to_tensor(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_tensor: non-square matrix");
  std::size_t n = 0;
  while (n * n < m.rows()) ++n;
  if (n * n != m.rows())
    throw std::invalid_argument("matrix_to_tensor: dimension is not a perfect square");
  VertexTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t.at(i, j, k, l) = m(k * n + l, i * n + j);
  return t;
}

Matrix permutation_op(std::size_t n) {
  if (n < 1) throw std::invalid_argument("permutation_op: n must be positive");
  Matrix p(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) p(k * n + l, l * n + k) = 1.0;
  return p;
}

ChainOperator embed_two_site(const Matrix& op4, std::size_t k, std::size_t sites,
                             std::size_t local_dim) {
  const std::size_t n = local_dim;
  if (op4.rows() != n * n || op4.cols() != n * n)
    throw std::invalid_argument("embed_two_site: operator must be n^2 x n^2");
  if (k < 1 || k > sites) throw std::invalid_argument("embed_two_site: site index out of range");
  const std::size_t dim = checked_pow(n, sites, kChainDimGuard);

  // Site s (1-based) occupies digit s of the basis index, site 1 most
  // significant; k = sites pairs with site 1 across the boundary.
  const std::size_t s1 = k - 1;
  const std::size_t s2 = k % sites;
  std::vector<std::size_t> weight(sites, 1);
  for (std::size_t s = 0; s < sites; ++s)
    for (std::size_t t = s + 1; t < sites; ++t) weight[s] *= n;

  Matrix out(dim, dim);
  for (std::size_t in = 0; in < dim; ++in) {
    const std::size_t d1 = (in / weight[s1]) % n;
    const std::size_t d2 = (in / weight[s2]) % n;
    const std::size_t base = in - d1 * weight[s1] - d2 * weight[s2];
    const std::size_t col2 = d1 * n + d2;
    for (std::size_t o1 = 0; o1 < n; ++o1)
      for (std::size_t o2 = 0; o2 < n; ++o2) {
        const Complex v = op4(o1 * n + o2, col2);
        if (v == Complex{}) continue;
        const std::size_t outIndex = base + o1 * weight[s1] + o2 * weight[s2];
        out(outIndex, in) += v;
      }
  }
  return ChainOperator{n, sites, std::move(out)};
}

}  // namespace yblab
