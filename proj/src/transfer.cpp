#include "yblab/transfer.hpp"

#include <cmath>

namespace yblab {

RepMatrix rep_T(const VertexTensor& r, std::size_t a, std::size_t b) {
  const std::size_t n = r.n();
  if (a >= n || b >= n) throw std::invalid_argument("rep_T: auxiliary index out of range");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = r.at(a, i, b, j);
  return RepMatrix{a, b, std::move(m)};
}

std::vector<RepMatrix> rep_family(const VertexTensor& r) {
  const std::size_t n = r.n();
  std::vector<RepMatrix> out;
  out.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.push_back(rep_T(r, a, b));
  return out;
}

double rtt_residual(const VertexTensor& r12, const std::vector<RepMatrix>& t_lambda,
                    const std::vector<RepMatrix>& t_mu) {
  const std::size_t n = r12.n();
  if (t_lambda.size() != n * n || t_mu.size() != n * n)
    throw std::invalid_argument("rtt_residual: need n^2 generators per set");
  const std::size_t d = t_lambda.front().matrix.rows();
  for (const auto* set : {&t_lambda, &t_mu})
    for (std::size_t idx = 0; idx < set->size(); ++idx) {
      const RepMatrix& g = (*set)[idx];
      if (g.a * n + g.b != idx)
        throw std::invalid_argument("rtt_residual: generators must be ordered a*n + b");
      if (g.matrix.rows() != d || g.matrix.cols() != d)
        throw std::invalid_argument("rtt_residual: representation dimension mismatch");
    }

  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Matrix lhs(d, d);
          Matrix rhs(d, d);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              const Complex w_in = r12.at(i, j, k, l);
              if (w_in != Complex{})
                lhs = lhs + t_lambda[k * n + p].matrix * t_mu[l * n + q].matrix * w_in;
              const Complex w_out = r12.at(k, l, p, q);
              if (w_out != Complex{})
                rhs = rhs + t_mu[j * n + l].matrix * t_lambda[i * n + k].matrix * w_out;
            }
          res = std::max(res, (lhs - rhs).max_abs());
        }
  return res;
}

ChainOperator transfer_matrix(const VertexTensor& r, std::size_t sites) {
  const std::size_t n = r.n();
  if (sites < 1) throw std::invalid_argument("transfer_matrix: need at least one site");
  checked_pow(n, sites, kChainDimGuard);

  const std::vector<RepMatrix> reps = rep_family(r);
  // partial[a*n+b] holds the ordered product over the first k columns.
  std::vector<Matrix> partial(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) partial[a * n + b] = reps[a * n + b].matrix;
  for (std::size_t col = 1; col < sites; ++col) {
    const std::size_t dim = partial.front().rows();
    std::vector<Matrix> next(n * n, Matrix(dim * n, dim * n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        Matrix acc(dim * n, dim * n);
        for (std::size_t b = 0; b < n; ++b)
          acc = acc + kron(partial[a * n + b], reps[b * n + c].matrix);
        next[a * n + c] = std::move(acc);
      }
    partial = std::move(next);
  }
  Matrix t(partial.front().rows(), partial.front().cols());
  for (std::size_t a = 0; a < n; ++a) t = t + partial[a * n + a];
  return ChainOperator{n, sites, std::move(t)};
}

ChainOperator cyclic_op(std::size_t sites, std::size_t local_dim) {
  const std::size_t n = local_dim;
  if (sites < 1 || n < 1) throw std::invalid_argument("cyclic_op: bad dimensions");
  const std::size_t dim = checked_pow(n, sites, kChainDimGuard);
  Matrix c(dim, dim);
  const std::size_t msd = dim / n;
  for (std::size_t in = 0; in < dim; ++in) {
    // |j1, j2, ..., jN> -> |j2, ..., jN, j1>, site 1 most significant
    const std::size_t j1 = in / msd;
    const std::size_t rest = in % msd;
    const std::size_t out = rest * n + j1;
    c(out, in) = 1.0;
  }
  return ChainOperator{n, sites, std::move(c)};
}

double commuting_family_residual(const SpectralRFamily& family, std::size_t sites, Complex u,
                                 Complex v) {
  const ChainOperator tu = transfer_matrix(family(u), sites);
  const ChainOperator tv = transfer_matrix(family(v), sites);
  const ChainOperator c = cyclic_op(sites, family.link_dim());
  const double tt = commutator(tu.matrix, tv.matrix).max_abs();
  const double ct = commutator(c.matrix, tu.matrix).max_abs();
  return std::max(tt, ct);
}

Complex partition_transfer(const VertexTensor& r, const LatticeSpec& lattice) {
  const ChainOperator t = transfer_matrix(r, lattice.columns);
  return mat_pow(t.matrix, lattice.rows).trace();
}

Complex partition_bruteforce(const VertexTensor& r, const LatticeSpec& lattice) {
  const std::size_t n = r.n();
  const std::size_t cols = lattice.columns;
  const std::size_t rows = lattice.rows;
  if (cols < 1 || rows < 1) throw std::invalid_argument("partition_bruteforce: empty lattice");
  const std::size_t links = 2 * cols * rows;
  const std::size_t total = checked_pow(n, links, kBruteForceGuard);

  // Edge order: all horizontal links h(r,c) = r*cols + c first, then the
  // vertical ones v(r,c) = rows*cols + r*cols + c.
  std::vector<std::size_t> link(links, 0);
  const auto h = [&](std::size_t rr, std::size_t cc) { return link[rr * cols + cc % cols]; };
  const auto v = [&](std::size_t rr, std::size_t cc) {
    return link[rows * cols + (rr % rows) * cols + cc];
  };

  Complex z{};
  for (std::size_t cfg = 0; cfg < total; ++cfg) {
    Complex w = 1.0;
    for (std::size_t rr = 0; rr < rows && w != Complex{}; ++rr)
      for (std::size_t cc = 0; cc < cols; ++cc)
        w *= r.at(h(rr, cc), v(rr, cc), h(rr, cc + 1), v(rr + 1, cc));
    z += w;
    for (std::size_t d = 0; d < links; ++d) {
      if (++link[d] < n) break;
      link[d] = 0;
    }
  }
  return z;
}

}  // namespace yblab
