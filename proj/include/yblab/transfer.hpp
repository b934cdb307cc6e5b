#pragma once

#include <vector>

#include "yblab/rmatrix.hpp"

namespace yblab {

/// Periodic N x M vertex lattice: `columns` horizontal sites per row,
/// `rows` rows, link dimension `link_dim`.
struct LatticeSpec {
  std::size_t columns = 1;
  std::size_t rows = 1;
  std::size_t link_dim = 2;
};

/// One generator of the RTT representation carried by a vertex tensor:
/// matrix[i][j] = R[a][i][b][j], with (a, b) the auxiliary in/out pair.
struct RepMatrix {
  std::size_t a = 0;
  std::size_t b = 0;
  Matrix matrix;
};

RepMatrix rep_T(const VertexTensor& r, std::size_t a, std::size_t b);

/// All n^2 representation matrices, ordered a*n + b.
std::vector<RepMatrix> rep_family(const VertexTensor& r);

/// Exchange-relation residual: max over (i,j,p,q) of
///   || sum_kl R_ij^kl T^L[k][p] T^M[l][q] - sum_kl T^M[j][l] T^L[i][k] R_kl^pq ||_max
/// with products taken in the representation space.  The two generator sets
/// must be complete (ordered a*n + b) and share one representation
/// dimension.
double rtt_residual(const VertexTensor& r12, const std::vector<RepMatrix>& t_lambda,
                    const std::vector<RepMatrix>& t_mu);

/// Row-to-row transfer matrix
///   t[(i_1..i_N)][(j_1..j_N)] = sum_b R_{b1 i1}^{b2 j1} ... R_{bN iN}^{b1 jN},
/// the auxiliary index flowing left to right with b_{N+1} = b_1.
ChainOperator transfer_matrix(const VertexTensor& r, std::size_t sites);

/// C |j1, j2, ..., jN> = |j2, ..., jN, j1>; unitary, C^N = 1.
ChainOperator cyclic_op(std::size_t sites, std::size_t local_dim);

/// max of ||[t(u), t(v)]||_max and ||[C, t(u)]||_max for the family.
double commuting_family_residual(const SpectralRFamily& family, std::size_t sites, Complex u,
                                 Complex v);

/// Z = trace(t^M).
Complex partition_transfer(const VertexTensor& r, const LatticeSpec& lattice);

/// Z summed vertex by vertex over every assignment of states to the 2NM
/// periodic links, vertex (r,c) carrying R_{h(r,c) v(r,c)}^{h(r,c+1) v(r+1,c)}.
/// Configurations are enumerated as base-n integers in row-major edge order
/// and accumulated sequentially, so the result is reproducible bit for bit.
Complex partition_bruteforce(const VertexTensor& r, const LatticeSpec& lattice);

}  // namespace yblab
