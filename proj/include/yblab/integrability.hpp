#pragma once

#include <utility>
#include <vector>

#include "yblab/rmatrix.hpp"

namespace yblab {

enum class StarVerdict { hopf, twisted, both, none };
const char* to_string(StarVerdict v);

/// Residuals of the two star criteria for a single vertex tensor.  The
/// unitarity entry treats the tensor as B; hermiticity and symmetry read
/// it as R.  A residual counts as zero iff it is <= tol.
struct StarReport {
  double unitarity = 0.0;
  double hermiticity = 0.0;
  double symmetry = 0.0;
  StarVerdict verdict = StarVerdict::none;
  double tol = 0.0;
};

struct YbeReport {
  double residual = 0.0;
  double lhs_norm = 0.0;
  Complex lambda{};
  Complex mu{};
  double relative() const { return residual / std::max(lhs_norm, 1.0); }
};

/// max-norm of R12 R13 R23 - R23 R13 R12 on the triple space, for three
/// already-evaluated tensors.  Slot embeddings: R12 = M (x) 1,
/// R23 = 1 (x) M, R13 = (1 (x) P)(M (x) 1)(1 (x) P).
YbeReport ybe_residual_tensors(const VertexTensor& r12, const VertexTensor& r13,
                               const VertexTensor& r23);

/// Family version with the difference convention: arguments lambda - mu,
/// lambda, mu.
YbeReport ybe_residual(const SpectralRFamily& family, Complex lambda, Complex mu);

/// Braid form B12(t23) B23(t13) B12(t12) = B23(t12) B12(t13) B23(t23) with
/// B the output-swapped family tensor.  Requires t12 = t13 - t23 within
/// 1e-12; the residual value equals ybe_residual(family, t13, t23) up to
/// rounding.
YbeReport ybe_residual_b_form(const SpectralRFamily& family, Complex theta12, Complex theta13,
                              Complex theta23);

/// max of ||M M+ - 1||_max and ||M+ M - 1||_max for M = tensor_to_matrix(b).
double unitarity_residual(const VertexTensor& b);

/// ||M - M+||_max for M = tensor_to_matrix(r).
double hermiticity_residual(const VertexTensor& r);

/// ||M - M^T||_max: deviation from R_ij^kl = R_kl^ij.
double symmetry_residual(const VertexTensor& r);

StarReport classify_star(const VertexTensor& x, double tol = 1e-10);

/// Star classification of exp(-z h) along the real segment [0, radius] and
/// the imaginary segment [0, i radius]; z = 0 is reported once, first.
std::vector<std::pair<Complex, StarReport>> wick_scan(const Matrix& h, double radius, int samples,
                                                      double tol = 1e-10);

}  // namespace yblab
