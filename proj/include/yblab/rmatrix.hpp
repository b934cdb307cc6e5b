#pragma once

#include <optional>

#include "yblab/linalg.hpp"

namespace yblab {

/// Six-vertex weights in the symmetric sinh parametrization,
///
///   | sinh(u+a)    .         .        .       |
///   |    .      sinh(u)   sinh(a)     .       |
///   |    .      sinh(a)   sinh(u)     .       |
///   |    .         .         .     sinh(u+a)  |
///
/// read as tensor_to_matrix output (rows = outgoing pair).
VertexTensor six_vertex(Complex alpha, Complex u);

/// First-order XXZ weights: corners 1 - J*eps, middle block
/// [[-2 eps, 1 + J*eps], [1 + J*eps, -2 eps]].  At eps = 0 this is the
/// permutation tensor.
VertexTensor xxz_first_order(Complex coupling, Complex eps);

/// Gauge-twisted six-vertex weights with q = exp(i*gamma):
///
///   i * | sin g(d+1)      .                .            .      |
///       |     .        sin(g d)   e^{-i g d} sin g       .      |
///       |     .     e^{+i g d} sin g   sin(g d)          .      |
///       |     .           .                .        sin g(d+1) |
VertexTensor gauge_six_vertex(double gamma, Complex delta);

struct BRPair {
  VertexTensor b;  // exp(-z h) reshaped; the scattering form
  VertexTensor r;  // b with the outgoing pair swapped
};

/// B = exp(-z h) for a hermitian two-site generator h (n^2 x n^2), plus the
/// permuted form R[i][j][k][l] = B[i][j][l][k].  Throws if h is not
/// hermitian within 1e-12.
BRPair from_local_hamiltonian(const Matrix& h, Complex z);

VertexTensor rescale(const VertexTensor& t, Complex c);

enum class FamilyKind { six_vertex, xxz_first_order, gauge_six_vertex, from_local_h, custom };

struct FamilyParams {
  FamilyKind kind = FamilyKind::custom;
  Complex alpha{};                     // six-vertex anisotropy
  Complex coupling{};                  // xxz coupling J
  double gamma = 0.0;                  // gauge family, q = exp(i*gamma)
  std::optional<Matrix> local_h;       // from-local-h generator
  std::optional<VertexTensor> table;   // custom fixed tensor
};

/// A named family of vertex tensors evaluable at any spectral point.
/// Custom families are constant in the parameter; no integrability is
/// assumed anywhere, checkers always report residuals.
class SpectralRFamily {
 public:
  static SpectralRFamily six_vertex(Complex alpha);
  static SpectralRFamily xxz_first_order(Complex coupling);
  static SpectralRFamily gauge_six_vertex(double gamma);
  static SpectralRFamily from_local_hamiltonian(Matrix h);
  static SpectralRFamily custom(VertexTensor table);

  VertexTensor operator()(Complex point) const;
  std::size_t link_dim() const;
  const FamilyParams& params() const { return params_; }

 private:
  explicit SpectralRFamily(FamilyParams p) : params_(std::move(p)) {}
  FamilyParams params_;
};

}  // namespace yblab
