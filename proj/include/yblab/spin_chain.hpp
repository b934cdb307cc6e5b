#pragma once

#include <vector>

#include "yblab/transfer.hpp"

namespace yblab {

/// sigma1 = [[0,1],[1,0]], sigma2 = [[0,-i],[i,0]], sigma3 = [[1,0],[0,-1]],
/// basis |0> = (1,0).
struct PauliSet {
  Matrix sigma1, sigma2, sigma3;
};

PauliSet pauli_set();

/// Two-site XXZ generator s1 s1 + s2 s2 + J s3 s3:
///   [[ J, 0, 0, 0], [0, -J, 2, 0], [0, 2, -J, 0], [0, 0, 0, J]].
Matrix local_h(double coupling);

/// Periodic-chain Hamiltonian H = sum_k h_{k,k+1}, site N+1 = site 1.
ChainOperator hamiltonian(double coupling, std::size_t sites);

/// U = exp(-z H): unitary for imaginary z, hermitian positive for real z.
ChainOperator evolution(double coupling, Complex z, std::size_t sites);

/// T(eps) = B_{1,2} B_{2,3} ... B_{N,N+1} with B = exp(-eps h) embedded,
/// factors ordered left to right by increasing k.
ChainOperator trotter_transfer(double coupling, Complex eps, std::size_t sites);

struct TrotterSpec {
  double coupling = 1.0;
  Complex z{};
  std::size_t steps = 1;
  std::size_t sites = 2;
  Complex epsilon() const { return z / static_cast<double>(steps); }
};

enum class TrotterOrderStatus {
  estimated,    // slope fitted on at least two usable points
  exact,        // every error sat at the floor; product is exact here
  insufficient  // fewer than two points survived the floor cut
};

struct TrotterOrderReport {
  std::vector<std::size_t> steps;     // requested L values
  std::vector<double> errors;         // ||U - T(z/L)^L||_max per L
  std::vector<std::size_t> excluded;  // indices dropped below the 1e-13 floor
  double slope = 0.0;                 // meaningful when status == estimated
  TrotterOrderStatus status = TrotterOrderStatus::insufficient;
};

/// Least-squares slope of log||U - T(z/L)^L|| against log L.  First-order
/// product formulas give slope -1.
TrotterOrderReport trotter_order(double coupling, Complex z, std::size_t sites,
                                 const std::vector<std::size_t>& step_list);

/// eps(u) = -(1/2) sinh(u) / sinh(alpha); throws when sinh(alpha) = 0.
Complex epsilon_of_u(Complex u, Complex alpha);

/// arccosh(J) on the principal branch (Re >= 0); J = cosh(alpha).
Complex alpha_of_coupling(Complex coupling);

struct CorrespondenceReport {
  Complex u{};
  Complex alpha{};
  Complex epsilon{};
  Complex scale{};        // least-squares c minimizing ||c R_exp - R_sinh||
  double residual = 0.0;  // max-norm after fitting; O(|epsilon|^2)
  bool real_alpha = true; // false when the coupling sits off the real-alpha branch
};

/// Compares exp(-eps(u) h) weights against the sinh parametrization at the
/// same u, with J = cosh(alpha).
CorrespondenceReport correspondence_residual(double coupling, Complex u);

/// || T_trotter(eps) - C^dagger t(R(eps)) ||_max with R(eps) the
/// exponential vertex weights; O(eps^2).
double spin_vertex_bridge_residual(double coupling, Complex eps, std::size_t sites);

}  // namespace yblab
