#include "yblab/spin_chain.hpp"

#include <cmath>

namespace yblab {

namespace {
constexpr double kErrorFloor = 1e-13;
}

PauliSet pauli_set() {
  PauliSet p{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
  p.sigma1(0, 1) = 1.0;
  p.sigma1(1, 0) = 1.0;
  p.sigma2(0, 1) = Complex(0.0, -1.0);
  p.sigma2(1, 0) = Complex(0.0, 1.0);
  p.sigma3(0, 0) = 1.0;
  p.sigma3(1, 1) = -1.0;
  return p;
}

Matrix local_h(double coupling) {
  const PauliSet p = pauli_set();
  return kron(p.sigma1, p.sigma1) + kron(p.sigma2, p.sigma2) +
         kron(p.sigma3, p.sigma3) * Complex(coupling, 0.0);
}

ChainOperator hamiltonian(double coupling, std::size_t sites) {
  if (sites < 2) throw std::invalid_argument("hamiltonian: need at least two sites");
  checked_pow(2, sites, kChainDimGuard);
  const Matrix h = local_h(coupling);
  ChainOperator acc = embed_two_site(h, 1, sites, 2);
  for (std::size_t k = 2; k <= sites; ++k)
    acc.matrix = acc.matrix + embed_two_site(h, k, sites, 2).matrix;
  return acc;
}

ChainOperator evolution(double coupling, Complex z, std::size_t sites) {
  ChainOperator h = hamiltonian(coupling, sites);
  h.matrix = mat_exp(h.matrix, -z);
  return h;
}

ChainOperator trotter_transfer(double coupling, Complex eps, std::size_t sites) {
  if (sites < 2) throw std::invalid_argument("trotter_transfer: need at least two sites");
  checked_pow(2, sites, kChainDimGuard);
  const Matrix b = mat_exp(local_h(coupling), -eps);
  ChainOperator acc = embed_two_site(b, 1, sites, 2);
  for (std::size_t k = 2; k <= sites; ++k)
    acc.matrix = acc.matrix * embed_two_site(b, k, sites, 2).matrix;
  return acc;
}

TrotterOrderReport trotter_order(double coupling, Complex z, std::size_t sites,
                                 const std::vector<std::size_t>& step_list) {
  if (step_list.size() < 3)
    throw std::invalid_argument("trotter_order: need at least 3 step counts");
  for (std::size_t i = 1; i < step_list.size(); ++i)
    if (step_list[i] <= step_list[i - 1])
      throw std::invalid_argument("trotter_order: step counts must increase");

  const Matrix u = evolution(coupling, z, sites).matrix;
  TrotterOrderReport rep;
  rep.steps = step_list;
  for (std::size_t idx = 0; idx < step_list.size(); ++idx) {
    const std::size_t steps = step_list[idx];
    const Matrix t = trotter_transfer(coupling, z / static_cast<double>(steps), sites).matrix;
    const double err = (u - mat_pow(t, steps)).max_abs();
    rep.errors.push_back(err);
    if (err < kErrorFloor) rep.excluded.push_back(idx);
  }

  std::vector<double> xs, ys;
  for (std::size_t idx = 0; idx < step_list.size(); ++idx) {
    if (rep.errors[idx] < kErrorFloor) continue;
    xs.push_back(std::log(static_cast<double>(step_list[idx])));
    ys.push_back(std::log(rep.errors[idx]));
  }
  if (xs.empty()) {
    rep.status = TrotterOrderStatus::exact;
    return rep;
  }
  if (xs.size() < 2) {
    rep.status = TrotterOrderStatus::insufficient;
    return rep;
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  rep.slope = num / den;
  rep.status = TrotterOrderStatus::estimated;
  return rep;
}

Complex epsilon_of_u(Complex u, Complex alpha) {
  const Complex sa = std::sinh(alpha);
  if (std::abs(sa) < 1e-14)
    throw std::invalid_argument("epsilon_of_u: sinh(alpha) vanishes");
  return -0.5 * std::sinh(u) / sa;
}

Complex alpha_of_coupling(Complex coupling) { return std::acosh(coupling); }

CorrespondenceReport correspondence_residual(double coupling, Complex u) {
  CorrespondenceReport rep;
  rep.u = u;
  rep.alpha = alpha_of_coupling(Complex(coupling, 0.0));
  rep.real_alpha = coupling > 1.0;
  rep.epsilon = epsilon_of_u(u, rep.alpha);

  const VertexTensor exact = from_local_hamiltonian(local_h(coupling), rep.epsilon).r;
  const VertexTensor sinh_form = six_vertex(rep.alpha, u);

  Complex num{};
  double den = 0.0;
  for (std::size_t i = 0; i < exact.entries().size(); ++i) {
    num += std::conj(exact.entries()[i]) * sinh_form.entries()[i];
    den += std::norm(exact.entries()[i]);
  }
  rep.scale = num / den;
  rep.residual = (exact * rep.scale - sinh_form).max_abs();
  return rep;
}

double spin_vertex_bridge_residual(double coupling, Complex eps, std::size_t sites) {
  const ChainOperator trotter = trotter_transfer(coupling, eps, sites);
  const VertexTensor r = from_local_hamiltonian(local_h(coupling), eps).r;
  const ChainOperator t = transfer_matrix(r, sites);
  const Matrix c_dag = cyclic_op(sites, 2).matrix.adjoint();
  return (trotter.matrix - c_dag * t.matrix).max_abs();
}

}  // namespace yblab
