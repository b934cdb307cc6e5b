#include "yblab/rmatrix.hpp"

#include <cmath>

namespace yblab {

VertexTensor six_vertex(Complex alpha, Complex u) {
  VertexTensor t(2);
  const Complex corner = std::sinh(u + alpha);
  const Complex mid = std::sinh(u);
  const Complex off = std::sinh(alpha);
  t.at(0, 0, 0, 0) = corner;
  t.at(1, 1, 1, 1) = corner;
  t.at(0, 1, 0, 1) = mid;
  t.at(1, 0, 1, 0) = mid;
  t.at(1, 0, 0, 1) = off;
  t.at(0, 1, 1, 0) = off;
  return t;
}

VertexTensor xxz_first_order(Complex coupling, Complex eps) {
  VertexTensor t(2);
  const Complex corner = 1.0 - coupling * eps;
  const Complex mid = -2.0 * eps;
  const Complex off = 1.0 + coupling * eps;
  t.at(0, 0, 0, 0) = corner;
  t.at(1, 1, 1, 1) = corner;
  t.at(0, 1, 0, 1) = mid;
  t.at(1, 0, 1, 0) = mid;
  t.at(1, 0, 0, 1) = off;
  t.at(0, 1, 1, 0) = off;
  return t;
}

VertexTensor gauge_six_vertex(double gamma, Complex delta) {
  VertexTensor t(2);
  const Complex im(0.0, 1.0);
  const Complex corner = im * std::sin(gamma * (delta + 1.0));
  const Complex mid = im * std::sin(gamma * delta);
  const Complex sg = std::sin(Complex(gamma, 0.0));
  t.at(0, 0, 0, 0) = corner;
  t.at(1, 1, 1, 1) = corner;
  t.at(0, 1, 0, 1) = mid;
  t.at(1, 0, 1, 0) = mid;
  // upper-right of the display carries exp(-i gamma delta)
  t.at(1, 0, 0, 1) = im * std::exp(-im * gamma * delta) * sg;
  t.at(0, 1, 1, 0) = im * std::exp(im * gamma * delta) * sg;
  return t;
}

BRPair from_local_hamiltonian(const Matrix& h, Complex z) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("from_local_hamiltonian: generator must be square");
  if (hermiticity_defect(h) > 1e-12)
    throw std::invalid_argument("from_local_hamiltonian: generator must be hermitian");
  VertexTensor b = matrix_to_tensor(mat_exp(h, -z));
  VertexTensor r = b.swapped_outputs();
  return BRPair{std::move(b), std::move(r)};
}

VertexTensor rescale(const VertexTensor& t, Complex c) { return t * c; }

SpectralRFamily SpectralRFamily::six_vertex(Complex alpha) {
  FamilyParams p;
  p.kind = FamilyKind::six_vertex;
  p.alpha = alpha;
  return SpectralRFamily(std::move(p));
}

SpectralRFamily SpectralRFamily::xxz_first_order(Complex coupling) {
  FamilyParams p;
  p.kind = FamilyKind::xxz_first_order;
  p.coupling = coupling;
  return SpectralRFamily(std::move(p));
}

SpectralRFamily SpectralRFamily::gauge_six_vertex(double gamma) {
  FamilyParams p;
  p.kind = FamilyKind::gauge_six_vertex;
  p.gamma = gamma;
  return SpectralRFamily(std::move(p));
}

SpectralRFamily SpectralRFamily::from_local_hamiltonian(Matrix h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("SpectralRFamily: generator must be square");
  if (hermiticity_defect(h) > 1e-12)
    throw std::invalid_argument("SpectralRFamily: generator must be hermitian");
  std::size_t n = 0;
  while (n * n < h.rows()) ++n;
  if (n * n != h.rows())
    throw std::invalid_argument("SpectralRFamily: generator dimension is not a perfect square");
  FamilyParams p;
  p.kind = FamilyKind::from_local_h;
  p.local_h = std::move(h);
  return SpectralRFamily(std::move(p));
}

SpectralRFamily SpectralRFamily::custom(VertexTensor table) {
  FamilyParams p;
  p.kind = FamilyKind::custom;
  p.table = std::move(table);
  return SpectralRFamily(std::move(p));
}

VertexTensor SpectralRFamily::operator()(Complex point) const {
  switch (params_.kind) {
    case FamilyKind::six_vertex:
      return yblab::six_vertex(params_.alpha, point);
    case FamilyKind::xxz_first_order:
      return yblab::xxz_first_order(params_.coupling, point);
    case FamilyKind::gauge_six_vertex:
      return yblab::gauge_six_vertex(params_.gamma, point);
    case FamilyKind::from_local_h:
      return yblab::from_local_hamiltonian(*params_.local_h, point).r;
    case FamilyKind::custom:
      return *params_.table;
  }
  throw std::logic_error("SpectralRFamily: unknown family kind");
}

std::size_t SpectralRFamily::link_dim() const {
  switch (params_.kind) {
    case FamilyKind::six_vertex:
    case FamilyKind::xxz_first_order:
    case FamilyKind::gauge_six_vertex:
      return 2;
    case FamilyKind::from_local_h: {
      std::size_t n = 0;
      while (n * n < params_.local_h->rows()) ++n;
      return n;
    }
    case FamilyKind::custom:
      return params_.table->n();
  }
  throw std::logic_error("SpectralRFamily: unknown family kind");
}

}  // namespace yblab
