#include "yblab/integrability.hpp"

#include <cmath>

namespace yblab {

const char* to_string(StarVerdict v) {
  switch (v) {
    case StarVerdict::hopf: return "hopf";
    case StarVerdict::twisted: return "twisted";
    case StarVerdict::both: return "both";
    case StarVerdict::none: return "none";
  }
  return "none";
}

namespace {

struct SlotEmbeddings {
  Matrix m12, m13, m23;
};

SlotEmbeddings embed_slots(const VertexTensor& r12, const VertexTensor& r13,
                           const VertexTensor& r23) {
  const std::size_t n = r12.n();
  if (r13.n() != n || r23.n() != n)
    throw std::invalid_argument("ybe: link dimensions must agree");
  const Matrix eye = Matrix::identity(n);
  const Matrix p23 = kron(eye, permutation_op(n));
  SlotEmbeddings s;
  s.m12 = kron(tensor_to_matrix(r12), eye);
  s.m23 = kron(eye, tensor_to_matrix(r23));
  s.m13 = p23 * kron(tensor_to_matrix(r13), eye) * p23;
  return s;
}

}  // namespace

YbeReport ybe_residual_tensors(const VertexTensor& r12, const VertexTensor& r13,
                               const VertexTensor& r23) {
  const SlotEmbeddings s = embed_slots(r12, r13, r23);
  const Matrix lhs = s.m12 * s.m13 * s.m23;
  const Matrix rhs = s.m23 * s.m13 * s.m12;
  YbeReport rep;
  rep.residual = (lhs - rhs).max_abs();
  rep.lhs_norm = lhs.max_abs();
  return rep;
}

YbeReport ybe_residual(const SpectralRFamily& family, Complex lambda, Complex mu) {
  YbeReport rep = ybe_residual_tensors(family(lambda - mu), family(lambda), family(mu));
  rep.lambda = lambda;
  rep.mu = mu;
  return rep;
}

YbeReport ybe_residual_b_form(const SpectralRFamily& family, Complex theta12, Complex theta13,
                              Complex theta23) {
  if (std::abs(theta12 - (theta13 - theta23)) > 1e-12)
    throw std::invalid_argument("ybe_residual_b_form: requires theta12 = theta13 - theta23");
  const std::size_t n = family.link_dim();
  const Matrix eye = Matrix::identity(n);
  const auto b_at = [&](Complex theta) {
    return tensor_to_matrix(family(theta).swapped_outputs());
  };
  const Matrix b12_t23 = kron(b_at(theta23), eye);
  const Matrix b12_t12 = kron(b_at(theta12), eye);
  const Matrix b12_t13 = kron(b_at(theta13), eye);
  const Matrix b23_t13 = kron(eye, b_at(theta13));
  const Matrix b23_t12 = kron(eye, b_at(theta12));
  const Matrix b23_t23 = kron(eye, b_at(theta23));
  const Matrix lhs = b12_t23 * b23_t13 * b12_t12;
  const Matrix rhs = b23_t12 * b12_t13 * b23_t23;
  YbeReport rep;
  rep.residual = (lhs - rhs).max_abs();
  rep.lhs_norm = lhs.max_abs();
  rep.lambda = theta13;
  rep.mu = theta23;
  return rep;
}

double unitarity_residual(const VertexTensor& b) {
  const Matrix m = tensor_to_matrix(b);
  const Matrix eye = Matrix::identity(m.rows());
  const double left = (m * m.adjoint() - eye).max_abs();
  const double right = (m.adjoint() * m - eye).max_abs();
  return std::max(left, right);
}

double hermiticity_residual(const VertexTensor& r) {
  return hermiticity_defect(tensor_to_matrix(r));
}

double symmetry_residual(const VertexTensor& r) {
  const Matrix m = tensor_to_matrix(r);
  return (m - m.transpose()).max_abs();
}

StarReport classify_star(const VertexTensor& x, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classify_star: tol must be positive");
  StarReport rep;
  rep.unitarity = unitarity_residual(x);
  rep.hermiticity = hermiticity_residual(x);
  rep.symmetry = symmetry_residual(x);
  rep.tol = tol;
  const bool uni = rep.unitarity <= tol;
  const bool herm = rep.hermiticity <= tol;
  if (uni && herm)
    rep.verdict = StarVerdict::both;
  else if (uni)
    rep.verdict = StarVerdict::hopf;
  else if (herm)
    rep.verdict = StarVerdict::twisted;
  else
    rep.verdict = StarVerdict::none;
  return rep;
}

std::vector<std::pair<Complex, StarReport>> wick_scan(const Matrix& h, double radius, int samples,
                                                      double tol) {
  if (hermiticity_defect(h) > 1e-12)
    throw std::invalid_argument("wick_scan: generator must be hermitian");
  if (samples < 2) throw std::invalid_argument("wick_scan: need at least 2 samples per segment");
  if (!(radius > 0.0)) throw std::invalid_argument("wick_scan: radius must be positive");

  std::vector<std::pair<Complex, StarReport>> out;
  const auto classify_at = [&](Complex z) {
    out.emplace_back(z, classify_star(from_local_hamiltonian(h, z).b, tol));
  };
  classify_at(Complex{});
  for (int s = 1; s < samples; ++s) {
    const double x = radius * static_cast<double>(s) / (samples - 1);
    classify_at(Complex(x, 0.0));
  }
  for (int s = 1; s < samples; ++s) {
    const double x = radius * static_cast<double>(s) / (samples - 1);
    classify_at(Complex(0.0, x));
  }
  return out;
}

}  // namespace yblab
