#include "yblab/uq_sl2.hpp"

#include <algorithm>
#include <cmath>

namespace yblab {

namespace {
constexpr double kWinnerTol = 1e-8;

Complex conv_factor(TConvention c, Complex lambda, double gamma) {
  const Complex im(0.0, 1.0);
  switch (c) {
    case TConvention::exp_lambda_gamma:
      return std::exp(lambda * gamma);
    case TConvention::exp_i_lambda_gamma:
      return std::exp(im * lambda * gamma);
    case TConvention::exp_gamma_delta:
      // delta = -i lambda
      return std::exp(gamma * (-im * lambda));
  }
  throw std::logic_error("unknown convention");
}
}  // namespace

UqSl2Rep standard_rep(double gamma) {
  const Complex q = std::exp(Complex(0.0, gamma));
  if (std::abs(q - 1.0) < 1e-12 || std::abs(q + 1.0) < 1e-12)
    throw std::invalid_argument("standard_rep: q = +-1 is degenerate");
  const Complex qh = std::exp(Complex(0.0, gamma / 2.0));
  UqSl2Rep rep;
  rep.q = q;
  rep.gamma = gamma;
  rep.x_minus = Matrix(2, 2);
  rep.x_minus(1, 0) = 1.0 / qh;
  rep.x_plus = Matrix(2, 2);
  rep.x_plus(0, 1) = qh;
  rep.k = Matrix(2, 2);
  rep.k(0, 0) = q;
  rep.k(1, 1) = 1.0 / q;
  return rep;
}

double relations_residual(const UqSl2Rep& rep) {
  const Complex q = rep.q;
  if (std::abs(q - 1.0) < 1e-12 || std::abs(q + 1.0) < 1e-12)
    throw std::invalid_argument("relations_residual: q = +-1 is degenerate");
  const Matrix kinv = inverse(rep.k);
  const double up = (rep.k * rep.x_plus * kinv - rep.x_plus * (q * q)).max_abs();
  const double down = (rep.k * rep.x_minus * kinv - rep.x_minus * (1.0 / (q * q))).max_abs();
  const Matrix cart = (rep.k - kinv) * (1.0 / (q - 1.0 / q));
  const double comm = (commutator(rep.x_plus, rep.x_minus) - cart).max_abs();
  return std::max({up, down, comm});
}

LOperators l_operators(const UqSl2Rep& rep) {
  const Complex q = rep.q;
  const Complex qh = std::exp(Complex(0.0, rep.gamma / 2.0));
  const std::size_t d = rep.k.rows();
  Matrix k_half(d, d), k_half_inv(d, d);
  // k^(1/2) = diag(q^(1/2), q^(-1/2)) in the standard representation; for a
  // general diagonal k take principal square roots of the diagonal.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j && rep.k(i, j) != Complex{})
        throw std::invalid_argument("l_operators: k must be diagonal");
  for (std::size_t i = 0; i < d; ++i) {
    if (std::abs(rep.k(i, i)) < 1e-300)
      throw std::invalid_argument("l_operators: singular k");
    k_half(i, i) = std::sqrt(rep.k(i, i));
    k_half_inv(i, i) = 1.0 / k_half(i, i);
  }
  const Complex qdiff = q - 1.0 / q;
  const Matrix zero(d, d);

  LOperators l;
  l.plus[0][0] = k_half * qh;
  l.plus[0][1] = rep.x_minus * (qdiff * qh);
  l.plus[1][0] = zero;
  l.plus[1][1] = k_half_inv * qh;
  l.minus[0][0] = k_half_inv * (1.0 / qh);
  l.minus[0][1] = zero;
  l.minus[1][0] = rep.x_plus * (-qdiff / qh);
  l.minus[1][1] = k_half * (1.0 / qh);
  return l;
}

const char* to_string(TConvention c) {
  switch (c) {
    case TConvention::exp_lambda_gamma: return "exp-lambda-gamma";
    case TConvention::exp_i_lambda_gamma: return "exp-i-lambda-gamma";
    case TConvention::exp_gamma_delta: return "exp-gamma-delta";
  }
  return "exp-lambda-gamma";
}

std::optional<TConvention> convention_from_string(const std::string& name) {
  for (TConvention c : kAllConventions)
    if (name == to_string(c)) return c;
  return std::nullopt;
}

std::array<std::array<Matrix, 2>, 2> build_T(const UqSl2Rep& rep, Complex lambda,
                                             TConvention convention) {
  const LOperators l = l_operators(rep);
  const Complex f = conv_factor(convention, lambda, rep.gamma);
  std::array<std::array<Matrix, 2>, 2> t;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      t[a][b] = l.plus[a][b] * f - l.minus[a][b] * (1.0 / f);
  return t;
}

double rtt_l_residual(double gamma, Complex lambda, Complex mu, TConvention convention) {
  const UqSl2Rep rep = standard_rep(gamma);
  const Complex im(0.0, 1.0);
  // i delta = lambda, so the weight argument is delta12 = -i (lambda - mu)
  const VertexTensor r12 = gauge_six_vertex(gamma, -im * (lambda - mu));

  const auto wrap = [](const std::array<std::array<Matrix, 2>, 2>& t) {
    std::vector<RepMatrix> v;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) v.push_back(RepMatrix{a, b, t[a][b]});
    return v;
  };
  return rtt_residual(r12, wrap(build_T(rep, lambda, convention)),
                      wrap(build_T(rep, mu, convention)));
}

ConventionSearchReport convention_search(double gamma,
                                         const std::vector<std::pair<Complex, Complex>>& pairs) {
  if (pairs.size() < 3)
    throw std::invalid_argument(
        "convention_search: insufficient discrimination, need at least 3 sample pairs");
  ConventionSearchReport rep;
  std::vector<TConvention> below;
  for (std::size_t ci = 0; ci < kAllConventions.size(); ++ci) {
    double worst = 0.0;
    for (const auto& [lambda, mu] : pairs) {
      const double r = rtt_l_residual(gamma, lambda, mu, kAllConventions[ci]);
      rep.table[ci].push_back(r);
      worst = std::max(worst, r);
    }
    if (worst < kWinnerTol) below.push_back(kAllConventions[ci]);
  }
  if (below.empty()) {
    rep.failure = "no convention reaches residual below 1e-8";
  } else if (below.size() > 1) {
    rep.failure = "insufficient discrimination: " + std::to_string(below.size()) +
                  " conventions tie below tolerance";
  } else {
    rep.winner = below.front();
  }
  return rep;
}

UqStarReport star_check(const UqSl2Rep& rep) {
  if (std::abs(std::abs(rep.q) - 1.0) > 1e-12)
    throw std::invalid_argument("star_check: |q| must be 1");
  UqStarReport out;
  const double tw_x = (rep.x_plus.adjoint() - rep.x_minus).max_abs();
  const double tw_k = (rep.k.adjoint() - inverse(rep.k)).max_abs();
  out.twisted_residual = std::max(tw_x, tw_k);
  out.dev_x_plus = hermiticity_defect(rep.x_plus);
  out.dev_x_minus = hermiticity_defect(rep.x_minus);
  out.dev_k = hermiticity_defect(rep.k);
  out.hopf_residual = std::min({out.dev_x_plus, out.dev_x_minus, out.dev_k});
  return out;
}

}  // namespace yblab
