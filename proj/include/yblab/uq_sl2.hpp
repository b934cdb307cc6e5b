#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "yblab/transfer.hpp"

namespace yblab {

/// A d-dimensional realization of the q-deformed sl(2) generators with
/// unimodular q = exp(i*gamma).  Adopted relations:
///   k x+- k^-1 = q^(+-2) x+-,   [x+, x-] = (k - k^-1)/(q - q^-1).
struct UqSl2Rep {
  Complex q{};
  double gamma = 0.0;
  Matrix x_plus, x_minus, k;
};

/// x- = [[0,0],[q^(-1/2),0]], x+ = [[0,q^(1/2)],[0,0]], k = diag(q, q^-1).
/// Throws for q = +-1, where the relations degenerate.
UqSl2Rep standard_rep(double gamma);

/// max deviation of the three adopted relations, in the max norm.
double relations_residual(const UqSl2Rep& rep);

/// 2x2 auxiliary matrices of operators:
///   L+ = q^(1/2)  [[k^(1/2), (q-q^-1) x-], [0, k^(-1/2)]]
///   L- = q^(-1/2) [[k^(-1/2), 0], [-(q-q^-1) x+, k^(1/2)]]
/// with k^(1/2) = diag(q^(1/2), q^(-1/2)), principal roots.
struct LOperators {
  std::array<std::array<Matrix, 2>, 2> plus;
  std::array<std::array<Matrix, 2>, 2> minus;
};

LOperators l_operators(const UqSl2Rep& rep);

/// The exponential prefactor conventions for T(lambda) = f L+ - f^-1 L-.
/// The vertex-weight side always reads its argument through i*delta = lambda.
enum class TConvention { exp_lambda_gamma, exp_i_lambda_gamma, exp_gamma_delta };

constexpr std::array<TConvention, 3> kAllConventions = {
    TConvention::exp_lambda_gamma, TConvention::exp_i_lambda_gamma,
    TConvention::exp_gamma_delta};

const char* to_string(TConvention c);
std::optional<TConvention> convention_from_string(const std::string& name);

std::array<std::array<Matrix, 2>, 2> build_T(const UqSl2Rep& rep, Complex lambda,
                                             TConvention convention);

/// Exchange-relation residual of the gauge six-vertex weights against the
/// T(lambda) operators built from the standard representation.
double rtt_l_residual(double gamma, Complex lambda, Complex mu, TConvention convention);

struct ConventionSearchReport {
  std::optional<TConvention> winner;
  std::string failure;  // non-empty when no unique winner exists
  std::array<std::vector<double>, 3> table;  // residual per (convention, pair)
};

/// Evaluates every convention over the sample pairs and returns the unique
/// one whose residuals all sit below 1e-8.  Ties and all-fail outcomes are
/// reported, never silently picked.  Needs at least 3 pairs.
ConventionSearchReport convention_search(double gamma,
                                         const std::vector<std::pair<Complex, Complex>>& pairs);

struct UqStarReport {
  double twisted_residual = 0.0;  // max(||x+^dag - x-||, ||k^dag - k^-1||)
  double hopf_residual = 0.0;     // min over generators of the hermiticity defect
  double dev_x_plus = 0.0;
  double dev_x_minus = 0.0;
  double dev_k = 0.0;
};

UqStarReport star_check(const UqSl2Rep& rep);

}  // namespace yblab
