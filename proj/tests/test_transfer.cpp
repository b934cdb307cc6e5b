#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"
#include "yblab/integrability.hpp"
#include "yblab/transfer.hpp"

using namespace yblab;
using yblab::test::random_tensor;

TEST_CASE("rep_T of the permutation tensor gives matrix units") {
  const VertexTensor p = VertexTensor::permutation(2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const RepMatrix rm = rep_T(p, a, b);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          const Complex expected = (i == b && j == a) ? Complex(1.0) : Complex(0.0);
          CHECK(rm.matrix(i, j) == expected);
        }
    }
}

TEST_CASE("rep_T of the identity tensor") {
  const VertexTensor id = VertexTensor::identity(2);
  CHECK(test::max_abs_diff(rep_T(id, 0, 0).matrix, Matrix::identity(2)) == 0.0);
  CHECK(rep_T(id, 0, 1).matrix.max_abs() == 0.0);
  CHECK_THROWS_AS(rep_T(id, 2, 0), std::invalid_argument);
}

TEST_CASE("rep_T reads the six-vertex diagonal") {
  const RepMatrix rm = rep_T(six_vertex(1.0, 0.5), 0, 0);
  CHECK(std::abs(rm.matrix(0, 0) - std::sinh(1.5)) <= 1e-15);
  CHECK(std::abs(rm.matrix(1, 1) - std::sinh(0.5)) <= 1e-15);
  CHECK(std::abs(rm.matrix(0, 1)) == 0.0);
}

TEST_CASE("exchange residual vanishes at coincident arguments for any generators") {
  const VertexTensor r0 = VertexTensor::permutation(2) * Complex(1.7, 0.3);
  std::vector<RepMatrix> t;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix m = test::random_hermitian(3, unsigned(10 + a * 2 + b));
      t.push_back(RepMatrix{a, b, std::move(m)});
    }
  CHECK(rtt_residual(r0, t, t) <= 1e-15);
}

TEST_CASE("exchange residual with representation generators equals the triple-space one") {
  const SpectralRFamily fam = SpectralRFamily::six_vertex(0.7);
  const Complex lambda = 0.9, mu = 0.4;
  const double rtt = rtt_residual(fam(lambda - mu), rep_family(fam(lambda)),
                                  rep_family(fam(mu)));
  const double ybe = ybe_residual(fam, lambda, mu).residual;
  CHECK(rtt < 1e-10);
  CHECK(std::abs(rtt - ybe) <= 1e-12);

  // gauge family: both routes tiny as well
  const SpectralRFamily gv = SpectralRFamily::gauge_six_vertex(0.6);
  const double rtt_g = rtt_residual(gv(lambda - mu), rep_family(gv(lambda)),
                                    rep_family(gv(mu)));
  CHECK(rtt_g < 1e-10);
}

TEST_CASE("exchange residual flags a generic tensor") {
  const VertexTensor t = random_tensor(2, 29);
  const double r = rtt_residual(t, rep_family(t), rep_family(t));
  CHECK(r > 1e-2);
}

TEST_CASE("exchange residual validates its inputs") {
  const VertexTensor p = VertexTensor::permutation(2);
  std::vector<RepMatrix> good = rep_family(p);
  std::vector<RepMatrix> small(good.begin(), good.begin() + 2);
  CHECK_THROWS_AS(rtt_residual(p, small, good), std::invalid_argument);
  std::vector<RepMatrix> mismatched = good;
  mismatched[1].matrix = Matrix(3, 3);
  CHECK_THROWS_AS(rtt_residual(p, mismatched, good), std::invalid_argument);
}

TEST_CASE("transfer matrix of the identity tensor is n times the identity") {
  for (std::size_t n : {2, 3})
    for (std::size_t sites : {1, 2, 3}) {
      const ChainOperator t = transfer_matrix(VertexTensor::identity(n), sites);
      std::size_t dim = 1;
      for (std::size_t s = 0; s < sites; ++s) dim *= n;
      CHECK(test::max_abs_diff(t.matrix, Matrix::identity(dim) * double(n)) == 0.0);
    }
}

TEST_CASE("one-site transfer matrix traces the auxiliary space") {
  const ChainOperator t = transfer_matrix(six_vertex(1.0, 0.5), 1);
  // t_i^j = sum_b R_{bi}^{bj}
  CHECK(std::abs(t.matrix(0, 0) - (std::sinh(1.5) + std::sinh(0.5))) <= 1e-14);
  CHECK(std::abs(t.matrix(1, 1) - (std::sinh(1.5) + std::sinh(0.5))) <= 1e-14);
  CHECK(std::abs(t.matrix(0, 1)) == 0.0);
  CHECK(std::abs(t.matrix.trace() - 5.3007495211771296) <= 1e-12);
}

TEST_CASE("transfer matrix of the permutation tensor is the cyclic shift") {
  for (std::size_t sites : {2, 3, 4}) {
    const ChainOperator t = transfer_matrix(VertexTensor::permutation(2), sites);
    const ChainOperator c = cyclic_op(sites, 2);
    CHECK(test::max_abs_diff(t.matrix, c.matrix) == 0.0);
  }
}

TEST_CASE("transfer matrix size guard") {
  CHECK_THROWS_AS(transfer_matrix(VertexTensor::identity(2), 13), size_guard_error);
}

TEST_CASE("cyclic operator") {
  CHECK(test::max_abs_diff(cyclic_op(1, 2).matrix, Matrix::identity(2)) == 0.0);
  CHECK(test::max_abs_diff(cyclic_op(2, 2).matrix, permutation_op(2)) == 0.0);

  const ChainOperator c = cyclic_op(3, 2);
  // |0,1,1> -> |1,1,0>: index 3 -> index 6
  CHECK(c.matrix(6, 3) == Complex(1.0));
  CHECK(test::max_abs_diff(mat_pow(c.matrix, 3), Matrix::identity(8)) == 0.0);
  CHECK(test::max_abs_diff(c.matrix * c.matrix.adjoint(), Matrix::identity(8)) == 0.0);
}

TEST_CASE("transfer matrices commute along the six-vertex family") {
  const SpectralRFamily fam = SpectralRFamily::six_vertex(0.7);
  CHECK(commuting_family_residual(fam, 3, 0.3, 1.1) <= 1e-10);
  // coincident arguments: [t(u), t(u)] vanishes identically, and the
  // reported residual only carries the [C, t] rounding
  const Matrix tu = transfer_matrix(fam(0.5), 3).matrix;
  CHECK(commutator(tu, tu).max_abs() == 0.0);
  CHECK(commuting_family_residual(fam, 3, 0.5, 0.5) <= 1e-12);
  const SpectralRFamily id = SpectralRFamily::custom(VertexTensor::identity(2));
  CHECK(commuting_family_residual(id, 3, 0.1, 0.9) == 0.0);
}

TEST_CASE("transfer matrix is translation invariant") {
  const ChainOperator t = transfer_matrix(six_vertex(0.7, 0.4), 3);
  const Matrix c = cyclic_op(3, 2).matrix;
  CHECK(test::max_abs_diff(c * t.matrix * c.adjoint(), t.matrix) <= 1e-12);
}

TEST_CASE("one-cell partition function collapses to a double trace") {
  const VertexTensor r = six_vertex(1.0, 0.5);
  Complex direct{};
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t i = 0; i < 2; ++i) direct += r.at(b, i, b, i);
  const LatticeSpec cell{1, 1, 2};
  CHECK(std::abs(partition_bruteforce(r, cell) - direct) <= 1e-15);
  CHECK(std::abs(partition_transfer(r, cell) - direct) <= 1e-15);
  CHECK(std::abs(direct - 5.3007495211771296) <= 1e-12);
}

TEST_CASE("zero tensor has zero partition function") {
  const LatticeSpec lat{2, 2, 2};
  CHECK(partition_bruteforce(VertexTensor(2), lat) == Complex(0.0));
}

TEST_CASE("identity tensor partition function counts line configurations") {
  // delta weights force constant links along rows and columns: n^(N+M)
  const LatticeSpec lat{2, 3, 2};
  const Complex zt = partition_transfer(VertexTensor::identity(2), lat);
  const Complex zb = partition_bruteforce(VertexTensor::identity(2), lat);
  CHECK(zt == Complex(32.0));
  CHECK(zb == Complex(32.0));
}

TEST_CASE("transfer and brute-force partition functions agree") {
  for (std::size_t cols : {1, 2, 3})
    for (std::size_t rows : {1, 2, 3})
      for (double alpha : {0.5, 1.0})
        for (double u : {0.2, 1.0}) {
          const VertexTensor r = six_vertex(alpha, u);
          const LatticeSpec lat{cols, rows, 2};
          const Complex zt = partition_transfer(r, lat);
          const Complex zb = partition_bruteforce(r, lat);
          CHECK(std::abs(zt - zb) <= 1e-9 * std::abs(zb));
        }
  // a complex-valued tensor exercises the same bookkeeping
  const VertexTensor g = gauge_six_vertex(0.6, 0.8);
  const LatticeSpec lat{2, 2, 2};
  CHECK(std::abs(partition_transfer(g, lat) - partition_bruteforce(g, lat)) <=
        1e-9 * std::abs(partition_bruteforce(g, lat)));
}

TEST_CASE("brute force size guard") {
  const LatticeSpec too_big{3, 5, 2};  // 2^(2*15) > 2^24
  CHECK_THROWS_AS(partition_bruteforce(VertexTensor::identity(2), too_big), size_guard_error);
}
