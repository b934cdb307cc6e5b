#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"
#include "yblab/spin_chain.hpp"

using namespace yblab;
using yblab::test::jacobi_eigenvalues;

TEST_CASE("pauli algebra holds to machine precision") {
  const PauliSet p = pauli_set();
  const Matrix* s[3] = {&p.sigma1, &p.sigma2, &p.sigma3};
  const Complex two_i(0.0, 2.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Matrix comm = commutator(*s[a], *s[b]);
      if (a == b) {
        CHECK(comm.max_abs() <= 1e-15);
      } else {
        // [s_a, s_b] = 2 i eps_abc s_c
        const int c = 3 - a - b;
        const double sign = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
        CHECK(test::max_abs_diff(comm, (*s[c]) * (two_i * sign)) <= 1e-15);
      }
      const Matrix anti = (*s[a]) * (*s[b]) + (*s[b]) * (*s[a]);
      const Matrix anti_expected = Matrix::identity(2) * Complex(a == b ? 2.0 : 0.0, 0.0);
      CHECK(test::max_abs_diff(anti, anti_expected) <= 1e-15);
    }
}

TEST_CASE("local generator layout") {
  const Matrix h0 = local_h(0.0);
  const double flip[4][4] = {{0, 0, 0, 0}, {0, 0, 2, 0}, {0, 2, 0, 0}, {0, 0, 0, 0}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(h0(r, c) == Complex(flip[r][c]));

  const Matrix h = local_h(1.0);
  const double expected[4][4] = {{1, 0, 0, 0}, {0, -1, 2, 0}, {0, 2, -1, 0}, {0, 0, 0, 1}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(h(r, c) == Complex(expected[r][c]));

  CHECK(hermiticity_defect(local_h(-2.3)) == 0.0);
}

TEST_CASE("local generator spectrum at J = 1") {
  const std::vector<double> eig = jacobi_eigenvalues(local_h(1.0));
  const std::vector<double> expected = {-3, 1, 1, 1};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(eig[i] - expected[i]) <= 1e-12);
}

TEST_CASE("two-site periodic chain doubles the single bond") {
  const ChainOperator h = hamiltonian(1.0, 2);
  const Matrix bond = embed_two_site(local_h(1.0), 1, 2, 2).matrix;
  CHECK(test::max_abs_diff(h.matrix, bond * 2.0) == 0.0);
}

TEST_CASE("chain Hamiltonian is traceless and hermitian") {
  for (std::size_t sites : {3, 4, 5}) {
    const ChainOperator h = hamiltonian(1.0, sites);
    CHECK(std::abs(h.matrix.trace()) <= 1e-12);
    CHECK(hermiticity_defect(h.matrix) == 0.0);
  }
  CHECK_THROWS_AS(hamiltonian(1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian(1.0, 13), size_guard_error);
}

TEST_CASE("bond terms commute unless adjacent") {
  const Matrix b1 = embed_two_site(local_h(1.0), 1, 5, 2).matrix;
  const Matrix b3 = embed_two_site(local_h(1.0), 3, 5, 2).matrix;
  CHECK(commutator(b1, b3).max_abs() <= 1e-12);
  const Matrix b2 = embed_two_site(local_h(1.0), 2, 5, 2).matrix;
  CHECK(commutator(b1, b2).max_abs() > 1.0);
}

TEST_CASE("chain Hamiltonian commutes with the cyclic shift") {
  const ChainOperator h = hamiltonian(1.3, 4);
  const Matrix c = cyclic_op(4, 2).matrix;
  CHECK(commutator(h.matrix, c).max_abs() <= 1e-12);
}

TEST_CASE("evolution operator basics") {
  CHECK(test::max_abs_diff(evolution(1.0, 0.0, 3).matrix, Matrix::identity(8)) == 0.0);

  const Matrix u = evolution(1.0, Complex(0.0, 0.7), 3).matrix;
  CHECK(test::max_abs_diff(u * u.adjoint(), Matrix::identity(8)) <= 1e-10);
  // unitary out to |t| = 2 on six sites
  const Matrix u6 = evolution(1.0, Complex(0.0, 2.0), 6).matrix;
  CHECK(test::max_abs_diff(u6 * u6.adjoint(), Matrix::identity(64)) <= 1e-10);

  const Matrix boltz = evolution(1.0, 0.7, 3).matrix;
  for (double eig : jacobi_eigenvalues(boltz)) CHECK(eig > 0.0);
}

TEST_CASE("trotter product at eps = 0 and the two-site degeneracy") {
  CHECK(test::max_abs_diff(trotter_transfer(1.0, 0.0, 3).matrix, Matrix::identity(8)) == 0.0);

  // N = 2: both factors coincide, so T(z/L)^L recovers exp(-z H) exactly
  const TrotterSpec spec{1.0, 0.5, 8, 2};
  const Matrix u = evolution(spec.coupling, spec.z, spec.sites).matrix;
  const Matrix t = trotter_transfer(spec.coupling, spec.epsilon(), spec.sites).matrix;
  CHECK(test::max_abs_diff(u, mat_pow(t, spec.steps)) <= 1e-12);
  CHECK(spec.epsilon() == Complex(0.0625));
}

TEST_CASE("trotter error falls off at first order") {
  for (double coupling : {0.5, 1.0, 2.0})
    for (const Complex z : {Complex(0.5, 0.0), Complex(0.0, 0.5)}) {
      const TrotterOrderReport rep = trotter_order(coupling, z, 4, {8, 16, 32, 64});
      REQUIRE(rep.status == TrotterOrderStatus::estimated);
      CHECK(rep.slope >= -1.2);
      CHECK(rep.slope <= -0.8);
      CHECK(rep.errors.size() == 4);
      for (std::size_t i = 1; i < 4; ++i) CHECK(rep.errors[i] < rep.errors[i - 1]);
    }
}

TEST_CASE("trotter order reports exactness at machine floor") {
  const TrotterOrderReport rep = trotter_order(1.0, 0.5, 2, {8, 16, 32});
  CHECK(rep.status == TrotterOrderStatus::exact);
  CHECK(rep.excluded.size() == 3);
  CHECK_THROWS_AS(trotter_order(1.0, 0.5, 4, {8, 16}), std::invalid_argument);
  CHECK_THROWS_AS(trotter_order(1.0, 0.5, 4, {8, 16, 16}), std::invalid_argument);
}

TEST_CASE("epsilon of u") {
  const Complex alpha = alpha_of_coupling(2.0);
  CHECK(std::abs(alpha - 1.3169578969248166) <= 1e-15);
  CHECK(std::abs(epsilon_of_u(0.0, alpha)) == 0.0);
  // independent route: sinh(arccosh J) = sqrt(J^2 - 1)
  const Complex eps = epsilon_of_u(0.2, alpha);
  CHECK(std::abs(eps - (-0.5 * std::sinh(0.2) / std::sqrt(3.0))) <= 1e-15);
  CHECK(std::abs(eps - (-0.058120697632331915)) <= 1e-15);

  // imaginary u with real alpha gives imaginary eps
  const Complex eps_im = epsilon_of_u(Complex(0.0, 0.3), alpha);
  CHECK(std::abs(eps_im.real()) <= 1e-16);
  CHECK(eps_im.imag() != 0.0);

  CHECK_THROWS_AS(epsilon_of_u(0.2, 0.0), std::invalid_argument);
}

TEST_CASE("weight correspondence: scalar fit and residual decay") {
  // The fitted max-residual decays as the third power of eps: the corner and
  // off-diagonal entry ratios agree through O(eps^2) for every J, and the
  // middle-diagonal class, whose ratio deviates at O(eps^2), only carries an
  // O(eps) entry.  The limiting constant is (8/3) sinh(alpha) |eps|^3.
  const CorrespondenceReport r02 = correspondence_residual(2.0, 0.2);
  const CorrespondenceReport r01 = correspondence_residual(2.0, 0.1);
  const CorrespondenceReport r005 = correspondence_residual(2.0, 0.05);
  CHECK(r02.residual / std::norm(r02.epsilon) <= 10.0);
  CHECK(r01.residual / std::norm(r01.epsilon) <= 10.0);
  const double ratio1 = r01.residual / r02.residual;
  const double ratio2 = r005.residual / r01.residual;
  CHECK(ratio1 > 0.10);
  CHECK(ratio1 < 0.14);
  CHECK(ratio2 > 0.10);
  CHECK(ratio2 < 0.14);
  const double limit = 8.0 / 3.0 * std::sqrt(3.0);  // sinh(arccosh 2) = sqrt(3)
  for (const CorrespondenceReport* rep : {&r02, &r01, &r005}) {
    const double cubic = rep->residual / std::pow(std::abs(rep->epsilon), 3.0);
    CHECK(cubic >= limit);
    CHECK(cubic <= limit * 1.3);
  }

  // the fitted scalar tends to sinh(alpha) as u -> 0
  const CorrespondenceReport tiny = correspondence_residual(2.0, 1e-3);
  CHECK(std::abs(tiny.scale - std::sinh(r02.alpha)) <= 1e-2);
  CHECK(tiny.residual <= 1e-8);
  CHECK(r02.real_alpha);
  CHECK_FALSE(correspondence_residual(0.5, 0.2).real_alpha);
}

TEST_CASE("spin-vertex bridge residual") {
  CHECK(spin_vertex_bridge_residual(1.0, 0.0, 3) == 0.0);

  const double r1 = spin_vertex_bridge_residual(1.0, 0.1, 3);
  const double r2 = spin_vertex_bridge_residual(1.0, 0.05, 3);
  const double r3 = spin_vertex_bridge_residual(1.0, 0.025, 3);
  CHECK(r2 / r1 > 0.15);
  CHECK(r2 / r1 < 0.40);
  CHECK(r3 / r2 > 0.15);
  CHECK(r3 / r2 < 0.40);

  // N = 2 also shows the quadratic reordering defect
  const double n2a = spin_vertex_bridge_residual(1.0, 0.1, 2);
  const double n2b = spin_vertex_bridge_residual(1.0, 0.05, 2);
  CHECK(n2b / n2a > 0.15);
  CHECK(n2b / n2a < 0.40);
}
