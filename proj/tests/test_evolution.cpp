#include <doctest.h>

#include <cmath>

#include "krein/evolution.hpp"
#include "krein/hamiltonian.hpp"
#include "krein/spectrum.hpp"
#include "test_util.hpp"

using namespace krein;

TEST_CASE("propagator edge cases: t = 0 and H = 0 give the identity") {
  const ComplexMatrix z = ComplexMatrix::Zero(4, 4);
  CHECK((propagator(z, 1.7).matrix - ComplexMatrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  std::mt19937 rng(73);
  const ComplexMatrix h = test::random_matrix(4, rng);
  CHECK((propagator(h, 0.0).matrix - ComplexMatrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("diagonal Hamiltonians evolve by pure phases") {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = -2.0;
  h(2, 2) = 0.5;
  const double t = 0.8;
  const Propagator u = propagator(h, t);
  for (int k = 0; k < 3; ++k) {
    const Complex expected = std::exp(Complex(0, -t * h(k, k).real()));
    CHECK(std::abs(u.matrix(k, k) - expected) < 1e-13);
  }
  // hbar rescales the phase
  const Propagator u2 = propagator(h, t, PhysicalConstants(2.0, 1.0));
  CHECK(std::abs(u2.matrix(0, 0) - std::exp(Complex(0, -t / 2.0))) < 1e-13);
}

TEST_CASE("2x2 rotation generator matches the closed-form exponential") {
  ComplexMatrix h(2, 2);
  h << 0, 1, -1, 0;
  const double t = 1.0;
  // (-iH)^2 = I, so exp(-iHt) = cosh(t) I - i sinh(t) H
  ComplexMatrix expected = std::cosh(t) * ComplexMatrix::Identity(2, 2) -
                           Complex(0, std::sinh(t)) * h;
  const Propagator u = propagator(h, t);
  CHECK((u.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("propagators compose: U(s + t) = U(s) U(t)") {
  std::mt19937 rng(79);
  const Involution j = Involution::block_signature(3, 3);
  const ComplexMatrix h = test::random_j_hermitian(6, j, rng);
  const Propagator a = propagator(h, 0.3);
  const Propagator b = propagator(h, 0.45);
  const Propagator c = propagator(h, 0.75);
  CHECK((a.matrix * b.matrix - c.matrix).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("small-time propagator has generator -iH/hbar") {
  std::mt19937 rng(83);
  const ComplexMatrix h = test::random_matrix(5, rng);
  const double dt = 1e-6;
  const Propagator u = propagator(h, dt);
  const ComplexMatrix gen = (u.matrix - ComplexMatrix::Identity(5, 5)) / dt;
  CHECK((gen - Complex(0, -1) * h).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("Krein unitarity holds for J-Hermitian generators only") {
  const Grid g = Grid::dirichlet(101, 2.0);
  const Involution j = Involution::parity(g);
  const double t = 0.05;

  const ComplexMatrix h_harm =
      build_hamiltonian({g, {}, PotentialSpec::harmonic(1.0), 2});
  const Propagator u_harm = propagator(h_harm, t);
  CHECK(check_krein_unitarity(u_harm, j, 1e-8).passed);
  CHECK(check_hilbert_unitarity(u_harm, 1e-8).passed);

  const ComplexMatrix h_cubic =
      build_hamiltonian({g, {}, PotentialSpec::imaginary_cubic(), 2});
  const Propagator u_cubic = propagator(h_cubic, t);
  CHECK(check_krein_unitarity(u_cubic, j, 1e-8).passed);
  CHECK_FALSE(check_hilbert_unitarity(u_cubic, 1e-8).passed);

  // i x^2 breaks the symmetry entirely: neither adjoint is preserved
  const ComplexMatrix h_ix2 = build_hamiltonian(
      {g, {},
       PotentialSpec::custom_fn([](double x) { return Complex(0, x * x); }), 2});
  const Propagator u_ix2 = propagator(h_ix2, t);
  CHECK_FALSE(check_krein_unitarity(u_ix2, j, 1e-8).passed);
  CHECK_FALSE(check_hilbert_unitarity(u_ix2, 1e-8).passed);
}

TEST_CASE("evolve records both norms at every step, including t = 0") {
  const Grid g = Grid::dirichlet(101, 2.0);
  const Involution j = Involution::parity(g);
  const ComplexMatrix h =
      build_hamiltonian({g, {}, PotentialSpec::harmonic(1.0), 2});
  const StateVector psi0 = gaussian_state(g, 0.5, 0.4);

  const EvolutionTrace trace = evolve(psi0, h, 1.0, 20, j, true);
  REQUIRE(trace.times.size() == 21);
  REQUIRE(trace.snapshots.size() == 21);
  CHECK(trace.times.front() == 0.0);
  CHECK(trace.times.back() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(trace.dirac_norms.front() == doctest::Approx(1.0).epsilon(1e-12));
  for (double dn : trace.dirac_norms)
    CHECK(dn == doctest::Approx(1.0).epsilon(1e-10));
  for (double kn : trace.krein_norms)
    CHECK(kn == doctest::Approx(trace.krein_norms.front()).epsilon(1e-8));
  CHECK(trace.max_krein_norm_imag < 1e-12);

  const EvolutionTrace frozen = evolve(psi0, h, 0.0, 20, j);
  CHECK(frozen.times.size() == 1);
  CHECK_THROWS_AS(evolve(psi0, h, 1.0, 0, j), std::invalid_argument);
}

TEST_CASE("stationary states have vanishing continuity residual") {
  const Grid g = Grid::dirichlet(201, 6.0);
  const Involution j = Involution::parity(g);
  const PotentialSpec pot = PotentialSpec::harmonic(1.0);
  const ComplexMatrix h = build_hamiltonian({g, {}, pot, 2});
  const auto eig = eigendecompose(h);
  const StateVector psi0 =
      normalized(StateVector(g, eig.front().vector));

  const EvolutionTrace trace = evolve(psi0, h, 0.5, 10, j, true);
  const ContinuityTrace cont = continuity_residual(
      trace.snapshots, g, 0.05, sample_potential(pot, g));
  CHECK(cont.max_residual < 1e-10);
  REQUIRE(cont.times.size() == trace.snapshots.size() - 2);

  CHECK_THROWS_AS(
      continuity_residual({psi0, psi0}, g, 0.05, sample_potential(pot, g)),
      std::invalid_argument);
}

TEST_CASE("continuity trace geometry: interior nodes only, current at walls") {
  const Grid g = Grid::dirichlet(51, 3.0);
  const Involution j = Involution::parity(g);
  const PotentialSpec pot = PotentialSpec::imaginary_cubic();
  const ComplexMatrix h = build_hamiltonian({g, {}, pot, 2});
  const EvolutionTrace trace =
      evolve(gaussian_state(g, 0.5, 0.4), h, 0.1, 4, j, true);
  const ContinuityTrace cont = continuity_residual(
      trace.snapshots, g, 0.025, sample_potential(pot, g));
  REQUIRE(cont.residual.size() == cont.times.size());
  for (const ComplexVector& r : cont.residual)
    CHECK(r.size() == g.n_points() - 2 * cont.interior_offset);
  for (const ComplexVector& cur : cont.current) {
    CHECK(cur(0) == Complex(0, 0));
    CHECK(cur(g.n_points() - 1) == Complex(0, 0));
  }
}
