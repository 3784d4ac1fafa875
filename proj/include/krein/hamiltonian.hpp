#pragma once

#include <Eigen/Dense>
#include <functional>

#include "krein/adjoint.hpp"
#include "krein/grid.hpp"
#include "krein/involution.hpp"

namespace krein {

struct PotentialSpec {
  enum class Kind { zero, harmonic, bender_family, imaginary_cubic, custom };

  Kind kind = Kind::zero;
  double omega = 1.0;    // harmonic
  double epsilon = 0.0;  // bender_family: V = x^2 (i x)^epsilon
  std::function<Complex(double)> custom;
  std::vector<Complex> custom_samples;  // used instead of `custom` when set

  static PotentialSpec zero() { return {}; }
  static PotentialSpec harmonic(double omega);
  static PotentialSpec bender_family(double epsilon);
  static PotentialSpec imaginary_cubic();
  static PotentialSpec custom_fn(std::function<Complex(double)> f);
  static PotentialSpec from_samples(std::vector<Complex> samples);
};

struct HamiltonianSpec {
  Grid grid;
  PhysicalConstants constants;
  PotentialSpec potential;
  int stencil_order = 2;  // 2 or 4
};

// -(hbar^2 / 2m) d^2/dx^2 as a central-difference matrix.  Dirichlet rows
// drop out-of-range neighbors, periodic rows wrap.  Commutes with the grid
// parity permutation exactly.
ComplexMatrix build_kinetic(const Grid& grid, const PhysicalConstants& constants,
                            int stencil_order = 2);

// -i hbar D1 (central difference); Krein-skew-Hermitian under parity.
ComplexMatrix momentum_operator(const Grid& grid,
                                const PhysicalConstants& constants);

ComplexMatrix position_operator(const Grid& grid);

// Samples V(x_k).  The bender family uses the principal branch of (ix)^eps:
// phase +pi*eps/2 for x > 0, -pi*eps/2 for x < 0, and V(0) = 0.
ComplexVector sample_potential(const PotentialSpec& spec, const Grid& grid,
                               const PhysicalConstants& constants = {});

// max_k |V(x_k) - conj(V(-x_k))| <= tol ?  (Hermitian-function test)
HermiticityResult is_pt_symmetric_potential(const ComplexVector& samples,
                                            const Grid& grid, double tol);

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec);

}  // namespace krein
