#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "krein/grid.hpp"
#include "krein/involution.hpp"

namespace krein {

// Complex amplitudes psi_k on a grid.
struct StateVector {
  Grid grid;
  ComplexVector amplitudes;

  StateVector(const Grid& g, ComplexVector amps)
      : grid(g), amplitudes(std::move(amps)) {
    if (amplitudes.size() != grid.n_points())
      throw std::invalid_argument("state length does not match grid");
    if (!amplitudes.allFinite())
      throw std::invalid_argument("state has non-finite entries");
  }
};

// <phi|psi> = h * sum conj(phi_k) psi_k  (Riemann weight h on every node)
Complex dirac_inner(const StateVector& phi, const StateVector& psi);

// <phi, psi> = <phi|J|psi>, the indefinite Krein / PT inner product.
Complex krein_inner(const StateVector& phi, const StateVector& psi,
                    const Involution& j);

// <phi, psi>_J = <phi, J psi>; positive definite, equals the Dirac bracket.
Complex j_inner(const StateVector& phi, const StateVector& psi,
                const Involution& j);

double dirac_norm(const StateVector& psi);

StateVector normalized(const StateVector& psi);

// exp(-(x-center)^2 / (2 width^2) + i momentum x), Dirac-normalized.
StateVector gaussian_state(const Grid& grid, double center, double width,
                           double momentum = 0.0);

// cos(2 n pi x / L) and sin(2 n pi x / L), Dirac-normalized.
StateVector cos_mode(const Grid& grid, int n);
StateVector sin_mode(const Grid& grid, int n);

struct DecompositionResult {
  StateVector even_part;
  StateVector odd_part;
};

// psi_pm = (psi +- J psi) / 2; J must be a parity involution.
DecompositionResult even_odd_decompose(const StateVector& psi,
                                       const Involution& j);

}  // namespace krein
