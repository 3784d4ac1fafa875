#pragma once

#include <Eigen/Dense>
#include <vector>

#include "krein/adjoint.hpp"
#include "krein/state.hpp"

namespace krein {

// U(t) = exp(-i H t / hbar)
struct Propagator {
  ComplexMatrix matrix;
  double time = 0.0;
  bool via_spectral = true;  // false: scaling-and-squaring fallback was used
};

// Matrix exponential through eigendecomposition when the eigenvector matrix
// is well conditioned (< 1e8), scaling-and-squaring otherwise.
Propagator propagator(const ComplexMatrix& h, double t,
                      const PhysicalConstants& constants = {});

// max|U* U - I| with the Krein adjoint; holds at all t iff H is J-Hermitian.
HermiticityResult check_krein_unitarity(const Propagator& u, const Involution& j,
                                        double tol);

// max|U^dagger U - I|; holds iff H is J-Hermitian with a real potential.
HermiticityResult check_hilbert_unitarity(const Propagator& u, double tol);

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<double> krein_norms;
  std::vector<double> dirac_norms;
  double max_krein_norm_imag = 0.0;
  std::vector<StateVector> snapshots;  // filled when requested
  bool propagator_via_spectral = true;
};

// Applies the single-step exact propagator U(t_final/n_steps) repeatedly,
// recording both norms at every step (including t = 0).
EvolutionTrace evolve(const StateVector& psi0, const ComplexMatrix& h,
                      double t_final, int n_steps, const Involution& j,
                      bool record_snapshots = false,
                      const PhysicalConstants& constants = {});

struct ContinuityTrace {
  std::vector<double> times;                    // one entry per interior step
  std::vector<ComplexVector> density;           // w(x,t) = conj(psi(x)) psi(-x)
  std::vector<ComplexVector> current;           // j(x,t), zero on boundary nodes
  std::vector<ComplexVector> residual;          // dw/dt + dj/dx on interior nodes
  // (i/hbar)(conj(V(x)) - V(-x)) conj(psi(x)) psi(-x): the non-PT source term
  std::vector<ComplexVector> source;
  std::vector<double> max_residual_per_step;
  double max_residual = 0.0;
  int interior_offset = 2;  // residual(k) lives at grid node k + interior_offset
};

// Central differences in x and t over >= 3 consecutive snapshots.  The
// potential samples are only used to evaluate the source term the residual
// converges to when V is not PT-symmetric.
ContinuityTrace continuity_residual(const std::vector<StateVector>& snapshots,
                                    const Grid& grid, double dt,
                                    const ComplexVector& potential_samples,
                                    const PhysicalConstants& constants = {});

}  // namespace krein
