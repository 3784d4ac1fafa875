#include "krein/evolution.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "krein/spectrum.hpp"

namespace krein {

namespace {

constexpr double kSpectralConditionLimit = 1e8;

bool verbose_logging() {
  const char* env = std::getenv("KREIN_LOG");
  return env != nullptr && env[0] != '\0' && env[0] != '0';
}

}  // namespace

Propagator propagator(const ComplexMatrix& h, double t,
                      const PhysicalConstants& constants) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("propagator needs a square Hamiltonian");
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
  const int n = static_cast<int>(h.rows());

  Propagator u;
  u.time = t;
  if (t == 0.0) {
    u.matrix = ComplexMatrix::Identity(n, n);
    return u;
  }

  const std::vector<RawEigenpair> eig = eigendecompose(h);
  ComplexMatrix v(n, n);
  ComplexVector phases(n);
  const Complex ith = Complex(0.0, -t / constants.hbar);
  for (int k = 0; k < n; ++k) {
    v.col(k) = eig[k].vector;
    phases(k) = std::exp(ith * eig[k].value);
  }
  Eigen::PartialPivLU<ComplexMatrix> lu(v);
  const double rcond = lu.rcond();
  if (rcond > 1.0 / kSpectralConditionLimit && phases.allFinite()) {
    // exp(-iHt/hbar) = V diag(e^{-i lambda t / hbar}) V^{-1}
    u.matrix = v * phases.asDiagonal() * lu.inverse();
    u.via_spectral = true;
  } else {
    if (verbose_logging())
      std::fprintf(stderr,
                   "[krein] propagator: eigenvector matrix ill-conditioned "
                   "(rcond=%.2e), falling back to scaling-and-squaring\n",
                   rcond);
    u.matrix = (ith * h).exp();
    u.via_spectral = false;
  }
  return u;
}

HermiticityResult check_krein_unitarity(const Propagator& u, const Involution& j,
                                        double tol) {
  const int n = static_cast<int>(u.matrix.rows());
  const ComplexMatrix r =
      krein_adjoint(u.matrix, j) * u.matrix - ComplexMatrix::Identity(n, n);
  const double res = r.cwiseAbs().maxCoeff();
  return {res <= tol, res};
}

HermiticityResult check_hilbert_unitarity(const Propagator& u, double tol) {
  const int n = static_cast<int>(u.matrix.rows());
  const ComplexMatrix r =
      u.matrix.adjoint() * u.matrix - ComplexMatrix::Identity(n, n);
  const double res = r.cwiseAbs().maxCoeff();
  return {res <= tol, res};
}

EvolutionTrace evolve(const StateVector& psi0, const ComplexMatrix& h,
                      double t_final, int n_steps, const Involution& j,
                      bool record_snapshots, const PhysicalConstants& constants) {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  if (h.rows() != psi0.grid.n_points())
    throw std::invalid_argument("Hamiltonian does not match the state grid");

  const double dt = t_final / n_steps;
  const Propagator u = propagator(h, dt, constants);

  EvolutionTrace trace;
  trace.propagator_via_spectral = u.via_spectral;
  const double weight = psi0.grid.spacing();
  StateVector psi = psi0;

  auto record = [&](double t) {
    const Complex kn = weight * psi.amplitudes.dot(j.apply(psi.amplitudes));
    const double dn = weight * psi.amplitudes.squaredNorm();
    trace.times.push_back(t);
    trace.krein_norms.push_back(kn.real());
    trace.dirac_norms.push_back(dn);
    trace.max_krein_norm_imag =
        std::max(trace.max_krein_norm_imag, std::abs(kn.imag()));
    if (record_snapshots) trace.snapshots.push_back(psi);
  };

  record(0.0);
  for (int s = 1; s <= n_steps; ++s) {
    if (t_final == 0.0) break;
    psi = StateVector(psi.grid, u.matrix * psi.amplitudes);
    record(s * dt);
  }
  return trace;
}

ContinuityTrace continuity_residual(const std::vector<StateVector>& snapshots,
                                    const Grid& grid, double dt,
                                    const ComplexVector& potential_samples,
                                    const PhysicalConstants& constants) {
  const int steps = static_cast<int>(snapshots.size());
  if (steps < 3)
    throw std::invalid_argument("continuity residual needs >= 3 snapshots");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  const int n = grid.n_points();
  if (potential_samples.size() != n)
    throw std::invalid_argument("potential samples do not match grid");
  for (const StateVector& s : snapshots)
    if (s.grid != grid)
      throw std::invalid_argument("snapshot grid mismatch");

  const double h = grid.spacing();
  const Complex cur_coeff =
      Complex(0.0, constants.hbar / (2.0 * constants.mass));
  const Complex src_coeff = Complex(0.0, 1.0 / constants.hbar);

  auto density_of = [&](const ComplexVector& p) {
    ComplexVector w(n);
    for (int k = 0; k < n; ++k)
      w(k) = std::conj(p(k)) * p(grid.parity_index(k));
    return w;
  };

  auto current_of = [&](const ComplexVector& p) {
    // j = (i hbar / 2m) { d(conj psi)/dx psi(-x) - d(psi(-x))/dx conj(psi) }
    ComplexVector cur = ComplexVector::Zero(n);
    for (int k = 1; k + 1 < n; ++k) {
      const Complex dpb = (std::conj(p(k + 1)) - std::conj(p(k - 1))) / (2.0 * h);
      const Complex dpj =
          (p(grid.parity_index(k + 1)) - p(grid.parity_index(k - 1))) / (2.0 * h);
      cur(k) = cur_coeff * (dpb * p(grid.parity_index(k)) - dpj * std::conj(p(k)));
    }
    return cur;
  };

  ContinuityTrace trace;
  const int m = n - 2 * trace.interior_offset;
  if (m <= 0) throw std::invalid_argument("grid too small for interior residual");

  for (int s = 1; s + 1 < steps; ++s) {
    const ComplexVector& p = snapshots[s].amplitudes;
    const ComplexVector w_prev = density_of(snapshots[s - 1].amplitudes);
    const ComplexVector w_next = density_of(snapshots[s + 1].amplitudes);
    const ComplexVector cur = current_of(p);

    ComplexVector res(m), src(m);
    double rmax = 0.0;
    for (int k = 0; k < m; ++k) {
      const int g = k + trace.interior_offset;
      const Complex dwdt = (w_next(g) - w_prev(g)) / (2.0 * dt);
      const Complex djdx = (cur(g + 1) - cur(g - 1)) / (2.0 * h);
      res(k) = dwdt + djdx;
      src(k) = src_coeff *
               (std::conj(potential_samples(g)) -
                potential_samples(grid.parity_index(g))) *
               std::conj(p(g)) * p(grid.parity_index(g));
      rmax = std::max(rmax, std::abs(res(k)));
    }
    trace.times.push_back(s * dt);
    trace.density.push_back(density_of(p));
    trace.current.push_back(cur);
    trace.residual.push_back(std::move(res));
    trace.source.push_back(std::move(src));
    trace.max_residual_per_step.push_back(rmax);
    trace.max_residual = std::max(trace.max_residual, rmax);
  }
  return trace;
}

}  // namespace krein
