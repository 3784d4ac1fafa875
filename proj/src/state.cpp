#include "krein/state.hpp"

#include <cmath>
#include <numbers>

namespace krein {

namespace {

void require_same_grid(const StateVector& a, const StateVector& b) {
  if (a.grid != b.grid)
    throw std::invalid_argument("states live on different grids");
}

}  // namespace

Complex dirac_inner(const StateVector& phi, const StateVector& psi) {
  require_same_grid(phi, psi);
  return phi.grid.spacing() * phi.amplitudes.dot(psi.amplitudes);
}

Complex krein_inner(const StateVector& phi, const StateVector& psi,
                    const Involution& j) {
  require_same_grid(phi, psi);
  return phi.grid.spacing() *
         phi.amplitudes.dot(j.apply(psi.amplitudes));
}

Complex j_inner(const StateVector& phi, const StateVector& psi,
                const Involution& j) {
  StateVector jpsi(psi.grid, j.apply(psi.amplitudes));
  return krein_inner(phi, jpsi, j);
}

double dirac_norm(const StateVector& psi) {
  return std::sqrt(psi.grid.spacing() * psi.amplitudes.squaredNorm());
}

StateVector normalized(const StateVector& psi) {
  const double n = dirac_norm(psi);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero state");
  return StateVector(psi.grid, psi.amplitudes / n);
}

StateVector gaussian_state(const Grid& grid, double center, double width,
                           double momentum) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be > 0");
  ComplexVector amps(grid.n_points());
  for (int k = 0; k < grid.n_points(); ++k) {
    const double x = grid.node(k);
    const double arg = (x - center) / width;
    amps(k) = std::exp(Complex(-0.5 * arg * arg, momentum * x));
  }
  if (grid.boundary() == Boundary::dirichlet) {
    amps(0) = 0.0;
    amps(grid.n_points() - 1) = 0.0;
  }
  return normalized(StateVector(grid, std::move(amps)));
}

namespace {

StateVector trig_mode(const Grid& grid, int n, bool cosine) {
  if (n < 1) throw std::invalid_argument("mode index must be >= 1");
  const double k = 2.0 * n * std::numbers::pi / grid.half_width();
  ComplexVector amps(grid.n_points());
  for (int i = 0; i < grid.n_points(); ++i) {
    const double x = grid.node(i);
    amps(i) = cosine ? std::cos(k * x) : std::sin(k * x);
  }
  return normalized(StateVector(grid, std::move(amps)));
}

}  // namespace

StateVector cos_mode(const Grid& grid, int n) { return trig_mode(grid, n, true); }
StateVector sin_mode(const Grid& grid, int n) { return trig_mode(grid, n, false); }

DecompositionResult even_odd_decompose(const StateVector& psi,
                                       const Involution& j) {
  if (j.kind() != Involution::Kind::parity)
    throw std::invalid_argument("even/odd decomposition needs a parity involution");
  const ComplexVector jpsi = j.apply(psi.amplitudes);
  return DecompositionResult{
      StateVector(psi.grid, 0.5 * (psi.amplitudes + jpsi)),
      StateVector(psi.grid, 0.5 * (psi.amplitudes - jpsi))};
}

}  // namespace krein
