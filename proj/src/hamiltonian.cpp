#include "krein/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace krein {

PotentialSpec PotentialSpec::harmonic(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  PotentialSpec s;
  s.kind = Kind::harmonic;
  s.omega = omega;
  return s;
}

PotentialSpec PotentialSpec::bender_family(double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
  PotentialSpec s;
  s.kind = Kind::bender_family;
  s.epsilon = epsilon;
  return s;
}

PotentialSpec PotentialSpec::imaginary_cubic() {
  PotentialSpec s;
  s.kind = Kind::imaginary_cubic;
  return s;
}

PotentialSpec PotentialSpec::custom_fn(std::function<Complex(double)> f) {
  PotentialSpec s;
  s.kind = Kind::custom;
  s.custom = std::move(f);
  return s;
}

PotentialSpec PotentialSpec::from_samples(std::vector<Complex> samples) {
  PotentialSpec s;
  s.kind = Kind::custom;
  s.custom_samples = std::move(samples);
  return s;
}

namespace {

// Second- and fourth-order central-difference coefficients for -d^2/dx^2,
// inner part only; multiplied by 1/h^2 at assembly.
struct Stencil {
  int radius;
  double c[3];  // c[0] is the diagonal, c[k] the offset-k coefficient
};

Stencil laplacian_stencil(int order) {
  if (order == 2) return {1, {2.0, -1.0, 0.0}};
  if (order == 4) return {2, {5.0 / 2.0, -4.0 / 3.0, 1.0 / 12.0}};
  throw std::invalid_argument("stencil order must be 2 or 4");
}

}  // namespace

ComplexMatrix build_kinetic(const Grid& grid, const PhysicalConstants& constants,
                            int stencil_order) {
  const int n = grid.n_points();
  const double h = grid.spacing();
  const double scale = constants.hbar * constants.hbar /
                       (2.0 * constants.mass * h * h);
  const Stencil s = laplacian_stencil(stencil_order);
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int off = -s.radius; off <= s.radius; ++off) {
      int jcol = i + off;
      if (grid.boundary() == Boundary::periodic) {
        jcol = ((jcol % n) + n) % n;
      } else if (jcol < 0 || jcol >= n) {
        continue;  // Dirichlet: out-of-range neighbors drop out
      }
      t(i, jcol) += scale * s.c[std::abs(off)];
    }
  }
  return t;
}

ComplexMatrix momentum_operator(const Grid& grid,
                                const PhysicalConstants& constants) {
  const int n = grid.n_points();
  const double h = grid.spacing();
  const Complex coeff = Complex(0.0, -constants.hbar) / (2.0 * h);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int up = i + 1, dn = i - 1;
    if (grid.boundary() == Boundary::periodic) {
      p(i, (up + n) % n) += coeff;
      p(i, (dn + n) % n) -= coeff;
    } else {
      if (up < n) p(i, up) += coeff;
      if (dn >= 0) p(i, dn) -= coeff;
    }
  }
  return p;
}

ComplexMatrix position_operator(const Grid& grid) {
  const int n = grid.n_points();
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) x(i, i) = grid.node(i);
  return x;
}

namespace {

// x^2 (ix)^eps on the principal branch: |x|^(2+eps) e^{+-i pi eps / 2}.
Complex bender_value(double x, double eps) {
  if (x == 0.0) return 0.0;
  const double mag = std::pow(std::abs(x), 2.0 + eps);
  const double phase = (x > 0.0 ? 1.0 : -1.0) * std::numbers::pi * eps / 2.0;
  return mag * Complex(std::cos(phase), std::sin(phase));
}

}  // namespace

ComplexVector sample_potential(const PotentialSpec& spec, const Grid& grid,
                               const PhysicalConstants& constants) {
  const int n = grid.n_points();
  ComplexVector v(n);
  for (int k = 0; k < n; ++k) {
    const double x = grid.node(k);
    switch (spec.kind) {
      case PotentialSpec::Kind::zero:
        v(k) = 0.0;
        break;
      case PotentialSpec::Kind::harmonic:
        v(k) = 0.5 * constants.mass * spec.omega * spec.omega * x * x;
        break;
      case PotentialSpec::Kind::bender_family:
        v(k) = bender_value(x, spec.epsilon);
        break;
      case PotentialSpec::Kind::imaginary_cubic:
        v(k) = Complex(0.0, x * x * x);
        break;
      case PotentialSpec::Kind::custom:
        if (!spec.custom_samples.empty()) {
          if (static_cast<int>(spec.custom_samples.size()) != n)
            throw std::invalid_argument("custom samples do not match grid");
          v(k) = spec.custom_samples[k];
        } else if (spec.custom) {
          v(k) = spec.custom(x);
        } else {
          throw std::invalid_argument("custom potential has no sampler");
        }
        break;
    }
  }
  if (!v.allFinite())
    throw std::invalid_argument("potential samples are not finite");
  return v;
}

HermiticityResult is_pt_symmetric_potential(const ComplexVector& samples,
                                            const Grid& grid, double tol) {
  if (samples.size() != grid.n_points())
    throw std::invalid_argument("sample length does not match grid");
  double r = 0.0;
  for (int k = 0; k < grid.n_points(); ++k) {
    r = std::max(r,
                 std::abs(samples(k) - std::conj(samples(grid.parity_index(k)))));
  }
  return {r <= tol, r};
}

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec) {
  ComplexMatrix h = build_kinetic(spec.grid, spec.constants, spec.stencil_order);
  const ComplexVector v = sample_potential(spec.potential, spec.grid, spec.constants);
  h.diagonal() += v;
  return h;
}

}  // namespace krein
