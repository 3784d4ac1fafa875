// Acceptance suite: one printed pass/fail line per criterion.
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "krein/evolution.hpp"
#include "krein/hamiltonian.hpp"
#include "krein/spectrum.hpp"
#include "krein/state.hpp"
#include "test_util.hpp"

using namespace krein;

namespace {

void report(int criterion, bool ok, const std::string& details) {
  std::printf("[acceptance] criterion %d: %s  (%s)\n", criterion,
              ok ? "PASS" : "FAIL", details.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", criterion, ": ", details);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

TEST_CASE("criterion 1: harmonic ladder n + 1/2 to 1e-6 relative") {
  const Grid g = Grid::dirichlet(1001, 12.0);
  const ComplexMatrix h =
      build_hamiltonian({g, {}, PotentialSpec::harmonic(1.0), 4});
  const auto eig = eigendecompose(h);
  double worst = 0.0;
  for (int n = 0; n < 8; ++n) {
    const double exact = n + 0.5;
    worst = std::max(worst, std::abs(eig[n].value - exact) / exact);
  }
  report(1, worst < 1e-6, "max relative error " + fmt(worst) +
                              " over the 8 lowest levels");
}

TEST_CASE("criterion 2: free-particle trig doublets, O(h^2), Krein norms +-1") {
  const double L = 5.0;
  double worst_res = 0.0, worst_ratio_lo = 1e9, worst_ratio_hi = 0.0;
  double worst_kn = 0.0, worst_cross = 0.0;
  for (int n = 1; n <= 4; ++n) {
    double errs[2];
    int idx = 0;
    for (int npts : {128, 256}) {
      const Grid g = Grid::periodic(npts, L);
      const Involution j = Involution::parity(g);
      const ComplexMatrix t = build_kinetic(g, {}, 2);
      const StateVector c = cos_mode(g, n);
      const StateVector s = sin_mode(g, n);

      // both modes are exact discrete eigenvectors with a shared eigenvalue
      const double k = 2.0 * n * std::numbers::pi / L;
      const double h = g.spacing();
      const double lam = (1.0 - std::cos(k * h)) / (h * h);
      for (const StateVector& v : {c, s}) {
        worst_res = std::max(worst_res, (t * v.amplitudes - lam * v.amplitudes)
                                                .cwiseAbs()
                                                .maxCoeff() /
                                            lam);
      }
      errs[idx++] = std::abs(lam - 0.5 * k * k);

      worst_kn = std::max(worst_kn,
                          std::abs(krein_inner(c, c, j).real() - 1.0));
      worst_kn = std::max(worst_kn,
                          std::abs(krein_inner(s, s, j).real() + 1.0));
      worst_cross = std::max(worst_cross, std::abs(krein_inner(c, s, j)));
    }
    const double ratio = errs[0] / errs[1];
    worst_ratio_lo = std::min(worst_ratio_lo, ratio);
    worst_ratio_hi = std::max(worst_ratio_hi, ratio);
  }
  const bool ok = worst_res < 1e-10 && worst_ratio_lo > 3.4 &&
                  worst_ratio_hi < 4.6 && worst_kn < 1e-12 &&
                  worst_cross < 1e-12;
  report(2, ok, "eigenvector residual " + fmt(worst_res) +
                    ", h->h/2 error ratios in [" + fmt(worst_ratio_lo) + ", " +
                    fmt(worst_ratio_hi) + "], Krein norm error " +
                    fmt(worst_kn) + ", cross product " + fmt(worst_cross));
}

TEST_CASE("criterion 3: i x^3 low spectrum is real and resolution-stable") {
  auto low_spectrum = [](int npts, double half_width) {
    const Grid g = Grid::dirichlet(npts, half_width);
    const ComplexMatrix h =
        build_hamiltonian({g, {}, PotentialSpec::imaginary_cubic(), 2});
    auto eig = eigendecompose(h);
    std::sort(eig.begin(), eig.end(),
              [](const RawEigenpair& a, const RawEigenpair& b) {
                return std::abs(a.value) < std::abs(b.value);
              });
    eig.resize(6);
    std::sort(eig.begin(), eig.end(),
              [](const RawEigenpair& a, const RawEigenpair& b) {
                return a.value.real() < b.value.real();
              });
    return eig;
  };
  const auto coarse = low_spectrum(801, 8.0);
  const auto fine = low_spectrum(1201, 10.0);
  double max_im = 0.0;
  for (const auto& e : coarse) max_im = std::max(max_im, std::abs(e.value.imag()));
  for (const auto& e : fine) max_im = std::max(max_im, std::abs(e.value.imag()));
  const double gs_a = coarse.front().value.real();
  const double gs_b = fine.front().value.real();
  const double rel = std::abs(gs_a - gs_b) / std::abs(gs_a);
  report(3, max_im < 1e-6 && rel < 1e-4,
         "max |Im lambda| " + fmt(max_im) + " over the 6 lowest levels, "
         "ground state " + fmt(gs_a) + " vs " + fmt(gs_b) +
         " rel diff " + fmt(rel));
}

TEST_CASE("criterion 4: complex eigenvalues force null Krein norm") {
  // exact 2x2 case
  const Involution j2 = Involution::block_signature(1, 1);
  ComplexMatrix h2(2, 2);
  h2 << 0, 1, -1, 0;
  bool ok = is_j_hermitian(h2, j2, 1e-15).passed;
  double worst2 = 0.0;
  for (const auto& e : eigendecompose(h2)) {
    ok = ok && std::abs(std::abs(e.value.imag()) - 1.0) < 1e-12 &&
         std::abs(e.value.real()) < 1e-12;
    worst2 = std::max(worst2, std::abs(e.vector.dot(j2.apply(e.vector))));
  }
  ok = ok && worst2 < 1e-12;

  // property suite on random J-Hermitian matrices
  std::mt19937 rng(101);
  const Involution j8 = Involution::block_signature(4, 4);
  double worst8 = 0.0;
  int complex_pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix h = test::random_j_hermitian(8, j8, rng);
    for (const auto& e : eigendecompose(h)) {
      if (std::abs(e.value.imag()) <= 1e-8) continue;
      ++complex_pairs;
      worst8 = std::max(worst8, std::abs(e.vector.dot(j8.apply(e.vector))));
    }
  }
  ok = ok && worst8 < 1e-8 && complex_pairs > 0;
  report(4, ok, "2x2 |Krein norm| " + fmt(worst2) + "; " +
                    std::to_string(complex_pairs) +
                    " complex eigenpairs across 100 random draws, max |Krein "
                    "norm| " + fmt(worst8));
}

TEST_CASE("criterion 5: Krein unitarity iff J-Hermitian generator") {
  std::mt19937 rng(103);
  const Involution j = Involution::block_signature(3, 3);
  int disagreements = 0, hermitian_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ComplexMatrix h;
    if (trial % 2 == 0) {
      h = 0.5 * test::random_j_hermitian(6, j, rng);
    } else {
      h = test::random_matrix(6, rng);
    }
    const bool jh = is_j_hermitian(h, j, 1e-10).passed;
    const bool ku = check_krein_unitarity(propagator(h, 1.0), j, 1e-8).passed;
    if (jh) ++hermitian_count;
    if (jh != ku) ++disagreements;
  }
  report(5, disagreements == 0 && hermitian_count == 100,
         std::to_string(disagreements) + " disagreements over 200 draws (" +
             std::to_string(hermitian_count) + " J-Hermitian)");
}

TEST_CASE("criterion 6: Krein norm is conserved where the Dirac norm is not") {
  const Grid g = Grid::dirichlet(201, 2.0);
  const Involution j = Involution::parity(g);
  const StateVector psi0 = gaussian_state(g, 1.0, 0.5);

  auto drifts = [&](const PotentialSpec& pot) {
    const ComplexMatrix h = build_hamiltonian({g, {}, pot, 2});
    const EvolutionTrace tr = evolve(psi0, h, 2.0, 200, j);
    double kd = 0.0, dd = 0.0;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      kd = std::max(kd, std::abs(tr.krein_norms[i] - tr.krein_norms[0]));
      dd = std::max(dd, std::abs(tr.dirac_norms[i] - tr.dirac_norms[0]));
    }
    return std::pair<double, double>(kd, dd);
  };

  const auto [kd_cubic, dd_cubic] = drifts(PotentialSpec::imaginary_cubic());
  const auto [kd_sq, dd_sq] = drifts(PotentialSpec::bender_family(0.0));
  const bool ok = kd_cubic < 1e-8 && dd_cubic > 1e-3 && kd_sq < 1e-8 &&
                  dd_sq < 1e-8;
  report(6, ok, "i x^3: Krein drift " + fmt(kd_cubic) + ", Dirac drift " +
                    fmt(dd_cubic) + "; x^2: Krein drift " + fmt(kd_sq) +
                    ", Dirac drift " + fmt(dd_sq));
}

TEST_CASE("criterion 7: continuity residual order and non-PT source term") {
  // refinement study under i x^3 (PT-symmetric: residual -> 0 at O(h^2+dt^2))
  auto mid_residual = [](int npts, int steps) {
    const Grid g = Grid::dirichlet(npts, 4.0);
    const Involution j = Involution::parity(g);
    const PotentialSpec pot = PotentialSpec::imaginary_cubic();
    const ComplexMatrix h = build_hamiltonian({g, {}, pot, 2});
    const double dt = 0.2 / steps;
    const EvolutionTrace tr =
        evolve(gaussian_state(g, 1.0, 0.5), h, 0.2, steps, j, true);
    const ContinuityTrace cont =
        continuity_residual(tr.snapshots, g, dt, sample_potential(pot, g));
    return cont.max_residual_per_step[steps / 2 - 1];  // t = 0.1 on both grids
  };
  const double r_coarse = mid_residual(201, 20);
  const double r_fine = mid_residual(401, 40);
  const double ratio = r_coarse / r_fine;

  // under V = i x^2 the residual converges to the source term instead
  const Grid g = Grid::dirichlet(801, 4.0);
  const Involution j = Involution::parity(g);
  const PotentialSpec pot =
      PotentialSpec::custom_fn([](double x) { return Complex(0, x * x); });
  const ComplexMatrix h = build_hamiltonian({g, {}, pot, 2});
  const EvolutionTrace tr =
      evolve(gaussian_state(g, 1.0, 0.5), h, 0.2, 80, j, true);
  const ContinuityTrace cont = continuity_residual(
      tr.snapshots, g, 0.2 / 80, sample_potential(pot, g));
  double num = 0.0, den = 0.0;
  for (std::size_t s = 0; s < cont.residual.size(); ++s) {
    num = std::max(num,
                   (cont.residual[s] - cont.source[s]).cwiseAbs().maxCoeff());
    den = std::max(den, cont.source[s].cwiseAbs().maxCoeff());
  }
  const double rel = num / den;
  report(7, ratio >= 3.5 && rel < 0.05,
         "refinement ratio " + fmt(ratio) + " (want >= 3.5); source-term "
         "relative deviation " + fmt(rel) + " (want < 0.05)");
}

TEST_CASE("criterion 8: adjoint algebra residuals below 1e-12") {
  std::mt19937 rng(107);
  const Grid g9 = Grid::dirichlet(9, 1.0);
  double worst = 0.0;
  for (const Involution& j :
       {Involution::block_signature(4, 4), Involution::parity(g9)}) {
    const int n = j.dim();
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix a = test::random_well_conditioned(n, rng);
      const ComplexMatrix b = test::random_well_conditioned(n, rng);
      const auto r = adjoint_axiom_residuals(a, b, Complex(0.8, -0.6), j);
      worst = std::max({worst, r.additivity, r.conjugate_homogeneity,
                        r.product_reversal, r.double_adjoint});
      if (r.inverse) worst = std::max(worst, *r.inverse);
      worst = std::max(worst, j_product_adjoint_residual(a, j));
    }
  }
  report(8, worst < 1e-12,
         "max residual " + fmt(worst) + " over 200 trials and two involutions");
}

TEST_CASE("criterion 9: even/odd decomposition is exact and Krein-orthogonal") {
  std::mt19937 rng(109);
  const Grid g = Grid::dirichlet(101, 4.0);
  const Involution j = Involution::parity(g);
  double worst_rec = 0.0, worst_sym = 0.0, worst_cross = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector psi = test::random_state(g, rng);
    const DecompositionResult d = even_odd_decompose(psi, j);
    worst_rec = std::max(
        worst_rec,
        (d.even_part.amplitudes + d.odd_part.amplitudes - psi.amplitudes)
                .cwiseAbs()
                .maxCoeff() /
            psi.amplitudes.cwiseAbs().maxCoeff());
    worst_sym = std::max(
        worst_sym,
        (j.apply(d.even_part.amplitudes) - d.even_part.amplitudes)
            .cwiseAbs()
            .maxCoeff());
    worst_sym = std::max(
        worst_sym, (j.apply(d.odd_part.amplitudes) + d.odd_part.amplitudes)
                       .cwiseAbs()
                       .maxCoeff());
    worst_cross = std::max(
        worst_cross, std::abs(krein_inner(d.even_part, d.odd_part, j)));
  }
  report(9, worst_rec < 1e-15 && worst_sym == 0.0 && worst_cross < 1e-13,
         "reconstruction " + fmt(worst_rec) + ", symmetry defect " +
             fmt(worst_sym) + ", Krein cross product " + fmt(worst_cross));
}
