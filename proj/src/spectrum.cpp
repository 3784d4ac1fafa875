#include "krein/spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace krein {

namespace {

constexpr double kDegeneracyTol = 1e-9;

lapack_complex_double* lp(ComplexVector& v) {
  return reinterpret_cast<lapack_complex_double*>(v.data());
}
lapack_complex_double* lp(ComplexMatrix& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}

void fix_phase(ComplexVector& v) {
  int imax = 0;
  double amax = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > amax) {
      amax = a;
      imax = i;
    }
  }
  if (amax > 0.0) v *= std::conj(v(imax)) / std::abs(v(imax));
}

}  // namespace

std::vector<RawEigenpair> eigendecompose(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("eigendecompose needs a square matrix");
  if (!h.allFinite())
    throw std::invalid_argument("eigendecompose needs finite entries");
  const int n = static_cast<int>(h.rows());

  ComplexVector values(n);
  ComplexMatrix vectors(n, n);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const bool hermitian = (h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-13 * scale;

  int info = 0;
  if (hermitian) {
    ComplexMatrix a = h;
    Eigen::VectorXd w(n);
    info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, lp(a), n, w.data());
    values = w.cast<Complex>();
    vectors = a;
  } else {
    ComplexMatrix a = h;
    info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, lp(a), n, lp(values),
                         nullptr, 1, lp(vectors), n);
  }
  if (info < 0) throw std::runtime_error("eigensolver: illegal argument");

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values(a).real() != values(b).real())
      return values(a).real() < values(b).real();
    return values(a).imag() < values(b).imag();
  });

  std::vector<RawEigenpair> out;
  out.reserve(n);
  for (int r = 0; r < n; ++r) {
    const int i = order[r];
    RawEigenpair p;
    p.value = values(i);
    p.vector = vectors.col(i);
    p.vector.normalize();
    fix_phase(p.vector);
    const double denom = std::abs(p.value) + 1e-300;
    p.residual = (h * p.vector - p.value * p.vector).norm() / denom;
    // zgeev info > 0 means eigenvalues 0..info-1 (pre-sort) did not converge
    p.converged = info == 0 || (!hermitian && i >= info);
    out.push_back(std::move(p));
  }
  return out;
}

const char* to_string(KreinClass c) {
  switch (c) {
    case KreinClass::positive: return "positive";
    case KreinClass::negative: return "negative";
    case KreinClass::null: return "null";
    case KreinClass::unresolved: return "unresolved";
  }
  return "unresolved";
}

SpectrumReport classify_spectrum(const std::vector<RawEigenpair>& raw,
                                 const Involution& j, double null_tol,
                                 double reality_tol) {
  if (!(null_tol > 0.0) || !(reality_tol > 0.0))
    throw std::invalid_argument("tolerances must be > 0");
  SpectrumReport report;
  report.null_tol = null_tol;
  report.reality_tol = reality_tol;

  const int n = static_cast<int>(raw.size());
  for (const RawEigenpair& rp : raw) {
    EigenPair p;
    p.value = rp.value;
    p.vector = rp.vector;
    p.residual = rp.residual;
    // vectors are unit 2-norm, so the quadrature weight cancels
    const Complex kn = rp.vector.dot(j.apply(rp.vector));
    p.krein_norm = kn.real();
    p.krein_norm_imag = kn.imag();
    if (std::abs(kn) < null_tol) {
      p.classification = KreinClass::null;
    } else if (kn.real() > 0.0) {
      p.classification = KreinClass::positive;
    } else {
      p.classification = KreinClass::negative;
    }
    report.pairs.push_back(std::move(p));
  }

  // degeneracy flags
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(report.pairs[i].value - report.pairs[i + 1].value) <
        kDegeneracyTol) {
      report.pairs[i].degenerate = true;
      report.pairs[i + 1].degenerate = true;
    }
  }

  // greedy conjugate pairing on (Re, -Im), ties by index order
  std::vector<bool> taken(n, false);
  for (int i = 0; i < n; ++i) {
    if (taken[i] || std::abs(report.pairs[i].value.imag()) <= reality_tol)
      continue;
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      if (k == i || taken[k]) continue;
      const double d =
          std::abs(report.pairs[k].value - std::conj(report.pairs[i].value));
      if (d < best_dist) {
        best_dist = d;
        best = k;
      }
    }
    if (best >= 0 && best_dist <= reality_tol * (1.0 + std::abs(report.pairs[i].value))) {
      report.pairs[i].conjugate_partner = best;
      report.pairs[best].conjugate_partner = i;
      taken[i] = taken[best] = true;
    }
  }

  for (int i = 0; i < n; ++i) {
    const EigenPair& p = report.pairs[i];
    switch (p.classification) {
      case KreinClass::positive: ++report.n_positive; break;
      case KreinClass::negative: ++report.n_negative; break;
      case KreinClass::null: ++report.n_null; break;
      case KreinClass::unresolved: break;
    }
    const double im = std::abs(p.value.imag());
    if (p.classification != KreinClass::null)
      report.max_im_nonnull = std::max(report.max_im_nonnull, im);
    if (im > reality_tol && p.classification != KreinClass::null)
      report.theorem_violations.push_back(i);
  }
  return report;
}

SpectrumReport classify_spectrum(const ComplexMatrix& h, const Involution& j,
                                 double null_tol, double reality_tol) {
  SpectrumReport report =
      classify_spectrum(eigendecompose(h), j, null_tol, reality_tol);
  const double tol = 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff());
  const ComplexMatrix diff = h - j.conjugate(h.adjoint());
  const double res = diff.cwiseAbs().maxCoeff();
  report.source_j_hermitian_residual = res;
  report.source_is_j_hermitian = res <= tol;
  return report;
}

RealityVerdict verify_reality_theorem(const SpectrumReport& report) {
  RealityVerdict v;
  if (!report.source_j_hermitian_residual.has_value() ||
      !report.source_is_j_hermitian) {
    v.applicable = false;
    return v;
  }
  v.applicable = true;
  for (int i = 0; i < static_cast<int>(report.pairs.size()); ++i) {
    const EigenPair& p = report.pairs[i];
    if (std::abs(p.value.imag()) <= report.reality_tol) continue;
    if (p.classification != KreinClass::null || !p.conjugate_partner.has_value())
      v.violations.push_back(i);
  }
  v.passed = v.violations.empty();
  return v;
}

}  // namespace krein
