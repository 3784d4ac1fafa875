#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "krein/involution.hpp"

namespace krein {

struct RawEigenpair {
  Complex value;
  ComplexVector vector;   // unit 2-norm, largest component rotated real positive
  double residual = 0.0;  // |Hv - lambda v| / (|lambda| |v| + eps)
  bool converged = true;
};

// Dense nonsymmetric eigendecomposition (LAPACK zgeev; zheevd fast path for
// Hermitian input).  Pairs are sorted by (Re, Im).
std::vector<RawEigenpair> eigendecompose(const ComplexMatrix& h);

enum class KreinClass { positive, negative, null, unresolved };

const char* to_string(KreinClass c);

struct EigenPair {
  Complex value;
  ComplexVector vector;
  double residual = 0.0;
  double krein_norm = 0.0;       // Re <v, v>_K / <v|v>
  double krein_norm_imag = 0.0;  // should be ~0
  KreinClass classification = KreinClass::unresolved;
  bool degenerate = false;               // |lambda_i - lambda_j| < 1e-9 for some j
  std::optional<int> conjugate_partner;  // index of the conjugate-paired eigenvalue
};

struct SpectrumReport {
  std::vector<EigenPair> pairs;  // sorted by (Re, Im)
  int n_positive = 0;
  int n_negative = 0;
  int n_null = 0;
  double max_im_nonnull = 0.0;
  double null_tol = 0.0;
  double reality_tol = 0.0;
  // pairs with |Im| > reality_tol that are not null: expected empty for
  // J-Hermitian input
  std::vector<int> theorem_violations;
  // residual of the J-Hermiticity check on the source matrix, when known
  std::optional<double> source_j_hermitian_residual;
  bool source_is_j_hermitian = false;
};

SpectrumReport classify_spectrum(const std::vector<RawEigenpair>& raw,
                                 const Involution& j, double null_tol = 1e-8,
                                 double reality_tol = 1e-8);

// Convenience overload that also records the J-Hermiticity of h itself.
SpectrumReport classify_spectrum(const ComplexMatrix& h, const Involution& j,
                                 double null_tol = 1e-8,
                                 double reality_tol = 1e-8);

struct RealityVerdict {
  bool applicable = false;  // false when the source was not J-Hermitian
  bool passed = false;
  std::vector<int> violations;
};

// Every non-null pair real within reality_tol; every complex pair null and
// conjugate-paired.  Refuses (applicable = false) unless the report came
// from a matrix that passed the J-Hermiticity check.
RealityVerdict verify_reality_theorem(const SpectrumReport& report);

}  // namespace krein
