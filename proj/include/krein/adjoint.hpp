#pragma once

#include <Eigen/Dense>
#include <optional>

#include "krein/involution.hpp"

namespace krein {

// Krein adjoint A* = J A^dagger J.
ComplexMatrix krein_adjoint(const ComplexMatrix& a, const Involution& j);

struct HermiticityResult {
  bool passed = false;
  double residual = 0.0;  // max-norm
};

// max|A - A*| <= tol ?
HermiticityResult is_j_hermitian(const ComplexMatrix& a, const Involution& j,
                                 double tol);

// max|A + A*| <= tol ?
HermiticityResult is_krein_skew_hermitian(const ComplexMatrix& a,
                                          const Involution& j, double tol);

// Default tolerance scaled by the operator magnitude.
double default_hermiticity_tol(const ComplexMatrix& a);

// Residuals of the five adjoint axioms:
//   (A+B)* = A* + B*,  (lambda A)* = conj(lambda) A*,  (AB)* = B* A*,
//   A** = A,  (A^-1)* = (A*)^-1.
struct AdjointAxiomResiduals {
  double additivity = 0.0;
  double conjugate_homogeneity = 0.0;
  double product_reversal = 0.0;
  double double_adjoint = 0.0;
  std::optional<double> inverse = std::nullopt;  // absent when A is singular
  double condition_number = 0.0;                 // estimate for A
};

AdjointAxiomResiduals adjoint_axiom_residuals(const ComplexMatrix& a,
                                              const ComplexMatrix& b,
                                              Complex lambda,
                                              const Involution& j);

// Residual of (AJ)* - J A*; both sides reduce to A^dagger J, so this is an
// identity for every A.
double j_product_adjoint_residual(const ComplexMatrix& a, const Involution& j);

}  // namespace krein
