#include "krein/adjoint.hpp"

#include <Eigen/Dense>

namespace krein {

namespace {

void require_square(const ComplexMatrix& a, const Involution& j) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("operator matrix must be square");
  if (a.rows() != j.dim())
    throw std::invalid_argument("operator and involution dimensions differ");
}

double max_abs(const ComplexMatrix& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

ComplexMatrix krein_adjoint(const ComplexMatrix& a, const Involution& j) {
  require_square(a, j);
  return j.conjugate(a.adjoint());
}

HermiticityResult is_j_hermitian(const ComplexMatrix& a, const Involution& j,
                                 double tol) {
  const double r = max_abs(a - krein_adjoint(a, j));
  return {r <= tol, r};
}

HermiticityResult is_krein_skew_hermitian(const ComplexMatrix& a,
                                          const Involution& j, double tol) {
  const double r = max_abs(a + krein_adjoint(a, j));
  return {r <= tol, r};
}

double default_hermiticity_tol(const ComplexMatrix& a) {
  return 1e-10 * std::max(1.0, max_abs(a));
}

AdjointAxiomResiduals adjoint_axiom_residuals(const ComplexMatrix& a,
                                              const ComplexMatrix& b,
                                              Complex lambda,
                                              const Involution& j) {
  require_square(a, j);
  require_square(b, j);
  AdjointAxiomResiduals out;
  const ComplexMatrix as = krein_adjoint(a, j);
  const ComplexMatrix bs = krein_adjoint(b, j);
  out.additivity = max_abs(krein_adjoint(a + b, j) - (as + bs));
  out.conjugate_homogeneity =
      max_abs(krein_adjoint(lambda * a, j) - std::conj(lambda) * as);
  out.product_reversal = max_abs(krein_adjoint(a * b, j) - bs * as);
  out.double_adjoint = max_abs(krein_adjoint(as, j) - a);

  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  const double rcond = lu.rcond();
  out.condition_number = rcond > 0.0 ? 1.0 / rcond
                                     : std::numeric_limits<double>::infinity();
  if (rcond > 1e-14) {
    const ComplexMatrix ainv = lu.solve(ComplexMatrix::Identity(a.rows(), a.cols()));
    out.inverse = max_abs(krein_adjoint(ainv, j) - as.partialPivLu().solve(
                              ComplexMatrix::Identity(a.rows(), a.cols())));
  }
  return out;
}

double j_product_adjoint_residual(const ComplexMatrix& a, const Involution& j) {
  require_square(a, j);
  return max_abs(krein_adjoint(j.right(a), j) - j.left(krein_adjoint(a, j)));
}

}  // namespace krein
