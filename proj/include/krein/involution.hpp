#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>
#include <vector>

#include "krein/grid.hpp"

namespace krein {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// An involution J with J^2 = I, stored as a signed permutation so the
// involution property holds exactly in integer arithmetic:
//   (J psi)_i = sign_i * psi_{perm_i}.
class Involution {
 public:
  enum class Kind { parity, block_signature, identity };

  static Involution parity(const Grid& grid) {
    const int n = grid.n_points();
    std::vector<int> perm(n), sign(n, 1);
    for (int k = 0; k < n; ++k) perm[k] = grid.parity_index(k);
    return Involution(Kind::parity, std::move(perm), std::move(sign));
  }

  // diag(I_{n_plus}, -I_{n_minus})
  static Involution block_signature(int n_plus, int n_minus) {
    const int n = n_plus + n_minus;
    std::vector<int> perm(n), sign(n);
    for (int k = 0; k < n; ++k) {
      perm[k] = k;
      sign[k] = k < n_plus ? 1 : -1;
    }
    return Involution(Kind::block_signature, std::move(perm), std::move(sign));
  }

  static Involution identity(int n) {
    std::vector<int> perm(n), sign(n, 1);
    for (int k = 0; k < n; ++k) perm[k] = k;
    return Involution(Kind::identity, std::move(perm), std::move(sign));
  }

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(perm_.size()); }
  int perm(int k) const { return perm_[k]; }
  int sign(int k) const { return sign_[k]; }

  ComplexVector apply(const ComplexVector& v) const {
    check_dim(static_cast<int>(v.size()));
    ComplexVector out(v.size());
    for (int i = 0; i < v.size(); ++i) out(i) = double(sign_[i]) * v(perm_[i]);
    return out;
  }

  // J * A
  ComplexMatrix left(const ComplexMatrix& a) const {
    check_dim(static_cast<int>(a.rows()));
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      out.row(i) = double(sign_[i]) * a.row(perm_[i]);
    return out;
  }

  // A * J
  ComplexMatrix right(const ComplexMatrix& a) const {
    check_dim(static_cast<int>(a.cols()));
    ComplexMatrix out(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
      out.col(j) = double(sign_[j]) * a.col(perm_[j]);
    return out;
  }

  // J * A * J
  ComplexMatrix conjugate(const ComplexMatrix& a) const {
    return left(right(a));
  }

  ComplexMatrix matrix() const {
    ComplexMatrix j = ComplexMatrix::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) j(i, perm_[i]) = double(sign_[i]);
    return j;
  }

 private:
  Involution(Kind kind, std::vector<int> perm, std::vector<int> sign)
      : kind_(kind), perm_(std::move(perm)), sign_(std::move(sign)) {
    const int n = static_cast<int>(perm_.size());
    for (int k = 0; k < n; ++k) {
      if (perm_[k] < 0 || perm_[k] >= n || perm_[perm_[k]] != k ||
          sign_[k] * sign_[perm_[k]] != 1)
        throw std::invalid_argument("signed permutation is not an involution");
    }
  }

  void check_dim(int n) const {
    if (n != dim()) throw std::invalid_argument("involution dimension mismatch");
  }

  Kind kind_;
  std::vector<int> perm_;
  std::vector<int> sign_;
};

}  // namespace krein
