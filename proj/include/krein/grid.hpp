#pragma once

#include <stdexcept>
#include <string>

namespace krein {

enum class Boundary { dirichlet, periodic };

// Symmetric 1-D grid on [-L, L].  Dirichlet grids have an odd number of
// nodes with a node exactly at x = 0; periodic grids have an even number
// of nodes x_k = (k - n/2) h, k = 0..n-1, with x in [-L, L-h].
// Nodes are computed as integer-multiples of h so that the parity map
// x_k -> -x_k is exact in floating point.
class Grid {
 public:
  static Grid dirichlet(int n_points, double half_width) {
    if (n_points < 3 || n_points % 2 == 0)
      throw std::invalid_argument("dirichlet grid needs odd n_points >= 3");
    return Grid(n_points, half_width, Boundary::dirichlet);
  }

  static Grid periodic(int n_points, double half_width) {
    if (n_points < 4 || n_points % 2 != 0)
      throw std::invalid_argument("periodic grid needs even n_points >= 4");
    return Grid(n_points, half_width, Boundary::periodic);
  }

  int n_points() const { return n_; }
  double half_width() const { return half_width_; }
  Boundary boundary() const { return boundary_; }

  double spacing() const {
    return boundary_ == Boundary::dirichlet ? 2.0 * half_width_ / (n_ - 1)
                                            : 2.0 * half_width_ / n_;
  }

  double node(int k) const {
    const int mid = boundary_ == Boundary::dirichlet ? (n_ - 1) / 2 : n_ / 2;
    return (k - mid) * spacing();
  }

  // Index of the node at -x_k.
  int parity_index(int k) const {
    return boundary_ == Boundary::dirichlet ? n_ - 1 - k : (n_ - k) % n_;
  }

  bool operator==(const Grid& o) const {
    return n_ == o.n_ && half_width_ == o.half_width_ && boundary_ == o.boundary_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  Grid(int n, double L, Boundary b) : n_(n), half_width_(L), boundary_(b) {
    if (!(L > 0.0)) throw std::invalid_argument("grid half_width must be > 0");
  }

  int n_;
  double half_width_;
  Boundary boundary_;
};

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  PhysicalConstants() = default;
  PhysicalConstants(double hbar_, double mass_) : hbar(hbar_), mass(mass_) {
    if (!(hbar > 0.0) || !(mass > 0.0))
      throw std::invalid_argument("hbar and mass must be > 0");
  }
};

}  // namespace krein
