#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace pconvex {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Unit vector on S^{n-1}, n >= 2. The constructor normalizes its input.
class Direction {
 public:
  explicit Direction(Vec coords);

  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

  Direction operator-() const;

 private:
  Vec coords_;
};

Direction axis_direction(int n, int axis);

/// Subspace given by an orthonormal basis (columns of an n x m matrix).
class Subspace {
 public:
  explicit Subspace(Mat basis);

  static Subspace from_vectors(const std::vector<Vec>& vectors);
  /// Gram-Schmidt; throws if the vectors are numerically dependent.
  static Subspace orthonormalized(const std::vector<Vec>& vectors);

  const Mat& basis() const { return basis_; }
  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }

  /// Orthonormal basis of the orthogonal complement, n x (n-m).
  Mat complement() const;

  /// Subspace spanned by this one and u (u need not be orthogonal to it).
  Subspace span_with(const Vec& u) const;

  Vec project(const Vec& x) const { return basis_ * (basis_.transpose() * x); }

 private:
  Mat basis_;
};

/// Orthonormal basis of u^perp as columns of an n x (n-1) matrix.
Mat hyperplane_basis(const Direction& u);

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace pconvex
