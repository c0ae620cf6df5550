#include "pconvex/geometry.hpp"

#include <cmath>

namespace pconvex {

Direction::Direction(Vec coords) : coords_(std::move(coords)) {
  require(coords_.size() >= 2, "Direction: dimension must be >= 2");
  const double norm = coords_.norm();
  require(std::isfinite(norm) && norm > 0.0, "Direction: zero or non-finite vector");
  coords_ /= norm;
}

Direction Direction::operator-() const {
  Direction d = *this;
  d.coords_ = -d.coords_;
  return d;
}

Direction axis_direction(int n, int axis) {
  require(axis >= 0 && axis < n, "axis_direction: axis out of range");
  Vec e = Vec::Zero(n);
  e[axis] = 1.0;
  return Direction(e);
}

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
  require(basis_.rows() >= 2, "Subspace: ambient dimension must be >= 2");
  require(basis_.cols() >= 1 && basis_.cols() <= basis_.rows(),
          "Subspace: basis size out of range");
  const Mat gram = basis_.transpose() * basis_;
  const double err = (gram - Mat::Identity(basis_.cols(), basis_.cols())).cwiseAbs().maxCoeff();
  require(err <= 1e-10, "Subspace: basis is not orthonormal (Gram deviation " +
                            std::to_string(err) + ")");
}

Subspace Subspace::from_vectors(const std::vector<Vec>& vectors) {
  require(!vectors.empty(), "Subspace: empty basis");
  Mat b(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j) b.col(static_cast<Eigen::Index>(j)) = vectors[j];
  return Subspace(std::move(b));
}

Subspace Subspace::orthonormalized(const std::vector<Vec>& vectors) {
  require(!vectors.empty(), "Subspace: empty basis");
  const Eigen::Index n = vectors.front().size();
  Mat b(n, static_cast<Eigen::Index>(vectors.size()));
  Eigen::Index m = 0;
  for (const Vec& v : vectors) {
    require(v.size() == n, "Subspace: mixed dimensions");
    Vec w = v;
    for (Eigen::Index j = 0; j < m; ++j) w -= b.col(j).dot(w) * b.col(j);
    // second pass for numerical orthogonality
    for (Eigen::Index j = 0; j < m; ++j) w -= b.col(j).dot(w) * b.col(j);
    const double norm = w.norm();
    require(norm > 1e-12 * (1.0 + v.norm()), "Subspace: dependent basis vectors");
    b.col(m++) = w / norm;
  }
  return Subspace(b.leftCols(m));
}

Mat Subspace::complement() const {
  const Eigen::Index n = basis_.rows();
  const Eigen::Index m = basis_.cols();
  Eigen::HouseholderQR<Mat> qr(basis_);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  Mat comp = q.rightCols(n - m);
  // Householder may flip span alignment only up to sign; re-orthogonalize
  // against the basis to be safe near rank boundaries.
  for (Eigen::Index j = 0; j < comp.cols(); ++j) {
    Vec w = comp.col(j);
    w -= basis_ * (basis_.transpose() * w);
    comp.col(j) = w / w.norm();
  }
  return comp;
}

Subspace Subspace::span_with(const Vec& u) const {
  require(u.size() == basis_.rows(), "Subspace: dimension mismatch");
  Vec w = u - project(u);
  const double norm = w.norm();
  require(norm > 1e-12 * (1.0 + u.norm()), "Subspace: vector already lies in the subspace");
  Mat b(basis_.rows(), basis_.cols() + 1);
  b.leftCols(basis_.cols()) = basis_;
  b.col(basis_.cols()) = w / norm;
  return Subspace(std::move(b));
}

Mat hyperplane_basis(const Direction& u) {
  Mat b(u.dim(), 1);
  b.col(0) = u.coords();
  return Subspace(std::move(b)).complement();
}

}  // namespace pconvex
