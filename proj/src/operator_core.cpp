#include "twistfock/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace twistfock {

StateSpace::StateSpace(int dim_, int cap) : dim(dim_), n_max(cap) {
  if (dim < 1) throw DimensionError("state space dimension must be >= 1");
  if (n_max < 1) throw DimensionError("n_max must be >= 1");
}

std::int64_t StateSpace::level_dim(int level) const {
  if (level < 0) throw DimensionError("negative level");
  std::int64_t d = 1;
  for (int k = 0; k < level; ++k) {
    d *= dim;
    if (d > (std::int64_t{1} << 40)) throw DimensionError("level dimension overflow");
  }
  return d;
}

MultiIndex::MultiIndex(std::vector<int> entries, int dim)
    : entries_(std::move(entries)), dim_(dim) {
  if (dim_ < 1) throw DimensionError("multi-index dimension must be >= 1");
  for (int e : entries_)
    if (e < 1 || e > dim_) throw DimensionError("multi-index entry out of range");
}

MultiIndex MultiIndex::from_rank(std::int64_t rank, int level, int dim) {
  if (level < 0 || dim < 1 || rank < 0) throw DimensionError("bad multi-index shape");
  std::vector<int> entries(static_cast<std::size_t>(level));
  for (int k = level - 1; k >= 0; --k) {
    entries[static_cast<std::size_t>(k)] = static_cast<int>(rank % dim) + 1;
    rank /= dim;
  }
  if (rank != 0) throw DimensionError("rank outside the level");
  return MultiIndex(std::move(entries), dim);
}

std::int64_t MultiIndex::rank() const {
  std::int64_t r = 0;
  for (int e : entries_) r = r * dim_ + (e - 1);
  return r;
}

MultiIndex MultiIndex::reversed() const {
  std::vector<int> rev(entries_.rbegin(), entries_.rend());
  return MultiIndex(std::move(rev), dim_);
}

LevelOperator identity_operator(const StateSpace& space, int level) {
  const auto d = space.level_dim(level);
  return LevelOperator{level, Matrix::Identity(d, d)};
}

LevelOperator kron(const StateSpace& space, const LevelOperator& a,
                   const LevelOperator& b) {
  const auto da = space.level_dim(a.level);
  const auto db = space.level_dim(b.level);
  if (a.mat.rows() != da || a.mat.cols() != da || b.mat.rows() != db ||
      b.mat.cols() != db)
    throw DimensionError("inconsistent space");
  LevelOperator out{a.level + b.level, Matrix(da * db, da * db)};
  for (std::int64_t ra = 0; ra < da; ++ra)
    for (std::int64_t ca = 0; ca < da; ++ca)
      out.mat.block(ra * db, ca * db, db, db) = a.mat(ra, ca) * b.mat;
  return out;
}

LevelOperator embed_leg(const StateSpace& space, const Matrix& two_site,
                        int position, int total_level) {
  const auto d2 = space.level_dim(2);
  if (two_site.rows() != d2 || two_site.cols() != d2)
    throw DimensionError("inconsistent space");
  if (position < 1 || position > total_level - 1)
    throw DimensionError("leg position out of range");
  LevelOperator mid{2, two_site};
  LevelOperator left = identity_operator(space, position - 1);
  LevelOperator right = identity_operator(space, total_level - position - 1);
  return kron(space, kron(space, left, mid), right);
}

Matrix kernel_basis(const Matrix& m, Tolerance tol) {
  if (m.cols() == 0) return Matrix(0, 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.eps * smax) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

std::int64_t numerical_rank(const Matrix& m, Tolerance tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.eps * smax) ++rank;
  return rank;
}

std::pair<bool, Eigen::VectorXd> hermitian_eigs(const Matrix& m, Tolerance tol) {
  if (m.rows() != m.cols()) throw DimensionError("square matrix required");
  if (m.size() == 0) return {true, Eigen::VectorXd()};
  const bool herm = max_abs(Matrix(m - m.adjoint())) <= tol.eps;
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (m + m.adjoint())),
                                           Eigen::EigenvaluesOnly);
  return {herm, es.eigenvalues()};
}

Vector dual_vector(const StateSpace& space, const Vector& v, int level) {
  const auto d = space.level_dim(level);
  if (v.size() != d) throw DimensionError("inconsistent space");
  Vector out(d);
  for (std::int64_t r = 0; r < d; ++r) {
    const auto rev = MultiIndex::from_rank(r, level, space.dim).reversed().rank();
    out(rev) = std::conj(v(r));
  }
  return out;
}

}  // namespace twistfock
