#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twistfock/common.hpp"

namespace twistfock {

/// One-particle state space with N species and a level cap. Level n of the
/// tensor algebra is spanned by the multi-indices (i_1,...,i_n), i_k in
/// [1,N], enumerated lexicographically, so its dimension is N^n.
struct StateSpace {
  int dim;
  int n_max;

  StateSpace(int dim, int n_max);

  /// N^level. Levels above n_max are legal here; the cap bounds model
  /// construction, not index bookkeeping.
  std::int64_t level_dim(int level) const;
};

/// Lexicographic rank of the pair (a, b), a, b in [1, N].
inline std::int64_t pair_rank(int a, int b, int dim) {
  return static_cast<std::int64_t>(a - 1) * dim + (b - 1);
}

/// A word (i_1,...,i_n) over [1,N]; bijective with [0, N^n) via the
/// lexicographic rank (i_1 most significant).
class MultiIndex {
 public:
  MultiIndex(std::vector<int> entries, int dim);

  static MultiIndex from_rank(std::int64_t rank, int level, int dim);

  std::int64_t rank() const;
  int level() const { return static_cast<int>(entries_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& entries() const { return entries_; }
  MultiIndex reversed() const;

 private:
  std::vector<int> entries_;
  int dim_;
};

/// Dense operator on the n-th tensor power; rows and columns follow the
/// lexicographic multi-index order.
struct LevelOperator {
  int level = 0;
  Matrix mat;
};

LevelOperator identity_operator(const StateSpace& space, int level);

/// Tensor product of operators; indices concatenate with the left factor
/// most significant.
LevelOperator kron(const StateSpace& space, const LevelOperator& a,
                   const LevelOperator& b);

/// id^(pos-1) (x) two_site (x) id^(n-pos-1) on level n, 1 <= pos <= n-1.
LevelOperator embed_leg(const StateSpace& space, const Matrix& two_site,
                        int position, int total_level);

/// Orthonormal basis (columns) of the numerical null space: singular values
/// <= eps * sigma_max are treated as zero; everything is kept when the
/// matrix vanishes.
Matrix kernel_basis(const Matrix& m, Tolerance tol = {});

std::int64_t numerical_rank(const Matrix& m, Tolerance tol = {});

/// Hermiticity flag (max|M - M^H| <= eps) plus the ascending eigenvalues of
/// the Hermitian part (M + M^H)/2.
std::pair<bool, Eigen::VectorXd> hermitian_eigs(const Matrix& m,
                                                Tolerance tol = {});

/// Conjugate coordinates with the multi-index order reversed. Antilinear
/// involution; pairs duals against primal vectors through the base pairing.
Vector dual_vector(const StateSpace& space, const Vector& v, int level);

}  // namespace twistfock
