#include "twistfock/twist_axioms.hpp"

#include <Eigen/SVD>
#include <utility>

namespace twistfock {

AxiomVerdict make_verdict(std::string name, double residual, Tolerance tol) {
  return AxiomVerdict{std::move(name), residual, residual <= tol.eps};
}

namespace {

void require_two_site(const StateSpace& space, const Matrix& m, const char* what) {
  const auto d2 = space.level_dim(2);
  if (m.rows() != d2 || m.cols() != d2)
    throw DimensionError(std::string(what) + " must be N^2 x N^2");
}

}  // namespace

Matrix braid_from_cross(const StateSpace& space, const Matrix& cross) {
  require_two_site(space, cross, "cross operator");
  const int n = space.dim;
  Matrix braid(cross.rows(), cross.cols());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          braid(pair_rank(k, l, n), pair_rank(i, j, n)) =
              cross(pair_rank(l, j, n), pair_rank(k, i, n));
  return braid;
}

Matrix cross_from_braid(const StateSpace& space, const Matrix& braid) {
  require_two_site(space, braid, "braid operator");
  const int n = space.dim;
  Matrix cross(braid.rows(), braid.cols());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          cross(pair_rank(c, d, n), pair_rank(a, b, n)) =
              braid(pair_rank(a, c, n), pair_rank(b, d, n));
  return cross;
}

TwistSpec::TwistSpec(StateSpace space, std::optional<Matrix> cross,
                     std::optional<Matrix> braid, std::optional<Matrix> b,
                     std::optional<Complex> mu, bool involution_expected,
                     Tolerance tol)
    : space_(space),
      b_(std::move(b)),
      mu_(mu),
      involution_expected_(involution_expected) {
  if (!cross && !braid) throw Error("twist requires a cross or braid matrix");
  if (b_) require_two_site(space_, *b_, "B operator");
  if (mu_ && *mu_ == Complex{0.0, 0.0}) throw Error("mu must be nonzero");
  if (cross && braid) {
    require_two_site(space_, *cross, "cross operator");
    require_two_site(space_, *braid, "braid operator");
    cross_ = std::move(*cross);
    braid_ = std::move(*braid);
    const double drift = max_abs(Matrix(braid_ - braid_from_cross(space_, cross_)));
    const double scale = std::max(1.0, max_abs(braid_));
    if (drift > tol.eps * scale)
      throw Error("cross and braid matrices disagree under the index reshuffle");
  } else if (cross) {
    cross_ = std::move(*cross);
    braid_ = braid_from_cross(space_, cross_);
  } else {
    braid_ = std::move(*braid);
    cross_ = cross_from_braid(space_, braid_);
  }
}

TwistSpec twist_from_cross(const StateSpace& space, Matrix cross, Tolerance tol) {
  return TwistSpec(space, std::move(cross), std::nullopt, {}, {}, false, tol);
}

TwistSpec twist_from_braid(const StateSpace& space, Matrix braid, Tolerance tol) {
  return TwistSpec(space, std::nullopt, std::move(braid), {}, {}, false, tol);
}

AxiomVerdict check_star_convention(const StateSpace& space, const Matrix& cross,
                                   Tolerance tol) {
  require_two_site(space, cross, "cross operator");
  const int n = space.dim;
  double res = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          res = std::max(res,
                         std::abs(std::conj(cross(pair_rank(k, l, n), pair_rank(i, j, n))) -
                                  cross(pair_rank(l, k, n), pair_rank(j, i, n))));
  return make_verdict("star_convention", res, tol);
}

AxiomVerdict check_yang_baxter(const StateSpace& space, const Matrix& braid,
                               Tolerance tol) {
  const Matrix t1 = embed_leg(space, braid, 1, 3).mat;
  const Matrix t2 = embed_leg(space, braid, 2, 3).mat;
  const double res = max_abs(Matrix(t1 * t2 * t1 - t2 * t1 * t2));
  return make_verdict("yang_baxter", res, tol);
}

AxiomVerdict check_norm_bound(const Matrix& braid, Tolerance tol) {
  double smax = 0.0;
  if (braid.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(braid);
    smax = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  }
  const double res = std::max(0.0, smax - 1.0);
  return make_verdict("norm_bound", res, tol);
}

std::array<AxiomVerdict, 3> check_consistency(const StateSpace& space,
                                              const Matrix& braid,
                                              const std::optional<Matrix>& b,
                                              Tolerance tol) {
  if (!b) throw Error("B required");
  require_two_site(space, *b, "B operator");
  const Matrix b1 = embed_leg(space, *b, 1, 3).mat;
  const Matrix b2 = embed_leg(space, *b, 2, 3).mat;
  const Matrix t1 = embed_leg(space, braid, 1, 3).mat;
  const Matrix t2 = embed_leg(space, braid, 2, 3).mat;
  const auto d2 = space.level_dim(2);
  const Matrix id2 = Matrix::Identity(d2, d2);

  const double r_braid = max_abs(Matrix(b1 * b2 * b1 - b2 * b1 * b2));
  const double r_mixed = max_abs(Matrix(b1 * t2 * t1 - t2 * t1 * b2));
  const double r_complement = max_abs(Matrix((id2 + braid) * (id2 - *b)));
  return {make_verdict("consistency_braid", r_braid, tol),
          make_verdict("consistency_mixed", r_mixed, tol),
          make_verdict("consistency_complement", r_complement, tol)};
}

AxiomVerdict check_hecke(const Matrix& braid, Complex mu, Tolerance tol) {
  if (mu == Complex{0.0, 0.0}) throw Error("mu must be nonzero");
  if (braid.rows() != braid.cols()) throw DimensionError("square braid required");
  const Matrix id2 = Matrix::Identity(braid.rows(), braid.cols());
  const double res = max_abs(Matrix((id2 + braid) * (id2 - braid / mu)));
  return make_verdict("hecke", res, tol);
}

AxiomVerdict check_involution(const Matrix& braid, Tolerance tol) {
  if (braid.rows() != braid.cols()) throw DimensionError("square braid required");
  const Matrix id2 = Matrix::Identity(braid.rows(), braid.cols());
  const double res = max_abs(Matrix(braid * braid - id2));
  return make_verdict("involution", res, tol);
}

}  // namespace twistfock
