#include "twistfock/wick_quotient.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

namespace twistfock {

namespace {

Matrix orthonormal_column_span(const Matrix& m, Tolerance tol) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.eps * smax) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Matrix ideal_level_span(const StateSpace& space, const Matrix& pairing2,
                        const Matrix& generators, int level, Tolerance tol) {
  const auto d2 = space.level_dim(2);
  if (pairing2.rows() != d2 || pairing2.cols() != d2)
    throw DimensionError("pairing2 must be N^2 x N^2");
  if (generators.cols() > 0 && generators.rows() != d2)
    throw DimensionError("generators must be level-2 vectors");

  double p2_scale = 0.0;
  if (pairing2.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(pairing2);
    p2_scale = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  }
  for (Eigen::Index g = 0; g < generators.cols(); ++g) {
    const double gnorm = generators.col(g).norm();
    if (gnorm == 0.0) continue;
    const double defect = (pairing2 * generators.col(g)).norm() / gnorm;
    if (p2_scale > 0.0 && defect > tol.eps * p2_scale)
      throw IdealError("not a Wick generator");
  }

  const auto dn = space.level_dim(level);
  if (level < 2 || generators.cols() == 0) return Matrix(dn, 0);

  const auto gcount = generators.cols();
  std::int64_t total = 0;
  for (int a = 0; a + 2 <= level; ++a)
    total += space.level_dim(a) * space.level_dim(level - 2 - a) * gcount;
  Matrix span(dn, total);
  std::int64_t col = 0;
  for (int a = 0; a + 2 <= level; ++a) {
    const auto dleft = space.level_dim(a);
    const auto dright = space.level_dim(level - 2 - a);
    for (std::int64_t left = 0; left < dleft; ++left)
      for (Eigen::Index g = 0; g < gcount; ++g)
        for (std::int64_t right = 0; right < dright; ++right) {
          span.col(col).setZero();
          for (std::int64_t rho = 0; rho < d2; ++rho)
            span((left * d2 + rho) * dright + right, col) = generators(rho, g);
          ++col;
        }
  }
  return orthonormal_column_span(span, tol);
}

Matrix quotient_complement(const Matrix& ideal_basis, std::int64_t ambient_dim,
                           Tolerance tol) {
  if (ideal_basis.cols() == 0) return Matrix::Identity(ambient_dim, ambient_dim);
  if (ideal_basis.rows() != ambient_dim)
    throw DimensionError("ideal basis does not match the ambient level");
  Eigen::JacobiSVD<Matrix> svd(ideal_basis, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.eps * smax) ++rank;
  return svd.matrixU().rightCols(ambient_dim - rank);
}

Matrix induced_gram(const Matrix& gram, const Matrix& ideal_basis,
                    const Matrix& complement, Tolerance tol) {
  if (ideal_basis.cols() > 0) {
    const double scale = std::max(1.0, max_abs(gram));
    const double leak = std::max(max_abs(Matrix(gram * ideal_basis)),
                                 max_abs(Matrix(ideal_basis.adjoint() * gram)));
    if (leak > tol.eps * scale)
      throw IdealError("ideal not contained in Gram kernel");
  }
  return complement.adjoint() * gram * complement;
}

QuotientModel build_quotient(const FockModel& model, const Matrix& generators,
                             Tolerance tol) {
  const auto& s = model.space();
  const Matrix p2 = s.n_max >= 2 ? model.pairing(2)
                                 : pairing_operator(s, model.twist().braid(), 2);
  QuotientModel q;
  q.ideal.generators = generators;
  const std::size_t count = static_cast<std::size_t>(s.n_max) + 1;
  q.ideal.level_basis.resize(count);
  q.complement.resize(count);
  q.induced_grams.resize(count);
  q.dims.resize(count);
  for (int n = 0; n <= s.n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    q.ideal.level_basis[idx] = ideal_level_span(s, p2, generators, n, tol);
    q.complement[idx] = quotient_complement(q.ideal.level_basis[idx], s.level_dim(n), tol);
    q.induced_grams[idx] =
        induced_gram(model.gram(n), q.ideal.level_basis[idx], q.complement[idx], tol);
    q.dims[idx] = q.complement[idx].cols();
  }
  return q;
}

QuotientModel build_full_kernel_quotient(const FockModel& model, Tolerance tol) {
  const auto& s = model.space();
  const Matrix p2 = s.n_max >= 2 ? model.pairing(2)
                                 : pairing_operator(s, model.twist().braid(), 2);
  return build_quotient(model, kernel_basis(p2, tol), tol);
}

Matrix quotient_creation(const FockModel& model, const QuotientModel& quotient,
                         int species, int level) {
  if (level < 0 || level + 1 >= static_cast<int>(quotient.dims.size()))
    throw DimensionError("level out of range");
  const auto lo = static_cast<std::size_t>(level);
  return quotient.complement[lo + 1].adjoint() *
         creation_matrix(model.space(), species, level) * quotient.complement[lo];
}

LevelSpace quotient_levels(const FockModel& model, const QuotientModel& quotient) {
  LevelSpace ls;
  ls.dims = quotient.dims;
  ls.grams = quotient.induced_grams;
  const int top = static_cast<int>(quotient.dims.size()) - 1;
  ls.creations.resize(static_cast<std::size_t>(top));
  for (int n = 0; n < top; ++n) {
    auto& row = ls.creations[static_cast<std::size_t>(n)];
    for (int i = 1; i <= model.space().dim; ++i)
      row.push_back(quotient_creation(model, quotient, i, n));
  }
  return ls;
}

Matrix pseudo_annihilator(const FockModel& model, const QuotientModel& quotient,
                          int species, int from_level, Tolerance tol) {
  const auto& s = model.space();
  if (from_level < 1 || from_level >= static_cast<int>(quotient.dims.size()))
    throw DimensionError("level out of range");
  const auto lo = static_cast<std::size_t>(from_level - 1);
  const Matrix& complement = quotient.complement[lo];
  const Matrix& gh = quotient.induced_grams[lo];
  if (complement.cols() == 0)
    return Matrix::Zero(s.level_dim(from_level - 1), s.level_dim(from_level));
  if (numerical_rank(gh, tol) < gh.cols())
    throw DegenerateGramError("degenerate scalar product: quotient required");
  const Matrix rhs = complement.adjoint() *
                     creation_matrix(s, species, from_level - 1).adjoint() *
                     model.gram(from_level);
  return complement * gh.fullPivLu().solve(rhs);
}

AxiomVerdict check_ideal_invariance(const FockModel& model,
                                    const QuotientModel& quotient, Tolerance tol,
                                    int n_max) {
  const auto& s = model.space();
  const int top = std::min(n_max, static_cast<int>(quotient.dims.size()) - 1);
  double res = 0.0;

  std::vector<std::vector<Matrix>> annihilate(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n)
    for (int i = 1; i <= s.dim; ++i)
      annihilate[static_cast<std::size_t>(n)].push_back(
          pseudo_annihilator(model, quotient, i, n, tol));

  // single annihilators keep the ideal chain
  for (int n = 2; n <= top; ++n) {
    const Matrix& ideal_n = quotient.ideal.level_basis[static_cast<std::size_t>(n)];
    if (ideal_n.cols() == 0) continue;
    const Matrix& ideal_lo = quotient.ideal.level_basis[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i <= s.dim; ++i) {
      Matrix image =
          annihilate[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)] * ideal_n;
      if (ideal_lo.cols() > 0)
        image -= ideal_lo * (ideal_lo.adjoint() * image);
      res = std::max(res, max_abs(image));
    }
  }

  // dual-ideal annihilators kill every state; level-2 dual states compose
  // as a_j after a_i for the pair (i, j)
  for (Eigen::Index g = 0; g < quotient.ideal.generators.cols(); ++g) {
    for (int n = 2; n <= top; ++n) {
      Matrix total = Matrix::Zero(s.level_dim(n - 2), s.level_dim(n));
      for (int i = 1; i <= s.dim; ++i)
        for (int j = 1; j <= s.dim; ++j) {
          const Complex coef =
              std::conj(quotient.ideal.generators(pair_rank(i, j, s.dim), g));
          if (coef == Complex{0.0, 0.0}) continue;
          total += coef *
                   (annihilate[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)] *
                    annihilate[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)]);
        }
      res = std::max(res, max_abs(total));
    }
  }
  return make_verdict("ideal_invariance", res, tol);
}

WellDefinedReport well_defined_report(const FockModel& model,
                                      const QuotientModel& quotient, Tolerance tol) {
  WellDefinedReport rep =
      well_defined_over(quotient_levels(model, quotient), model.twist().cross(), tol);
  const AxiomVerdict inv =
      check_ideal_invariance(model, quotient, tol, model.n_max());
  if (!inv.passed) {
    rep.failures.push_back(inv.name);
    rep.verdict = Verdict::Failed;
  }
  return rep;
}

}  // namespace twistfock
