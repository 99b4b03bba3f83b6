#include "twistfock/deformed_fock.hpp"

#include <Eigen/LU>

namespace twistfock {

Matrix insertion_sum(const StateSpace& space, const Matrix& braid, int level) {
  if (level < 1) throw DimensionError("level must be >= 1");
  const auto d = space.level_dim(level);
  Matrix sum = Matrix::Identity(d, d);
  Matrix word = Matrix::Identity(d, d);
  for (int leg = 1; leg <= level - 1; ++leg) {
    word = word * embed_leg(space, braid, leg, level).mat;
    sum += word;
  }
  return sum;
}

Matrix pairing_operator(const StateSpace& space, const Matrix& braid, int level) {
  if (level < 1) throw DimensionError("level must be >= 1");
  Matrix p = Matrix::Identity(space.dim, space.dim);
  for (int n = 2; n <= level; ++n)
    p = kron(space, identity_operator(space, 1), LevelOperator{n - 1, p}).mat *
        insertion_sum(space, braid, n);
  return p;
}

FockModel::FockModel(TwistSpec twist, Tolerance tol)
    : twist_(std::move(twist)), tol_(tol) {
  const auto& s = twist_.space();
  pairing_.reserve(static_cast<std::size_t>(s.n_max));
  Matrix p = Matrix::Identity(s.dim, s.dim);
  pairing_.push_back(p);
  for (int n = 2; n <= s.n_max; ++n) {
    p = kron(s, identity_operator(s, 1), LevelOperator{n - 1, p}).mat *
        insertion_sum(s, twist_.braid(), n);
    pairing_.push_back(p);
  }
}

const Matrix& FockModel::pairing(int level) const {
  if (level < 1 || level > n_max())
    throw DimensionError("pairing level out of range");
  return pairing_[static_cast<std::size_t>(level - 1)];
}

Matrix FockModel::gram(int level) const {
  if (level == 0) return Matrix::Identity(1, 1);
  return pairing(level);
}

Matrix gram_level(const FockModel& model, int level) { return model.gram(level); }

GramReport positivity_report(const Matrix& gram, int level, Tolerance tol) {
  if (gram.rows() != gram.cols()) throw DimensionError("square Gram required");
  GramReport r;
  r.level = level;
  auto [herm, eigs] = hermitian_eigs(gram, tol);
  r.hermitian = herm;
  r.min_eigenvalue = eigs.size() > 0 ? eigs(0) : 0.0;
  r.rank = numerical_rank(gram, tol);
  r.kernel_dim = gram.cols() - r.rank;
  r.positive_semidefinite = r.min_eigenvalue >= -tol.eps;
  r.nondegenerate = (r.kernel_dim == 0);
  return r;
}

Matrix creation_matrix(const StateSpace& space, int species, int level) {
  if (species < 1 || species > space.dim)
    throw DimensionError("species out of range");
  const auto dn = space.level_dim(level);
  const auto dn1 = space.level_dim(level + 1);
  Matrix c = Matrix::Zero(dn1, dn);
  const auto offset = static_cast<std::int64_t>(species - 1) * dn;
  for (std::int64_t t = 0; t < dn; ++t) c(offset + t, t) = 1.0;
  return c;
}

LevelSpace tensor_levels(const FockModel& model) {
  const auto& s = model.space();
  LevelSpace ls;
  ls.dims.resize(static_cast<std::size_t>(s.n_max) + 1);
  ls.grams.resize(ls.dims.size());
  ls.creations.resize(static_cast<std::size_t>(s.n_max));
  for (int n = 0; n <= s.n_max; ++n) {
    ls.dims[static_cast<std::size_t>(n)] = s.level_dim(n);
    ls.grams[static_cast<std::size_t>(n)] = model.gram(n);
  }
  for (int n = 0; n < s.n_max; ++n) {
    auto& row = ls.creations[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(s.dim));
    for (int i = 1; i <= s.dim; ++i) row.push_back(creation_matrix(s, i, n));
  }
  return ls;
}

Matrix annihilation_in(const LevelSpace& levels, int species, int from_level,
                       Tolerance tol) {
  if (from_level < 0 || from_level > levels.top_level())
    throw DimensionError("level out of range");
  if (species < 1 || species > levels.species())
    throw DimensionError("species out of range");
  if (from_level == 0)
    return Matrix::Zero(0, levels.dims[0]);
  const Matrix& g_to = levels.grams[static_cast<std::size_t>(from_level - 1)];
  const Matrix& g_from = levels.grams[static_cast<std::size_t>(from_level)];
  const Matrix& create =
      levels.creations[static_cast<std::size_t>(from_level - 1)][static_cast<std::size_t>(species - 1)];
  if (g_to.cols() == 0) return Matrix(0, g_from.cols());
  if (numerical_rank(g_to, tol) < g_to.cols())
    throw DegenerateGramError("degenerate scalar product: quotient required");
  return g_to.fullPivLu().solve(Matrix(create.adjoint() * g_from));
}

Matrix annihilation_matrix(const FockModel& model, int species, int from_level,
                           Tolerance tol) {
  return annihilation_in(tensor_levels(model), species, from_level, tol);
}

AxiomVerdict check_wick_relation(const LevelSpace& levels, const Matrix& cross,
                                 Tolerance tol) {
  const int nspecies = levels.species();
  const int top = levels.top_level();
  double res = 0.0;
  for (int n = 0; n < top; ++n) {
    const auto dn = levels.dims[static_cast<std::size_t>(n)];
    std::vector<Matrix> from_above(static_cast<std::size_t>(nspecies));
    std::vector<Matrix> from_here(static_cast<std::size_t>(nspecies));
    for (int i = 1; i <= nspecies; ++i)
      from_above[static_cast<std::size_t>(i - 1)] = annihilation_in(levels, i, n + 1, tol);
    if (n >= 1)
      for (int l = 1; l <= nspecies; ++l)
        from_here[static_cast<std::size_t>(l - 1)] = annihilation_in(levels, l, n, tol);
    for (int i = 1; i <= nspecies; ++i) {
      for (int j = 1; j <= nspecies; ++j) {
        Matrix lhs = from_above[static_cast<std::size_t>(i - 1)] *
                     levels.creations[static_cast<std::size_t>(n)][static_cast<std::size_t>(j - 1)];
        Matrix rhs = (i == j) ? Matrix(Matrix::Identity(dn, dn)) : Matrix(Matrix::Zero(dn, dn));
        if (n >= 1) {
          for (int k = 1; k <= nspecies; ++k)
            for (int l = 1; l <= nspecies; ++l) {
              const Complex coef = cross(pair_rank(k, l, nspecies), pair_rank(i, j, nspecies));
              if (coef != Complex{0.0, 0.0})
                rhs += coef * (levels.creations[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] *
                               from_here[static_cast<std::size_t>(l - 1)]);
            }
        }
        res = std::max(res, max_abs(Matrix(lhs - rhs)));
      }
    }
  }
  return make_verdict("wick_relation", res, tol);
}

AxiomVerdict verify_wick_relation(const FockModel& model, Tolerance tol, int n_max) {
  LevelSpace ls = tensor_levels(model);
  const int top = std::min(n_max, ls.top_level());
  ls.dims.resize(static_cast<std::size_t>(top) + 1);
  ls.grams.resize(static_cast<std::size_t>(top) + 1);
  ls.creations.resize(static_cast<std::size_t>(top));
  return check_wick_relation(ls, model.twist().cross(), tol);
}

double adjointness_residual(const LevelSpace& levels, Tolerance tol) {
  double res = 0.0;
  for (int n = 0; n < levels.top_level(); ++n) {
    const Matrix& g_lo = levels.grams[static_cast<std::size_t>(n)];
    const Matrix& g_hi = levels.grams[static_cast<std::size_t>(n + 1)];
    for (int i = 1; i <= levels.species(); ++i) {
      const Matrix& c = levels.creations[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)];
      const Matrix a = annihilation_in(levels, i, n + 1, tol);
      res = std::max(res, max_abs(Matrix(c.adjoint() * g_hi - g_lo * a)));
    }
  }
  return res;
}

WellDefinedReport well_defined_over(const LevelSpace& levels, const Matrix& cross,
                                    Tolerance tol) {
  WellDefinedReport rep;
  bool degenerate = false;
  for (int n = 0; n <= levels.top_level(); ++n) {
    GramReport g = positivity_report(levels.grams[static_cast<std::size_t>(n)], n, tol);
    degenerate = degenerate || !g.nondegenerate;
    if (!g.hermitian)
      rep.failures.push_back("gram_hermitian_level_" + std::to_string(n));
    if (!g.positive_semidefinite)
      rep.failures.push_back("gram_positive_level_" + std::to_string(n));
    rep.levels.push_back(g);
  }
  if (!degenerate) {
    rep.wick = check_wick_relation(levels, cross, tol);
    rep.adjointness = adjointness_residual(levels, tol);
    if (!rep.wick->passed) rep.failures.push_back("wick_relation");
    if (*rep.adjointness > tol.eps) rep.failures.push_back("adjointness");
  } else {
    rep.notes.push_back(
        "annihilation undefined on degenerate levels; factor by a Wick ideal");
  }
  rep.verdict = !rep.failures.empty() ? Verdict::Failed
                : degenerate          ? Verdict::DegenerateNeedsQuotient
                                      : Verdict::WellDefined;
  return rep;
}

WellDefinedReport well_defined_report(const FockModel& model, Tolerance tol) {
  return well_defined_over(tensor_levels(model), model.twist().cross(), tol);
}

}  // namespace twistfock
