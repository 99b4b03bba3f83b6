#include "twistfock/statistics_zoo.hpp"

#include <array>

namespace twistfock {

Eigen::MatrixXcd epsilon_matrix(const EpsilonSpec& spec) {
  const int n = spec.dim();
  if (spec.sigma.cols() != n || spec.omega.rows() != n || spec.omega.cols() != n)
    throw DimensionError("Sigma and Omega must be square of equal size");
  if (spec.q == Complex{0.0, 0.0}) throw Error("q must be nonzero");
  if (spec.sigma != spec.sigma.transpose().eval())
    throw Error("Sigma must be symmetric");
  if (spec.omega != (-spec.omega.transpose()).eval())
    throw Error("Omega must be antisymmetric");
  Eigen::MatrixXcd eps(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double sign = (spec.sigma(i, j) % 2 == 0) ? 1.0 : -1.0;
      eps(i, j) = sign * int_pow(spec.q, spec.omega(i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(eps(i, j) * eps(j, i) - Complex{1.0, 0.0}) > 1e-9)
        throw Error("epsilon factors violate eps_ij * eps_ji = 1");
  return eps;
}

PresetId preset_from_name(const std::string& name) {
  if (name == "free") return {Preset::Free, {}, {}};
  if (name == "boson") return {Preset::Boson, {}, {}};
  if (name == "fermion") return {Preset::Fermion, {}, {}};
  if (name == "qflip") return {Preset::QFlip, {}, {}};
  if (name == "epsilon") return {Preset::Epsilon, {}, {}};
  throw ConfigError("unknown preset: " + name);
}

const char* preset_name(Preset kind) {
  switch (kind) {
    case Preset::Free: return "free";
    case Preset::Boson: return "boson";
    case Preset::Fermion: return "fermion";
    case Preset::QFlip: return "qflip";
    case Preset::Epsilon: return "epsilon";
  }
  throw Error("unreachable preset kind");
}

Matrix flip_operator(const StateSpace& space) {
  const auto d2 = space.level_dim(2);
  Matrix flip = Matrix::Zero(d2, d2);
  for (int a = 1; a <= space.dim; ++a)
    for (int b = 1; b <= space.dim; ++b)
      flip(pair_rank(b, a, space.dim), pair_rank(a, b, space.dim)) = 1.0;
  return flip;
}

Matrix colour_braid(const Eigen::MatrixXcd& eps) {
  const int n = static_cast<int>(eps.rows());
  Matrix s_op = Matrix::Zero(static_cast<std::int64_t>(n) * n,
                             static_cast<std::int64_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      s_op(pair_rank(j, i, n), pair_rank(i, j, n)) = eps(i - 1, j - 1);
  return s_op;
}

TwistSpec preset_twist(const PresetId& preset, const StateSpace& space,
                       Tolerance tol) {
  switch (preset.kind) {
    case Preset::Free: {
      const auto d2 = space.level_dim(2);
      return TwistSpec(space, std::nullopt, Matrix::Zero(d2, d2), {}, {}, false, tol);
    }
    case Preset::Boson:
      return TwistSpec(space, std::nullopt, flip_operator(space), {}, {}, false, tol);
    case Preset::Fermion:
      return TwistSpec(space, std::nullopt, Matrix(-flip_operator(space)), {}, {},
                       false, tol);
    case Preset::QFlip:
      return TwistSpec(space, std::nullopt, Matrix(preset.q * flip_operator(space)),
                       {}, {}, false, tol);
    case Preset::Epsilon: {
      if (!preset.epsilon) throw Error("epsilon preset requires Sigma, Omega and q");
      const Eigen::MatrixXcd eps = epsilon_matrix(*preset.epsilon);
      if (eps.rows() != space.dim)
        throw DimensionError("epsilon data does not match the state space");
      const Matrix s_op = colour_braid(eps);
      return TwistSpec(space, std::nullopt, s_op, s_op, {}, true, tol);
    }
  }
  throw Error("unreachable preset kind");
}

Matrix colour_relation_generators(const EpsilonSpec& spec, Tolerance tol) {
  const Eigen::MatrixXcd eps = epsilon_matrix(spec);
  const int n = spec.dim();
  std::vector<Vector> cols;
  for (int i = 1; i <= n; ++i)
    if (std::abs(eps(i - 1, i - 1) + Complex{1.0, 0.0}) <= tol.eps) {
      Vector v = Vector::Zero(static_cast<std::int64_t>(n) * n);
      v(pair_rank(i, i, n)) = 1.0;
      cols.push_back(std::move(v));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vector v = Vector::Zero(static_cast<std::int64_t>(n) * n);
      v(pair_rank(i, j, n)) = 1.0;
      v(pair_rank(j, i, n)) = -eps(i - 1, j - 1);
      cols.push_back(std::move(v));
    }
  Matrix out(static_cast<std::int64_t>(n) * n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = cols[k];
  return out;
}

std::vector<std::int64_t> epsilon_quotient_dims(const EpsilonSpec& spec, int n_max,
                                                Tolerance tol) {
  const Eigen::MatrixXcd eps = epsilon_matrix(spec);
  for (int i = 0; i < eps.rows(); ++i)
    if (std::abs(eps(i, i) + Complex{1.0, 0.0}) > tol.eps)
      throw Error("epsilon_ii must be -1 for the colour exterior algebra");
  StateSpace space(spec.dim(), n_max);
  FockModel model(preset_twist(PresetId{Preset::Epsilon, {}, spec}, space, tol), tol);
  // the relation vectors span ker(id + S) exactly when every eps_ii is -1
  return build_quotient(model, colour_relation_generators(spec, tol), tol).dims;
}

namespace {

using M2 = Eigen::Matrix2cd;

// component of v outside the generator span; unnormalized Gram-Schmidt keeps
// integer generator data exact
Vector off_span(Vector v, const Matrix& generators) {
  std::vector<Vector> basis;
  for (Eigen::Index c = 0; c < generators.cols(); ++c) {
    Vector w = generators.col(c);
    for (const Vector& b : basis) w -= ((b.adjoint() * w)(0) / (b.adjoint() * b)(0)) * b;
    if (w.norm() > 1e-14 * std::max(1.0, generators.col(c).norm())) basis.push_back(w);
  }
  for (const Vector& b : basis) v -= ((b.adjoint() * v)(0) / (b.adjoint() * b)(0)) * b;
  return v;
}

// level-2 element of (tensor algebra) (x) M2: one 2x2 block per pair index
struct DressedTwoSite {
  std::array<M2, 4> block{M2::Zero(), M2::Zero(), M2::Zero(), M2::Zero()};
};

DressedTwoSite dressed_pair_product(int i, int j, const M2& m, const M2& n) {
  DressedTwoSite out;
  out.block[static_cast<std::size_t>(pair_rank(i, j, 2))] = m * n;
  return out;
}

DressedTwoSite dressed_sum(const DressedTwoSite& a, const DressedTwoSite& b) {
  DressedTwoSite out;
  for (std::size_t k = 0; k < 4; ++k) out.block[k] = a.block[k] + b.block[k];
  return out;
}

// max-entry norm of the class of a dressed element in (TE/I) (x) M2
double dressed_quotient_norm(const DressedTwoSite& e, const Matrix& generators) {
  double res = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Vector v(4);
      for (std::size_t k = 0; k < 4; ++k) v(static_cast<Eigen::Index>(k)) = e.block[k](r, c);
      res = std::max(res, max_abs(Vector(off_span(std::move(v), generators))));
    }
  return res;
}

}  // namespace

CliffordGrassmannReport clifford_grassmann_check(Tolerance tol) {
  CliffordGrassmannReport rep;

  // two Hermitian anticommuting involutions
  M2 e1;
  e1 << 0, 1, 1, 0;
  M2 e2;
  e2 << 1, 0, 0, -1;
  const M2 id2 = M2::Identity();
  const std::array<M2, 2> gens{e1, e2};
  double r_clifford = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const M2 defect =
          gens[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(j)] +
          gens[static_cast<std::size_t>(j)] * gens[static_cast<std::size_t>(i)] -
          (i == j ? 2.0 : 0.0) * id2;
      r_clifford = std::max(r_clifford, defect.cwiseAbs().maxCoeff());
    }
  rep.clifford = make_verdict("clifford_relations", r_clifford, tol);

  // two-generator colour algebra as a Wick quotient; its relation vectors
  // are integer data, so quotient arithmetic below is exact
  EpsilonSpec colour;
  colour.sigma = Eigen::MatrixXi::Identity(2, 2);
  colour.omega = Eigen::MatrixXi::Zero(2, 2);
  colour.q = Complex{1.0, 0.0};
  const Matrix relations = colour_relation_generators(colour, tol);
  StateSpace space(2, 3);
  FockModel model(preset_twist(PresetId{Preset::Epsilon, {}, colour}, space, tol), tol);
  const QuotientModel quotient = build_quotient(model, relations, tol);
  if (quotient.dims != std::vector<std::int64_t>{1, 2, 1, 0})
    throw Error("unexpected colour quotient dimensions");

  // dressed generators x^1 (x) e1, x^2 (x) e2; level-1 representatives are
  // the standard basis, products land on level 2 and are reduced mod the
  // ideal
  double r_theta = dressed_quotient_norm(
      dressed_sum(dressed_pair_product(1, 2, e1, e2), dressed_pair_product(2, 1, e2, e1)),
      relations);
  r_theta = std::max(r_theta,
                     dressed_quotient_norm(dressed_pair_product(1, 1, e1, e1), relations));
  r_theta = std::max(r_theta,
                     dressed_quotient_norm(dressed_pair_product(2, 2, e2, e2), relations));
  rep.theta_anticommutation = make_verdict("theta_anticommutation", r_theta, tol);

  // pair model over one nilpotent variable
  M2 theta;
  theta << 0, 1, 0, 0;
  const std::array<M2, 2> x1{theta, id2};
  const std::array<M2, 2> x2{id2, theta};
  double r_pair = (theta * theta).cwiseAbs().maxCoeff();
  for (int c = 0; c < 2; ++c) {
    const M2 forward = x1[static_cast<std::size_t>(c)] * x2[static_cast<std::size_t>(c)];
    const M2 backward = x2[static_cast<std::size_t>(c)] * x1[static_cast<std::size_t>(c)];
    r_pair = std::max(r_pair, (forward - theta).cwiseAbs().maxCoeff());
    r_pair = std::max(r_pair, (backward - theta).cwiseAbs().maxCoeff());
  }
  rep.pair_representation = make_verdict("grassmann_pair_representation", r_pair, tol);
  rep.note =
      "pair-model squares have a unit second component and do not vanish; "
      "only the product identities are asserted";
  return rep;
}

}  // namespace twistfock
