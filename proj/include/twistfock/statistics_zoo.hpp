#pragma once

#include "twistfock/wick_quotient.hpp"

namespace twistfock {

/// Diagonal colour factors eps_ij = (-1)^Sigma_ij q^Omega_ij, with Sigma
/// symmetric and Omega antisymmetric integer matrices; then eps_ij eps_ji = 1
/// and every eps_ii is a sign.
struct EpsilonSpec {
  Eigen::MatrixXi sigma;
  Eigen::MatrixXi omega;
  Complex q{1.0, 0.0};
  int dim() const { return static_cast<int>(sigma.rows()); }
};

Eigen::MatrixXcd epsilon_matrix(const EpsilonSpec& spec);

enum class Preset { Free, Boson, Fermion, QFlip, Epsilon };

struct PresetId {
  Preset kind = Preset::Free;
  Complex q{1.0, 0.0};                 // QFlip parameter
  std::optional<EpsilonSpec> epsilon;  // Epsilon data
};

PresetId preset_from_name(const std::string& name);
const char* preset_name(Preset kind);

/// Built-in braid families: zero, flip, -flip, q*flip, and the diagonal
/// colour braid S(i,j) -> eps_ij (j,i). The colour braid ships with B = S
/// and an involution check.
TwistSpec preset_twist(const PresetId& preset, const StateSpace& space,
                       Tolerance tol = {});

Matrix flip_operator(const StateSpace& space);
Matrix colour_braid(const Eigen::MatrixXcd& eps);

/// The defining relation vectors of the colour algebra: x^i (x) x^i for
/// eps_ii = -1 and x^i (x) x^j - eps_ij x^j (x) x^i for i < j. They span
/// ker(id + S) exactly when every eps_ii is -1.
Matrix colour_relation_generators(const EpsilonSpec& spec, Tolerance tol = {});

/// Quotient level dimensions of the tensor algebra by the ideal generated
/// by ker(id + S) for the colour braid; requires eps_ii = -1 for every i.
std::vector<std::int64_t> epsilon_quotient_dims(const EpsilonSpec& spec, int n_max,
                                                Tolerance tol = {});

struct CliffordGrassmannReport {
  AxiomVerdict clifford;
  AxiomVerdict theta_anticommutation;
  AxiomVerdict pair_representation;
  std::string note;
};

/// Finite-matrix checks of the fermion transform of the two-generator colour
/// algebra: Clifford generator relations, anticommutation of the dressed
/// generators, and the one-variable nilpotent pair model of the product.
CliffordGrassmannReport clifford_grassmann_check(Tolerance tol = {});

}  // namespace twistfock
