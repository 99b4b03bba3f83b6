#pragma once

#include <optional>
#include <vector>

#include "twistfock/twist_axioms.hpp"

// The deformed level structure. With B the braid form of the twist,
//
//     R_n = id + B^(1) + B^(1)B^(2) + ... + B^(1)...B^(n-1),
//     P_1 = id,  P_{n+1} = (id (x) P_n) R_{n+1},
//
// and the deformed pairing of level-n states is <s|t> = s^H P_n t in
// lexicographic coordinates, so the level-n Gram matrix is the matrix of
// P_n itself. The ground state has unit norm. Creation is left tensoring;
// annihilation is its Gram adjoint and kills the ground state.

namespace twistfock {

/// Positivity and nondegeneracy verdicts for one level's Gram matrix.
struct GramReport {
  int level = 0;
  bool hermitian = false;
  double min_eigenvalue = 0.0;
  std::int64_t rank = 0;
  std::int64_t kernel_dim = 0;
  bool positive_semidefinite = false;
  bool nondegenerate = false;
};

Matrix insertion_sum(const StateSpace& space, const Matrix& braid, int level);
Matrix pairing_operator(const StateSpace& space, const Matrix& braid, int level);

/// Levels 0..n_max of the deformed Fock space over a twist. Immutable after
/// construction; levels may be inspected concurrently.
class FockModel {
 public:
  explicit FockModel(TwistSpec twist, Tolerance tol = {});

  const TwistSpec& twist() const { return twist_; }
  const StateSpace& space() const { return twist_.space(); }
  int n_max() const { return twist_.space().n_max; }
  Tolerance tolerance() const { return tol_; }

  /// P_level for level in [1, n_max].
  const Matrix& pairing(int level) const;
  /// Gram matrix for level in [0, n_max]; level 0 is the 1x1 matrix [1].
  Matrix gram(int level) const;

 private:
  TwistSpec twist_;
  std::vector<Matrix> pairing_;  // pairing_[n-1] = P_n
  Tolerance tol_;
};

Matrix gram_level(const FockModel& model, int level);

GramReport positivity_report(const Matrix& gram, int level, Tolerance tol = {});

/// Left tensoring by the species basis vector: level -> level + 1.
Matrix creation_matrix(const StateSpace& space, int species, int level);

/// Gram adjoint of creation, from_level -> from_level - 1. Errors when the
/// target Gram is degenerate (a Wick-ideal quotient is needed then).
/// from_level 0 returns the empty map: annihilators kill the ground state.
Matrix annihilation_matrix(const FockModel& model, int species, int from_level,
                           Tolerance tol = {});

/// Working coordinates of levels 0..n_max: dimensions, Gram matrices and
/// creation maps. Tensor levels and Wick-quotient levels both fit here.
struct LevelSpace {
  std::vector<std::int64_t> dims;              // per level 0..n_max
  std::vector<Matrix> grams;                   // per level 0..n_max
  std::vector<std::vector<Matrix>> creations;  // [n][i-1]: level n -> n+1
  int species() const { return creations.empty() ? 0 : static_cast<int>(creations[0].size()); }
  int top_level() const { return static_cast<int>(dims.size()) - 1; }
};

LevelSpace tensor_levels(const FockModel& model);

Matrix annihilation_in(const LevelSpace& levels, int species, int from_level,
                       Tolerance tol = {});

/// a_i a+_j = delta_ij + sum_{k,l} cross[(k,l),(i,j)] a+_k a_l, evaluated as
/// matrices on every level < n_max.
AxiomVerdict check_wick_relation(const LevelSpace& levels, const Matrix& cross,
                                 Tolerance tol = {});

AxiomVerdict verify_wick_relation(const FockModel& model, Tolerance tol, int n_max);

/// Max defect of <a+_i s | t> = <s | a_i t> over levels and species.
double adjointness_residual(const LevelSpace& levels, Tolerance tol = {});

enum class Verdict { WellDefined, DegenerateNeedsQuotient, Failed };

struct WellDefinedReport {
  std::vector<GramReport> levels;
  std::optional<double> adjointness;
  std::optional<AxiomVerdict> wick;
  Verdict verdict = Verdict::Failed;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Aggregate positivity, nondegeneracy, adjointness and the Wick relation on
/// the tensor levels.
WellDefinedReport well_defined_report(const FockModel& model, Tolerance tol = {});

/// Shared verdict assembly for any working level space.
WellDefinedReport well_defined_over(const LevelSpace& levels, const Matrix& cross,
                                    Tolerance tol);

}  // namespace twistfock
