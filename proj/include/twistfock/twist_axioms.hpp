#pragma once

#include <array>
#include <optional>
#include <string>

#include "twistfock/operator_core.hpp"

// Conventions for the twist data.
//
// The cross operator acts E* (x) E -> E (x) E*; its matrix is stored with
// row index (k,l) and column index (i,j), both in lexicographic pair order.
// The braid form acts on E (x) E and is related to the cross matrix by the
// index reshuffle
//
//     braid[(k,l),(i,j)] = cross[(l,j),(k,i)],
//
// which is a linear bijection. The braid form is what enters Yang-Baxter,
// the norm bound and the level operators.

namespace twistfock {

/// Pass/fail record for one algebraic condition; residuals are max-entry
/// norms of the defect.
struct AxiomVerdict {
  std::string name;
  double residual = 0.0;
  bool passed = false;
};

AxiomVerdict make_verdict(std::string name, double residual, Tolerance tol);

Matrix braid_from_cross(const StateSpace& space, const Matrix& cross);
Matrix cross_from_braid(const StateSpace& space, const Matrix& braid);

/// Twist data bundle: the cross operator and/or its braid form (one may be
/// derived from the other), an optional B operator for the consistency
/// triple, and an optional Hecke parameter mu.
class TwistSpec {
 public:
  TwistSpec(StateSpace space, std::optional<Matrix> cross,
            std::optional<Matrix> braid, std::optional<Matrix> b = {},
            std::optional<Complex> mu = {}, bool involution_expected = false,
            Tolerance tol = {});

  const StateSpace& space() const { return space_; }
  const Matrix& cross() const { return cross_; }
  const Matrix& braid() const { return braid_; }
  const std::optional<Matrix>& b() const { return b_; }
  const std::optional<Complex>& mu() const { return mu_; }
  /// Whether the braid is promised to be an involution (S-type twists).
  bool involution_expected() const { return involution_expected_; }

 private:
  StateSpace space_;
  Matrix cross_;
  Matrix braid_;
  std::optional<Matrix> b_;
  std::optional<Complex> mu_;
  bool involution_expected_ = false;
};

TwistSpec twist_from_cross(const StateSpace& space, Matrix cross,
                           Tolerance tol = {});
TwistSpec twist_from_braid(const StateSpace& space, Matrix braid,
                           Tolerance tol = {});

/// conj(cross[(k,l),(i,j)]) must equal cross[(l,k),(j,i)]; equivalently the
/// braid form is Hermitian. This is what makes the level pairings Hermitian.
AxiomVerdict check_star_convention(const StateSpace& space, const Matrix& cross,
                                   Tolerance tol = {});

/// Braid relation on three tensor factors.
AxiomVerdict check_yang_baxter(const StateSpace& space, const Matrix& braid,
                               Tolerance tol = {});

/// Largest singular value of the braid must not exceed 1.
AxiomVerdict check_norm_bound(const Matrix& braid, Tolerance tol = {});

/// The three compatibility conditions between the braid and B:
/// B-braid relation, mixed braid/B exchange on three factors, and
/// (id + braid)(id - B) = 0 on two factors.
std::array<AxiomVerdict, 3> check_consistency(const StateSpace& space,
                                              const Matrix& braid,
                                              const std::optional<Matrix>& b,
                                              Tolerance tol = {});

/// (id + braid)(id - braid/mu) = 0, i.e. the braid spectrum lies in {-1, mu}.
AxiomVerdict check_hecke(const Matrix& braid, Complex mu, Tolerance tol = {});

/// braid^2 = id, requested for involutive (S-type) twists.
AxiomVerdict check_involution(const Matrix& braid, Tolerance tol = {});

}  // namespace twistfock
