#pragma once

#include "twistfock/deformed_fock.hpp"

// Wick-ideal quotients. An ideal generated by level-2 vectors inside
// ker P_2 spans, on level n, the sum of all E^a (x) I_2 (x) E^(n-2-a).
// Quotient representatives are taken in the orthogonal complement of the
// ideal, and the level pairing descends whenever the ideal sits inside the
// Gram kernel.

namespace twistfock {

/// Level-2 generators (columns) plus the derived per-level ideal spans.
struct IdealSpec {
  Matrix generators;                // N^2 x g, as supplied
  std::vector<Matrix> level_basis;  // [n]: orthonormal columns spanning I_n
};

/// Orthonormal basis of sum_a E^a (x) span(generators) (x) E^(n-2-a).
/// Levels 0 and 1 are empty. Generators outside ker(pairing2) are rejected.
Matrix ideal_level_span(const StateSpace& space, const Matrix& pairing2,
                        const Matrix& generators, int level, Tolerance tol = {});

struct QuotientModel {
  IdealSpec ideal;
  std::vector<Matrix> complement;     // [n]: N^n x q_n orthonormal columns
  std::vector<Matrix> induced_grams;  // [n]: q_n x q_n
  std::vector<std::int64_t> dims;     // q_n
};

/// Orthogonal complement of the ideal basis, with the orthogonal projection
/// (adjoint of the returned columns) as the quotient map.
Matrix quotient_complement(const Matrix& ideal_basis, std::int64_t ambient_dim,
                           Tolerance tol = {});

/// Gram of the complement representatives. Errors when the ideal is not
/// annihilated by the pairing, since then the value depends on the choice of
/// representative.
Matrix induced_gram(const Matrix& gram, const Matrix& ideal_basis,
                    const Matrix& complement, Tolerance tol = {});

QuotientModel build_quotient(const FockModel& model, const Matrix& generators,
                             Tolerance tol = {});
QuotientModel build_full_kernel_quotient(const FockModel& model, Tolerance tol = {});

/// Creation on quotient coordinates: project, create, project.
Matrix quotient_creation(const FockModel& model, const QuotientModel& quotient,
                         int species, int level);

LevelSpace quotient_levels(const FockModel& model, const QuotientModel& quotient);

/// Annihilation on tensor coordinates routed through the quotient
/// complement. Agrees with the plain Gram adjoint when the Gram is
/// invertible and stays defined on degenerate levels.
Matrix pseudo_annihilator(const FockModel& model, const QuotientModel& quotient,
                          int species, int from_level, Tolerance tol = {});

/// Ideal stability: single annihilators must map I_n into I_{n-1}, and
/// annihilators of dual-ideal states must kill every state.
AxiomVerdict check_ideal_invariance(const FockModel& model,
                                    const QuotientModel& quotient, Tolerance tol,
                                    int n_max);

WellDefinedReport well_defined_report(const FockModel& model,
                                      const QuotientModel& quotient,
                                      Tolerance tol = {});

}  // namespace twistfock
