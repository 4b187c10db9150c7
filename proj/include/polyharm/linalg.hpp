// Exact linear algebra over the rationals.
//
// Dense Eigen matrices with the Rational scalar, eliminated by a
// fraction-free (Bareiss) forward pass to keep intermediate entries small,
// then normalized to reduced row echelon form.  Pivoting is deterministic:
// columns are processed left to right and the first row with a nonzero
// entry wins, so ranks, solutions and nullspace bases are reproducible
// bit for bit.

#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct EchelonForm {
  RatMatrix mat;                // reduced row echelon form
  std::vector<int> pivot_cols;  // ascending; one per pivot row
  int rank = 0;
};

// Reduced row echelon form via Bareiss elimination.
EchelonForm reduced_echelon(RatMatrix m);

int rank_ff(const RatMatrix& m);

// Solves A x = b exactly.  Free variables are set to zero; an inconsistent
// system yields nullopt.
std::optional<RatVector> solve_ff(const RatMatrix& A, const RatVector& b);

// Nullspace basis from the reduced echelon form: one vector per free
// column, unit entry at that column, listed in ascending column order.
std::vector<RatVector> nullspace_ff(const RatMatrix& A);

}  // namespace polyharm
