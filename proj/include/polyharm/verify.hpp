// Desk-scale verification of the uniqueness/density statement: measures
// supported on the variety P = 0 are distinguished by the finite-order
// polyharmonic space attached to P.
//
// U_N below is the space of polynomials with polyharmonic degree < N,
// i.e. annihilated by the N-th Laplacian iterate; its degree-capped basis
// consists of the products |x|^{2t} Y_{k,m} with t < N.

#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "polyharm/measures.hpp"

namespace polyharm {

// Basis of U_order intersected with {degree <= degree_cap}: the products
// |x|^{2t} Y_{k,m} with t < order and 2t + k <= degree_cap, listed by
// ascending (total degree, k, m).  order = 0 gives the empty list.
std::vector<MPoly> un_basis(int dim, int order, int degree_cap);

// un_basis with order = np_formula(P), the tight space for the variety
// attached to P.
std::vector<MPoly> unp_basis(const MPoly& P, int degree_cap);

struct RankReport {
  int dim = 0;
  int order = 0;       // the N of U_N actually used
  int degree_cap = 0;  // D
  int atom_count = 0;
  int basis_size = 0;
  int rank = 0;
  bool full_rank = false;
  // Present when full_rank: an element of the span taking the values
  // 1, 2, ..., atom_count at the atoms in order — an explicit separator.
  std::optional<MPoly> witness;

  nlohmann::ordered_json to_json() const;
};

// Rank of the exact evaluation matrix of unp_basis(P, degree_cap) at the
// given points.  Points must be distinct, of the right dimension, and lie
// on P = 0 (the test quantifies over measures supported there).
RankReport density_rank_test(const MPoly& P,
                             const std::vector<std::vector<Rational>>& atoms,
                             int degree_cap);

// Exploratory variant with an explicit order N instead of np_formula(P);
// reports ranks for smaller spaces without asserting anything about them.
RankReport density_rank_report(const MPoly& P,
                               const std::vector<std::vector<Rational>>& atoms,
                               int order, int degree_cap);

struct SeparationReport {
  enum class Outcome { equal, separated, inconclusive };
  Outcome outcome = Outcome::inconclusive;
  int degree = 0;  // witness degree, or the cap when no witness was found
  std::optional<MPoly> witness;
  std::optional<Rational> moment_mu;
  std::optional<Rational> moment_nu;

  nlohmann::ordered_json to_json() const;
};

// Searches unp_basis(P, D) by increasing degree D <= degree_cap for an
// element with different integrals against mu and nu.  Identical atom/
// weight sets short-circuit to `equal` (their moments agree trivially).
// Atoms of either measure off the variety P = 0 are an error.  For truly
// distinct measures on the variety a witness always exists; the caller
// picks a generous cap and treats `inconclusive` as a red flag.
SeparationReport separation_test(const MPoly& P, const DiscreteMeasure& mu,
                                 const DiscreteMeasure& nu, int degree_cap);

}  // namespace polyharm
