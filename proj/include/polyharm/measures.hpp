// Discrete signed measures: finitely many weighted atoms in a closed ball,
// with exact rational coordinates and weights.
//
// JSON form:
//   {"dim": 2, "radius": "1", "atoms": [{"point": ["1", "0"], "weight": "1"}]}
// Weights may be negative (signed measures); the empty atom list is the
// zero measure.  Moment tables serialize as a JSON array of
//   {"t": int, "k": int, "m": int, "value": "p/q"}.

#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "polyharm/harmonic.hpp"
#include "polyharm/mpoly.hpp"

namespace polyharm {

struct Atom {
  std::vector<Rational> point;
  Rational weight;
};

class DiscreteMeasure {
public:
  // Validates: dim >= 2, radius > 0, every atom inside the closed ball of
  // that radius (exact |x|^2 <= R^2 test), nonzero weights, no duplicate
  // points.  An empty atom list is fine.
  DiscreteMeasure(int dim, Rational radius, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  const Rational& radius() const { return radius_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  int atom_count() const { return (int)atoms_.size(); }

  nlohmann::ordered_json to_json() const;

private:
  int dim_;
  Rational radius_;
  std::vector<Atom> atoms_;
};

// Builds a measure from its JSON document; throws Error on schema or
// validity violations.
DiscreteMeasure load_measure(const nlohmann::json& doc);

// Convenience: read and parse a JSON file.
DiscreteMeasure load_measure_file(const std::string& path);

// Sum of w_i * p(x_i), exact.
Rational integrate_poly(const DiscreteMeasure& mu, const MPoly& p);

// Exact table of integrals of |x|^{2t} Y_{k,m} d(mu), complete (zeros
// included) for 0 <= t <= t_max, 0 <= k <= k_max, 1 <= m <= a_k.
struct MomentTable {
  int dim = 0;
  int t_max = 0;
  int k_max = 0;
  std::map<std::tuple<int, int, int>, Rational> entries;

  nlohmann::ordered_json to_json() const;  // the array form above
};
MomentTable distributed_moments(const DiscreteMeasure& mu, int t_max, int k_max);

// True iff integrate_poly(mu, P*b) = 0 for every basis element
// b = |x|^{2t} Y_{k,m} with 2t + k <= M - 1.  Those products span all
// polynomials of degree < M, so this is orthogonality to the full space.
bool orthogonality_order(const MPoly& P, const DiscreteMeasure& mu, int M);

// seed minus its mu-projection onto span(basis): the returned Q satisfies
// integrate_poly(mu, Q*b) = 0 for every b in basis, and Q - seed lies in
// that span.  The Gram system is solved exactly with free variables pinned
// to zero; for signed measures it can be inconsistent, which is reported
// as an Error (no silent best-effort result).
MPoly orthogonalize_against(const DiscreteMeasure& mu,
                            const std::vector<MPoly>& basis,
                            const MPoly& seed);

// orthogonalize_against with basis = all |x|^{2t} Y_{k,m} of total degree
// < target_degree, in ascending (degree, k, m) order.
MPoly orthogonalize(const DiscreteMeasure& mu, int target_degree,
                    const MPoly& seed);

}  // namespace polyharm
