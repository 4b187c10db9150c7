// Spherical harmonics and the Almansi (Gauss) decomposition, all in exact
// rational arithmetic.
//
// Conventions fixed here and relied on everywhere else:
//   * sphere_* integrals are means over the unit sphere: the raw surface
//     integral divided by the total surface measure, so <1,1> = 1.
//   * A "layer" is an ordered basis of the degree-k harmonics.  Elements
//     are pairwise orthogonal with primitive integer coefficients and a
//     positive leading coefficient; they are *not* normalized, and each
//     carries its exact squared norm instead.
//   * Expansion coefficients are always taken against this basis, i.e.
//     coeff = <f, Y>/<Y, Y>.

#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "polyharm/linalg.hpp"
#include "polyharm/mpoly.hpp"

namespace polyharm {

// Mean of x^alpha over the unit sphere: zero unless every exponent is even,
// else prod_i (alpha_i - 1)!! / prod_{j=0}^{|alpha|/2-1} (n + 2j).
Rational sphere_monomial_integral(const Monomial& alpha);

// Mean of p*q over the unit sphere.
Rational sphere_inner(const MPoly& p, const MPoly& q);

struct HarmonicLayer {
  int dim = 0;
  int degree = 0;
  struct Element {
    MPoly poly;        // primitive integer coefficients, positive leading
    Rational norm_sq;  // exact <poly, poly>
  };
  std::vector<Element> elements;  // ordered by descending leading monomial
};

// The degree-k layer in dimension n, built once and memoized.  The returned
// reference stays valid for the life of the process.
const HarmonicLayer& harmonic_basis(int dim, int degree);

// p = sum_j |x|^{2j} h_j with every h_j harmonic.  The list runs up to the
// last nonzero h_j, so its length is polyharmonic_degree(p) + 1; the zero
// polynomial yields a single zero entry.
struct AlmansiDecomp {
  std::vector<MPoly> harmonics;
};
AlmansiDecomp almansi_decompose(const MPoly& p);

// Coefficients of p over the products |x|^{2t} * Y_{k,m}: key (t, k, m)
// with m 1-based into the layer, nonzero values only.
struct HarmonicExpansion {
  int dim = 0;
  std::map<std::tuple<int, int, int>, Rational> coeffs;
};
HarmonicExpansion harmonic_expansion(const MPoly& p);

// Reassembles the polynomial from its expansion (test/debug aid).
MPoly expansion_to_poly(const HarmonicExpansion& e);

// Largest polyharmonic degree of p * h over harmonic polynomials h, by the
// closed form: per homogeneous part of degree N with top harmonic layer k0
// in its expansion, the value is (N + k0)/2; take the max over parts.
// Throws on the zero polynomial.
int np_formula(const MPoly& p);

// The same quantity found by direct search over basis harmonics of degree
// at most k_max.  Agrees with np_formula once k_max >= total_degree(p).
int np_search(const MPoly& p, int k_max);

}  // namespace polyharm
