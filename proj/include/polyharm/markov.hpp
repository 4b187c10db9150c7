// The multivariate Markov transform of a discrete measure and its
// decomposition against a polynomial, all at the level of exact Laurent
// coefficients.
//
// For a measure mu with atoms x_i, weights w_i inside radius R, the
// transform is
//     T(zeta, theta) = sum_i w_i zeta^{n-1} / q_i(zeta)^{n/2},
//     q_i(zeta) = zeta^2 - 2 zeta <theta, x_i> + |x_i|^2,
// defined for |zeta| > R, theta on the unit sphere.  All sphere integrals
// are carried in units of the total sphere measure (see harmonic.hpp), and
// the atom-at-origin unit mass gives T = 1/zeta in every dimension.
//
// Expanded at infinity,
//     T(zeta, theta) = sum coeff(s,k,m) * Y_{k,m}(theta) / zeta^{s+1},
// where coeff(2t+k, k, m) is the distributed moment of |x|^{2t} Y_{k,m}
// divided by norm_sq(Y_{k,m}); SeriesRep stores these coefficients.
//
// Multiplying by a polynomial P splits the transform into a part with
// polynomially growing zeta-powers (the function of the second kind) and a
// decaying rest:
//     P(zeta theta) T(zeta, theta) = Q(zeta, theta) + R(zeta, theta),
// Q = sum_{k,m} zeta^{1-k} p_{k,m}(zeta^2) Y_{k,m}(theta) / norm_sq(k,m),
// R = the rest series with coefficients integral(P |x|^{2t} Y_{k,m} dmu)
// divided by norm_sq(k,m).  identity_check verifies the splitting exactly,
// coefficient by coefficient, in the common Laurent window.

#pragma once

#include <json.hpp>

#include <complex>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "polyharm/measures.hpp"

namespace polyharm {

// Coefficients of an expansion sum coeff(s,k,m) Y_{k,m}(theta)/zeta^{s+1},
// complete for s <= s_max; only nonzero coefficients are stored.
struct SeriesRep {
  int dim = 0;
  int s_max = 0;
  std::map<std::tuple<int, int, int>, Rational> coeffs;

  Rational at(int s, int k, int m) const {
    auto it = coeffs.find({s, k, m});
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  nlohmann::ordered_json to_json() const;
};

// Expansion of the transform itself.
SeriesRep markov_series(const DiscreteMeasure& mu, int s_max);

// Expansion of the rest function against P: coefficient (s=2t+k, k, m) is
// integral(P |x|^{2t} Y_{k,m} dmu) / norm_sq(k,m).  P = 1 reproduces
// markov_series entrywise.
SeriesRep rest_series(const MPoly& P, const DiscreteMeasure& mu, int s_max);

// Direct numeric evaluation of the transform.  theta must have unit length
// (within 1e-9); |zeta| must exceed the measure radius; odd dimensions
// take the principal real branch, so zeta must be real there.
std::complex<double> markov_eval_numeric(const DiscreteMeasure& mu,
                                         std::complex<double> zeta,
                                         const std::vector<double>& theta);

// Numeric evaluation of a truncated series at (zeta, theta); test aid for
// comparing against markov_eval_numeric.
std::complex<double> series_eval_numeric(const SeriesRep& series,
                                         std::complex<double> zeta,
                                         const std::vector<double>& theta);

// The moment functional recovered from series coefficients:
//     sum over the expansion P = sum eta(t,k,m) |x|^{2t} Y_{k,m} of
//     eta * coeff(2t+k, k, m) * norm_sq(k,m),
// which equals integrate_poly(mu, P) when the series comes from mu.
// Throws TruncationError if the series window is smaller than deg P.
Rational moment_functional(const SeriesRep& series, const MPoly& P);

// Function of the second kind: one polynomial p_{k,m} (in u = zeta^2) per
// sector, nonzero sectors only, truncated at k <= k_max.  The coefficient
// list of each sector is p[0..]; deg p_{k,m} < polyharmonic_degree(P Y_{k,m})
// holds structurally.  Sectors with k > k_max are not represented: a
// general measure has nonzero sectors at arbitrarily large k, so a finite
// representation must fix a window.
struct SecondKindRep {
  int dim = 0;
  int k_max = 0;
  struct Sector {
    int k = 0;
    int m = 0;
    std::vector<Rational> p;  // p[i] multiplies zeta^{2i}
  };
  std::vector<Sector> sectors;  // ascending (k, m)

  nlohmann::ordered_json to_json() const;
};

// Builds the second-kind representation: for each sector, decompose
// P * Y_{k,m} = sum_j |x|^{2j} h_j and set
//     p_{k,m}[i] = sum_{j >= i+1} integral(|x|^{2(j-1-i)} h_j dmu).
SecondKindRep second_kind(const MPoly& P, const DiscreteMeasure& mu,
                          int k_max);

// Default window: every sector that can pair against polynomials of degree
// up to deg P + 10.
SecondKindRep second_kind(const MPoly& P, const DiscreteMeasure& mu);

// Verifies P(zeta theta) * T = Q + R as exact Laurent coefficients in
// zeta, sector by sector, for all zeta-exponents q >= -(s_max + 1).  The
// product side is computed independently by re-expanding products of
// harmonics over the layers.  Requires s_max >= deg P + 1 (smaller windows
// throw TruncationError: they cannot see past the polynomial part).
bool identity_check(const MPoly& P, const DiscreteMeasure& mu, int s_max);

// Support test for the variety P = 0.
enum class Support { supported, not_supported, undecided };
struct SupportReport {
  Support verdict = Support::undecided;
  int s_max = 0;             // window scanned
  int sufficient_s_max = 0;  // 2*atom_count + deg P: conclusive threshold
  // First nonzero rest coefficient, present iff not_supported.
  std::optional<std::tuple<int, int, int>> certificate;
  std::optional<Rational> certificate_value;

  nlohmann::ordered_json to_json() const;
};

// Scans rest_series(P, mu, s_max) in ascending (s, k, m) order.  A nonzero
// coefficient proves some atom is off the variety (certificate returned);
// an all-zero window of size >= 2*atom_count + deg P proves every atom
// satisfies P = 0; an all-zero smaller window is undecided.  The exact
// atom test P(x_i) = 0 is cross-checked internally whenever decided.
SupportReport support_verdict(const MPoly& P, const DiscreteMeasure& mu,
                              int s_max);

// Residue pairing of the second-kind function against a polynomial h:
// expand h over |x|^{2t} Y_{k,m} and pick the zeta^{-1} coefficient of
// zeta^{2t+k} * zeta^{1-k} p_{k,m}(zeta^2) per sector.  The pairing
// vanishes identically; the returned value is the exact sum (expected 0).
Rational second_kind_orthogonality(const MPoly& P, const DiscreteMeasure& mu,
                                   const MPoly& h);

// Sector-wise polyharmonicity of the second-kind function: each sector
// gives the radial Laurent polynomial f(r) = r^{-(n+k-2)} p_{k,m}(r^2);
// applying the radial operator
//     L_(k): c r^j  ->  c [j (j+n-2) - k (k+n-2)] r^{j-2}
// np_formula(P) times must annihilate every sector.
bool polyharmonicity_check(const MPoly& P, const DiscreteMeasure& mu,
                           int k_max);
bool polyharmonicity_check(const MPoly& P, const DiscreteMeasure& mu);

}  // namespace polyharm
