// The transform expansion, its numeric evaluation, the moment functional,
// second-kind representations, the exact product identity, and the support
// verdicts.  Every series coefficient has an independent integral route;
// small cases are frozen from hand computation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "testutil.hpp"

using namespace polyharm;
using testutil::Rng;

namespace {

DiscreteMeasure origin_atom(int n) {
  std::vector<Rational> zero((std::size_t)n, Rational(0));
  return DiscreteMeasure(n, Rational(1), {{zero, Rational(1)}});
}

// Four unit atoms at (+-1, 0), (0, +-1) with equal weight w.
DiscreteMeasure cross_measure(const Rational& w) {
  std::vector<Atom> atoms = {
      {{Rational(1), Rational(0)}, w},
      {{Rational(-1), Rational(0)}, w},
      {{Rational(0), Rational(1)}, w},
      {{Rational(0), Rational(-1)}, w},
  };
  return DiscreteMeasure(2, Rational(1), std::move(atoms));
}

}  // namespace

TEST_CASE("an atom at the origin transforms to 1/zeta") {
  for (int n = 2; n <= 4; ++n) {
    SeriesRep s = markov_series(origin_atom(n), 5);
    REQUIRE(s.coeffs.size() == 1);
    CHECK(s.at(0, 0, 1) == Rational(1));
    CHECK(s.dim == n);
    CHECK(s.s_max == 5);
  }
}

TEST_CASE("series coefficients for a single off-center atom") {
  // Atom at (1/2, 0), weight 1: the (s, k, 1) coefficient is
  // (1/2)^s / norm_sq(k) and the sine sectors vanish.
  DiscreteMeasure mu(2, Rational(1),
                     {{{Rational(1, 2), Rational(0)}, Rational(1)}});
  SeriesRep s = markov_series(mu, 4);
  CHECK(s.at(0, 0, 1) == Rational(1));
  CHECK(s.at(1, 1, 1) == Rational(1));            // (1/2)^1 / (1/2)
  CHECK(s.at(2, 0, 1) == Rational(1, 4));         // t = 1
  CHECK(s.at(2, 2, 1) == Rational(1, 2));         // (1/2)^2 / (1/2)
  CHECK(s.at(3, 1, 1) == Rational(1, 4));         // (1/2)^3 / (1/2)
  CHECK(s.at(4, 4, 1) == Rational(1, 8));         // (1/2)^4 / (1/2)
  CHECK(s.at(1, 1, 2) == Rational(0));
  CHECK(s.at(2, 2, 2) == Rational(0));
}

TEST_CASE("series coefficients equal layered moments over norms") {
  Rng rng(606u);
  for (int iter = 0; iter < 8; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 4);
    const int s_max = 5;
    SeriesRep s = markov_series(mu, s_max);
    MomentTable table = distributed_moments(mu, s_max / 2, s_max);
    for (int deg = 0; deg <= s_max; ++deg) {
      for (int k = deg % 2; k <= deg; k += 2) {
        const int t = (deg - k) / 2;
        const auto& layer = harmonic_basis(n, k);
        for (int m = 1; m <= (int)layer.elements.size(); ++m)
          CHECK(s.at(deg, k, m) ==
                table.entries.at({t, k, m}) /
                    layer.elements[(std::size_t)m - 1].norm_sq);
      }
    }
    // Stored coefficients are nonzero and within the window.
    for (const auto& [key, c] : s.coeffs) {
      CHECK(!c.is_zero());
      CHECK(std::get<0>(key) <= s_max);
    }
  }
}

TEST_CASE("rest expansion against the constant reproduces the transform") {
  Rng rng(607u);
  for (int iter = 0; iter < 6; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 4);
    SeriesRep a = markov_series(mu, 6);
    SeriesRep b = rest_series(MPoly::constant(n, Rational(1)), mu, 6);
    CHECK(a.coeffs == b.coeffs);
  }
}

TEST_CASE("rest coefficients have an independent integral route") {
  Rng rng(608u);
  for (int iter = 0; iter < 6; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 3);
    MPoly p = testutil::rand_poly(rng, n, 3, 3);
    const int s_max = 5;
    SeriesRep r = rest_series(p, mu, s_max);
    MPoly r2 = radial_sq(n);
    for (int deg = 0; deg <= s_max; ++deg) {
      for (int k = deg % 2; k <= deg; k += 2) {
        const int t = (deg - k) / 2;
        const auto& layer = harmonic_basis(n, k);
        for (int m = 1; m <= (int)layer.elements.size(); ++m) {
          const auto& el = layer.elements[(std::size_t)m - 1];
          CHECK(r.at(deg, k, m) ==
                integrate_poly(mu, p * r2.pow((unsigned)t) * el.poly) /
                    el.norm_sq);
        }
      }
    }
  }
}

TEST_CASE("numeric evaluation matches closed values and the series") {
  // Atom at the origin: T(zeta) = 1/zeta in every dimension.
  for (int n = 2; n <= 3; ++n) {
    std::vector<double> theta((std::size_t)n, 0.0);
    theta[0] = 1.0;
    auto v = markov_eval_numeric(origin_atom(n), {2.0, 0.0}, theta);
    CHECK(std::abs(v - std::complex<double>(0.5, 0.0)) < 1e-14);
  }

  // Three-atom measure: series evaluation converges to the direct sum.
  DiscreteMeasure mu(2, Rational(1),
                     {{{Rational(1, 2), Rational(0)}, Rational(1)},
                      {{Rational(0), Rational(-1, 2)}, Rational(2)},
                      {{Rational(1, 4), Rational(1, 4)}, Rational(-1)}});
  SeriesRep s = markov_series(mu, 60);
  const std::complex<double> zeta(0.0, 3.0);
  const std::vector<double> theta = {0.6, 0.8};  // exactly unit length
  const auto direct = markov_eval_numeric(mu, zeta, theta);
  const auto summed = series_eval_numeric(s, zeta, theta);
  CHECK(std::abs(direct - summed) / std::abs(direct) < 1e-10);
}

TEST_CASE("numeric evaluation rejects bad arguments") {
  DiscreteMeasure mu = origin_atom(3);
  // Odd dimension takes a real branch: complex zeta is refused.
  CHECK_THROWS_AS(markov_eval_numeric(mu, {2.0, 1.0}, {1.0, 0.0, 0.0}),
                  Error);
  // Direction must be unit length.
  CHECK_THROWS_AS(markov_eval_numeric(mu, {2.0, 0.0}, {1.0, 1.0, 0.0}),
                  Error);
  // |zeta| must exceed the radius.
  CHECK_THROWS_AS(
      markov_eval_numeric(origin_atom(2), {0.5, 0.0}, {1.0, 0.0}), Error);
}

TEST_CASE("moment functional recovers exact integrals") {
  Rng rng(609u);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 4);
    MPoly p = testutil::rand_poly(rng, n, 4, 4);
    SeriesRep s = markov_series(mu, p.total_degree());
    CHECK(moment_functional(s, p) == integrate_poly(mu, p));
  }
  // A window smaller than the degree cannot answer and must say so.
  DiscreteMeasure mu = origin_atom(2);
  SeriesRep tight = markov_series(mu, 1);
  CHECK_THROWS_AS(moment_functional(tight, parse_poly("x1^2", 2)),
                  TruncationError);
}

TEST_CASE("second-kind representation of the unit circle polynomial") {
  // P = |x|^2 - 1 against measures on the unit circle: every sector is
  // the constant integral of Y_{k,m},  so the cross measure with weight
  // 1/4 keeps exactly the k = 0 and k = 4 sectors in a window k <= 5.
  MPoly p = parse_poly("x1^2 + x2^2 - 1", 2);
  SecondKindRep rep = second_kind(p, cross_measure(Rational(1, 4)), 5);
  REQUIRE(rep.sectors.size() == 2);
  CHECK(rep.sectors[0].k == 0);
  CHECK(rep.sectors[0].m == 1);
  REQUIRE(rep.sectors[0].p.size() == 1);
  CHECK(rep.sectors[0].p[0] == Rational(1));  // total mass
  CHECK(rep.sectors[1].k == 4);
  CHECK(rep.sectors[1].m == 1);
  REQUIRE(rep.sectors[1].p.size() == 1);
  CHECK(rep.sectors[1].p[0] == Rational(1));

  // Two symmetric atoms keep k = 0 and k = 2.
  DiscreteMeasure pm(2, Rational(1),
                     {{{Rational(1), Rational(0)}, Rational(1, 2)},
                      {{Rational(-1), Rational(0)}, Rational(1, 2)}});
  SecondKindRep rep2 = second_kind(p, pm, 3);
  REQUIRE(rep2.sectors.size() == 2);
  CHECK(rep2.sectors[0].k == 0);
  CHECK(rep2.sectors[0].p[0] == Rational(1));
  CHECK(rep2.sectors[1].k == 2);
  CHECK(rep2.sectors[1].p[0] == Rational(1));  // integral of x1^2 - x2^2
}

TEST_CASE("second-kind sector degrees stay below the product degree") {
  Rng rng(610u);
  for (int iter = 0; iter < 6; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 3);
    MPoly p = testutil::rand_poly(rng, n, 3, 3);
    SecondKindRep rep = second_kind(p, mu, 4);
    for (const auto& sec : rep.sectors) {
      const auto& layer = harmonic_basis(n, sec.k);
      const MPoly prod =
          p * layer.elements[(std::size_t)sec.m - 1].poly;
      CHECK((int)sec.p.size() <= polyharmonic_degree(prod));
      CHECK(!sec.p.empty());
      CHECK(!sec.p.back().is_zero());
    }
  }
}

TEST_CASE("product identity holds exactly") {
  // Hand-checked instance: P = x1 against a single off-center atom.
  DiscreteMeasure one(2, Rational(1),
                      {{{Rational(1, 2), Rational(0)}, Rational(1)}});
  CHECK(identity_check(parse_poly("x1", 2), one, 6));

  // Random instances.
  Rng rng(611u);
  for (int iter = 0; iter < 4; ++iter) {
    DiscreteMeasure mu = testutil::rand_measure(rng, 2, 3);
    MPoly p = testutil::rand_poly(rng, 2, 2, 3);
    CHECK(identity_check(p, mu, p.total_degree() + 4));
  }

  // Windows that cannot see past the polynomial part are refused.
  CHECK_THROWS_AS(identity_check(parse_poly("x1^2", 2), one, 2),
                  TruncationError);
}

TEST_CASE("support verdicts in both directions") {
  MPoly circ = parse_poly("x1^2 + x2^2 - 1", 2);
  DiscreteMeasure on = cross_measure(Rational(1, 4));

  SupportReport yes = support_verdict(circ, on, 12);
  CHECK(yes.verdict == Support::supported);
  CHECK(yes.sufficient_s_max == 2 * 4 + 2);
  CHECK(!yes.certificate.has_value());

  // Window too small to conclude: all coefficients vanish but the scan
  // cannot rule out later ones.
  SupportReport small = support_verdict(circ, on, 5);
  CHECK(small.verdict == Support::undecided);

  // One atom off the variety flips the verdict, with a certificate.
  DiscreteMeasure off(2, Rational(1),
                      {{{Rational(1), Rational(0)}, Rational(1)},
                       {{Rational(1, 2), Rational(0)}, Rational(1)}});
  SupportReport no = support_verdict(circ, off, 12);
  CHECK(no.verdict == Support::not_supported);
  REQUIRE(no.certificate.has_value());
  REQUIRE(no.certificate_value.has_value());
  CHECK(!no.certificate_value->is_zero());
  // The certificate names an actual nonzero rest coefficient.
  const auto [cs, ck, cm] = *no.certificate;
  CHECK(rest_series(circ, off, cs).at(cs, ck, cm) == *no.certificate_value);
}

TEST_CASE("residue pairing vanishes identically") {
  Rng rng(612u);
  for (int iter = 0; iter < 6; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 3);
    MPoly p = testutil::rand_poly(rng, n, 3, 3);
    MPoly h = testutil::rand_poly(rng, n, 3, 3);
    CHECK(second_kind_orthogonality(p, mu, h) == Rational(0));
  }
}

TEST_CASE("second-kind sectors are annihilated by the radial operator") {
  Rng rng(613u);
  for (int iter = 0; iter < 6; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 3);
    MPoly p = testutil::rand_poly(rng, n, 3, 3);
    CHECK(polyharmonicity_check(p, mu));
  }
}

TEST_CASE("distinct measures separate within the doubled atom budget") {
  Rng rng(614u);
  for (int iter = 0; iter < 8; ++iter) {
    const int n = testutil::rand_int(rng, 2, 3);
    DiscreteMeasure mu = testutil::rand_measure(rng, n, 3);
    DiscreteMeasure nu = testutil::rand_measure(rng, n, 2);
    const int window = 2 * (mu.atom_count() + nu.atom_count());
    CHECK(markov_series(mu, window).coeffs !=
          markov_series(nu, window).coeffs);
  }
  // And identical measures agree everywhere, trivially.
  DiscreteMeasure mu = testutil::rand_measure(rng, 2, 3);
  CHECK(markov_series(mu, 8).coeffs == markov_series(mu, 8).coeffs);
}

TEST_CASE("JSON shapes for series, second kind, and verdicts") {
  DiscreteMeasure mu(2, Rational(1),
                     {{{Rational(1, 2), Rational(0)}, Rational(1)}});
  auto sj = markov_series(mu, 2).to_json();
  CHECK(sj["dim"] == 2);
  CHECK(sj["s_max"] == 2);
  REQUIRE(sj["coeffs"].is_array());
  // Field order is part of the output contract.
  CHECK(sj["coeffs"][0].dump() == R"({"s":0,"k":0,"m":1,"value":"1"})");

  auto kj = second_kind(parse_poly("x1^2 + x2^2 - 1", 2),
                        cross_measure(Rational(1, 4)), 4)
                .to_json();
  CHECK(kj["dim"] == 2);
  CHECK(kj["k_max"] == 4);
  REQUIRE(kj["sectors"].is_array());
  CHECK(kj["sectors"][0]["k"] == 0);
  CHECK(kj["sectors"][0]["p"][0] == "1");

  auto vj = support_verdict(parse_poly("x1^2 + x2^2 - 1", 2),
                            cross_measure(Rational(1, 4)), 12)
                .to_json();
  CHECK(vj["verdict"] == "supported");
}
