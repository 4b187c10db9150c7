#include "polyharm/markov.hpp"

#include <cmath>
#include <mutex>

namespace polyharm {

namespace {

Rational point_norm_sq(const std::vector<Rational>& x) {
  Rational s(0);
  for (const Rational& v : x) s += v * v;
  return s;
}

// Restriction of a product of two layer elements back to the layers:
// Y_{k1,m1} * Y_{k2,m2} restricted to the sphere equals
// sum gamma(k,m) Y_{k,m}; the gammas are harmonic-expansion coefficients
// of the product, with the radial power collapsed to 1.  Memoized: the
// identity check hits the same pairs over and over.
const std::vector<std::tuple<int, int, Rational>>& product_projection(
    int dim, int k1, int m1, int k2, int m2) {
  using Key = std::tuple<int, int, int, int, int>;
  static std::map<Key, std::vector<std::tuple<int, int, Rational>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const Key key{dim, k1, m1, k2, m2};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const MPoly& a = harmonic_basis(dim, k1).elements[(std::size_t)m1 - 1].poly;
  const MPoly& b = harmonic_basis(dim, k2).elements[(std::size_t)m2 - 1].poly;
  std::vector<std::tuple<int, int, Rational>> out;
  for (const auto& [tkm, c] : harmonic_expansion(a * b).coeffs)
    out.emplace_back(std::get<1>(tkm), std::get<2>(tkm), c);
  return cache.emplace(key, std::move(out)).first->second;
}

std::complex<double> complex_ipow(std::complex<double> base, int e) {
  std::complex<double> r(1.0, 0.0);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

nlohmann::ordered_json SeriesRep::to_json() const {
  nlohmann::ordered_json doc;
  doc["dim"] = dim;
  doc["s_max"] = s_max;
  doc["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : coeffs) {
    const auto& [s, k, m] = key;
    nlohmann::ordered_json e;
    e["s"] = s;
    e["k"] = k;
    e["m"] = m;
    e["value"] = value.str();
    doc["coeffs"].push_back(std::move(e));
  }
  return doc;
}

SeriesRep rest_series(const MPoly& P, const DiscreteMeasure& mu, int s_max) {
  if (P.dim() != mu.dim()) throw Error("measure/polynomial dimension mismatch");
  if (s_max < 0) throw Error("series window must be >= 0");
  SeriesRep series;
  series.dim = mu.dim();
  series.s_max = s_max;
  for (const Atom& a : mu.atoms()) {
    const Rational pv = a.weight * P.eval(a.point);
    if (pv.is_zero()) continue;
    const Rational r2 = point_norm_sq(a.point);
    for (int k = 0; k <= s_max; ++k) {
      const HarmonicLayer& layer = harmonic_basis(mu.dim(), k);
      for (std::size_t m = 0; m < layer.elements.size(); ++m) {
        const Rational y = layer.elements[m].poly.eval(a.point);
        if (y.is_zero()) continue;
        Rational v = pv * y / layer.elements[m].norm_sq;
        for (int s = k; s <= s_max; s += 2) {
          auto [it, fresh] = series.coeffs.try_emplace({s, k, (int)m + 1}, v);
          if (!fresh) it->second += v;
          v *= r2;
        }
      }
    }
  }
  // Entries that cancelled across atoms are dropped: nonzero storage only.
  for (auto it = series.coeffs.begin(); it != series.coeffs.end();)
    it = it->second.is_zero() ? series.coeffs.erase(it) : std::next(it);
  return series;
}

SeriesRep markov_series(const DiscreteMeasure& mu, int s_max) {
  return rest_series(MPoly::constant(mu.dim(), Rational(1)), mu, s_max);
}

std::complex<double> markov_eval_numeric(const DiscreteMeasure& mu,
                                         std::complex<double> zeta,
                                         const std::vector<double>& theta) {
  const int n = mu.dim();
  if ((int)theta.size() != n) throw Error("theta has wrong dimension");
  double tn = 0.0;
  for (double v : theta) tn += v * v;
  if (std::abs(tn - 1.0) > 1e-9)
    throw Error("theta must lie on the unit sphere");
  const double R = mu.radius().to_double();
  if (std::abs(zeta) <= R)
    throw Error("zeta must satisfy |zeta| > measure radius");
  const bool odd = (n % 2 != 0);
  if (odd && zeta.imag() != 0.0)
    throw Error("odd dimensions evaluate on the real axis only");

  std::complex<double> sum(0.0, 0.0);
  const std::complex<double> zpow = complex_ipow(zeta, n - 1);
  for (const Atom& a : mu.atoms()) {
    double dot = 0.0, xx = 0.0;
    for (int i = 0; i < n; ++i) {
      const double xi = a.point[(std::size_t)i].to_double();
      dot += theta[(std::size_t)i] * xi;
      xx += xi * xi;
    }
    const std::complex<double> q = zeta * zeta - 2.0 * zeta * dot + xx;
    std::complex<double> qpow;
    if (odd) {
      // q is real and positive for real |zeta| > R.
      qpow = std::pow(std::sqrt(q.real()), n);
    } else {
      qpow = complex_ipow(q, n / 2);
    }
    sum += a.weight.to_double() * zpow / qpow;
  }
  return sum;
}

std::complex<double> series_eval_numeric(const SeriesRep& series,
                                         std::complex<double> zeta,
                                         const std::vector<double>& theta) {
  if ((int)theta.size() != series.dim) throw Error("theta has wrong dimension");
  std::complex<double> sum(0.0, 0.0);
  int cur_k = -1, cur_m = -1;
  double y = 0.0;
  const std::complex<double> inv = 1.0 / zeta;
  for (const auto& [key, value] : series.coeffs) {
    const auto& [s, k, m] = key;
    if (k != cur_k || m != cur_m) {
      cur_k = k;
      cur_m = m;
      y = harmonic_basis(series.dim, k)
              .elements[(std::size_t)m - 1]
              .poly.eval_double(theta);
    }
    sum += value.to_double() * y * complex_ipow(inv, s + 1);
  }
  return sum;
}

Rational moment_functional(const SeriesRep& series, const MPoly& P) {
  if (P.dim() != series.dim)
    throw Error("series/polynomial dimension mismatch");
  if (P.total_degree() > series.s_max)
    throw TruncationError(
        "series window s_max=" + std::to_string(series.s_max) +
        " is too small for a degree-" + std::to_string(P.total_degree()) +
        " polynomial");
  Rational sum(0);
  for (const auto& [tkm, eta] : harmonic_expansion(P).coeffs) {
    const auto& [t, k, m] = tkm;
    const Rational& nsq =
        harmonic_basis(series.dim, k).elements[(std::size_t)m - 1].norm_sq;
    sum += eta * series.at(2 * t + k, k, m) * nsq;
  }
  return sum;
}

SecondKindRep second_kind(const MPoly& P, const DiscreteMeasure& mu,
                          int k_max) {
  if (P.dim() != mu.dim()) throw Error("measure/polynomial dimension mismatch");
  if (k_max < 0) throw Error("sector window must be >= 0");
  SecondKindRep rep;
  rep.dim = mu.dim();
  rep.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    const HarmonicLayer& layer = harmonic_basis(mu.dim(), k);
    for (std::size_t m = 0; m < layer.elements.size(); ++m) {
      const AlmansiDecomp dec = almansi_decompose(P * layer.elements[m].poly);
      const int J = (int)dec.harmonics.size() - 1;
      if (J < 1) continue;
      std::vector<Rational> p((std::size_t)J, Rational(0));
      // p[i] = sum_{j >= i+1} integral(|x|^{2(j-1-i)} h_j dmu): evaluate
      // atomwise with shared radial powers.
      for (const Atom& a : mu.atoms()) {
        const Rational r2 = point_norm_sq(a.point);
        std::vector<Rational> r2pow((std::size_t)J, Rational(1));
        for (int e = 1; e < J; ++e)
          r2pow[(std::size_t)e] = r2pow[(std::size_t)e - 1] * r2;
        for (int j = 1; j <= J; ++j) {
          const Rational hv = a.weight * dec.harmonics[(std::size_t)j].eval(a.point);
          if (hv.is_zero()) continue;
          for (int i = 0; i < j; ++i)
            p[(std::size_t)i] += hv * r2pow[(std::size_t)(j - 1 - i)];
        }
      }
      while (!p.empty() && p.back().is_zero()) p.pop_back();
      if (p.empty()) continue;
      rep.sectors.push_back({k, (int)m + 1, std::move(p)});
    }
  }
  return rep;
}

SecondKindRep second_kind(const MPoly& P, const DiscreteMeasure& mu) {
  return second_kind(P, mu, P.total_degree() + 10);
}

nlohmann::ordered_json SecondKindRep::to_json() const {
  nlohmann::ordered_json doc;
  doc["dim"] = dim;
  doc["k_max"] = k_max;
  doc["sectors"] = nlohmann::ordered_json::array();
  for (const Sector& s : sectors) {
    nlohmann::ordered_json js;
    js["k"] = s.k;
    js["m"] = s.m;
    js["p"] = nlohmann::ordered_json::array();
    for (const Rational& c : s.p) js["p"].push_back(c.str());
    doc["sectors"].push_back(std::move(js));
  }
  return doc;
}

bool identity_check(const MPoly& P, const DiscreteMeasure& mu, int s_max) {
  if (P.dim() != mu.dim()) throw Error("measure/polynomial dimension mismatch");
  const int d = P.total_degree();
  if (s_max < d + 1)
    throw TruncationError(
        "identity window s_max=" + std::to_string(s_max) +
        " cannot see past a degree-" + std::to_string(d) + " polynomial");

  using Key = std::tuple<int, int, int>;  // (zeta exponent q, k, m)
  const int q_min = -(s_max + 1);
  std::map<Key, Rational> lhs, rhs;
  auto put = [&](std::map<Key, Rational>& side, int q, int k, int m,
                 const Rational& v) {
    if (q < q_min || v.is_zero()) return;
    auto [it, fresh] = side.try_emplace({q, k, m}, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) side.erase(it);
    }
  };

  // Left side: P(zeta theta) times the transform series.  Products of
  // sphere values are re-expanded over the layers; series terms with
  // s2 > s_max + d only produce exponents below the window.
  const SeriesRep series = markov_series(mu, s_max + d);
  for (const auto& [tkm, eta] : harmonic_expansion(P).coeffs) {
    const auto& [t1, k1, m1] = tkm;
    const int e1 = 2 * t1 + k1;
    for (const auto& [skm, c2] : series.coeffs) {
      const auto& [s2, k2, m2] = skm;
      const int q = e1 - s2 - 1;
      if (q < q_min) continue;
      const Rational ec = eta * c2;
      for (const auto& [k, m, gamma] :
           product_projection(mu.dim(), k1, m1, k2, m2))
        put(lhs, q, k, m, ec * gamma);
    }
  }

  // Right side: second-kind sectors up to k = s_max + 2d (larger sectors
  // lie entirely below the window) plus the rest series.
  const SecondKindRep Q = second_kind(P, mu, s_max + 2 * d);
  for (const auto& sector : Q.sectors) {
    const Rational& nsq = harmonic_basis(mu.dim(), sector.k)
                              .elements[(std::size_t)sector.m - 1]
                              .norm_sq;
    for (std::size_t i = 0; i < sector.p.size(); ++i)
      put(rhs, 1 - sector.k + 2 * (int)i, sector.k, sector.m,
          sector.p[i] / nsq);
  }
  const SeriesRep rest = rest_series(P, mu, s_max);
  for (const auto& [skm, c] : rest.coeffs) {
    const auto& [s, k, m] = skm;
    put(rhs, -s - 1, k, m, c);
  }

  return lhs == rhs;
}

SupportReport support_verdict(const MPoly& P, const DiscreteMeasure& mu,
                              int s_max) {
  SupportReport report;
  report.s_max = s_max;
  report.sufficient_s_max = 2 * mu.atom_count() + P.total_degree();
  const SeriesRep rest = rest_series(P, mu, s_max);
  if (!rest.coeffs.empty()) {
    const auto& [key, value] = *rest.coeffs.begin();
    report.verdict = Support::not_supported;
    report.certificate = key;
    report.certificate_value = value;
  } else if (s_max >= report.sufficient_s_max) {
    report.verdict = Support::supported;
  } else {
    report.verdict = Support::undecided;
  }

  // Cross-check against the exact atom test: decided verdicts must agree.
  if (report.verdict != Support::undecided) {
    bool all_on_variety = true;
    for (const Atom& a : mu.atoms())
      if (!P.eval(a.point).is_zero()) all_on_variety = false;
    if (all_on_variety != (report.verdict == Support::supported))
      throw Error("support_verdict: series scan contradicts the atom test");
  }
  return report;
}

nlohmann::ordered_json SupportReport::to_json() const {
  nlohmann::ordered_json doc;
  switch (verdict) {
    case Support::supported: doc["verdict"] = "supported"; break;
    case Support::not_supported: doc["verdict"] = "not_supported"; break;
    case Support::undecided: doc["verdict"] = "undecided"; break;
  }
  doc["s_max"] = s_max;
  doc["sufficient_s_max"] = sufficient_s_max;
  if (certificate) {
    nlohmann::ordered_json c;
    c["s"] = std::get<0>(*certificate);
    c["k"] = std::get<1>(*certificate);
    c["m"] = std::get<2>(*certificate);
    c["value"] = certificate_value->str();
    doc["certificate"] = std::move(c);
  }
  return doc;
}

Rational second_kind_orthogonality(const MPoly& P, const DiscreteMeasure& mu,
                                   const MPoly& h) {
  if (h.dim() != mu.dim()) throw Error("measure/polynomial dimension mismatch");
  const HarmonicExpansion he = harmonic_expansion(h);
  int k_need = 0;
  for (const auto& [tkm, eta] : he.coeffs)
    k_need = std::max(k_need, std::get<1>(tkm));
  const SecondKindRep rep = second_kind(P, mu, k_need);

  // Pair h(zeta theta) against Q: sector (k,m) contributes the residue
  // (zeta^{-1} coefficient) of zeta^{2t+k} * zeta^{1-k} p(zeta^2), weighted
  // by eta; the norm factors of the projection and of Y cancel exactly.
  Rational sum(0);
  for (const auto& sector : rep.sectors) {
    for (const auto& [tkm, eta] : he.coeffs) {
      const auto& [t, k, m] = tkm;
      if (k != sector.k || m != sector.m) continue;
      for (std::size_t i = 0; i < sector.p.size(); ++i)
        if (2 * t + 1 + 2 * (int)i == -1) sum += eta * sector.p[i];
    }
  }
  return sum;
}

bool polyharmonicity_check(const MPoly& P, const DiscreteMeasure& mu,
                           int k_max) {
  const int n = mu.dim();
  const int order = np_formula(P);
  const SecondKindRep rep = second_kind(P, mu, k_max);
  for (const auto& sector : rep.sectors) {
    // Radial profile of the sector as a Laurent polynomial in r.
    std::map<int, Rational> f;
    for (std::size_t i = 0; i < sector.p.size(); ++i)
      if (!sector.p[i].is_zero())
        f[2 * (int)i - (n + sector.k - 2)] = sector.p[i];
    const long kk = (long)sector.k * (sector.k + n - 2);
    for (int step = 0; step < order; ++step) {
      std::map<int, Rational> g;
      for (const auto& [j, c] : f) {
        const Rational factor((long)j * (j + n - 2) - kk);
        if (!factor.is_zero()) g[j - 2] = c * factor;
      }
      f = std::move(g);
    }
    if (!f.empty()) return false;
  }
  return true;
}

bool polyharmonicity_check(const MPoly& P, const DiscreteMeasure& mu) {
  return polyharmonicity_check(P, mu, P.total_degree() + 10);
}

}  // namespace polyharm
