#include "polyharm/verify.hpp"

#include "polyharm/parser.hpp"

#include <algorithm>
#include <map>

namespace polyharm {

namespace {

// Level-D slice of the basis: |x|^{2t} Y_{k,m} with 2t + k = D, t < order,
// ascending (k, m).
std::vector<MPoly> un_level(int dim, int order, int D) {
  std::vector<MPoly> out;
  const MPoly r2 = radial_sq(dim);
  for (int k = D % 2; k <= D; k += 2) {
    const int t = (D - k) / 2;
    if (t >= order) continue;
    const HarmonicLayer& layer = harmonic_basis(dim, k);
    const MPoly radial = r2.pow((unsigned)t);
    for (const auto& el : layer.elements) out.push_back(radial * el.poly);
  }
  return out;
}

void check_points(const MPoly& P,
                  const std::vector<std::vector<Rational>>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if ((int)atoms[i].size() != P.dim())
      throw Error("atom " + std::to_string(i) + " has wrong dimension");
    if (!P.eval(atoms[i]).is_zero())
      throw Error("atom " + std::to_string(i) +
                  " does not lie on the variety P = 0");
    for (std::size_t j = 0; j < i; ++j)
      if (atoms[j] == atoms[i])
        throw Error("duplicate atom at index " + std::to_string(i));
  }
}

}  // namespace

std::vector<MPoly> un_basis(int dim, int order, int degree_cap) {
  if (order < 0) throw Error("order must be >= 0");
  std::vector<MPoly> out;
  for (int D = 0; D <= degree_cap; ++D)
    for (MPoly& b : un_level(dim, order, D)) out.push_back(std::move(b));
  return out;
}

std::vector<MPoly> unp_basis(const MPoly& P, int degree_cap) {
  return un_basis(P.dim(), np_formula(P), degree_cap);
}

RankReport density_rank_report(const MPoly& P,
                               const std::vector<std::vector<Rational>>& atoms,
                               int order, int degree_cap) {
  check_points(P, atoms);
  RankReport report;
  report.dim = P.dim();
  report.order = order;
  report.degree_cap = degree_cap;
  report.atom_count = (int)atoms.size();
  const std::vector<MPoly> basis = un_basis(P.dim(), order, degree_cap);
  report.basis_size = (int)basis.size();

  RatMatrix E((Eigen::Index)atoms.size(), (Eigen::Index)basis.size());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      E((Eigen::Index)i, (Eigen::Index)j) = basis[j].eval(atoms[i]);
  report.rank = rank_ff(E);
  report.full_rank = (report.rank == report.atom_count);

  if (report.full_rank && report.atom_count > 0) {
    RatVector v((Eigen::Index)atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) v((Eigen::Index)i) = Rational((long)i + 1);
    auto c = solve_ff(E, v);
    if (!c) throw Error("density rank: interpolation unexpectedly failed");
    MPoly w(P.dim());
    for (std::size_t j = 0; j < basis.size(); ++j)
      w += (*c)((Eigen::Index)j) * basis[j];
    report.witness = std::move(w);
  }
  return report;
}

RankReport density_rank_test(const MPoly& P,
                             const std::vector<std::vector<Rational>>& atoms,
                             int degree_cap) {
  return density_rank_report(P, atoms, np_formula(P), degree_cap);
}

nlohmann::ordered_json RankReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["dim"] = dim;
  doc["order"] = order;
  doc["degree_cap"] = degree_cap;
  doc["atom_count"] = atom_count;
  doc["basis_size"] = basis_size;
  doc["rank"] = rank;
  doc["full_rank"] = full_rank;
  if (witness) doc["witness"] = to_string(*witness);
  return doc;
}

SeparationReport separation_test(const MPoly& P, const DiscreteMeasure& mu,
                                 const DiscreteMeasure& nu, int degree_cap) {
  if (mu.dim() != nu.dim() || mu.dim() != P.dim())
    throw Error("separation: dimension mismatch");
  std::vector<std::vector<Rational>> pts;
  for (const Atom& a : mu.atoms()) pts.push_back(a.point);
  check_points(P, pts);
  pts.clear();
  for (const Atom& a : nu.atoms()) pts.push_back(a.point);
  check_points(P, pts);

  SeparationReport report;

  // Exact equality of atom/weight sets (order-independent).
  std::map<std::vector<Rational>, Rational> ma, mb;
  for (const Atom& a : mu.atoms()) ma.emplace(a.point, a.weight);
  for (const Atom& a : nu.atoms()) mb.emplace(a.point, a.weight);
  const int order = np_formula(P);
  if (ma == mb) {
    // Sanity: identical measures must agree on every basis moment.
    for (int D = 0; D <= degree_cap; ++D)
      for (const MPoly& h : un_level(P.dim(), order, D))
        if (integrate_poly(mu, h) != integrate_poly(nu, h))
          throw Error("separation: equal measures with unequal moments");
    report.outcome = SeparationReport::Outcome::equal;
    report.degree = 0;
    return report;
  }

  for (int D = 0; D <= degree_cap; ++D) {
    for (const MPoly& h : un_level(P.dim(), order, D)) {
      const Rational a = integrate_poly(mu, h);
      const Rational b = integrate_poly(nu, h);
      if (a != b) {
        report.outcome = SeparationReport::Outcome::separated;
        report.degree = D;
        report.witness = h;
        report.moment_mu = a;
        report.moment_nu = b;
        return report;
      }
    }
  }
  report.outcome = SeparationReport::Outcome::inconclusive;
  report.degree = degree_cap;
  return report;
}

nlohmann::ordered_json SeparationReport::to_json() const {
  nlohmann::ordered_json doc;
  switch (outcome) {
    case Outcome::equal: doc["outcome"] = "equal"; break;
    case Outcome::separated: doc["outcome"] = "separated"; break;
    case Outcome::inconclusive: doc["outcome"] = "inconclusive"; break;
  }
  doc["degree"] = degree;
  if (witness) {
    doc["witness"] = to_string(*witness);
    doc["moment_mu"] = moment_mu->str();
    doc["moment_nu"] = moment_nu->str();
  }
  return doc;
}

}  // namespace polyharm
