#include "polyharm/measures.hpp"

#include <fstream>

namespace polyharm {

namespace {

Rational norm_sq_point(const std::vector<Rational>& x) {
  Rational s(0);
  for (const Rational& v : x) s += v * v;
  return s;
}

Rational json_rational(const nlohmann::json& v, const char* what) {
  if (!v.is_string()) throw Error(std::string(what) + " must be a rational string");
  try {
    return Rational::from_string(v.get<std::string>());
  } catch (const ParseError& e) {
    throw Error(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(int dim, Rational radius,
                                 std::vector<Atom> atoms)
    : dim_(dim), radius_(std::move(radius)), atoms_(std::move(atoms)) {
  if (dim_ < 2) throw Error("measure dimension must be at least 2");
  if (radius_.sign() <= 0) throw Error("measure radius must be positive");
  const Rational r2 = radius_ * radius_;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if ((int)a.point.size() != dim_)
      throw Error("atom " + std::to_string(i) + " has wrong dimension");
    if (a.weight.is_zero())
      throw Error("atom " + std::to_string(i) + " has zero weight");
    if (norm_sq_point(a.point) > r2)
      throw Error("atom " + std::to_string(i) + " lies outside radius " +
                  radius_.str());
    for (std::size_t j = 0; j < i; ++j)
      if (atoms_[j].point == a.point)
        throw Error("duplicate atom at index " + std::to_string(i));
  }
}

nlohmann::ordered_json DiscreteMeasure::to_json() const {
  nlohmann::ordered_json doc;
  doc["dim"] = dim_;
  doc["radius"] = radius_.str();
  doc["atoms"] = nlohmann::ordered_json::array();
  for (const Atom& a : atoms_) {
    nlohmann::ordered_json ja;
    ja["point"] = nlohmann::ordered_json::array();
    for (const Rational& c : a.point) ja["point"].push_back(c.str());
    ja["weight"] = a.weight.str();
    doc["atoms"].push_back(std::move(ja));
  }
  return doc;
}

DiscreteMeasure load_measure(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error("measure document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw Error("measure needs an integer \"dim\"");
  if (!doc.contains("radius")) throw Error("measure needs a \"radius\"");
  if (!doc.contains("atoms") || !doc["atoms"].is_array())
    throw Error("measure needs an \"atoms\" array");
  const int dim = doc["dim"].get<int>();
  Rational radius = json_rational(doc["radius"], "radius");
  std::vector<Atom> atoms;
  for (const auto& ja : doc["atoms"]) {
    if (!ja.is_object() || !ja.contains("point") || !ja.contains("weight") ||
        !ja["point"].is_array())
      throw Error("each atom needs a \"point\" array and a \"weight\"");
    Atom a;
    for (const auto& c : ja["point"])
      a.point.push_back(json_rational(c, "point coordinate"));
    a.weight = json_rational(ja["weight"], "weight");
    atoms.push_back(std::move(a));
  }
  return DiscreteMeasure(dim, std::move(radius), std::move(atoms));
}

DiscreteMeasure load_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open measure file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
  return load_measure(doc);
}

Rational integrate_poly(const DiscreteMeasure& mu, const MPoly& p) {
  if (p.dim() != mu.dim())
    throw Error("measure/polynomial dimension mismatch");
  Rational sum(0);
  for (const Atom& a : mu.atoms()) sum += a.weight * p.eval(a.point);
  return sum;
}

MomentTable distributed_moments(const DiscreteMeasure& mu, int t_max,
                                int k_max) {
  if (t_max < 0 || k_max < 0) throw Error("moment table bounds must be >= 0");
  MomentTable table;
  table.dim = mu.dim();
  table.t_max = t_max;
  table.k_max = k_max;
  // One pass per atom: powers of |x|^2 and layer values at the point are
  // each computed once.
  for (int k = 0; k <= k_max; ++k) {
    const HarmonicLayer& layer = harmonic_basis(mu.dim(), k);
    for (std::size_t m = 0; m < layer.elements.size(); ++m)
      for (int t = 0; t <= t_max; ++t)
        table.entries[{t, k, (int)m + 1}] = Rational(0);
  }
  for (const Atom& a : mu.atoms()) {
    const Rational r2 = norm_sq_point(a.point);
    std::vector<Rational> r2pow((std::size_t)t_max + 1, Rational(1));
    for (int t = 1; t <= t_max; ++t)
      r2pow[(std::size_t)t] = r2pow[(std::size_t)t - 1] * r2;
    for (int k = 0; k <= k_max; ++k) {
      const HarmonicLayer& layer = harmonic_basis(mu.dim(), k);
      for (std::size_t m = 0; m < layer.elements.size(); ++m) {
        const Rational y = layer.elements[m].poly.eval(a.point);
        if (y.is_zero()) continue;
        const Rational wy = a.weight * y;
        for (int t = 0; t <= t_max; ++t)
          table.entries[{t, k, (int)m + 1}] += wy * r2pow[(std::size_t)t];
      }
    }
  }
  return table;
}

nlohmann::ordered_json MomentTable::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries) {
    const auto& [t, k, m] = key;
    nlohmann::ordered_json e;
    e["t"] = t;
    e["k"] = k;
    e["m"] = m;
    e["value"] = value.str();
    arr.push_back(std::move(e));
  }
  return arr;
}

bool orthogonality_order(const MPoly& P, const DiscreteMeasure& mu, int M) {
  if (P.dim() != mu.dim())
    throw Error("measure/polynomial dimension mismatch");
  if (M < 0) throw Error("orthogonality order must be >= 0");
  const MPoly r2 = radial_sq(mu.dim());
  for (int d = 0; d < M; ++d) {
    for (int k = d % 2; k <= d; k += 2) {
      const int t = (d - k) / 2;
      const HarmonicLayer& layer = harmonic_basis(mu.dim(), k);
      const MPoly radial = r2.pow((unsigned)t);
      for (const auto& el : layer.elements)
        if (!integrate_poly(mu, P * (radial * el.poly)).is_zero())
          return false;
    }
  }
  return true;
}

MPoly orthogonalize_against(const DiscreteMeasure& mu,
                            const std::vector<MPoly>& basis,
                            const MPoly& seed) {
  if (seed.dim() != mu.dim())
    throw Error("measure/polynomial dimension mismatch");
  const int n = (int)basis.size();
  RatMatrix G(n, n);
  RatVector v(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      G(i, j) = integrate_poly(mu, basis[(std::size_t)i] * basis[(std::size_t)j]);
    v(i) = integrate_poly(mu, basis[(std::size_t)i] * seed);
  }
  auto c = solve_ff(G, v);
  if (!c)
    throw Error(
        "orthogonalize: the Gram system is inconsistent for this signed "
        "measure; no projection exists");
  MPoly q = seed;
  for (int j = 0; j < n; ++j) q -= (*c)(j)*basis[(std::size_t)j];
  return q;
}

MPoly orthogonalize(const DiscreteMeasure& mu, int target_degree,
                    const MPoly& seed) {
  if (target_degree < 0) throw Error("target degree must be >= 0");
  const MPoly r2 = radial_sq(mu.dim());
  std::vector<MPoly> basis;
  for (int d = 0; d < target_degree; ++d) {
    for (int k = d % 2; k <= d; k += 2) {
      const int t = (d - k) / 2;
      const HarmonicLayer& layer = harmonic_basis(mu.dim(), k);
      const MPoly radial = r2.pow((unsigned)t);
      for (const auto& el : layer.elements)
        basis.push_back(radial * el.poly);
    }
  }
  return orthogonalize_against(mu, basis, seed);
}

}  // namespace polyharm
