#include "polyharm/harmonic.hpp"

#include <mutex>
#include <utility>

namespace polyharm {

namespace {

// (e-1)!! for even e >= 0, i.e. 1*3*5*...*(e-1); equals 1 when e = 0.
Rational odd_double_factorial(int e) {
  Rational r(1);
  for (int v = 1; v < e; v += 2) r *= Rational(v);
  return r;
}

// Canonical total order on distinct polynomials: compare term streams from
// the graded-lex top down, monomial first, then coefficient.  Used only to
// fix the layer ordering.
bool poly_before(const MPoly& a, const MPoly& b) {
  auto ia = a.terms().rbegin(), ea = a.terms().rend();
  auto ib = b.terms().rbegin(), eb = b.terms().rend();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return graded_lex_less(ib->first, ia->first);
    if (ia->second != ib->second) return ib->second < ia->second;
  }
  return ib != eb;
}

// Divides out the content: the result has coprime integer coefficients and
// a positive leading coefficient.
MPoly make_primitive(const MPoly& p) {
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& [m, c] : p.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    den_lcm = l;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    num_gcd = g;
  }
  MPoly q = p;
  q *= Rational(mpq_class(den_lcm) / mpq_class(num_gcd));
  if (q.leading_coeff().sign() < 0) q *= Rational(-1);
  return q;
}

HarmonicLayer build_layer(int dim, int degree) {
  HarmonicLayer layer;
  layer.dim = dim;
  layer.degree = degree;

  const std::vector<Monomial> domain = monomials_of_degree(dim, degree);
  const std::vector<Monomial> image = monomials_of_degree(dim, degree - 2);
  std::map<Monomial, int, GradedLexLess> image_index;
  for (std::size_t i = 0; i < image.size(); ++i)
    image_index.emplace(image[i], (int)i);

  // Matrix of the Laplacian from degree k to degree k-2 monomials.
  RatMatrix L = RatMatrix::Zero((Eigen::Index)image.size(),
                                (Eigen::Index)domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Monomial& m = domain[j];
    for (int i = 0; i < dim; ++i) {
      int e = m[i];
      if (e < 2) continue;
      int row = image_index.at(m.shifted(i, -2));
      L(row, (Eigen::Index)j) += Rational((long)e * (e - 1));
    }
  }

  std::vector<MPoly> kernel;
  for (const RatVector& v : nullspace_ff(L)) {
    MPoly p(dim);
    for (std::size_t j = 0; j < domain.size(); ++j)
      p.add_term(domain[j], v((Eigen::Index)j));
    kernel.push_back(std::move(p));
  }
  std::sort(kernel.begin(), kernel.end(), poly_before);

  // Gram-Schmidt against the earlier elements, then reduce to primitive
  // integer form; exact norms are kept alongside.
  for (const MPoly& v : kernel) {
    MPoly w = v;
    for (const auto& el : layer.elements)
      w -= (sphere_inner(v, el.poly) / el.norm_sq) * el.poly;
    if (w.is_zero()) throw Error("harmonic layer: dependent kernel vector");
    w = make_primitive(w);
    Rational nsq = sphere_inner(w, w);
    layer.elements.push_back({std::move(w), std::move(nsq)});
  }
  return layer;
}

// Coefficients over |x|^{2t} Y_{k,m} for one homogeneous polynomial, by one
// exact square solve per degree: the products with 2t + k = d span the
// degree-d homogeneous space with matching dimension.
std::map<std::tuple<int, int, int>, Rational> expand_part(const MPoly& part) {
  std::map<std::tuple<int, int, int>, Rational> out;
  if (part.is_zero()) return out;
  const int dim = part.dim();
  const int d = part.total_degree();

  const std::vector<Monomial> monos = monomials_of_degree(dim, d);
  std::map<Monomial, int, GradedLexLess> row;
  for (std::size_t i = 0; i < monos.size(); ++i) row.emplace(monos[i], (int)i);

  struct Col {
    int t, k, m;
  };
  std::vector<Col> cols;
  std::vector<MPoly> col_polys;
  MPoly rpow = MPoly::constant(dim, Rational(1));
  const MPoly r2 = radial_sq(dim);
  for (int t = 0; 2 * t <= d; ++t) {
    const int k = d - 2 * t;
    const HarmonicLayer& layer = harmonic_basis(dim, k);
    for (std::size_t m = 0; m < layer.elements.size(); ++m) {
      cols.push_back({t, k, (int)m + 1});
      col_polys.push_back(rpow * layer.elements[m].poly);
    }
    rpow = rpow * r2;
  }
  if (cols.size() != monos.size())
    throw Error("harmonic expansion: dimension bookkeeping failed");

  RatMatrix A = RatMatrix::Zero((Eigen::Index)monos.size(),
                                (Eigen::Index)cols.size());
  for (std::size_t j = 0; j < col_polys.size(); ++j)
    for (const auto& [m, c] : col_polys[j].terms())
      A(row.at(m), (Eigen::Index)j) = c;
  RatVector b = RatVector::Zero((Eigen::Index)monos.size());
  for (const auto& [m, c] : part.terms()) b(row.at(m)) = c;

  auto x = solve_ff(A, b);
  if (!x) throw Error("harmonic expansion: singular system");
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Rational& v = (*x)((Eigen::Index)j);
    if (!v.is_zero()) out.emplace(std::make_tuple(cols[j].t, cols[j].k, cols[j].m), v);
  }
  return out;
}

}  // namespace

Rational sphere_monomial_integral(const Monomial& alpha) {
  if (!alpha.all_even()) return Rational(0);
  const int n = alpha.dim();
  Rational num(1);
  for (int i = 0; i < n; ++i) num *= odd_double_factorial(alpha[i]);
  Rational den(1);
  const int half = alpha.degree() / 2;
  for (int j = 0; j < half; ++j) den *= Rational((long)n + 2 * j);
  return num / den;
}

Rational sphere_inner(const MPoly& p, const MPoly& q) {
  MPoly prod = p * q;
  Rational sum(0);
  for (const auto& [m, c] : prod.terms()) {
    if (!m.all_even()) continue;
    sum += c * sphere_monomial_integral(m);
  }
  return sum;
}

const HarmonicLayer& harmonic_basis(int dim, int degree) {
  if (dim < 2) throw Error("dimension must be at least 2");
  if (degree < 0) throw Error("layer degree must be nonnegative");
  static std::map<std::pair<int, int>, HarmonicLayer> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(dim, degree);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_layer(dim, degree)).first;
  return it->second;
}

AlmansiDecomp almansi_decompose(const MPoly& p) {
  HarmonicExpansion e = harmonic_expansion(p);
  int top = 0;
  for (const auto& [key, c] : e.coeffs) top = std::max(top, std::get<0>(key));
  AlmansiDecomp d;
  d.harmonics.assign((std::size_t)top + 1, MPoly(p.dim()));
  for (const auto& [key, c] : e.coeffs) {
    const auto& [t, k, m] = key;
    const HarmonicLayer& layer = harmonic_basis(p.dim(), k);
    d.harmonics[(std::size_t)t] += c * layer.elements[(std::size_t)m - 1].poly;
  }
  return d;
}

HarmonicExpansion harmonic_expansion(const MPoly& p) {
  HarmonicExpansion e;
  e.dim = p.dim();
  for (const MPoly& part : homogeneous_parts(p))
    if (!part.is_zero()) e.coeffs.merge(expand_part(part));
  return e;
}

MPoly expansion_to_poly(const HarmonicExpansion& e) {
  MPoly p(e.dim);
  const MPoly r2 = radial_sq(e.dim);
  for (const auto& [key, c] : e.coeffs) {
    const auto& [t, k, m] = key;
    const HarmonicLayer& layer = harmonic_basis(e.dim, k);
    p += c * (r2.pow((unsigned)t) * layer.elements[(std::size_t)m - 1].poly);
  }
  return p;
}

int np_formula(const MPoly& p) {
  if (p.is_zero()) throw Error("np is undefined for the zero polynomial");
  int best = 0;
  for (const MPoly& part : homogeneous_parts(p)) {
    if (part.is_zero()) continue;
    const int N = part.total_degree();
    int k0 = -1;
    for (const auto& [key, c] : expand_part(part))
      k0 = std::max(k0, std::get<1>(key));
    if ((N + k0) % 2 != 0)
      throw Error("np formula: parity invariant violated");
    best = std::max(best, (N + k0) / 2);
  }
  return best;
}

int np_search(const MPoly& p, int k_max) {
  if (p.is_zero()) throw Error("np is undefined for the zero polynomial");
  if (k_max < 0) throw Error("np search needs k_max >= 0");
  int best = 0;
  for (int k = 0; k <= k_max; ++k) {
    const HarmonicLayer& layer = harmonic_basis(p.dim(), k);
    for (const auto& el : layer.elements)
      best = std::max(best, polyharmonic_degree(p * el.poly));
  }
  return best;
}

}  // namespace polyharm
