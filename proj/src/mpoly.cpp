#include "polyharm/mpoly.hpp"

namespace polyharm {

MPoly MPoly::operator-() const {
  MPoly r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_dim(b);
  MPoly r(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(dim_, Rational(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  if (var < 0 || var >= dim_) throw Error("derivative variable out of range");
  MPoly r(dim_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    r.add_term(m.shifted(var, -1), c * Rational(e));
  }
  return r;
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
  if ((int)x.size() != dim_) throw Error("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < dim_; ++i) {
      int e = m[i];
      if (e > 0) t *= x[(std::size_t)i].pow((unsigned)e);
    }
    sum += t;
  }
  return sum;
}

double MPoly::eval_double(const std::vector<double>& x) const {
  if ((int)x.size() != dim_) throw Error("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < dim_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= x[(std::size_t)i];
    sum += t;
  }
  return sum;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly r(dim_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

MPoly laplacian(const MPoly& p) {
  MPoly r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.dim(); ++i) {
      int e = m[i];
      if (e >= 2) r.add_term(m.shifted(i, -2), c * Rational((long)e * (e - 1)));
    }
  }
  return r;
}

int polyharmonic_degree(const MPoly& p) {
  int count = 0;
  MPoly q = laplacian(p);
  while (!q.is_zero()) {
    ++count;
    q = laplacian(q);
  }
  return count;
}

std::vector<MPoly> homogeneous_parts(const MPoly& p) {
  std::vector<MPoly> parts;
  int top = p.total_degree();
  parts.reserve((std::size_t)top + 1);
  for (int d = 0; d <= top; ++d) parts.push_back(MPoly(p.dim()));
  for (const auto& [m, c] : p.terms())
    parts[(std::size_t)m.degree()].add_term(m, c);
  return parts;
}

MPoly radial_sq(int dim) {
  MPoly r(dim);
  for (int i = 1; i <= dim; ++i) {
    MPoly xi = MPoly::variable(dim, i);
    r += xi * xi;
  }
  return r;
}

}  // namespace polyharm
