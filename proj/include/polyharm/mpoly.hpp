// Sparse multivariate polynomials with exact rational coefficients.
//
// Terms live in a std::map keyed by monomial in graded-lex order, so
// iteration, printing and leading-term queries are all canonical.  The zero
// polynomial stores no terms; a stored coefficient is never zero.

#pragma once

#include <map>
#include <vector>

#include "polyharm/monomial.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

class MPoly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  // The zero polynomial in `dim` variables (dim >= 2).
  explicit MPoly(int dim) : dim_(dim) {
    if (dim < 2) throw Error("dimension must be at least 2");
  }

  static MPoly constant(int dim, const Rational& c) {
    MPoly p(dim);
    p.add_term(Monomial(dim), c);
    return p;
  }

  // xi with 1-based index i, matching the text grammar (x1, x2, ...).
  static MPoly variable(int dim, int index) {
    if (index < 1 || index > dim)
      throw Error("variable index out of range: x" + std::to_string(index));
    MPoly p(dim);
    std::vector<int> e((std::size_t)dim, 0);
    e[(std::size_t)(index - 1)] = 1;
    p.add_term(Monomial(std::move(e)), Rational(1));
    return p;
  }

  static MPoly term(Monomial m, const Rational& c) {
    MPoly p(m.dim());
    p.add_term(std::move(m), c);
    return p;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; 0 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Graded-lex largest monomial; the zero polynomial has none.
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
  }
  const Rational& leading_coeff() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
  }

  // Accumulates c * m, erasing the entry if the sum cancels.
  void add_term(const Monomial& m, const Rational& c) {
    if (m.dim() != dim_) throw Error("monomial/polynomial dimension mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  MPoly pow(unsigned e) const;

  // Partial derivative in the 0-based variable `var`.
  MPoly derivative(int var) const;

  Rational eval(const std::vector<Rational>& x) const;
  double eval_double(const std::vector<double>& x) const;

  MPoly homogeneous_part(int d) const;
  bool is_homogeneous() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

private:
  void require_same_dim(const MPoly& o) const {
    if (dim_ != o.dim_) throw Error("polynomial dimension mismatch");
  }

  int dim_;
  TermMap terms_;
};

// Sum of second partials.  Degree drops by at least 2 on every application.
MPoly laplacian(const MPoly& p);

// Least N >= 0 with laplacian^{N+1}(p) = 0; the zero polynomial gets 0.
int polyharmonic_degree(const MPoly& p);

// Parts [p_0, ..., p_N] with p = sum p_d, N = total_degree(p).  The zero
// polynomial yields a single zero part.
std::vector<MPoly> homogeneous_parts(const MPoly& p);

// |x|^2 = x1^2 + ... + xn^2.
MPoly radial_sq(int dim);

}  // namespace polyharm
