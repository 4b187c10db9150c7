// Monomials x1^a1 ... xn^an and the graded lexicographic order.
//
// The order sorts first by total degree, then lexicographically with
// x1 > x2 > ... > xn.  It is the single tie-breaking convention used for
// printing, matrix row/column indexing, pivot selection and basis ordering,
// so every result in the library is deterministic.

#pragma once

#include <numeric>
#include <vector>

#include "polyharm/error.hpp"

namespace polyharm {

class Monomial {
public:
  // The constant monomial in `dim` variables.
  explicit Monomial(int dim) : e_(check_dim(dim), 0) {}

  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    check_dim((int)e_.size());
    for (int x : e_)
      if (x < 0) throw Error("negative exponent in monomial");
  }

  int dim() const { return (int)e_.size(); }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator[](int i) const { return e_[(std::size_t)i]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_constant() const { return degree() == 0; }

  // All exponents even (a monomial of |x|-even type); such monomials are the
  // only ones with nonzero mean over the unit sphere.
  bool all_even() const {
    for (int x : e_)
      if (x % 2 != 0) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    require_same_dim(o);
    std::vector<int> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
  }

  // x^e / xi^2, or nothing if the exponent is too small.  Used by the
  // Laplacian; callers check divisibility via the exponent first.
  Monomial shifted(int i, int delta) const {
    std::vector<int> e(e_);
    e[(std::size_t)i] += delta;
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
  static int check_dim(int dim) {
    if (dim < 2) throw Error("dimension must be at least 2");
    return dim;
  }
  void require_same_dim(const Monomial& o) const {
    if (dim() != o.dim()) throw Error("monomial dimension mismatch");
  }

  std::vector<int> e_;
};

// Strict weak order: by total degree, then lexicographically (x1 heaviest).
// With plain vector comparison, (2,0) beats (1,1) beats (0,2), i.e. x1^2 is
// the largest quadratic, as wanted.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
  }
};

inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  return GradedLexLess{}(a, b);
}

// All monomials of the given total degree, listed in *descending* graded-lex
// order (x1^d first).  This is the canonical row/column indexing for the
// homogeneous-space matrices.
inline void append_monomials_of_degree(int dim, int degree,
                                       std::vector<int>& prefix,
                                       std::vector<Monomial>& out) {
  if ((int)prefix.size() == dim - 1) {
    prefix.push_back(degree);
    out.push_back(Monomial(prefix));
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    append_monomials_of_degree(dim, degree - e, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<Monomial> monomials_of_degree(int dim, int degree) {
  if (degree < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> prefix;
  append_monomials_of_degree(dim, degree, prefix, out);
  return out;
}

}  // namespace polyharm
