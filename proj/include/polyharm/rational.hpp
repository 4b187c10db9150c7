// Exact rational scalar used throughout the library.
//
// A thin, eager wrapper over GMP's mpq_class.  Every operator returns a
// plain Rational (never a GMP expression template), which keeps the type
// usable as an Eigen matrix scalar.  Values are always kept canonical:
// lowest terms, positive denominator.

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include "polyharm/error.hpp"

namespace polyharm {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT: implicit by design
  Rational(long n) : v_((signed long)n) {}  // NOLINT
  Rational(long num, long den) : v_((signed long)num, (signed long)den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  // Parses "p" or "p/q" with optional leading '-' (or '+').  Rejects
  // whitespace, empty parts, and zero denominators.
  static Rational from_string(const std::string& text);

  // Canonical form: "p" when the denominator is 1, else "p/q" in lowest
  // terms with the sign on the numerator.  from_string round-trips it.
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // Exact integer test and extraction (throws if not an integer).
  bool is_integer() const { return v_.get_den() == 1; }
  long to_long() const;

  double to_double() const { return v_.get_d(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational abs() const { return Rational(::abs(v_)); }
  Rational pow(unsigned e) const;
  Rational inverse() const {
    if (is_zero()) throw Error("division by zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  mpq_class v_;
};

inline Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(r);  // canonical since base was canonical
}

inline long Rational::to_long() const {
  if (!is_integer()) throw Error("rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) throw Error("integer overflow in to_long");
  return v_.get_num().get_si();
}

inline std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::from_string(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, i); };
  if (text.empty()) fail("empty rational literal");
  std::string num, den;
  if (text[i] == '+' || text[i] == '-') {
    if (text[i] == '-') num += '-';
    ++i;
  }
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    num += text[i++];
    ++digits;
  }
  if (digits == 0) fail("expected digits in rational literal");
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t ddigits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      den += text[i++];
      ++ddigits;
    }
    if (ddigits == 0) fail("expected digits after '/'");
  }
  if (i != text.size()) fail("trailing characters in rational literal");
  mpq_class v(num.c_str());
  if (!den.empty()) {
    mpz_class d(den.c_str());
    if (d == 0) fail("zero denominator");
    v /= mpq_class(d);
  }
  return Rational(v);
}

}  // namespace polyharm

// Eigen scalar traits: exact arithmetic, so epsilon and dummy precision are
// hard zero and cost estimates are symbolic.
#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<polyharm::Rational> : GenericNumTraits<polyharm::Rational> {
  typedef polyharm::Rational Real;
  typedef polyharm::Rational NonInteger;
  typedef polyharm::Rational Nested;

  static inline Real epsilon() { return polyharm::Rational(0); }
  static inline Real dummy_precision() { return polyharm::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
