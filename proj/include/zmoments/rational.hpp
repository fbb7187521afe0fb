#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zmoments {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(long n, long k);
// n/d in canonical form (mpq_class(n, d) alone is not canonicalized).
Rational ratio(const Integer& n, const Integer& d);

// "p/q" or "p"; the form used by the cache files.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Dense polynomial in k with rational coefficients, lowest degree first.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& c);  // NOLINT: constants promote implicitly
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly monomial(int degree, const Rational& c = 1);
  // Unique polynomial of degree < xs.size() through the points (Newton form).
  static RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;

  Rational operator()(const Rational& x) const;
  RatPoly compose(const RatPoly& inner) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace zmoments
