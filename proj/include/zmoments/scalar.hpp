#pragma once

#include <string>
#include <variant>

#include "zmoments/bigreal.hpp"
#include "zmoments/rational.hpp"

namespace zmoments {

// Coefficient type of pair series: an exact rational, a polynomial in k, or a
// big real. Rational combines with either of the others and promotes to it;
// a polynomial in k cannot meet a big real (evaluate at k first).
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) {}  // NOLINT
  Scalar(long q) : v_(Rational(q)) {}   // NOLINT
  Scalar(int q) : v_(Rational(q)) {}    // NOLINT
  Scalar(const RatPoly& p) : v_(p) {}   // NOLINT
  Scalar(const BigReal& x) : v_(x) {}   // NOLINT

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_poly() const { return std::holds_alternative<RatPoly>(v_); }
  bool is_real() const { return std::holds_alternative<BigReal>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const BigReal& real() const { return std::get<BigReal>(v_); }
  RatPoly poly() const;  // rationals promote
  BigReal to_real(Prec p) const;  // rationals promote; polynomials throw

  bool is_zero() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& s);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& s) { return a *= s; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string(int digits = 20) const;

 private:
  template <class Op>
  Scalar& combine(const Scalar& o, Op op);
  std::variant<Rational, RatPoly, BigReal> v_;
};

}  // namespace zmoments
