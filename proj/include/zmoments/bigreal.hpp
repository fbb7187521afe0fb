#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "zmoments/rational.hpp"

namespace zmoments {

// Binary precision carried by every BigReal. Built from a decimal digit count
// with a few guard bits so that `digits()` round-trips.
struct Prec {
  mpfr_prec_t bits;
  static Prec digits(int d);
  int decimal_digits() const;
  friend bool operator==(Prec, Prec) = default;
};

// RAII wrapper over mpfr_t. Binary operations between two BigReals round to
// the smaller precision of the operands; mixing with exact values keeps the
// BigReal's own precision.
class BigReal {
 public:
  explicit BigReal(Prec p);
  BigReal(long v, Prec p);
  BigReal(const Integer& v, Prec p);
  BigReal(const Rational& v, Prec p);
  BigReal(const std::string& decimal, Prec p);
  static BigReal from_double(double v, Prec p);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);  // keeps the source precision
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  Prec prec() const { return Prec{mpfr_get_prec(v_)}; }
  BigReal with_prec(Prec p) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log10 |x|, -inf style large negative for zero.
  double log10_abs() const;

  // Scientific decimal with `digits` significant digits.
  std::string to_string(int digits) const;
  // Enough digits that parsing at the same precision gives back identical bits.
  std::string to_exact_string() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long s);
  BigReal& operator/=(long s);
  BigReal& operator*=(const Rational& s);
  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(BigReal a, long s) { return a *= s; }
  friend BigReal operator/(BigReal a, long s) { return a /= s; }
  friend BigReal operator*(BigReal a, const Rational& s) { return a *= s; }

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, double b);

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal log_of(unsigned long n, Prec p);
BigReal pi(Prec p);
BigReal euler_gamma(Prec p);
BigReal ten_pow(long e, Prec p);  // 10^e
BigReal max_abs(const BigReal& a, const BigReal& b);

// A value together with an absolute error estimate.
struct Estimate {
  BigReal value;
  BigReal error;
};

}  // namespace zmoments
