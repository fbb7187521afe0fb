#include "zmoments/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zmoments {

namespace {
constexpr double kLog2Of10 = 3.321928094887362;
constexpr mpfr_prec_t kGuardBits = 8;

Prec min_prec(const BigReal& a, const BigReal& b) {
  return Prec{std::min(a.prec().bits, b.prec().bits)};
}
}  // namespace

Prec Prec::digits(int d) {
  if (d < 1) throw std::invalid_argument("precision must be at least one digit");
  return Prec{static_cast<mpfr_prec_t>(std::ceil(d * kLog2Of10)) + kGuardBits};
}

int Prec::decimal_digits() const {
  return static_cast<int>(std::floor((bits - kGuardBits) / kLog2Of10 + 1e-9));
}

BigReal::BigReal(Prec p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, Prec p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const Integer& v, Prec p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const Rational& v, Prec p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, Prec p) {
  mpfr_init2(v_, p.bits);
  char* end = nullptr;
  mpfr_strtofr(v_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (end == decimal.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

BigReal BigReal::from_double(double v, Prec p) {
  BigReal r(p);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_prec(Prec p) const {
  BigReal r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + e * std::log10(2.0);
}

std::string BigReal::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, std::max(digits, 1), v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string BigReal::to_exact_string() const {
  return to_string(static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(v_))));
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (o.prec().bits < prec().bits) mpfr_prec_round(v_, o.prec().bits, MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  if (o.prec().bits < prec().bits) mpfr_prec_round(v_, o.prec().bits, MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  if (o.prec().bits < prec().bits) mpfr_prec_round(v_, o.prec().bits, MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.prec().bits < prec().bits) mpfr_prec_round(v_, o.prec().bits, MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long s) {
  mpfr_mul_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long s) {
  mpfr_div_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const Rational& s) {
  mpfr_mul_q(v_, v_, s.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(min_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(min_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(min_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(min_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (mpfr_nan_p(a.v_) || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw std::domain_error("log of non-positive value");
  BigReal r(x.prec());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(Prec{std::min(x.prec().bits, y.prec().bits)});
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal log_of(unsigned long n, Prec p) {
  BigReal r(p);
  mpfr_log_ui(r.get(), n, MPFR_RNDN);
  return r;
}

BigReal pi(Prec p) {
  BigReal r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal euler_gamma(Prec p) {
  BigReal r(p);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

BigReal ten_pow(long e, Prec p) {
  BigReal r(10, p);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigReal max_abs(const BigReal& a, const BigReal& b) {
  BigReal x = abs(a), y = abs(b);
  return x < y ? y : x;
}

}  // namespace zmoments
