#include "zmoments/rational.hpp"

#include <stdexcept>

namespace zmoments {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

RatPoly::RatPoly(const Rational& c) : c_{c} { trim(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    }
  RatPoly p;
  for (size_t i = n; i-- > 0;) {
    p *= RatPoly(std::vector<Rational>{-xs[i], 1});
    p += RatPoly(dd[i]);
  }
  return p;
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly r;
  for (size_t i = c_.size(); i-- > 0;) {
    r *= inner;
    r += RatPoly(c_[i]);
  }
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    std::string t = zmoments::to_string(c_[i]);
    if (!s.empty()) s += (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) s += "-";
    if (t[0] == '-') t.erase(0, 1);
    s += t;
    if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace zmoments
