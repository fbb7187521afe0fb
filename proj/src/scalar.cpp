#include "zmoments/scalar.hpp"

#include <stdexcept>

namespace zmoments {

RatPoly Scalar::poly() const {
  if (is_poly()) return std::get<RatPoly>(v_);
  if (is_rational()) return RatPoly(rational());
  throw std::domain_error("big real scalar has no polynomial form");
}

BigReal Scalar::to_real(Prec p) const {
  if (is_real()) return real();
  if (is_rational()) return BigReal(rational(), p);
  throw std::domain_error("polynomial scalar cannot become a big real; evaluate at k first");
}

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  if (is_poly()) return std::get<RatPoly>(v_).is_zero();
  return real().is_zero();
}

template <class Op>
Scalar& Scalar::combine(const Scalar& o, Op op) {
  if (is_rational() && o.is_rational()) {
    v_ = op(rational(), o.rational());
  } else if (is_real() || o.is_real()) {
    if (is_poly() || o.is_poly())
      throw std::domain_error("polynomial scalar cannot combine with a big real");
    if (is_real() && o.is_real()) v_ = op(real(), o.real());
    else if (is_real()) v_ = op(real(), BigReal(o.rational(), real().prec()));
    else v_ = op(BigReal(rational(), o.real().prec()), o.real());
  } else {
    v_ = op(poly(), o.poly());
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  return combine(o, [](const auto& a, const auto& b) -> std::decay_t<decltype(a)> { return a + b; });
}

Scalar& Scalar::operator-=(const Scalar& o) {
  return combine(o, [](const auto& a, const auto& b) -> std::decay_t<decltype(a)> { return a - b; });
}

Scalar& Scalar::operator*=(const Scalar& o) {
  return combine(o, [](const auto& a, const auto& b) -> std::decay_t<decltype(a)> { return a * b; });
}

Scalar& Scalar::operator*=(const Rational& s) {
  std::visit([&](auto& x) { x *= s; }, v_);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  std::visit([](auto& x) { x = -x; }, r.v_);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_real() != b.is_real()) {
    if (a.is_poly() || b.is_poly()) return false;
    return a.is_real() ? a.real() == BigReal(b.rational(), a.real().prec())
                       : b.real() == BigReal(a.rational(), b.real().prec());
  }
  if (a.is_real()) return a.real() == b.real();
  return a.poly() == b.poly();
}

std::string Scalar::to_string(int digits) const {
  if (is_rational()) return zmoments::to_string(rational());
  if (is_poly()) return std::get<RatPoly>(v_).to_string();
  return real().to_string(digits);
}

}  // namespace zmoments
