#pragma once

#include <string>

#include "fplpoly/poly.hpp"

namespace fplpoly {

// q^low * p(q), with p(0) != 0 unless the value is zero (then low == 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigRational c) : p_(std::move(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(BigRational(c)) {}  // NOLINT
  LaurentPoly(int low, PolyQ p) : low_(low), p_(std::move(p)) { normalize(); }

  static LaurentPoly q_power(int k, BigRational c = 1) { return LaurentPoly(k, PolyQ(std::move(c))); }

  int low() const { return low_; }
  int high() const { return low_ + p_.degree(); }
  const PolyQ& body() const { return p_; }
  BigRational coeff(int k) const { return p_.coeff(k - low_); }
  friend bool is_zero(const LaurentPoly& x) { return is_zero(x.p_); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(a.low_, -a.p_); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.p_ = a.p_ * b.p_;
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.p_ == b.p_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // q -> 1/q
  LaurentPoly invert_q() const;
  bool is_symmetric() const { return *this == invert_q(); }

 private:
  void normalize();
  int low_ = 0;
  PolyQ p_;
};

// Element of Q(q) in canonical form q^e * num / den, den monic, num(0) != 0 != den(0), coprime.
class LaurentScalar {
 public:
  LaurentScalar() : den_(1) {}
  LaurentScalar(BigRational c) : LaurentScalar(LaurentPoly(std::move(c))) {}  // NOLINT
  LaurentScalar(int c) : LaurentScalar(BigRational(c)) {}  // NOLINT
  LaurentScalar(const LaurentPoly& x);  // NOLINT
  LaurentScalar(const LaurentPoly& num, const LaurentPoly& den);

  static LaurentScalar q() { return LaurentPoly::q_power(1); }

  friend bool is_zero(const LaurentScalar& x) { return is_zero(x.num_); }
  bool is_laurent_poly() const { return den_.degree() == 0; }
  LaurentPoly to_laurent_poly() const;  // throws std::domain_error if not a Laurent polynomial
  int shift() const { return e_; }
  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }

  friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(const LaurentScalar& a) {
    LaurentScalar r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b);
  LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
  LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }
  LaurentScalar& operator/=(const LaurentScalar& o) { return *this = *this / o; }
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

  LaurentScalar pow(int k) const;

 private:
  void normalize();
  int e_ = 0;
  PolyQ num_, den_;
};

LaurentPoly qint(int s);        // [s]
LaurentPoly qfact(int k);       // [k]!
LaurentPoly xi();               // q - 1/q

// Unique tau-polynomial with the given value under tau = -q - 1/q.
PolyTau laurent_to_tau(const LaurentPoly& x);
PolyTau laurent_to_tau(const LaurentScalar& x);
LaurentPoly tau_to_laurent(const PolyTau& p);

std::string to_string(const LaurentPoly& x);
std::string to_string(const LaurentScalar& x);

}  // namespace fplpoly
