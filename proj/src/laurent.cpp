#include "fplpoly/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace fplpoly {

namespace {

// Splits p = x^k * r with r(0) != 0; returns k (0 for the zero polynomial).
int strip_low(PolyQ& p) {
  if (is_zero(p)) return 0;
  const auto& c = p.coeffs();
  int k = 0;
  while (sgn(c[k]) == 0) ++k;
  if (k > 0) p = PolyQ(std::vector<BigRational>(c.begin() + k, c.end()));
  return k;
}

PolyQ times_x_power(const PolyQ& p, int k) {
  if (k == 0 || is_zero(p)) return p;
  std::vector<BigRational> c(static_cast<std::size_t>(k), BigRational(0));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return PolyQ(std::move(c));
}

}  // namespace

void LaurentPoly::normalize() {
  if (is_zero(p_)) {
    low_ = 0;
    return;
  }
  low_ += strip_low(p_);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  int lo = std::min(a.low_, b.low_);
  return LaurentPoly(lo, times_x_power(a.p_, a.low_ - lo) + times_x_power(b.p_, b.low_ - lo));
}

LaurentPoly LaurentPoly::invert_q() const {
  if (is_zero(p_)) return {};
  std::vector<BigRational> c(p_.coeffs().rbegin(), p_.coeffs().rend());
  return LaurentPoly(-high(), PolyQ(std::move(c)));
}

LaurentScalar::LaurentScalar(const LaurentPoly& x) : e_(x.low()), num_(x.body()), den_(1) {
  if (is_zero(num_)) e_ = 0;
}

LaurentScalar::LaurentScalar(const LaurentPoly& num, const LaurentPoly& den)
    : e_(num.low() - den.low()), num_(num.body()), den_(den.body()) {
  if (is_zero(den_)) throw std::domain_error("LaurentScalar: zero denominator");
  normalize();
}

void LaurentScalar::normalize() {
  if (is_zero(den_)) throw std::domain_error("LaurentScalar: zero denominator");
  if (is_zero(num_)) {
    e_ = 0;
    den_ = PolyQ(1);
    return;
  }
  e_ += strip_low(num_);
  e_ -= strip_low(den_);
  if (den_.degree() > 0) {
    PolyQ g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.lead() != 1) {
    BigRational inv = 1 / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

LaurentPoly LaurentScalar::to_laurent_poly() const {
  if (!is_laurent_poly()) throw std::domain_error("value is not a Laurent polynomial: " + to_string(*this));
  return LaurentPoly(e_, num_);
}

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  LaurentScalar r;
  r.e_ = std::min(a.e_, b.e_);
  PolyQ na = times_x_power(a.num_, a.e_ - r.e_);
  PolyQ nb = times_x_power(b.num_, b.e_ - r.e_);
  if (a.den_ == b.den_) {
    r.num_ = na + nb;
    r.den_ = a.den_;
  } else if (a.den_.degree() == 0) {
    r.num_ = na * b.den_ + nb;
    r.den_ = b.den_;
  } else if (b.den_.degree() == 0) {
    r.num_ = na + nb * a.den_;
    r.den_ = a.den_;
  } else {
    PolyQ g = gcd(a.den_, b.den_);
    PolyQ ca = exact_div(b.den_, g), cb = exact_div(a.den_, g);
    r.num_ = na * ca + nb * cb;
    r.den_ = a.den_ * ca;
  }
  r.normalize();
  return r;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (is_zero(a) || is_zero(b)) return {};
  LaurentScalar r;
  r.e_ = a.e_ + b.e_;
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    r.num_ = a.num_ * b.num_;
    r.den_ = PolyQ(1);
    return r;  // products of polynomials with nonzero constant term stay normalized
  }
  PolyQ na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
  if (db.degree() > 0) {
    PolyQ g = gcd(na, db);
    if (g.degree() > 0) na = exact_div(na, g), db = exact_div(db, g);
  }
  if (da.degree() > 0) {
    PolyQ g = gcd(nb, da);
    if (g.degree() > 0) nb = exact_div(nb, g), da = exact_div(da, g);
  }
  r.num_ = na * nb;
  r.den_ = da * db;
  BigRational inv = 1 / r.den_.lead();
  r.num_ = r.num_.scaled(inv);
  r.den_ = r.den_.scaled(inv);
  return r;
}

LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) {
  if (is_zero(b)) throw std::domain_error("LaurentScalar: division by zero");
  LaurentScalar inv;
  inv.e_ = -b.e_;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  BigRational c = 1 / inv.den_.lead();
  inv.num_ = inv.num_.scaled(c);
  inv.den_ = inv.den_.scaled(c);
  return a * inv;
}

LaurentScalar LaurentScalar::pow(int k) const {
  if (k < 0) return LaurentScalar(1) / pow(-k);
  LaurentScalar r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

LaurentPoly qint(int s) {
  if (s < 1) throw std::invalid_argument("qint: s must be positive");
  std::vector<BigRational> c(2 * static_cast<std::size_t>(s) - 1, BigRational(0));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  return LaurentPoly(1 - s, PolyQ(std::move(c)));
}

LaurentPoly qfact(int k) {
  LaurentPoly r(1);
  for (int s = 2; s <= k; ++s) r *= qint(s);
  return r;
}

LaurentPoly xi() { return LaurentPoly(-1, PolyQ(std::vector<BigRational>{-1, 0, 1})); }

PolyTau laurent_to_tau(const LaurentPoly& x) {
  if (!x.is_symmetric()) throw std::domain_error("laurent_to_tau: not symmetric under q <-> 1/q: " + to_string(x));
  PolyTau r;
  LaurentPoly rest = x;
  // (q + 1/q)^m = (-tau)^m
  const LaurentPoly s(-1, PolyQ(std::vector<BigRational>{1, 0, 1}));
  while (!is_zero(rest)) {
    int m = rest.high();
    BigRational c = rest.coeff(m);
    LaurentPoly pw(1);
    for (int i = 0; i < m; ++i) pw *= s;
    rest = rest - pw * LaurentPoly(c);
    r.add_to_coeff(m, (m % 2) ? BigRational(-c) : c);
  }
  return r;
}

PolyTau laurent_to_tau(const LaurentScalar& x) { return laurent_to_tau(x.to_laurent_poly()); }

LaurentPoly tau_to_laurent(const PolyTau& p) {
  const LaurentPoly tau(-1, PolyQ(std::vector<BigRational>{-1, 0, -1}));
  LaurentPoly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * tau + LaurentPoly(*it);
  return acc;
}

std::string to_string(const LaurentPoly& x) {
  if (is_zero(x)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = x.high(); k >= x.low(); --k) {
    BigRational c = x.coeff(k);
    if (sgn(c) == 0) continue;
    BigRational a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = a == 1;
    if (!unit || k == 0) os << a.get_str();
    if (k != 0) {
      if (!unit) os << '*';
      os << 'q';
      if (k != 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const LaurentScalar& x) {
  std::string n = to_string(LaurentPoly(x.shift(), x.num()));
  if (x.is_laurent_poly()) return n;
  return "(" + n + ")/(" + to_string(LaurentPoly(0, x.den())) + ")";
}

}  // namespace fplpoly
