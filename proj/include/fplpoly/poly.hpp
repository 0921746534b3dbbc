#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fplpoly/rational.hpp"

namespace fplpoly {

inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

// Dense univariate polynomial, ascending coefficients, never stores trailing zeros.
template <class R>
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(R c) {  // NOLINT: constants convert implicitly
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  DensePoly(int c) : DensePoly(R(c)) {}  // NOLINT
  explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly monomial(R c, int k) {
    DensePoly p;
    if (is_zero(c)) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, R(0));
    p.c_[k] = std::move(c);
    return p;
  }
  static DensePoly var() { return monomial(R(1), 1); }

  int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  friend bool is_zero(const DensePoly& p) { return p.c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return R(0);
    return c_[k];
  }
  const R& lead() const { return c_.back(); }

  void set_coeff(int k, R v) {
    if (k >= static_cast<int>(c_.size())) {
      if (is_zero(v)) return;
      c_.resize(static_cast<std::size_t>(k) + 1, R(0));
    }
    c_[k] = std::move(v);
    trim();
  }
  void add_to_coeff(int k, const R& v) {
    if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k) + 1, R(0));
    c_[k] += v;
    trim();
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }
  DensePoly scaled(const R& s) const {
    DensePoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  // Horner evaluation in any ring that accepts S * S and S + R.
  template <class S>
  S eval(const S& x) const {
    S acc = S(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  // p(x + l)
  DensePoly shift(const R& l) const {
    DensePoly acc;
    DensePoly lin(std::vector<R>{l, R(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + DensePoly(*it);
    return acc;
  }

  // p(-x)
  DensePoly reflect() const {
    DensePoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  DensePoly derivative() const {
    DensePoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * R(static_cast<int>(i));
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

using PolyTau = DensePoly<BigRational>;   // polynomial in tau
using PolyTauT = DensePoly<PolyTau>;      // polynomial in t over Q[tau]
using PolyQ = PolyTau;                     // generic univariate over Q

// Euclidean division over Q; throws std::domain_error on division by zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
// Throws std::domain_error if b does not divide a.
PolyQ exact_div(const PolyQ& a, const PolyQ& b);
PolyQ gcd(PolyQ a, PolyQ b);  // monic, or zero
PolyQ make_monic(const PolyQ& p);
PolyQ squarefree_part(const PolyQ& p);
bool has_integer_coeffs(const PolyQ& p);

// Distinct real roots in (lo, hi]; unbounded sides when nullopt. Throws on the zero polynomial.
int count_real_roots(const PolyQ& p, std::optional<BigRational> lo = std::nullopt,
                     std::optional<BigRational> hi = std::nullopt);

// t(t-1)...(t-k+1)/k!
PolyQ binomial_poly(int k);

// Evaluations and coefficient maps on the bivariate ring.
PolyTau eval_t(const PolyTauT& p, const BigRational& t);
PolyQ eval_tau(const PolyTauT& p, const BigRational& tau);  // polynomial in t
PolyTauT reflect_tau(const PolyTauT& p);
PolyTauT shift_t(const PolyTauT& p, long l);
PolyTauT from_t_poly(const PolyQ& p);  // coefficient-wise constants in tau

std::string to_string(const PolyTau& p, const char* var = "tau");
std::string to_string(const PolyTauT& p);

}  // namespace fplpoly
