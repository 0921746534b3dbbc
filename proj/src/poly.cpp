#include "fplpoly/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fplpoly {

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (is_zero(b)) throw std::domain_error("polynomial division by zero");
  PolyQ q, r = a;
  const int db = b.degree();
  const BigRational& lb = b.lead();
  while (!is_zero(r) && r.degree() >= db) {
    int k = r.degree() - db;
    BigRational c = r.lead() / lb;
    PolyQ m = PolyQ::monomial(c, k);
    q += m;
    r -= m * b;
  }
  return {q, r};
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) throw std::domain_error("inexact polynomial division");
  return q;
}

PolyQ make_monic(const PolyQ& p) {
  if (is_zero(p)) return p;
  BigRational inv = 1 / p.lead();
  return p.scaled(inv);
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!is_zero(b)) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

PolyQ squarefree_part(const PolyQ& p) {
  if (p.degree() <= 0) return p;
  return exact_div(p, gcd(p, p.derivative()));
}

bool has_integer_coeffs(const PolyQ& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

namespace {

int sign_at(const PolyQ& p, const std::optional<BigRational>& x, bool neg_side) {
  if (is_zero(p)) return 0;
  if (x) return sgn(p.eval(*x));
  int s = sgn(p.lead());
  if (neg_side && (p.degree() % 2)) s = -s;
  return s;
}

int variations(const std::vector<PolyQ>& seq, const std::optional<BigRational>& x, bool neg_side) {
  int v = 0, last = 0;
  for (const auto& f : seq) {
    int s = sign_at(f, x, neg_side);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int count_real_roots(const PolyQ& p, std::optional<BigRational> lo, std::optional<BigRational> hi) {
  if (is_zero(p)) throw std::domain_error("count_real_roots: zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  PolyQ f = squarefree_part(p);
  std::vector<PolyQ> seq{f, f.derivative()};
  while (!is_zero(seq.back())) {
    PolyQ r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return variations(seq, lo, true) - variations(seq, hi, false);
}

PolyQ binomial_poly(int k) {
  if (k < 0) throw std::invalid_argument("binomial_poly: negative k");
  PolyQ r(1);
  for (int j = 0; j < k; ++j) r *= PolyQ(std::vector<BigRational>{BigRational(-j), BigRational(1)});
  return r.scaled(BigRational(1) / BigRational(factorial(static_cast<unsigned>(k))));
}

PolyTau eval_t(const PolyTauT& p, const BigRational& t) {
  PolyTau acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc.scaled(t) + *it;
  return acc;
}

PolyQ eval_tau(const PolyTauT& p, const BigRational& tau) {
  std::vector<BigRational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.eval(tau));
  return PolyQ(std::move(c));
}

PolyTauT reflect_tau(const PolyTauT& p) {
  std::vector<PolyTau> c;
  for (const auto& x : p.coeffs()) c.push_back(x.reflect());
  return PolyTauT(std::move(c));
}

PolyTauT shift_t(const PolyTauT& p, long l) { return p.shift(PolyTau(BigRational(l))); }

PolyTauT from_t_poly(const PolyQ& p) {
  std::vector<PolyTau> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return PolyTauT(std::move(c));
}

std::string to_string(const PolyTau& p, const char* var) {
  if (is_zero(p)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigRational& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    BigRational a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = a == 1;
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const PolyTauT& p) {
  if (is_zero(p)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const PolyTau& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    os << '(' << to_string(c) << ')';
    if (k > 0) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

}  // namespace fplpoly
