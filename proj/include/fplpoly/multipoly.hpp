#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace fplpoly {

// Sparse polynomial in nvars variables; monomials whose exponent exceeds a
// non-negative cap are dropped on insertion.
template <class R>
class MultiPoly {
 public:
  using Exps = std::vector<int>;

  explicit MultiPoly(int nvars, std::vector<int> caps = {})
      : nvars_(nvars), caps_(caps.empty() ? std::vector<int>(nvars, -1) : std::move(caps)) {
    if (static_cast<int>(caps_.size()) != nvars_) throw std::invalid_argument("MultiPoly: cap count mismatch");
  }

  static MultiPoly constant(int nvars, R c, std::vector<int> caps = {}) {
    MultiPoly p(nvars, std::move(caps));
    p.add_term(Exps(nvars, 0), c);
    return p;
  }
  static MultiPoly variable(int nvars, int i, std::vector<int> caps = {}) {
    MultiPoly p(nvars, std::move(caps));
    Exps e(nvars, 0);
    e[i] = 1;
    p.add_term(e, R(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<Exps, R>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool fits(const Exps& e) const {
    for (int i = 0; i < nvars_; ++i)
      if (caps_[i] >= 0 && e[i] > caps_[i]) return false;
    return true;
  }

  void add_term(const Exps& e, const R& c) {
    if (is_zero_coeff(c) || !fits(e)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  R coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  // Truncated with the caps of the left operand.
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_, a.caps_);
    Exps e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly scaled(const R& s) const {
    MultiPoly r(nvars_, caps_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  MultiPoly with_caps(std::vector<int> caps) const {
    MultiPoly r(nvars_, std::move(caps));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  // Substitutes variable i by variable perm[i].
  MultiPoly permuted(const std::vector<int>& perm) const {
    MultiPoly r(nvars_);
    Exps f(nvars_);
    for (const auto& [e, c] : terms_) {
      std::fill(f.begin(), f.end(), 0);
      for (int i = 0; i < nvars_; ++i) f[perm[i]] += e[i];
      r.add_term(f, c);
    }
    return r.with_caps(caps_);
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  static bool is_zero_coeff(const R& c) { return is_zero(c); }

  int nvars_;
  std::vector<int> caps_;
  std::map<Exps, R> terms_;
};

}  // namespace fplpoly
