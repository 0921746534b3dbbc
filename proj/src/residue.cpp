// Residue-sum evaluation of the multivariate integrals Phi_a and Phi_{a,-p}.
//
// Every factor that can appear after substituting w_i = z_{sigma_i} is one of
//   Diff(x,y)  = z_x - z_y          (stored with x < y)
//   QDiff(x,y) = q z_x - z_y / q
// so each residue term is a signed monomial in these symbols. Cancelling symbolically
// and summing over a common denominator leaves a single exact division at the end.

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>

#include "fplpoly/contour.hpp"

namespace fplpoly {

namespace {

constexpr int kMaxPoints = 63;

int diff_key(int x, int y) { return (0 * 64 + x) * 64 + y; }
int qdiff_key(int x, int y) { return (1 * 64 + x) * 64 + y; }

struct Term {
  int sign = 1;
  std::map<int, int> exps;

  void diff(int x, int y, int e) {
    if (x > y) {
      std::swap(x, y);
      sign = -sign;
    }
    bump(diff_key(x, y), e);
  }
  void qdiff(int x, int y, int e) { bump(qdiff_key(x, y), e); }
  void bump(int key, int e) {
    int& v = exps[key];
    v += e;
    if (v == 0) exps.erase(key);
  }
};

class FactorTable {
 public:
  explicit FactorTable(const PointSpec& z) : z_(z) {}

  const LaurentPoly& value(int key) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    int y = key % 64, x = (key / 64) % 64, kind = key / 4096;
    const LaurentPoly& zx = z_[x - 1];
    const LaurentPoly& zy = z_[y - 1];
    LaurentPoly v = kind == 0 ? zx - zy : LaurentPoly::q_power(1) * zx - LaurentPoly::q_power(-1) * zy;
    return cache_.emplace(key, std::move(v)).first->second;
  }

  LaurentPoly power(int key, int e) {
    LaurentPoly r(1);
    const LaurentPoly& v = value(key);
    for (int i = 0; i < e; ++i) r *= v;
    return r;
  }

 private:
  const PointSpec& z_;
  std::unordered_map<int, LaurentPoly> cache_;
};

void enumerate_assignments(const std::vector<int>& a, std::vector<int>& sigma, std::vector<char>& used, int i,
                           const std::function<void()>& emit) {
  if (i == static_cast<int>(a.size())) {
    emit();
    return;
  }
  for (int k = 1; k <= a[i]; ++k) {
    if (used[k]) continue;
    used[k] = 1;
    sigma[i] = k;
    enumerate_assignments(a, sigma, used, i + 1, emit);
    used[k] = 0;
  }
}

// Polynomial prefactor in front of the integral, as symbols so it can cancel against
// residue denominators (needed at wheel-type points).
Term prefactor(int n, int p) {
  Term r;
  const int N = 2 * n;
  auto hat = [N](int j) { return N + 1 - j; };
  if (p == 0) {
    for (int x = 1; x <= N; ++x)
      for (int y = x + 1; y <= N; ++y) r.qdiff(x, y, +1);
    return r;
  }
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) r.qdiff(i, j, +1);
  for (int i = 2; i <= p; ++i)
    for (int j = 2; j <= p; ++j) r.qdiff(i, hat(j), +1);
  for (int i = 1; i <= p; ++i)
    for (int j = p + 1; j <= N - p; ++j) r.qdiff(i, j, +1);
  for (int i = p + 1; i < hat(p); ++i)
    for (int j = i + 1; j < hat(p); ++j) r.qdiff(i, j, +1);
  return r;
}

}  // namespace

int phi_total_degree(int n, int p) {
  if (p == 0) return n * (n - 1);
  return (p - 1) * (p - 1) + (n - p) * (n - p - 1);
}

LaurentScalar eval_Phi(const GenSequence& a, const PointSpec& z) { return eval_Phi_neg(a, 0, z); }

namespace {

struct RawValue {
  LaurentPoly numer, denom;  // value = numer / (denom * xi^D)
};

RawValue eval_raw(const GenSequence& a, int p, const PointSpec& z) {
  const int n = a.size();
  const int N = 2 * n;
  if (n < 1) throw std::invalid_argument("eval_Phi: empty sequence");
  if (!a.is_bounded()) throw std::invalid_argument("eval_Phi: sequence violates a_i <= 2i-1: " + a.to_string());
  if (p < 0 || p > n) throw std::out_of_range("eval_Phi_neg: p outside 0..n");
  if (static_cast<int>(z.size()) != N) throw std::invalid_argument("eval_Phi: point needs 2n coordinates");
  if (N > kMaxPoints) throw std::invalid_argument("eval_Phi: too many points");

  FactorTable F(z);
  std::vector<Term> terms;
  const std::vector<int>& seq = a.seq();
  std::vector<int> sigma(n);
  std::vector<char> used(N + 1, 0);
  const Term pre = prefactor(n, p);
  enumerate_assignments(seq, sigma, used, 0, [&] {
    Term t = pre;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        t.diff(sigma[j], sigma[i], +1);
        t.qdiff(sigma[i], sigma[j], +1);
      }
    for (int i = 0; i < n; ++i) {
      for (int k = 1; k <= seq[i]; ++k)
        if (k != sigma[i]) t.diff(sigma[i], k, -1);
      for (int k = seq[i] + 1; k <= N; ++k) t.qdiff(sigma[i], k, -1);
      for (int j = 1; j <= p; ++j) {
        t.qdiff(sigma[i], N + 1 - j, +1);
        t.qdiff(j, sigma[i], -1);
      }
    }
    bool vanishes = false;
    for (const auto& [key, e] : t.exps) {
      bool zero = is_zero(F.value(key));
      if (zero && e < 0)
        throw DegeneratePoint("eval_Phi: residue denominator vanishes at this point (sequence " + a.to_string() + ")");
      if (zero) vanishes = true;
    }
    if (!vanishes) terms.push_back(std::move(t));
  });

  std::map<int, int> den;
  for (const auto& t : terms)
    for (const auto& [key, e] : t.exps)
      if (e < 0) {
        int& m = den[key];
        m = std::max(m, -e);
      }

  LaurentPoly numer;
  for (const auto& t : terms) {
    LaurentPoly v(t.sign);
    std::map<int, int> full = den;
    for (const auto& [key, e] : t.exps) full[key] += e;
    for (const auto& [key, e] : full)
      if (e > 0) v *= F.power(key, e);
    numer += v;
  }
  LaurentPoly denom(1);
  if (is_zero(numer)) return {numer, denom};
  for (const auto& [key, m] : den) denom *= F.power(key, m);
  return {numer, denom};
}

// The residue sum is polynomial in z, so numer / denom is usually an exact Laurent
// polynomial; dividing avoids a gcd on large operands.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (is_zero(a)) return LaurentPoly();
  auto [quo, rem] = divmod(a.body(), b.body());
  if (!is_zero(rem)) return std::nullopt;
  return LaurentPoly(a.low() - b.low(), quo);
}

LaurentPoly xi_power(int k) {
  LaurentPoly r(1);
  const LaurentPoly x = xi();
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

LaurentScalar eval_Phi_neg(const GenSequence& a, int p, const PointSpec& z) {
  RawValue v = eval_raw(a, p, z);
  const LaurentPoly xd = xi_power(phi_total_degree(a.size(), p));
  if (auto q = exact_quotient(v.numer, v.denom)) return LaurentScalar(*q, xd);
  return LaurentScalar(v.numer, v.denom * xd);
}

LaurentScalar limit_Phi(const GenSequence& a, int p, const PointSpec& z0) {
  const int n = a.size();
  const int D = phi_total_degree(n, p);
  // Direction with distinct positive slopes; abscissae 1, 2, ... skipping singular ones.
  std::vector<BigRational> xs;
  std::vector<LaurentScalar> ys;  // xi^D * Phi along the line
  for (int x = 1; static_cast<int>(xs.size()) < D + 2; ++x) {
    if (x > 4 * (D + 2) + 16) throw DegeneratePoint("limit_Phi: could not find enough regular points");
    PointSpec z = z0;
    for (int i = 0; i < static_cast<int>(z.size()); ++i) z[i] += LaurentPoly(BigRational(x * (i + 1)));
    try {
      RawValue v = eval_raw(a, p, z);
      auto q = exact_quotient(v.numer, v.denom);
      ys.push_back(q ? LaurentScalar(*q) : LaurentScalar(v.numer, v.denom));
      xs.emplace_back(x);
    } catch (const DegeneratePoint&) {
    }
  }
  auto interpolate = [&](const BigRational& at) {
    LaurentScalar acc;
    for (int j = 0; j <= D; ++j) {
      BigRational w = 1;
      for (int k = 0; k <= D; ++k)
        if (k != j) w *= (at - xs[k]) / (xs[j] - xs[k]);
      if (sgn(w) != 0) acc += ys[j] * LaurentScalar(w);
    }
    return acc;
  };
  if (interpolate(xs[D + 1]) != ys[D + 1])
    throw std::logic_error("limit_Phi: values along the line exceed the expected degree");
  return interpolate(BigRational(0)) / LaurentScalar(xi_power(D));
}

PointSpec q_eps_point(const Matching& pi) {
  PointSpec z;
  for (char c : pi.word()) z.push_back(LaurentPoly::q_power(c == '(' ? -1 : 1));
  return z;
}

PointSpec homogeneous_point(int n) { return PointSpec(2 * static_cast<std::size_t>(n), LaurentPoly(1)); }

}  // namespace fplpoly
