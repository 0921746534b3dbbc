#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "fplpoly/contour.hpp"
#include "fplpoly/multipoly.hpp"

namespace fplpoly {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("constant-term kernel: int64 overflow");
  return r;
}

// Truncated expansion of prod_{i<j}(u_j-u_i)(1+tau u_j+u_i u_j), u_i^{e_i} with e_i <= caps[i].
// Each cell holds a polynomial in tau with integer coefficients.
class Kernel {
 public:
  explicit Kernel(std::vector<int> caps) : caps_(std::move(caps)), n_(static_cast<int>(caps_.size())) {
    stride_.assign(n_, 1);
    cells_ = 1;
    for (int i = 0; i < n_; ++i) {
      stride_[i] = cells_;
      cells_ *= static_cast<std::size_t>(caps_[i] + 1);
    }
    width_ = n_ * (n_ - 1) / 2 + 1;
    data_.assign(cells_ * width_, 0);
    data_[0] = 1;
    int tdeg = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) multiply_pair(i, j, tdeg++);
  }

  int n() const { return n_; }
  std::size_t cells() const { return cells_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::int64_t* cell(std::size_t c) const { return &data_[c * width_]; }
  int width() const { return static_cast<int>(width_); }

  PolyTau cell_poly(std::size_t c) const {
    std::vector<BigRational> v;
    const std::int64_t* p = cell(c);
    for (std::size_t t = 0; t < width_; ++t) v.emplace_back(BigInt(static_cast<long>(p[t])));
    return PolyTau(std::move(v));
  }

  // Sums cells by the multiset of complementary exponents k_i = caps_i - e_i.
  std::map<std::vector<int>, std::vector<std::int64_t>> grouped() const {
    std::map<std::vector<int>, std::vector<std::int64_t>> out;
    std::vector<int> e(n_, 0), k(n_);
    for (std::size_t c = 0; c < cells_; ++c) {
      const std::int64_t* p = cell(c);
      bool nz = false;
      for (std::size_t t = 0; t < width_ && !nz; ++t) nz = p[t] != 0;
      if (nz) {
        for (int i = 0; i < n_; ++i) k[i] = caps_[i] - e[i];
        std::vector<int> key = k;
        std::sort(key.begin(), key.end());
        auto& acc = out[key];
        if (acc.empty()) acc.assign(width_, 0);
        for (std::size_t t = 0; t < width_; ++t) acc[t] = checked_add(acc[t], p[t]);
      }
      for (int i = 0; i < n_; ++i) {
        if (++e[i] <= caps_[i]) break;
        e[i] = 0;
      }
    }
    return out;
  }

 private:
  struct Mono {
    int sign, tau, di, dj;
  };

  void multiply_pair(int i, int j, int tdeg) {
    static constexpr Mono monos[6] = {{+1, 0, 0, 1}, {+1, 1, 0, 2}, {+1, 0, 1, 2},
                                      {-1, 0, 1, 0}, {-1, 1, 1, 1}, {-1, 0, 2, 1}};
    std::vector<std::int64_t> out(data_.size(), 0);
    std::vector<int> e(n_, 0);
    for (std::size_t c = 0; c < cells_; ++c) {
      const std::int64_t* src = &data_[c * width_];
      bool nz = false;
      for (int t = 0; t <= tdeg && !nz; ++t) nz = src[t] != 0;
      if (nz) {
        for (const Mono& m : monos) {
          if (e[i] + m.di > caps_[i] || e[j] + m.dj > caps_[j]) continue;
          std::size_t tc = c + m.di * stride_[i] + m.dj * stride_[j];
          std::int64_t* dst = &out[tc * width_ + m.tau];
          for (int t = 0; t <= tdeg; ++t) {
            if (src[t] == 0) continue;
            dst[t] = checked_add(dst[t], m.sign > 0 ? src[t] : -src[t]);
          }
        }
      }
      for (int v = 0; v < n_; ++v) {
        if (++e[v] <= caps_[v]) break;
        e[v] = 0;
      }
    }
    data_.swap(out);
  }

  std::vector<int> caps_;
  int n_;
  std::vector<std::size_t> stride_;
  std::size_t cells_ = 1;
  std::size_t width_ = 1;
  std::vector<std::int64_t> data_;
};

PolyTau int_poly(const std::vector<std::int64_t>& v) {
  std::vector<BigRational> c;
  for (auto x : v) c.emplace_back(BigInt(static_cast<long>(x)));
  return PolyTau(std::move(c));
}

std::vector<int> phi_caps(const GenSequence& a) {
  std::vector<int> caps;
  for (int v : a.seq()) caps.push_back(v - 1);
  return caps;
}

std::vector<int> staircase_caps(int n) {
  std::vector<int> caps;
  for (int i = 1; i <= n; ++i) caps.push_back(2 * i - 2);
  return caps;
}

// sum over groups of G(tau) * prod_i series(k_i)
template <class SeriesFn>
PolyTau contract(const Kernel& K, SeriesFn series) {
  PolyTau total;
  std::map<int, PolyTau> memo;
  auto s = [&](int k) -> const PolyTau& {
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, series(k)).first;
    return it->second;
  };
  for (const auto& [key, g] : K.grouped()) {
    PolyTau term = int_poly(g);
    for (int k : key) {
      term *= s(k);
      if (is_zero(term)) break;
    }
    total += term;
  }
  return total;
}

void check_sequence(const GenSequence& a) {
  if (!a.is_bounded()) throw std::invalid_argument("sequence violates a_i <= 2i-1: " + a.to_string());
}

}  // namespace

PolyTau phi_tau(const GenSequence& a) {
  check_sequence(a);
  if (a.size() == 0) return PolyTau(1);
  Kernel K(phi_caps(a));
  return K.cell_poly(K.cells() - 1);
}

PolyTauT phi_tau_t(const GenSequence& a) {
  check_sequence(a);
  if (a.size() == 0) return PolyTauT(1);
  Kernel K(phi_caps(a));
  PolyTauT total;
  std::map<int, PolyQ> binoms;
  for (const auto& [key, g] : K.grouped()) {
    int ksum = 0;
    PolyQ tpart(1);
    for (int k : key) {
      ksum += k;
      auto it = binoms.find(k);
      if (it == binoms.end()) it = binoms.emplace(k, binomial_poly(k)).first;
      tpart *= it->second;
    }
    PolyTau taupart = int_poly(g) * PolyTau::monomial(1, ksum);
    std::vector<PolyTau> coeffs;
    for (const auto& c : tpart.coeffs()) coeffs.push_back(taupart.scaled(c));
    total += PolyTauT(std::move(coeffs));
  }
  return total;
}

PolyTau phi_at_neg(const GenSequence& a, int p) {
  check_sequence(a);
  if (p < 0 || p > a.size()) throw std::out_of_range("phi_at_neg: p outside 0..n");
  if (a.size() == 0) return PolyTau(1);
  Kernel K(phi_caps(a));
  return contract(K, [p](int k) { return PolyTau::monomial(BigRational(binomial(-p, k)), k); });
}

PolyTau sum_g(int n) {
  if (n < 1) throw std::invalid_argument("sum_g: n must be positive");
  Kernel K(staircase_caps(n));
  return contract(K, [n](int k) {
    // [u^k] (1+u)(1+tau u)^{-n}
    PolyTau s = PolyTau::monomial(BigRational(binomial(-n, k)), k);
    if (k >= 1) s += PolyTau::monomial(BigRational(binomial(-n, k - 1)), k - 1);
    return s;
  });
}

PolyTau sum_psi(int n) {
  if (n < 1) throw std::invalid_argument("sum_psi: n must be positive");
  Kernel K(staircase_caps(n));
  return contract(K, [](int k) { return k <= 1 ? PolyTau(1) : PolyTau(); });
}

PolyQ a_n_x(int n) {
  if (n < 1) throw std::invalid_argument("a_n_x: n must be positive");
  Kernel K(staircase_caps(n));
  PolyQ total;
  for (const auto& [key, g] : K.grouped()) {
    int ones = 0;
    bool ok = true;
    for (int k : key) {
      if (k > 1) ok = false;
      ones += k;
    }
    if (!ok) continue;
    BigRational at_one = int_poly(g).eval(BigRational(1));
    total += PolyQ::monomial(at_one, ones);
  }
  return total;
}

PolyTau phi_tau_bruteforce(const GenSequence& a) {
  check_sequence(a);
  const int n = a.size();
  using MP = MultiPoly<PolyTau>;
  MP f = MP::constant(n, PolyTau(1));
  const PolyTau tau = PolyTau::var();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MP ui = MP::variable(n, i), uj = MP::variable(n, j);
      MP left = uj - ui;
      MP right = MP::constant(n, PolyTau(1)) + uj.scaled(tau) + ui * uj;
      f = f * (left * right);
    }
  return f.coeff(phi_caps(a));
}

}  // namespace fplpoly
