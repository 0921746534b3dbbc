#include "fplpoly/fpl.hpp"

#include <stdexcept>

namespace fplpoly {

namespace {

Dir opposite(Dir d) {
  switch (d) {
    case kN: return kS;
    case kS: return kN;
    case kE: return kW;
    default: return kE;
  }
}

int popcount(std::uint8_t m) { return __builtin_popcount(m); }

void check_size(int n) {
  if (n < 1) throw std::invalid_argument("FPL size must be positive");
}

}  // namespace

int boundary_index(int n, int r, int c, Dir d) {
  if (d == kN && r == 0) return c;
  if (d == kE && c == n - 1) return n + r;
  if (d == kS && r == n - 1) return 2 * n + (n - 1 - c);
  if (d == kW && c == 0) return 3 * n + (n - 1 - r);
  return -1;
}

bool boundary_selected(int n, int r, int c, Dir d) {
  int idx = boundary_index(n, r, c, d);
  return idx >= 0 && idx % 2 == 0;
}

bool FplConfig::valid() const {
  if (n < 1 || mask.size() != static_cast<std::size_t>(n) * n) return false;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::uint8_t m = at(r, c);
      if (popcount(m) != 2) return false;
      for (Dir d : {kN, kE, kS, kW}) {
        bool used = m & d;
        if (boundary_index(n, r, c, d) >= 0) {
          if (used != boundary_selected(n, r, c, d)) return false;
          continue;
        }
        int rr = r + (d == kS) - (d == kN), cc = c + (d == kE) - (d == kW);
        if (used != static_cast<bool>(at(rr, cc) & opposite(d))) return false;
      }
    }
  return true;
}

void enumerate_fpl(int n, const std::function<void(const FplConfig&)>& visit) {
  check_size(n);
  FplConfig f{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n * n) {
      visit(f);
      return;
    }
    const int r = pos / n, c = pos % n;
    std::uint8_t fixed = 0;
    bool north = r == 0 ? boundary_selected(n, r, c, kN) : (f.at(r - 1, c) & kS);
    bool west = c == 0 ? boundary_selected(n, r, c, kW) : (f.at(r, c - 1) & kE);
    if (north) fixed |= kN;
    if (west) fixed |= kW;
    const bool east_forced = c == n - 1, south_forced = r == n - 1;
    for (int e = 0; e <= 1; ++e) {
      if (east_forced && e != boundary_selected(n, r, c, kE)) continue;
      for (int s = 0; s <= 1; ++s) {
        if (south_forced && s != boundary_selected(n, r, c, kS)) continue;
        std::uint8_t m = fixed | (e ? kE : 0) | (s ? kS : 0);
        if (popcount(m) != 2) continue;
        f.at(r, c) = m;
        rec(pos + 1);
      }
    }
    f.at(r, c) = 0;
  };
  rec(0);
}

std::size_t count_fpl(int n) {
  std::size_t k = 0;
  enumerate_fpl(n, [&](const FplConfig&) { ++k; });
  return k;
}

Matching link_pattern(const FplConfig& f) {
  if (!f.valid()) throw std::invalid_argument("link_pattern: malformed FPL configuration");
  const int n = f.n;
  std::vector<int> partner(2 * n + 1, 0);
  std::vector<std::pair<int, int>> arches;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (Dir d : {kN, kE, kS, kW}) {
        if (!boundary_selected(n, r, c, d)) continue;
        const int label = boundary_index(n, r, c, d) / 2 + 1;
        if (partner[label]) continue;
        int rr = r, cc = c;
        Dir in = d;
        for (int steps = 0;; ++steps) {
          if (steps > 4 * n * n) throw std::invalid_argument("link_pattern: path does not terminate");
          std::uint8_t out_mask = f.at(rr, cc) & ~in;
          Dir out = static_cast<Dir>(out_mask);
          if (boundary_index(n, rr, cc, out) >= 0) {
            const int other = boundary_index(n, rr, cc, out) / 2 + 1;
            partner[label] = other;
            partner[other] = label;
            arches.emplace_back(label, other);
            break;
          }
          rr += (out == kS) - (out == kN);
          cc += (out == kE) - (out == kW);
          in = opposite(out);
        }
      }
  return Matching::from_arches(std::move(arches));
}

AsmMatrix to_asm(const FplConfig& f) {
  const int n = f.n;
  AsmMatrix a(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r) {
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      std::uint8_t m = f.at(r, c);
      if (m == (kN | kS) || m == (kE | kW)) {
        a[r][c] = sign;
        sign = -sign;
      }
    }
  }
  return a;
}

bool is_asm(const AsmMatrix& a) {
  const std::size_t n = a.size();
  auto line_ok = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) {
      if (x < -1 || x > 1) return false;
      s += x;
      if (s < 0 || s > 1) return false;
    }
    return s == 1;
  };
  for (const auto& row : a) {
    if (row.size() != n || !line_ok(row)) return false;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> col;
    for (std::size_t r = 0; r < n; ++r) col.push_back(a[r][c]);
    if (!line_ok(col)) return false;
  }
  return true;
}

bool is_vertically_symmetric(const AsmMatrix& a) {
  for (const auto& row : a)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != row[row.size() - 1 - c]) return false;
  return true;
}

void enumerate_asm(int n, const std::function<void(const AsmMatrix&)>& visit) {
  check_size(n);
  AsmMatrix a(n, std::vector<int>(n, 0));
  std::vector<int> colsum(n, 0);
  std::function<void(int, int, int)> rec = [&](int r, int c, int rowsum) {
    if (c == n) {
      if (rowsum != 1) return;
      if (r == n - 1) {
        for (int s : colsum)
          if (s != 1) return;
        visit(a);
        return;
      }
      rec(r + 1, 0, 0);
      return;
    }
    a[r][c] = 0;
    rec(r, c + 1, rowsum);
    if (rowsum == 0 && colsum[c] == 0) {
      a[r][c] = 1;
      colsum[c] = 1;
      rec(r, c + 1, 1);
      colsum[c] = 0;
    } else if (rowsum == 1 && colsum[c] == 1) {
      a[r][c] = -1;
      colsum[c] = 0;
      rec(r, c + 1, 0);
      colsum[c] = 1;
    }
    a[r][c] = 0;
  };
  rec(0, 0, 0);
}

std::vector<BigInt> count_by_matching(int n) {
  std::vector<BigInt> counts(all_matchings(n).size(), 0);
  enumerate_fpl(n, [&](const FplConfig& f) { counts[index_of(link_pattern(f))] += 1; });
  return counts;
}

std::vector<BigInt> refined_asm_counts(int n) {
  std::vector<BigInt> counts(n, 0);
  enumerate_asm(n, [&](const AsmMatrix& a) {
    for (int c = 0; c < n; ++c)
      if (a[0][c] == 1) counts[c] += 1;
  });
  return counts;
}

BigInt count_vertically_symmetric(int n) {
  BigInt k = 0;
  enumerate_asm(n, [&](const AsmMatrix& a) {
    if (is_vertically_symmetric(a)) k += 1;
  });
  return k;
}

namespace {
BigInt exact_integer(const BigRational& x) {
  if (x.get_den() != 1) throw std::logic_error("closed formula produced a non-integer");
  return x.get_num();
}
}  // namespace

BigInt a_n(int n) {
  check_size(n);
  BigRational r = 1;
  for (int k = 0; k < n; ++k) r *= BigRational(factorial(3 * k + 1), factorial(n + k));
  r.canonicalize();
  return exact_integer(r);
}

BigInt a_v(int n) {
  check_size(n);
  if (n % 2 == 0) return 0;
  const int m = (n - 1) / 2;
  BigRational r = 1;
  for (int k = 1; k <= m; ++k) {
    BigRational f(factorial(6 * k - 2) * factorial(2 * k - 1), factorial(4 * k - 1) * factorial(4 * k - 2));
    f.canonicalize();
    r *= f;
  }
  r /= BigRational(BigInt(1) << m);
  return exact_integer(r);
}

BigInt a_n_i(int n, int i) {
  check_size(n);
  if (i < 1 || i > n) throw std::out_of_range("a_n_i: i outside 1..n");
  BigRational r(binomial(n + i - 2, i - 1) * factorial(2 * n - i - 1), factorial(n - i));
  r.canonicalize();
  for (int j = 0; j <= n - 2; ++j) {
    BigRational f(factorial(3 * j + 1), factorial(n + j));
    f.canonicalize();
    r *= f;
  }
  return exact_integer(r);
}

BigInt a_n_minus1(int n) {
  BigInt s = 0;
  for (int i = 1; i <= n; ++i) s += (i % 2 ? 1 : -1) * a_n_i(n, i);
  return s;
}

}  // namespace fplpoly
