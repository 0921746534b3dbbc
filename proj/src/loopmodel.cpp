#include "fplpoly/loopmodel.hpp"

#include <stdexcept>

namespace fplpoly {

TLResult apply_e_full(int i, const Matching& m) {
  const int N = 2 * m.size();
  if (i < 0 || i >= N) throw std::out_of_range("apply_e: index must lie in 0.." + std::to_string(N - 1));
  const int a = i == 0 ? N : i;
  const int b = i == 0 ? 1 : i + 1;
  std::vector<int> p = m.partners();
  if (p[a] == b) return {m, true};
  const int x = p[a], y = p[b];
  p[x] = y, p[y] = x, p[a] = b, p[b] = a;
  std::vector<std::pair<int, int>> arches;
  for (int k = 1; k <= N; ++k)
    if (k < p[k]) arches.emplace_back(k, p[k]);
  return {Matching::from_arches(std::move(arches)), false};
}

IntMatrix hamiltonian(int n) {
  const auto& ms = all_matchings(n);
  const std::size_t N = ms.size();
  IntMatrix h(N, std::vector<BigInt>(N, 0));
  for (std::size_t c = 0; c < N; ++c) {
    h[c][c] += 2 * n;
    for (int i = 0; i < 2 * n; ++i) h[index_of(apply_e(i, ms[c]))][c] -= 1;
  }
  return h;
}

std::vector<std::vector<BigRational>> kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  IntMatrix a = m;
  std::vector<int> pivot_col;
  BigInt prev = 1;
  std::size_t r = 0;
  // Bareiss elimination to row echelon form; every division is exact.
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) throw std::logic_error("kernel_basis: inexact division");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> x(cols, 0);
    x[f] = 1;
    for (std::size_t k = pivot_col.size(); k-- > 0;) {
      std::size_t c = pivot_col[k];
      BigRational s = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (sgn(x[j]) != 0) s += BigRational(a[k][j]) * x[j];
      x[c] = -s / BigRational(a[k][c]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

GroundState groundstate(int n) {
  if (n < 1) throw std::invalid_argument("groundstate: n must be positive");
  auto ker = kernel_basis(hamiltonian(n));
  if (ker.size() != 1) throw std::logic_error("groundstate: kernel dimension is " + std::to_string(ker.size()));
  const std::size_t nested = index_of(Matching::nested(n));
  BigRational scale = ker[0][nested];
  if (sgn(scale) == 0) throw std::logic_error("groundstate: nested component vanishes");
  GroundState gs{n, {}};
  for (const auto& v : ker[0]) {
    BigRational x = v / scale;
    if (x.get_den() != 1 || sgn(x) <= 0) throw std::logic_error("groundstate: entry is not a positive integer");
    gs.psi.push_back(x.get_num());
  }
  return gs;
}

}  // namespace fplpoly
