#pragma once

#include <vector>

#include "fplpoly/matching.hpp"
#include "fplpoly/rational.hpp"

namespace fplpoly {

struct TLResult {
  Matching image;
  bool closed_loop;  // the arch (i, i+1) was already present
};

// e_i for 0 <= i <= 2n-1; e_0 acts on the pair (2n, 1).
TLResult apply_e_full(int i, const Matching& m);
inline Matching apply_e(int i, const Matching& m) { return apply_e_full(i, m).image; }

using IntMatrix = std::vector<std::vector<BigInt>>;

// 2n * I - sum_i E_i with (E_i)_{sigma,pi} = [e_i pi = sigma], rows/cols in all_matchings order.
IntMatrix hamiltonian(int n);

// Basis of the right kernel over Q (fraction-free elimination), one vector per free column.
std::vector<std::vector<BigRational>> kernel_basis(const IntMatrix& m);

struct GroundState {
  int n;
  std::vector<BigInt> psi;  // indexed like all_matchings(n)
  const BigInt& operator[](const Matching& m) const { return psi[index_of(m)]; }
};

// Unique kernel vector with psi(nested) = 1; throws std::logic_error if the kernel is not
// one-dimensional or an entry is not a positive integer.
GroundState groundstate(int n);

}  // namespace fplpoly
