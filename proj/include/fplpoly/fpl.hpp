#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fplpoly/matching.hpp"
#include "fplpoly/rational.hpp"

namespace fplpoly {

enum Dir : std::uint8_t { kN = 1, kE = 2, kS = 4, kW = 8 };

// n x n grid, row 0 on top. mask(r,c) holds the edges used at each vertex, boundary
// edges included. The 4n boundary edges are numbered clockwise starting at the north
// edge of the top-left vertex; the even-numbered ones are selected, and edge 2k gets label k+1.
struct FplConfig {
  int n = 0;
  std::vector<std::uint8_t> mask;

  std::uint8_t at(int r, int c) const { return mask[static_cast<std::size_t>(r) * n + c]; }
  std::uint8_t& at(int r, int c) { return mask[static_cast<std::size_t>(r) * n + c]; }
  // Degree 2 everywhere, consistent internal edges, boundary edges exactly the selected ones.
  bool valid() const;
  friend bool operator==(const FplConfig&, const FplConfig&) = default;
};

// Clockwise boundary index of the edge leaving (r,c) in direction d, or -1 if internal.
int boundary_index(int n, int r, int c, Dir d);
bool boundary_selected(int n, int r, int c, Dir d);

// Streams every FPL of size n, in a fixed backtracking order.
void enumerate_fpl(int n, const std::function<void(const FplConfig&)>& visit);
std::size_t count_fpl(int n);

Matching link_pattern(const FplConfig& f);

using AsmMatrix = std::vector<std::vector<int>>;

// Straight vertices become the nonzero entries; signs alternate along each row from +1.
AsmMatrix to_asm(const FplConfig& f);
bool is_asm(const AsmMatrix& a);
bool is_vertically_symmetric(const AsmMatrix& a);
// Row-by-row backtracking over column partial sums, independent of the FPL code.
void enumerate_asm(int n, const std::function<void(const AsmMatrix&)>& visit);

// A_pi for every pi, indexed like all_matchings(n).
std::vector<BigInt> count_by_matching(int n);
// Number of ASMs with the 1 of the first row in column i (index i-1), by enumeration.
std::vector<BigInt> refined_asm_counts(int n);
BigInt count_vertically_symmetric(int n);

// Closed formulas.
BigInt a_n(int n);
BigInt a_v(int n);  // 0 for even n
BigInt a_n_i(int n, int i);
BigInt a_n_minus1(int n);

}  // namespace fplpoly
