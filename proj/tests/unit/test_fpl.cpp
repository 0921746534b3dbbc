#include <doctest.h>

#include <cmath>
#include <set>

#include "fplpoly/contour.hpp"
#include "fplpoly/fpl.hpp"
#include "fplpoly/loopmodel.hpp"

using namespace fplpoly;

namespace {

// Builds the 6x6 configuration of the FPL figure from its paths. Coordinates are
// (x, y) = (column, 5 - row); a half-integer coordinate marks an external edge.
FplConfig figure_fpl() {
  const std::vector<std::vector<std::pair<double, double>>> paths = {
      {{-.5, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {0, 3}, {0, 2}, {-.5, 2}},
      {{1, -.5}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {4, 4}, {5, 4}, {5, 5}, {5.5, 5}},
      {{3, -.5}, {3, 0}, {4, 0}, {5, 0}, {5, -.5}},
      {{5.5, 1}, {5, 1}, {5, 2}, {5, 3}, {5.5, 3}},
      {{-.5, 4}, {0, 4}, {1, 4}, {1, 5}, {0, 5}, {0, 5.5}},
      {{2, 5.5}, {2, 5}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 5.5}},
      {{2, 2}, {3, 2}, {3, 3}, {2, 3}, {2, 2}},
  };
  FplConfig f{6, std::vector<std::uint8_t>(36, 0)};
  auto mark = [&](std::pair<double, double> from, std::pair<double, double> to) {
    if (from.first != std::floor(from.first) || from.second != std::floor(from.second)) return;
    const int r = 5 - static_cast<int>(from.second), c = static_cast<int>(from.first);
    const double dx = to.first - from.first, dy = to.second - from.second;
    f.at(r, c) |= dx > 0 ? kE : dx < 0 ? kW : dy > 0 ? kN : kS;
  };
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      mark(p[i], p[i + 1]);
      mark(p[i + 1], p[i]);
    }
  return f;
}

}  // namespace

TEST_CASE("enumeration sizes") {
  CHECK(count_fpl(1) == 1);
  CHECK(count_fpl(3) == 7);
  CHECK(count_fpl(4) == 42);
  CHECK(count_fpl(5) == 429);
  enumerate_fpl(4, [](const FplConfig& f) { CHECK(f.valid()); });
}

TEST_CASE("link pattern of the figure") {
  FplConfig f = figure_fpl();
  REQUIRE(f.valid());
  CHECK(link_pattern(f) == Matching::from_arches({{1, 12}, {2, 3}, {4, 9}, {5, 6}, {7, 8}, {10, 11}}));
}

TEST_CASE("ASM of the figure") {
  AsmMatrix expected(6, std::vector<int>(6, 0));
  expected[0][2] = 1;
  expected[1][0] = 1;
  expected[2][4] = 1;
  expected[3][1] = 1;
  expected[3][4] = -1;
  expected[3][5] = 1;
  expected[4][3] = 1;
  expected[5][4] = 1;
  AsmMatrix a = to_asm(figure_fpl());
  CHECK(a == expected);
  CHECK(is_asm(a));
}

TEST_CASE("malformed configurations are rejected") {
  FplConfig f = figure_fpl();
  f.at(2, 2) = kN | kE;
  CHECK_FALSE(f.valid());
  CHECK_THROWS(link_pattern(f));
}

TEST_CASE("counts by matching at n = 3") {
  auto c = count_by_matching(3);
  const auto& ms = all_matchings(3);
  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(c[i] == groundstate(3).psi[i]);
  std::multiset<BigInt> values(c.begin(), c.end());
  CHECK(values == std::multiset<BigInt>{1, 1, 1, 2, 2});
}

TEST_CASE("ASM bijection") {
  for (int n = 1; n <= 4; ++n) {
    std::set<AsmMatrix> image, all;
    enumerate_fpl(n, [&](const FplConfig& f) { image.insert(to_asm(f)); });
    enumerate_asm(n, [&](const AsmMatrix& a) {
      CHECK(is_asm(a));
      all.insert(a);
    });
    CHECK(image == all);
    CHECK(BigInt(all.size()) == a_n(n));
  }
  BigInt perms = 0;
  enumerate_asm(5, [&](const AsmMatrix& a) {
    bool perm = true;
    for (const auto& row : a)
      for (int x : row) perm = perm && x >= 0;
    if (perm) perms += 1;
  });
  CHECK(perms == 120);
}

TEST_CASE("closed formulas") {
  std::vector<BigInt> an;
  for (int n = 1; n <= 6; ++n) an.push_back(a_n(n));
  CHECK(an == std::vector<BigInt>{1, 2, 7, 42, 429, 7436});
  CHECK(a_n_i(3, 1) == 2);
  CHECK(a_n_i(3, 2) == 3);
  CHECK(a_n_i(3, 3) == 2);
  CHECK(count_vertically_symmetric(3) == 1);
  CHECK(count_vertically_symmetric(5) == 3);
  CHECK(a_v(3) == 1);
  CHECK(a_v(5) == 3);
  CHECK(a_v(7) == 26);
  CHECK(a_v(4) == 0);
  for (int m = 0; m <= 7; ++m) CHECK(a_n_minus1(2 * m + 1) == a_v(2 * m + 1) * a_v(2 * m + 1));
  for (int n = 2; n <= 14; n += 2) CHECK(a_n_minus1(n) == 0);
  for (int n = 1; n <= 5; ++n) {
    auto r = refined_asm_counts(n);
    PolyQ x = a_n_x(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(r[i - 1] == a_n_i(n, i));
      CHECK(x.coeff(i - 1) == BigRational(r[i - 1]));
      CHECK(r[i - 1] == r[n - i]);
    }
    CHECK(x.eval<BigRational>(1) == BigRational(a_n(n)));
  }
  CHECK_THROWS(a_n_i(3, 4));
}
