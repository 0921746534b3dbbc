#include <doctest.h>

#include "fplpoly/contour.hpp"
#include "fplpoly/matching.hpp"

using namespace fplpoly;

namespace {
PolyTau T(std::vector<int> c) {
  std::vector<BigRational> r(c.begin(), c.end());
  return PolyTau(std::move(r));
}
GenSequence S(std::vector<int> v) { return GenSequence(std::move(v)); }
PointSpec rationals(std::vector<std::pair<int, int>> v) {
  PointSpec z;
  for (auto [a, b] : v) {
    BigRational r(a, b);
    r.canonicalize();
    z.emplace_back(r);
  }
  return z;
}
}  // namespace

TEST_CASE("constant-term extraction of phi") {
  CHECK(phi_tau(S({1})) == PolyTau(1));
  CHECK(phi_tau(S({1, 2, 3, 4})) == PolyTau(1));
  CHECK(phi_tau(S({1, 3})) == T({0, 1}));
  CHECK(phi_tau(Matching::from_word("()()()")) == T({0, 1, 0, 1}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_matchings(n)) CHECK(phi_tau(a) == phi_tau_bruteforce(a));
}

TEST_CASE("phi as a polynomial in t") {
  CHECK(phi_tau_t(S({1, 2, 3})) == PolyTauT(PolyTau(1)));
  CHECK(phi_tau_t(S({1, 3})) == PolyTauT({T({0, 1}), T({0, 1})}));
  CHECK(eval_t(phi_tau_t(S({1, 3})), 2) == phi_tau(S({1, 2, 3, 5})));
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_matchings(n))
      for (int p = 0; p <= 3; ++p) CHECK(eval_t(phi_tau_t(a), p) == phi_tau(nest(a, p)));
}

TEST_CASE("phi at negative t") {
  CHECK(phi_at_neg(S({1, 3}), 0) == phi_tau(S({1, 3})));
  CHECK(phi_at_neg(S({1, 3}), 1) == PolyTau());
  CHECK(phi_at_neg(S({1, 3}), 2) == T({0, -1}));
  CHECK_THROWS(phi_at_neg(S({1, 3}), 3));
}

TEST_CASE("single-integral sums") {
  CHECK(sum_psi(3).eval<BigRational>(1) == 7);
  CHECK(sum_g(2) == T({1, -1}));
  for (int n = 1; n <= 6; ++n) CHECK(sum_g(n).reflect() == sum_psi(n));
  CHECK(a_n_x(1) == PolyQ(1));
  CHECK(a_n_x(3) == T({2, 3, 2}));
}

TEST_CASE("residue evaluation basics") {
  CHECK(eval_Phi(S({1}), rationals({{2, 3}, {-5, 7}})) == LaurentScalar(1));
  CHECK(eval_Phi(S({1}), PointSpec{LaurentPoly::q_power(3), LaurentPoly(4)}) == LaurentScalar(1));
  // z_1 = z_2 cancels inside every term; z_2 = z_3 makes single terms blow up.
  CHECK(eval_Phi(S({1, 3}), rationals({{1, 1}, {1, 1}, {2, 1}, {3, 1}})) ==
        limit_Phi(S({1, 3}), 0, rationals({{1, 1}, {1, 1}, {2, 1}, {3, 1}})));
  CHECK_THROWS_AS(eval_Phi(S({1, 3}), rationals({{1, 1}, {2, 1}, {2, 1}, {3, 1}})), DegeneratePoint);
  CHECK_THROWS(eval_Phi(S({1, 3}), rationals({{1, 1}, {2, 1}})));
  CHECK_THROWS(eval_Phi(S({1, 4}), rationals({{1, 1}, {2, 1}, {3, 1}, {4, 1}})));
  CHECK_THROWS(eval_Phi_neg(S({1, 3}), 3, rationals({{1, 1}, {2, 1}, {3, 1}, {4, 1}})));
}

TEST_CASE("q^eps specialisations") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : all_matchings(n)) {
      PolyTau v = laurent_to_tau(limit_Phi(a, 0, q_eps_point(a)));
      CHECK(v == PolyTau::monomial(BigRational(1), a.d()));
    }
  CHECK(is_zero(limit_Phi(S({1, 3}), 0, q_eps_point(Matching::from_word("(())")))));
}

TEST_CASE("homogeneous limits reproduce the constant terms") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : all_matchings(n)) {
      CHECK(laurent_to_tau(limit_Phi(a, 0, homogeneous_point(n))) == phi_tau(a));
      for (int p = 1; p <= n; ++p) CHECK(laurent_to_tau(limit_Phi(a, p, homogeneous_point(n))) == phi_at_neg(a, p));
    }
}

TEST_CASE("wheel condition") {
  const BigRational r(3, 5);
  PointSpec w{LaurentPoly(r), LaurentPoly::q_power(2, r), LaurentPoly::q_power(4, r), LaurentPoly(BigRational(-7, 2))};
  for (const auto& a : all_matchings(2)) {
    CHECK(is_zero(limit_Phi(a, 0, w)));
  }
  // the reversed order is not a wheel
  PointSpec rev{LaurentPoly::q_power(4, r), LaurentPoly::q_power(2, r), LaurentPoly(r), LaurentPoly(BigRational(-7, 2))};
  bool some_nonzero = false;
  for (const auto& a : all_matchings(2)) some_nonzero = some_nonzero || !is_zero(limit_Phi(a, 0, rev));
  CHECK(some_nonzero);
}

TEST_CASE("homogeneity degrees") {
  // Phi_{a,-p} is homogeneous of degree (p-1)^2 in the outer variables and (n-p)(n-p-1) in the inner ones
  PointSpec z = rationals({{1, 2}, {2, 3}, {-3, 4}, {5, 7}, {-1, 3}, {7, 5}});
  const int n = 3;
  const BigRational lambda(2);
  for (int p = 1; p <= 2; ++p)
    for (const auto& a : all_matchings(n)) {
      LaurentScalar base = eval_Phi_neg(a, p, z);
      PointSpec zo = z, zi = z;
      for (int i : outer_points(n, p)) zo[i - 1] = zo[i - 1] * LaurentPoly(lambda);
      for (int i : inner_points(n, p)) zi[i - 1] = zi[i - 1] * LaurentPoly(lambda);
      BigRational fo = 1, fi = 1;
      for (int k = 0; k < (p - 1) * (p - 1); ++k) fo *= lambda;
      for (int k = 0; k < (n - p) * (n - p - 1); ++k) fi *= lambda;
      CHECK(eval_Phi_neg(a, p, zo) == base * LaurentScalar(fo));
      CHECK(eval_Phi_neg(a, p, zi) == base * LaurentScalar(fi));
    }
}
