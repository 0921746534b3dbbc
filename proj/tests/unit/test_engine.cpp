#include <doctest.h>

#include "fplpoly/engine.hpp"
#include "fplpoly/loopmodel.hpp"

using namespace fplpoly;

namespace {
Matching W(const char* w) { return Matching::from_word(w); }
PolyTau T(std::vector<int> c) {
  std::vector<BigRational> r(c.begin(), c.end());
  return PolyTau(std::move(r));
}
PointSpec sample_point(int n, int salt) {
  PointSpec z;
  for (int i = 1; i <= 2 * n; ++i) z.emplace_back(BigRational((i * 7 + salt) % 23 - 11, i + salt % 5));
  return z;
}
}  // namespace

TEST_CASE("psi at t = 0") {
  CHECK(psi_tau(Matching::nested(4)) == PolyTau(1));
  CHECK(psi_tau(W("()()")) == T({0, 1}));
  CHECK(psi_tau(W("(()())")) == T({0, 2}));
  CHECK(psi_tau(W("()()()")) == T({0, 1, 0, 1}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : all_matchings(n)) CHECK(psi_tau(pi).eval<BigRational>(1) == BigRational(groundstate(n)[pi]));
}

TEST_CASE("psi as a polynomial in t") {
  CHECK(psi_poly(W("()()")) == PolyTauT({T({0, 1}), T({0, 1})}));
  CHECK(psi_poly(Matching::nested(3)) == PolyTauT(PolyTau(1)));
  PolyTauT p = psi_poly(W("()()()"));
  CHECK(p.degree() == 3);
  CHECK(eval_tau(p, 1).lead() == BigRational(1, 3));
  for (int k = 0; k <= 3; ++k) {
    GroundState g = groundstate(3 + k);
    CHECK(eval_tau(p, 1).eval<BigRational>(k) == BigRational(g[nest(W("()()()"), k)]));
  }
  for (const auto& pi : all_matchings(4)) {
    CHECK(psi_poly(pi) == psi_poly(pi.conjugate()));
    for (int l = 1; l <= 2; ++l) CHECK(psi_poly(nest(pi, l)) == shift_t(psi_poly(pi), l));
  }
}

TEST_CASE("g values") {
  CHECK(g_poly(W("(())")) == PolyTau(1));
  CHECK(g_poly(W("()()")) == T({0, -1}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : all_matchings(n)) {
      CHECK(g_poly(nest(pi, 1)) == g_poly(pi));
      CHECK(g_poly(pi).reflect() == (pi.d() % 2 ? -g_poly(pi) : g_poly(pi)));
    }
}

TEST_CASE("polynomial factorization") {
  FactorReport r = factor_check(W("()()"), 1);
  CHECK(r.ok);
  CHECK(r.m == 1);
  CHECK(is_zero(r.lhs));
  FactorReport s = factor_check(W("(())"), 1);
  CHECK(s.ok);
  CHECK(s.lhs == PolyTau(1));
  for (int n = 2; n <= 5; ++n)
    for (const auto& pi : all_matchings(n))
      for (int p = 1; p < n; ++p) CHECK(factor_check(pi, p).ok);
}

TEST_CASE("multivariate values at q^eps") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& eps : all_matchings(n)) {
      // Psi at q^eps needs limits, so assemble it from limit_Phi
      const auto& ms = all_matchings(n);
      const auto& ciq = c_inverse_q(n);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        LaurentScalar v;
        for (std::size_t j = 0; j < ms.size(); ++j)
          if (!is_zero(ciq[i * ms.size() + j])) v += LaurentScalar(ciq[i * ms.size() + j]) * limit_Phi(ms[j], 0, q_eps_point(eps));
        PolyTau expect = ms[i] == eps ? PolyTau::monomial(BigRational(1), eps.d()) : PolyTau();
        CHECK(laurent_to_tau(v) == expect);
      }
    }
}

TEST_CASE("multivariate factorization and vanishing at sample points") {
  for (int n = 2; n <= 3; ++n)
    for (int p = 1; p < n; ++p) {
      PointSpec z = sample_point(n, p);
      for (const auto& pi : all_matchings(n)) {
        LaurentScalar lhs = psi_neg_multi(pi, p, z);
        if (auto parts = decompose(pi, p)) {
          CHECK(lhs == g_multi(parts->first, outer_args(z, p)) * psi_multi(parts->second, inner_args(z, p)));
        } else {
          CHECK(is_zero(lhs));
        }
      }
    }
}
