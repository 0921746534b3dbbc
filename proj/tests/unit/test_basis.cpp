#include <doctest.h>

#include <random>

#include "fplpoly/basis.hpp"
#include "fplpoly/contour.hpp"

using namespace fplpoly;

namespace {
Matching W(const char* w) { return Matching::from_word(w); }
}

TEST_CASE("diagonal and small entries") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : all_matchings(n)) CHECK(c_entry(a, a) == PolyTau(1));
  CHECK(is_zero(c_entry(Matching::from_sequence({1, 3}), Matching::from_sequence({1, 2}))));
  CHECK(c_matrix(1).at(0, 0) == PolyTau(1));
  CHECK(c_inverse(2).at(1, 0) == PolyTau());
  CHECK_THROWS(c_entry(W("()"), W("()()")));
}

TEST_CASE("entries vanish outside the order ideal") {
  for (const auto& a : all_matchings(4))
    for (const auto& pi : all_matchings(4))
      if (!leq(pi, a)) CHECK(is_zero(c_entry(a, pi)));
}

TEST_CASE("inverse and stability") {
  for (int n = 1; n <= 5; ++n) CHECK(is_identity_product(c_matrix(n), c_inverse(n)));
  for (const auto& a : all_matchings(3))
    for (const auto& pi : all_matchings(3)) CHECK(c_matrix(4).at(nest(a, 1), nest(pi, 1)) == c_matrix(3).at(a, pi));
}

TEST_CASE("random arch order gives the same entries") {
  std::mt19937_64 rng(3);
  for (const auto& a : all_matchings(5))
    for (const auto& pi : all_matchings(5)) CHECK(c_entry_random(a, pi, rng) == c_entry(a, pi));
}

TEST_CASE("residue oracle at q^eps for n = 3") {
  for (const auto& pi : all_matchings(3))
    for (const auto& a : all_matchings(3))
      CHECK(laurent_to_tau(limit_Phi(a, 0, q_eps_point(pi))) == PolyTau::monomial(BigRational(1), pi.d()) * c_entry(a, pi));
}

TEST_CASE("sequence reduction") {
  SeqExpansion e = reduce_sequence(GenSequence(W("(()())")));
  CHECK(e.size() == 1);
  CHECK(e.begin()->second == PolyTau(1));
  CHECK(reduce_sequence(GenSequence({1, 1})).empty());
  CHECK_THROWS(reduce_sequence(GenSequence({1, 4})));
  PointSpec z;
  for (int i = 1; i <= 6; ++i) z.emplace_back(BigRational(2 * i + 1) / (i + 3));
  for (auto b : {std::vector<int>{1, 2, 2}, {1, 3, 3}, {1, 1, 3}, {1, 2, 5}}) {
    GenSequence s(b);
    LaurentScalar rhs;
    for (const auto& [f, r] : reduce_sequence(s)) rhs += LaurentScalar(tau_to_laurent(r)) * eval_Phi(f, z);
    CHECK(eval_Phi(s, z) == rhs);
  }
}

TEST_CASE("general entries reduce to ordinary ones on matchings") {
  for (const auto& a : all_matchings(3))
    for (const auto& al : all_matchings(3)) CHECK(c_entry_general(a, al) == c_entry(a, al));
}
