#include <doctest.h>

#include "fplpoly/matching.hpp"

using namespace fplpoly;

namespace {
Matching W(const char* w) { return Matching::from_word(w); }
}

TEST_CASE("word and sequence conversions") {
  CHECK(W("()(())").seq() == std::vector<int>{1, 3, 4});
  CHECK(W("()").arches() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(Matching::from_sequence({1, 2, 3, 4}).word() == "(((())))");
  CHECK(Matching::nested(3) == W("((()))"));
  CHECK(Matching::chain(3) == W("()()()"));
  CHECK(Matching::parse("{1, 3, 4}") == W("()(())"));
  CHECK(Matching::parse("1,3,4") == W("()(())"));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS(Matching::from_word("(()"));
  CHECK_THROWS(Matching::from_word(")("));
  CHECK_THROWS(Matching::from_sequence({1, 4}));
  CHECK_THROWS(Matching::from_sequence({2, 3}));
  CHECK_THROWS(Matching::from_arches({{1, 3}, {2, 4}}));
  CHECK_THROWS(Matching::parse("abc"));
}

TEST_CASE("all representations round-trip") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& m : all_matchings(n)) {
      CHECK(Matching::from_word(m.word()) == m);
      CHECK(Matching::from_arches(m.arches()) == m);
      CHECK(Matching::from_dyck(m.dyck()) == m);
      CHECK(Matching::from_young(n, m.young()) == m);
      CHECK(Matching::from_sequence(m.seq()) == m);
      CHECK(m.d() == m.young().boxes());
      CHECK(m.conjugate().d() == m.d());
      CHECK(m.conjugate().young() == m.young().transpose());
    }
}

TEST_CASE("figure of a matching, its conjugate and its rotation") {
  Matching pi = Matching::from_arches({{1, 2}, {3, 10}, {4, 5}, {6, 9}, {7, 8}});
  CHECK(pi.conjugate() == Matching::from_arches({{9, 10}, {1, 8}, {6, 7}, {2, 5}, {3, 4}}));
  CHECK(pi.rotate() == Matching::from_arches({{1, 10}, {2, 9}, {3, 4}, {5, 8}, {6, 7}}));
}

TEST_CASE("conjugation is an involution and rotation has order 2n") {
  for (const auto& m : all_matchings(4)) CHECK(m.conjugate().conjugate() == m);
  for (int n = 1; n <= 5; ++n)
    for (const auto& m : all_matchings(n)) {
      Matching r = m;
      for (int k = 0; k < 2 * n; ++k) r = r.rotate();
      CHECK(r == m);
    }
}

TEST_CASE("box counts, hooks and the partial order") {
  CHECK(Matching::nested(4).d() == 0);
  CHECK(hook_product(YoungDiagram{}) == 1);
  CHECK(W("()(())").young().rows == std::vector<int>{1, 1});
  CHECK(hook_product(W("()(())").young()) == 2);
  CHECK(hook_product(W("()()()").young()) == 3);
  CHECK(leq(Matching::from_sequence({1, 2, 3}), Matching::from_sequence({1, 3, 5})));
  CHECK_FALSE(leq(Matching::from_sequence({1, 3, 5}), Matching::from_sequence({1, 2, 3})));
}

TEST_CASE("nesting") {
  CHECK(nest(Matching::from_sequence({1, 3}), 1) == Matching::from_sequence({1, 2, 4}));
  for (const auto& m : all_matchings(4)) {
    CHECK(nest(m, 0) == m);
    CHECK(nest(m, 2).size() == 6);
    CHECK(nest(m, 2).d() == m.d());
  }
  // (()^2)_4 ()^3 on 18 points
  Matching inner = W("()()");
  Matching shell = nest(inner, 4);
  CHECK(Matching::from_word(shell.word() + "()()()").word() == "((((()()))))()()()");
}

TEST_CASE("m_p counts") {
  Matching m = Matching::from_arches({{1, 16}, {2, 9}, {3, 6}, {4, 5}, {7, 8}, {10, 15}, {11, 12}, {13, 14}});
  std::vector<int> got;
  for (int p = 1; p <= 7; ++p) got.push_back(m_p(m, p));
  CHECK(got == std::vector<int>{0, 1, 2, 2, 2, 1, 1});
  CHECK(m_p(W("()()"), 1) == 1);
  for (const auto& a : all_matchings(2))
    for (int q = 1; q <= 3; ++q)
      for (int p = 1; p <= q; ++p) CHECK(m_p(nest(a, q), p) == 0);
  CHECK_THROWS(m_p(W("()()"), 2));
}

TEST_CASE("decompose and compose") {
  CHECK_FALSE(decompose(W("()()"), 1).has_value());
  auto d = decompose(nest(W("()()"), 2), 2);
  REQUIRE(d.has_value());
  CHECK(d->first == Matching::nested(2));
  CHECK(d->second == W("()()"));
  for (int n = 2; n <= 5; ++n)
    for (const auto& m : all_matchings(n))
      for (int p = 1; p < n; ++p) {
        auto parts = decompose(m, p);
        CHECK(parts.has_value() == (m_p(m, p) == 0));
        if (parts) {
          CHECK(parts->first.size() == p);
          CHECK(compose(parts->first, parts->second) == m);
        }
      }
}

TEST_CASE("split sequences") {
  auto s = split_sequence(GenSequence({1, 3, 5, 6, 7, 10}), 4);
  CHECK(s.outer == GenSequence({1, 3, 4, 6}));
  CHECK(s.inner == GenSequence({1, 2, 3}));
  for (const auto& c : all_matchings(2)) {
    auto t = split_sequence(nest(c, 3), 3);
    CHECK(t.outer == GenSequence({1, 2, 3}));
    CHECK(t.inner == GenSequence(c));
  }
  for (const auto& a : all_matchings(4)) {
    auto t = split_sequence(a, 2);
    CHECK(join_sequence(t.outer, t.inner, 2, 4) == GenSequence(a));
    if (auto parts = decompose(a, 2)) {
      CHECK(t.outer == GenSequence(parts->first));
      CHECK(t.inner == GenSequence(parts->second));
    }
  }
}

TEST_CASE("matching enumeration") {
  CHECK(all_matchings(1).size() == 1);
  CHECK(all_matchings(3).size() == 5);
  CHECK(all_matchings(6).size() == 132);
  for (int n = 1; n <= 7; ++n) {
    CHECK(BigInt(all_matchings(n).size()) == catalan(n));
    const auto& ms = all_matchings(n);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(index_of(ms[i]) == i);
  }
}
