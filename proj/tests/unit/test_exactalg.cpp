#include <doctest.h>

#include <random>

#include "fplpoly/laurent.hpp"
#include "fplpoly/multipoly.hpp"
#include "fplpoly/poly.hpp"

using namespace fplpoly;

namespace {
PolyQ P(std::vector<int> c) {
  std::vector<BigRational> r(c.begin(), c.end());
  return PolyQ(std::move(r));
}
PolyQ random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4), co(-5, 5);
  std::vector<BigRational> c;
  for (int k = deg(rng); k >= 0; --k) c.emplace_back(co(rng), 1 + (co(rng) + 5) % 3);
  for (auto& x : c) x.canonicalize();
  return PolyQ(std::move(c));
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-2/6") == BigRational(-1, 3));
  CHECK(to_string(BigRational(4) / 6) == "2/3");
  CHECK(to_string(BigRational(-3)) == "-3");
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-2, 3) == -4);
}

TEST_CASE("binomial polynomials") {
  CHECK(binomial_poly(0) == PolyQ(1));
  CHECK(binomial_poly(1) == P({0, 1}));
  CHECK(binomial_poly(2) == PolyQ({BigRational(0), BigRational(-1, 2), BigRational(1, 2)}));
  for (int k = 0; k <= 5; ++k)
    for (int p = k; p <= 9; ++p) CHECK(binomial_poly(k).eval<BigRational>(p) == BigRational(binomial(p, k)));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    PolyQ a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PolyQ());
    if (!is_zero(b)) {
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK((is_zero(r) || r.degree() < b.degree()));
      CHECK(exact_div(a * b, b) == a);
    }
  }
  CHECK_THROWS(exact_div(P({1, 0, 1}), P({1, 1})));
}

TEST_CASE("shift and reflect") {
  PolyQ p = P({1, 2, 3});
  CHECK(p.shift(1) == P({6, 8, 3}));
  CHECK(p.reflect() == P({1, -2, 3}));
  CHECK(p.derivative() == P({2, 6}));
}

TEST_CASE("gcd and square-free part") {
  PolyQ a = P({1, 1}) * P({1, 1}) * P({1, 1, 1});
  CHECK(gcd(a, a.derivative()) == P({1, 1}));
  CHECK(squarefree_part(a) == P({1, 1}) * P({1, 1, 1}));
}

TEST_CASE("Sturm root counting") {
  CHECK(count_real_roots(P({1, 1})) == 1);
  CHECK(count_real_roots(P({1, 0, 1})) == 0);
  CHECK(count_real_roots(P({1, 1}) * P({1, 1}) * P({1, 1, 1})) == 1);
  PolyQ cubic = P({-1, 1}) * P({-2, 1}) * P({3, 1});
  CHECK(count_real_roots(cubic) == 3);
  CHECK(count_real_roots(cubic, BigRational(0), std::nullopt) == 2);
  CHECK(count_real_roots(cubic, BigRational(1), BigRational(2)) == 1);
  CHECK(count_real_roots(PolyQ(5)) == 0);
  CHECK_THROWS(count_real_roots(PolyQ()));
}

TEST_CASE("q-integers and the tau conversion") {
  CHECK(qint(1) == LaurentPoly(1));
  CHECK(qint(2) == LaurentPoly::q_power(1) + LaurentPoly::q_power(-1));
  CHECK(qint(3) == LaurentPoly::q_power(2) + LaurentPoly(1) + LaurentPoly::q_power(-2));
  CHECK(laurent_to_tau(qint(2)) == PolyTau({BigRational(0), BigRational(-1)}));
  CHECK(laurent_to_tau(LaurentPoly(1)) == PolyTau(1));
  CHECK(laurent_to_tau(qint(3)) == PolyTau({BigRational(-1), BigRational(0), BigRational(1)}));
  for (int s = 1; s <= 5; ++s)
    for (int r = 1; r <= 5; ++r) {
      CHECK(laurent_to_tau(qint(s) * qint(r)) == laurent_to_tau(qint(s)) * laurent_to_tau(qint(r)));
      CHECK(tau_to_laurent(laurent_to_tau(qint(s) * qint(r))) == qint(s) * qint(r));
    }
  CHECK_THROWS(laurent_to_tau(LaurentPoly::q_power(1)));
  CHECK(qfact(3) == qint(3) * qint(2));
}

TEST_CASE("rational functions in q") {
  LaurentScalar q = LaurentScalar::q();
  LaurentScalar x = (q * q - LaurentScalar(1)) / (q - LaurentScalar(1));
  CHECK(x == q + LaurentScalar(1));
  CHECK(x.is_laurent_poly());
  LaurentScalar y = LaurentScalar(1) / (q + LaurentScalar(2));
  CHECK_FALSE(y.is_laurent_poly());
  CHECK_THROWS(y.to_laurent_poly());
  CHECK(y * (q + LaurentScalar(2)) == LaurentScalar(1));
  CHECK(y.pow(3) * y.pow(-3) == LaurentScalar(1));
  CHECK(LaurentScalar(xi()) == q - LaurentScalar(1) / q);
  CHECK_THROWS(LaurentScalar(1) / LaurentScalar());
}

TEST_CASE("capped multiplication equals truncated full multiplication") {
  using MP = MultiPoly<BigRational>;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
  for (int it = 0; it < 20; ++it) {
    MP a(3), b(3);
    for (int k = 0; k < 4; ++k) {
      a.add_term({e(rng), e(rng), e(rng)}, BigRational(c(rng)));
      b.add_term({e(rng), e(rng), e(rng)}, BigRational(c(rng)));
    }
    std::vector<int> caps{2, 3, 1};
    CHECK(a.with_caps(caps) * b == (a * b).with_caps(caps));
  }
}
