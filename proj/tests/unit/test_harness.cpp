#include <doctest.h>

#include "fplpoly/harness.hpp"
#include "fplpoly/json_io.hpp"

using namespace fplpoly;

TEST_CASE("polynomial JSON encoding") {
  PolyTauT p({PolyTau({BigRational(1, 6), BigRational(0), BigRational(-2, 3)}), PolyTau(1)});
  Json j = to_json(p);
  CHECK(j.dump() == R"({"var":"t","coeffs":[{"var":"tau","coeffs":["1/6","0","-2/3"]},{"var":"tau","coeffs":["1"]}]})");
  CHECK(poly_tau_t_from_json(j) == p);
  CHECK(to_json(PolyTau()).dump() == R"({"var":"tau","coeffs":[]})");
  CHECK_THROWS(poly_tau_from_json(Json::parse(R"({"coeffs":[1]})")));
}

TEST_CASE("tables") {
  CHECK(emit_table("g", 2, "json") == "{\"(())\":\"1\",\"()()\":\"-1\"}\n");
  CHECK(emit_table("refined-asm", 3, "csv") == "2,3,2\n");
  CHECK(emit_table("psi", 3, "csv") == "((())),1\n(()()),2\n(())(),1\n()(()),1\n()()(),2\n");
  CHECK(emit_table("counts", 3, "csv") == emit_table("psi", 3, "csv"));
  CHECK(emit_table("c-matrix", 2, "csv") == "(()),(()),1\n()(),()(),1\n");
  CHECK_THROWS_AS(emit_table("psi", 3, "xml"), UsageError);
  CHECK_THROWS_AS(emit_table("nope", 3, "csv"), UsageError);
  CHECK_THROWS_AS(emit_table("counts", 7, "csv"), UsageError);
}

TEST_CASE("suite driver") {
  SuiteReport r = run_suite("rs", 4, 0);
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::Fail) == 0);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  CHECK_THROWS_AS(run_suite("rs", 7, 0), UsageError);
  CHECK_THROWS_AS(run_suite("bogus", 3, 0), UsageError);
  CHECK_THROWS_AS(run_suite("wheel", 5, 0), UsageError);
  CHECK(suite_cap("all") == 15);
}

TEST_CASE("reports are reproducible for a fixed seed") {
  SuiteReport a = run_suite("factorization", 3, 17), b = run_suite("factorization", 3, 17);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.passed());
  SuiteReport w = run_suite("wheel", 3, 5);
  CHECK(w.passed());
  CHECK(to_text(w) == to_text(run_suite("wheel", 3, 5)));
  CHECK(to_text(w) != to_text(run_suite("wheel", 3, 6)));
}

TEST_CASE("point sampler") {
  PointSampler s(1);
  PointSpec z = s.point(8);
  CHECK(z.size() == 8);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const BigRational x = z[i].coeff(0);
    CHECK(sgn(x) != 0);
    CHECK(abs(x.get_num()) <= 13);
    CHECK(x.get_den() <= 13);
    for (std::size_t j = 0; j < i; ++j) CHECK(z[i] != z[j]);
  }
}
