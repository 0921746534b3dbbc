// Command-line front end: verification suites, single-object queries and tables.
#include <CLI11.hpp>
#include <iostream>

#include "fplpoly/basis.hpp"
#include "fplpoly/engine.hpp"
#include "fplpoly/fpl.hpp"
#include "fplpoly/harness.hpp"
#include "fplpoly/json_io.hpp"
#include "fplpoly/loopmodel.hpp"

using namespace fplpoly;

namespace {

void require_range(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw UsageError(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

Matching parse_matching(const std::string& text) {
  try {
    return Matching::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse matching: ") + e.what());
  }
}

BigRational parse_value(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully packed loops, O(1) loop groundstates and their polynomial deformations"};
  app.require_subcommand(1);

  std::string suite = "all";
  int n_max = 4;
  std::uint64_t seed = 0;
  bool as_json = false, timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", n_max, "Largest size to check");
  verify->add_option("--seed", seed, "Seed for random evaluation points");
  verify->add_flag("--json", as_json, "Emit a JSON report");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  std::string pi_text, tau_text, t_text;
  bool poly = false;
  auto* psi = app.add_subcommand("psi", "psi_pi(tau) or psi_pi(tau, t)");
  psi->add_option("--pi", pi_text, "Matching as a parenthesis word or sequence")->required();
  auto* psi_poly_flag = psi->add_flag("--poly", poly, "Print psi_pi(tau, t) as a bivariate polynomial");
  psi->add_option("--tau", tau_text, "Evaluate at this tau (default 1)")->excludes(psi_poly_flag);
  psi->add_option("--t", t_text, "Evaluate at this t (default 0)")->excludes(psi_poly_flag);

  auto* g = app.add_subcommand("g", "g_pi at tau = 1, or g_pi(tau)");
  g->add_option("--pi", pi_text, "Matching")->required();
  g->add_flag("--poly", poly, "Print g_pi(tau) as a polynomial");

  int n = 0;
  auto* gs = app.add_subcommand("groundstate", "O(1) loop model groundstate");
  gs->add_option("--n", n, "Number of arches")->required();
  gs->add_flag("--json", as_json, "Emit JSON");

  bool by_matching = false;
  auto* fpl = app.add_subcommand("fpl", "Fully packed loop enumeration");
  fpl->require_subcommand(1);
  auto* fpl_count = fpl->add_subcommand("count", "Count FPLs of size n");
  fpl_count->add_option("--n", n, "Grid size")->required();
  fpl_count->add_flag("--by-matching", by_matching, "Break the count down by link pattern");
  fpl_count->add_flag("--json", as_json, "Emit JSON");

  auto* asmc = app.add_subcommand("asm", "Alternating sign matrices");
  asmc->require_subcommand(1);
  auto* refine = asmc->add_subcommand("refine", "Refined counts by the position of the 1 in the first row");
  refine->add_option("--n", n, "Size")->required();
  refine->add_flag("--json", as_json, "Emit JSON");

  bool inverse = false;
  auto* dump = app.add_subcommand("dump-c", "Change-of-basis matrix C (or its inverse) as JSON");
  dump->add_option("--n", n, "Size")->required();
  dump->add_flag("--inverse", inverse, "Dump the inverse matrix");

  std::string kind, format = "json";
  auto* table = app.add_subcommand("table", "Tables of values");
  table->add_option("--kind", kind, "psi, g, counts, refined-asm or c-matrix")->required();
  table->add_option("--n", n, "Size")->required();
  table->add_option("--format", format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      SuiteReport r = run_suite(suite, n_max, seed);
      if (as_json) std::cout << to_json(r, timing).dump(2) << '\n';
      else std::cout << to_text(r, timing);
      return r.passed() ? 0 : 1;
    }
    if (*psi) {
      Matching m = parse_matching(pi_text);
      require_range("matching size", m.size(), 1, kPolyCap);
      if (poly) {
        std::cout << to_json(psi_poly(m)).dump() << '\n';
      } else if (!tau_text.empty() || !t_text.empty()) {
        BigRational tau = tau_text.empty() ? BigRational(1) : parse_value(tau_text);
        BigRational t = t_text.empty() ? BigRational(0) : parse_value(t_text);
        std::cout << to_string(eval_t(psi_poly(m), t).eval<BigRational>(tau)) << '\n';
      } else {
        std::cout << to_json(psi_tau(m)).dump() << '\n';
      }
      return 0;
    }
    if (*g) {
      Matching m = parse_matching(pi_text);
      require_range("matching size", m.size(), 1, kPolyCap);
      if (poly) std::cout << to_json(g_poly(m)).dump() << '\n';
      else std::cout << to_string(g_poly(m).eval<BigRational>(1)) << '\n';
      return 0;
    }
    if (*gs) {
      require_range("--n", n, 1, kPolyCap);
      GroundState v = groundstate(n);
      const auto& ms = all_matchings(n);
      if (as_json) {
        Json j = Json::object();
        for (std::size_t i = 0; i < ms.size(); ++i) j[ms[i].word()] = v.psi[i].get_str();
        std::cout << j.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < ms.size(); ++i) std::cout << ms[i].word() << ' ' << v.psi[i] << '\n';
      }
      return 0;
    }
    if (*fpl_count) {
      require_range("--n", n, 1, kFplCap);
      if (!by_matching) {
        std::size_t c = count_fpl(n);
        if (as_json) std::cout << Json{{"n", n}, {"count", std::to_string(c)}}.dump() << '\n';
        else std::cout << c << '\n';
      } else {
        std::cout << emit_table("counts", n, as_json ? "json" : "csv");
      }
      return 0;
    }
    if (*refine) {
      require_range("--n", n, 1, kFplCap);
      std::cout << emit_table("refined-asm", n, as_json ? "json" : "csv");
      return 0;
    }
    if (*dump) {
      require_range("--n", n, 1, kPolyCap);
      std::cout << to_json(inverse ? c_inverse(n) : c_matrix(n)).dump() << '\n';
      return 0;
    }
    if (*table) {
      std::cout << emit_table(kind, n, format);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
