#include "fplpoly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "fplpoly/basis.hpp"
#include "fplpoly/engine.hpp"
#include "fplpoly/fpl.hpp"
#include "fplpoly/json_io.hpp"
#include "fplpoly/loopmodel.hpp"
#include "fplpoly/multipoly.hpp"

namespace fplpoly {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skip";
  }
}

bool SuiteReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t SuiteReport::count(CheckStatus s) const {
  return std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; });
}

BigRational PointSampler::draw() {
  std::uniform_int_distribution<int> num(-13, 12), den(1, 13);
  int a = num(rng_);
  if (a >= 0) ++a;  // skip zero
  BigRational r(a, den(rng_));
  r.canonicalize();
  return r;
}

PointSpec PointSampler::point(int count) {
  std::set<BigRational> seen;
  PointSpec z;
  while (static_cast<int>(z.size()) < count) {
    BigRational r = draw();
    if (seen.insert(r).second) z.emplace_back(r);
  }
  return z;
}

int worker_count() {
  if (const char* env = std::getenv("FPLPOLY_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

Outcome ok() { return {}; }
Outcome bad(std::string w) { return {CheckStatus::Fail, std::move(w)}; }

using Task = std::pair<std::string, std::function<Outcome()>>;

struct Plan {
  std::string suite;
  std::vector<Task> tasks;
  void add(const std::string& name, std::function<Outcome()> fn) { tasks.emplace_back(suite + "/" + name, std::move(fn)); }
};

std::string nn(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n=%02d", n);
  return buf;
}

std::string str(const BigInt& x) { return x.get_str(); }

PolyTau tau_power(int d) { return PolyTau::monomial(BigRational(1), d); }

// Value of Phi_{a,-p} at z, falling back to the interpolated limit when residues collide.
LaurentScalar phi_value(const GenSequence& a, int p, const PointSpec& z) {
  try {
    return eval_Phi_neg(a, p, z);
  } catch (const DegeneratePoint&) {
    return limit_Phi(a, p, z);
  }
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

// ---- rs ---------------------------------------------------------------------

void plan_rs(Plan& plan, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    plan.add(nn(n) + "/fpl-by-matching-equals-groundstate", [n] {
      auto counts = count_by_matching(n);
      auto gs = groundstate(n);
      const auto& ms = all_matchings(n);
      for (std::size_t i = 0; i < ms.size(); ++i)
        if (counts[i] != gs.psi[i]) return bad(ms[i].word() + ": A_pi=" + str(counts[i]) + " psi=" + str(gs.psi[i]));
      return ok();
    });
    plan.add(nn(n) + "/fpl-count-equals-product-formula", [n] {
      BigInt c = count_fpl(n);
      return c == a_n(n) ? ok() : bad("enumerated " + str(c) + ", formula " + str(a_n(n)));
    });
    plan.add(nn(n) + "/groundstate-sum-equals-product-formula", [n] {
      auto gs = groundstate(n);
      BigInt s = std::accumulate(gs.psi.begin(), gs.psi.end(), BigInt(0));
      return s == a_n(n) ? ok() : bad("sum " + str(s) + ", formula " + str(a_n(n)));
    });
    plan.add(nn(n) + "/rotation-and-conjugation-invariance", [n] {
      auto counts = count_by_matching(n);
      const auto& ms = all_matchings(n);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& r = counts[index_of(ms[i].rotate())];
        const auto& c = counts[index_of(ms[i].conjugate())];
        if (r != counts[i] || c != counts[i])
          return bad(ms[i].word() + ": A=" + str(counts[i]) + " rotated=" + str(r) + " conjugate=" + str(c));
      }
      return ok();
    });
  }
  if (n_max >= 3) {
    plan.add(nn(3) + "/groundstate-table", [] {
      const std::vector<std::pair<const char*, int>> expected = {
          {"((()))", 1}, {"(())()", 1}, {"()(())", 1}, {"(()())", 2}, {"()()()", 2}};
      auto gs = groundstate(3);
      for (const auto& [w, v] : expected)
        if (gs[Matching::from_word(w)] != v) return bad(std::string(w) + " = " + str(gs[Matching::from_word(w)]));
      return ok();
    });
  }
}

// ---- cmatrix ----------------------------------------------------------------

Outcome check_shape(const CMatrix& c, const char* label) {
  const auto& ms = c.basis();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const PolyTau& e = c.at(i, j);
      const Matching &a = ms[i], &pi = ms[j];
      if (a == pi) {
        if (e != PolyTau(1)) return bad(std::string(label) + " diagonal at " + a.word() + " is " + to_string(e));
      } else if (!leq(pi, a) && !is_zero(e)) {
        return bad(std::string(label) + "(" + a.word() + "," + pi.word() + ") = " + to_string(e) + " although pi is not below a");
      }
    }
  return ok();
}

Outcome check_degree_parity(const CMatrix& c, const char* label, bool degree) {
  const auto& ms = c.basis();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (i == j) continue;
      const PolyTau& e = c.at(i, j);
      if (is_zero(e)) continue;
      const int dd = ms[i].d() - ms[j].d();
      std::string where = std::string(label) + "(" + ms[i].word() + "," + ms[j].word() + ") = " + to_string(e);
      if (degree) {
        if (e.degree() > dd - 2) return bad(where + " exceeds degree " + std::to_string(dd - 2));
      } else {
        PolyTau expect = dd % 2 == 0 ? e : -e;
        if (e.reflect() != expect) return bad(where + " has the wrong parity");
      }
    }
  return ok();
}

// Weakly increasing sequences of length k with 1 <= b_i <= 2i-1.
std::vector<GenSequence> bounded_sequences(int k) {
  std::vector<GenSequence> out;
  std::vector<int> b(k);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == k) {
      out.emplace_back(b);
      return;
    }
    for (int v = lo; v <= 2 * i + 1; ++v) {
      b[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 1);
  return out;
}

void plan_cmatrix(Plan& plan, int n_max, PointSampler& sampler) {
  for (int n = 1; n <= n_max; ++n) {
    plan.add(nn(n) + "/unitriangular", [n] {
      Outcome o = check_shape(c_matrix(n), "C");
      return o.status == CheckStatus::Pass ? check_shape(c_inverse(n), "Cinv") : o;
    });
    plan.add(nn(n) + "/degree-bound", [n] {
      Outcome o = check_degree_parity(c_matrix(n), "C", true);
      return o.status == CheckStatus::Pass ? check_degree_parity(c_inverse(n), "Cinv", true) : o;
    });
    plan.add(nn(n) + "/parity", [n] {
      Outcome o = check_degree_parity(c_matrix(n), "C", false);
      return o.status == CheckStatus::Pass ? check_degree_parity(c_inverse(n), "Cinv", false) : o;
    });
    plan.add(nn(n) + "/inverse-product", [n] {
      return is_identity_product(c_matrix(n), c_inverse(n)) ? ok() : bad("C * Cinv is not the identity");
    });
    if (n >= 2) {
      plan.add(nn(n) + "/nesting-stability", [n] {
        const auto& small = all_matchings(n - 1);
        const CMatrix& big = c_matrix(n);
        const CMatrix& base = c_matrix(n - 1);
        for (const auto& a : small)
          for (const auto& pi : small)
            if (big.at(nest(a, 1), nest(pi, 1)) != base.at(a, pi))
              return bad("(" + a.word() + "," + pi.word() + "): " + to_string(base.at(a, pi)) + " vs nested " +
                         to_string(big.at(nest(a, 1), nest(pi, 1))));
        return ok();
      });
    }
    const std::uint64_t order_seed = sampler.rng()();
    plan.add(nn(n) + "/arch-order-independence", [n, order_seed] {
      std::mt19937_64 rng(order_seed);
      const CMatrix& c = c_matrix(n);
      for (const auto& a : all_matchings(n))
        for (const auto& pi : all_matchings(n)) {
          PolyTau r = c_entry_random(a, pi, rng);
          if (r != c.at(a, pi))
            return bad("(" + a.word() + "," + pi.word() + "): leftmost " + to_string(c.at(a, pi)) + ", random " + to_string(r));
        }
      return ok();
    });
    if (n <= 5) {
      plan.add(nn(n) + "/expansion-identity", [n] {
        const auto& ms = all_matchings(n);
        const CMatrix& c = c_matrix(n);
        for (const auto& a : ms) {
          PolyTau s;
          for (const auto& pi : ms) s += c.at(a, pi) * psi_tau(pi);
          if (s != phi_tau(a)) return bad(a.word() + ": phi = " + to_string(phi_tau(a)) + ", sum C psi = " + to_string(s));
        }
        return ok();
      });
    }
    if (n <= kMultiCap) {
      plan.add(nn(n) + "/residue-oracle", [n] {
        const auto& ms = all_matchings(n);
        for (const auto& pi : ms) {
          PointSpec z = q_eps_point(pi);
          for (const auto& a : ms) {
            PolyTau v = laurent_to_tau(phi_value(a, 0, z));
            PolyTau expect = tau_power(pi.d()) * c_entry(a, pi);
            if (v != expect)
              return bad("(" + a.word() + "," + pi.word() + "): residues give " + to_string(v) + ", recursion " + to_string(expect));
          }
        }
        return ok();
      });
    }
    if (n >= 2 && n <= kMultiCap) {
      plan.add(nn(n) + "/split-factorization", [n] {
        for (const auto& a : all_matchings(n))
          for (int p = 1; p < n; ++p) {
            auto sp = split_sequence(a, p);
            for (const auto& al : all_matchings(p))
              for (const auto& be : all_matchings(n - p)) {
                PolyTau lhs = c_entry(a, compose(al, be));
                PolyTau rhs = sp.inner.size() < be.size()
                                  ? PolyTau()
                                  : c_entry_general(sp.outer, al) * c_entry_inner(sp.inner, be);
                if (lhs != rhs)
                  return bad(a.word() + " p=" + std::to_string(p) + " alpha=" + al.word() + " beta=" + be.word() + ": " +
                             to_string(lhs) + " vs " + to_string(rhs));
              }
          }
        return ok();
      });
    }
  }
  if (n_max >= 3) {
    std::vector<PointSpec> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(sampler.point(6));
    plan.add(nn(3) + "/reduce-sequence-oracle", [pts] {
      for (const auto& b : bounded_sequences(3)) {
        if (b.is_matching()) continue;
        SeqExpansion ex = reduce_sequence(b);
        for (const auto& z : pts) {
          LaurentScalar lhs = eval_Phi(b, z), rhs;
          for (const auto& [f, r] : ex) rhs += LaurentScalar(tau_to_laurent(r)) * eval_Phi(f, z);
          if (lhs != rhs) return bad(b.to_string() + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
      }
      return ok();
    });
  }
}

// ---- poly -------------------------------------------------------------------

void plan_poly(Plan& plan, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    plan.add(nn(n) + "/t-degree-and-leading-coefficient", [n] {
      for (const auto& pi : all_matchings(n)) {
        const PolyTauT& P = psi_poly(pi);
        if (P.degree() != pi.d()) return bad(pi.word() + ": t-degree " + std::to_string(P.degree()));
        BigRational lead = eval_tau(P, 1).lead();
        BigRational expect(BigInt(1), hook_product(pi.young()));
        expect.canonicalize();
        if (lead != expect) return bad(pi.word() + ": leading coefficient " + to_string(lead) + ", 1/H = " + to_string(expect));
      }
      return ok();
    });
    plan.add(nn(n) + "/conjugation-symmetry", [n] {
      for (const auto& pi : all_matchings(n))
        if (psi_poly(pi) != psi_poly(pi.conjugate())) return bad(pi.word() + " differs from " + pi.conjugate().word());
      return ok();
    });
    plan.add(nn(n) + "/groundstate-at-tau-one", [n] {
      auto gs = groundstate(n);
      for (const auto& pi : all_matchings(n)) {
        BigRational v = psi_tau(pi).eval<BigRational>(1);
        if (v != BigRational(gs[pi])) return bad(pi.word() + ": psi(1) = " + to_string(v) + ", groundstate " + str(gs[pi]));
      }
      return ok();
    });
    plan.add(nn(n) + "/g-parity", [n] {
      for (const auto& pi : all_matchings(n)) {
        PolyTau g = g_poly(pi);
        if (g.reflect() != (pi.d() % 2 ? -g : g)) return bad(pi.word() + ": g = " + to_string(g));
      }
      return ok();
    });
    const int lmax = std::min(3, n_max - n);
    if (lmax >= 1) {
      plan.add(nn(n) + "/nesting-shift", [n, lmax] {
        for (const auto& pi : all_matchings(n))
          for (int l = 1; l <= lmax; ++l)
            if (psi_poly(nest(pi, l)) != shift_t(psi_poly(pi), l))
              return bad(pi.word() + " l=" + std::to_string(l) + ": " + to_string(psi_poly(nest(pi, l))));
        return ok();
      });
    }
    plan.add(nn(n) + "/integer-t-specialization", [n, lmax] {
      for (const auto& pi : all_matchings(n))
        for (int p = 0; p <= std::max(lmax, 0); ++p) {
          PolyTau lhs = eval_t(psi_poly(pi), p), rhs = psi_tau(nest(pi, p));
          if (lhs != rhs) return bad(pi.word() + " p=" + std::to_string(p) + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
      return ok();
    });
    if (n <= kMultiCap) {
      plan.add(nn(n) + "/phi-nesting-stability", [n] {
        for (const auto& a : all_matchings(n)) {
          PolyTauT P = phi_tau_t(a);
          for (int p = 0; p <= 3; ++p)
            if (eval_t(P, p) != phi_tau(nest(a, p))) return bad(a.word() + " p=" + std::to_string(p));
          for (int p = 0; p <= n; ++p)
            if (eval_t(P, -p) != phi_at_neg(a, p))
              return bad(a.word() + " t=-" + std::to_string(p) + ": " + to_string(phi_at_neg(a, p)));
        }
        return ok();
      });
    }
  }
}

// ---- factorization ----------------------------------------------------------

void plan_factorization(Plan& plan, int n_max, PointSampler& sampler) {
  for (int n = 2; n <= n_max; ++n) {
    plan.add(nn(n) + "/polynomial-identity", [n] {
      for (const auto& pi : all_matchings(n))
        for (int p = 1; p < n; ++p) {
          FactorReport r = factor_check(pi, p);
          if (!r.ok) return bad(r.describe());
        }
      return ok();
    });
  }
  for (int n = 2; n <= std::min(n_max, kMultiCap); ++n)
    for (int p = 1; p < n; ++p)
      for (int k = 1; k <= 3; ++k) {
        PointSpec z = sampler.point(2 * n);
        plan.add(nn(n) + "/p=" + std::to_string(p) + "/point-" + std::to_string(k), [n, p, z] {
          auto lhs = psi_neg_multi_all(n, p, z);
          auto outer = psi_neg_multi_all(p, p, outer_args(z, p));
          auto inner = psi_neg_multi_all(n - p, 0, inner_args(z, p));
          const auto& ms = all_matchings(n);
          for (std::size_t i = 0; i < ms.size(); ++i) {
            LaurentScalar rhs;
            if (auto parts = decompose(ms[i], p)) rhs = outer[index_of(parts->first)] * inner[index_of(parts->second)];
            if (lhs[i] != rhs) return bad(ms[i].word() + ": " + to_string(lhs[i]) + " vs " + to_string(rhs));
          }
          return ok();
        });
        if (n == 3 && k == 1) {
          plan.add(nn(n) + "/p=" + std::to_string(p) + "/phi-expansion", [n, p, z] {
            auto outer = psi_neg_multi_all(p, p, outer_args(z, p));
            auto inner = psi_neg_multi_all(n - p, 0, inner_args(z, p));
            const CMatrix& c = c_matrix(n);
            for (const auto& a : all_matchings(n)) {
              LaurentScalar rhs;
              for (const auto& pi : all_matchings(n)) {
                auto parts = decompose(pi, p);
                if (!parts || is_zero(c.at(a, pi))) continue;
                rhs += LaurentScalar(tau_to_laurent(c.at(a, pi))) * outer[index_of(parts->first)] * inner[index_of(parts->second)];
              }
              LaurentScalar lhs = eval_Phi_neg(a, p, z);
              if (lhs != rhs) return bad(a.word() + ": " + to_string(lhs) + " vs " + to_string(rhs));
            }
            return ok();
          });
        }
      }
}

// ---- sumrules ---------------------------------------------------------------

void plan_sumrules(Plan& plan, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    plan.add(nn(n) + "/g-sum-equals-reflected-psi-sum", [n] {
      PolyTau sg, sp;
      for (const auto& pi : all_matchings(n)) sg += g_poly(pi), sp += psi_tau(pi);
      return sg == sp.reflect() ? ok() : bad("sum g = " + to_string(sg) + ", sum psi = " + to_string(sp));
    });
    plan.add(nn(n) + "/single-integral-sums", [n] {
      PolyTau sg, sp;
      for (const auto& pi : all_matchings(n)) sg += g_poly(pi), sp += psi_tau(pi);
      if (sum_g(n) != sg) return bad("sum_g " + to_string(sum_g(n)) + " vs " + to_string(sg));
      if (sum_psi(n) != sp) return bad("sum_psi " + to_string(sum_psi(n)) + " vs " + to_string(sp));
      return ok();
    });
    plan.add(nn(n) + "/signed-g-sum-equals-asm-count", [n] {
      BigRational s = 0;
      for (const auto& pi : all_matchings(n)) {
        BigRational g = g_poly(pi).eval<BigRational>(1);
        s += pi.d() % 2 ? -g : g;
      }
      return s == BigRational(a_n(n)) ? ok() : bad("sum = " + to_string(s) + ", A_n = " + str(a_n(n)));
    });
    plan.add(nn(n) + "/g-sum-equals-vsasm-square", [n] {
      BigRational s = 0;
      for (const auto& pi : all_matchings(n)) s += g_poly(pi).eval<BigRational>(1);
      BigInt v = a_v(n);
      BigInt expect = v * v;
      if ((n * (n - 1) / 2) % 2) expect = -expect;
      return s == BigRational(expect) ? ok() : bad("sum g = " + to_string(s) + ", expected " + str(expect));
    });
  }
}

// ---- roots ------------------------------------------------------------------

void plan_roots(Plan& plan, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    plan.add(nn(n) + "/divisibility-and-real-roots", [n] {
      for (const auto& pi : all_matchings(n)) {
        PolyQ P = eval_tau(psi_poly(pi), 1).scaled(BigRational(factorial(pi.d())));
        for (int p = 1; p < n; ++p) {
          const PolyQ lin({BigRational(p), BigRational(1)});
          for (int k = 0; k < m_p(pi, p); ++k) {
            auto [quo, rem] = divmod(P, lin);
            if (!is_zero(rem))
              return bad(pi.word() + ": (t+" + std::to_string(p) + ")^" + std::to_string(m_p(pi, p)) + " does not divide " +
                         to_string(eval_tau(psi_poly(pi), 1), "t"));
            P = quo;
          }
        }
        if (!has_integer_coeffs(P)) return bad(pi.word() + ": cofactor " + to_string(P, "t") + " is not integral");
        if (int r = count_real_roots(P); r != 0)
          return bad(pi.word() + ": cofactor " + to_string(P, "t") + " has " + std::to_string(r) + " real roots");
      }
      return ok();
    });
  }
}

// ---- wheel ------------------------------------------------------------------

PointSpec wheel_point(PointSampler& s, int N, int i, int j, int k) {
  PointSpec z = s.point(N);
  const BigRational r = z[i].coeff(0);
  z[j] = LaurentPoly::q_power(2, r);
  z[k] = LaurentPoly::q_power(4, r);
  return z;
}

std::vector<int> draw_triple(std::mt19937_64& rng, const std::vector<int>& pool) {
  std::vector<int> t = pool;
  std::shuffle(t.begin(), t.end(), rng);
  t.resize(3);
  std::sort(t.begin(), t.end());
  return t;
}

void plan_wheel(Plan& plan, int n_max, PointSampler& sampler) {
  for (int n = 2; n <= n_max; ++n) {
    const int N = 2 * n;
    PointSpec generic = sampler.point(N);
    plan.add(nn(n) + "/generic-point-nonvanishing", [n, generic] {
      for (const auto& a : all_matchings(n))
        if (is_zero(eval_Phi(a, generic))) return bad(a.word() + " vanishes at a generic point");
      return ok();
    });
    std::vector<int> all(N);
    std::iota(all.begin(), all.end(), 0);
    for (int k = 0; k <= 3; ++k) {
      // k = 0 is the first three points; the rest are random triples
      std::vector<int> t = k == 0 ? std::vector<int>{0, 1, 2} : draw_triple(sampler.rng(), all);
      PointSpec z = wheel_point(sampler, N, t[0], t[1], t[2]);
      std::string label = "z" + std::to_string(t[0] + 1) + "-z" + std::to_string(t[1] + 1) + "-z" + std::to_string(t[2] + 1);
      plan.add(nn(n) + "/phi/point-" + std::to_string(k) + "-" + label, [n, z] {
        for (const auto& a : all_matchings(n)) {
          LaurentScalar v = phi_value(a, 0, z);
          if (!is_zero(v)) return bad(a.word() + ": " + to_string(v));
        }
        return ok();
      });
    }
    for (int p = 1; n - p >= 2; ++p) {
      std::vector<int> inner;
      for (int i : inner_points(n, p)) inner.push_back(i - 1);
      for (int k = 1; k <= 3; ++k) {
        std::vector<int> t = draw_triple(sampler.rng(), inner);
        PointSpec z = wheel_point(sampler, N, t[0], t[1], t[2]);
        std::string label = "z" + std::to_string(t[0] + 1) + "-z" + std::to_string(t[1] + 1) + "-z" + std::to_string(t[2] + 1);
        plan.add(nn(n) + "/p=" + std::to_string(p) + "/inner-point-" + std::to_string(k) + "-" + label, [n, p, z] {
          for (const auto& a : all_matchings(n)) {
            LaurentScalar v = phi_value(a, p, z);
            if (!is_zero(v)) return bad(a.word() + ": " + to_string(v));
          }
          return ok();
        });
      }
    }
  }
}

// ---- antisym ----------------------------------------------------------------

void plan_antisym(Plan& plan, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    plan.add("k=" + std::to_string(k) + "/identity", [k] {
      using MP = MultiPoly<LaurentPoly>;
      MP f = MP::constant(k, LaurentPoly(1)), vdm = MP::constant(k, LaurentPoly(1));
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          f = f * (MP::variable(k, i).scaled(LaurentPoly::q_power(1)) - MP::variable(k, j).scaled(LaurentPoly::q_power(-1)));
          vdm = vdm * (MP::variable(k, i) - MP::variable(k, j));
        }
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      MP sum(k);
      do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
        MP g = f.permuted(perm);
        if (inv % 2) sum -= g;
        else sum += g;
      } while (std::next_permutation(perm.begin(), perm.end()));
      const LaurentPoly inv_fact(BigRational(BigInt(1), factorial(k)));
      MP lhs = sum.scaled(inv_fact);
      MP rhs = vdm.scaled(qfact(k) * inv_fact);
      return lhs == rhs ? ok() : bad("antisymmetrization differs from [k]!/k! times the Vandermonde");
    });
  }
}

// ---- asm --------------------------------------------------------------------

void plan_asm(Plan& plan, int n_max) {
  if (n_max >= 3) {
    plan.add(nn(3) + "/refined-counts", [] {
      auto r = refined_asm_counts(3);
      return r == std::vector<BigInt>{2, 3, 2} ? ok() : bad("got " + str(r[0]) + "," + str(r[1]) + "," + str(r[2]));
    });
  }
  for (int n = 1; n <= std::min(n_max, kFplCap); ++n) {
    plan.add(nn(n) + "/refined-enumeration-vs-constant-term-and-formula", [n] {
      auto r = refined_asm_counts(n);
      PolyQ x = a_n_x(n);
      for (int i = 1; i <= n; ++i) {
        if (r[i - 1] != r[n - i]) return bad("refined counts are not palindromic at i=" + std::to_string(i));
        if (x.coeff(i - 1) != BigRational(r[i - 1])) return bad("i=" + std::to_string(i) + ": constant term " + to_string(x.coeff(i - 1)) + ", enumeration " + str(r[i - 1]));
        if (a_n_i(n, i) != r[i - 1]) return bad("i=" + std::to_string(i) + ": formula " + str(a_n_i(n, i)) + ", enumeration " + str(r[i - 1]));
      }
      return ok();
    });
    plan.add(nn(n) + "/enumeration-count-and-symmetric-count", [n] {
      BigInt total = 0;
      enumerate_asm(n, [&](const AsmMatrix&) { total += 1; });
      if (total != a_n(n)) return bad("enumerated " + str(total) + ", formula " + str(a_n(n)));
      BigInt v = count_vertically_symmetric(n);
      if (v != a_v(n)) return bad("vertically symmetric " + str(v) + ", formula " + str(a_v(n)));
      return ok();
    });
    plan.add(nn(n) + "/fpl-to-asm-bijection", [n] {
      std::set<AsmMatrix> seen;
      bool fine = true;
      enumerate_fpl(n, [&](const FplConfig& f) {
        AsmMatrix a = to_asm(f);
        fine = fine && is_asm(a) && seen.insert(a).second;
      });
      if (!fine) return bad("an FPL mapped to a non-ASM or two FPLs to one ASM");
      std::set<AsmMatrix> all;
      enumerate_asm(n, [&](const AsmMatrix& a) { all.insert(a); });
      return seen == all ? ok() : bad("image has " + std::to_string(seen.size()) + " of " + std::to_string(all.size()) + " ASMs");
    });
    plan.add(nn(n) + "/x-minus-one-constant-term", [n] {
      BigRational v = a_n_x(n).eval<BigRational>(-1);
      BigInt expect = a_v(n) * a_v(n);
      return v == BigRational(expect) ? ok() : bad("A_n(-1) = " + to_string(v) + ", expected " + str(expect));
    });
  }
  for (int n = 1; n <= n_max; ++n) {
    plan.add(nn(n) + "/x-minus-one-closed-formula", [n] {
      BigInt v = a_n_minus1(n);
      BigInt expect = a_v(n) * a_v(n);
      if (n % 2 == 0 && expect != 0) return bad("A^V of an even size must vanish");
      return v == expect ? ok() : bad("A_n(-1) = " + str(v) + ", expected " + str(expect));
    });
  }
}

// ---- qkz-spot ---------------------------------------------------------------

void plan_qkz(Plan& plan, int n_max, PointSampler& sampler) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= 3; ++k) {
      PointSpec z = sampler.point(2 * n);
      plan.add(nn(n) + "/point-" + std::to_string(k), [n, z] {
        const auto& ms = all_matchings(n);
        auto psi = psi_neg_multi_all(n, 0, z);
        const LaurentPoly q = LaurentPoly::q_power(1), qi = LaurentPoly::q_power(-1);
        const LaurentScalar tau(-(q + qi));
        for (int i = 1; i < 2 * n; ++i) {
          const LaurentPoly &zi = z[i - 1], &zj = z[i];
          const LaurentPoly den = q * zi - qi * zj;
          const LaurentScalar A(q * zj - qi * zi, den), B(zj - zi, den);
          PointSpec sz = z;
          std::swap(sz[i - 1], sz[i]);
          auto swapped = psi_neg_multi_all(n, 0, sz);
          std::vector<LaurentScalar> lhs(ms.size());
          for (std::size_t s = 0; s < ms.size(); ++s) lhs[s] = A * psi[s];
          for (std::size_t c = 0; c < ms.size(); ++c) {
            TLResult r = apply_e_full(i, ms[c]);
            LaurentScalar w = r.closed_loop ? tau : LaurentScalar(1);
            lhs[index_of(r.image)] += B * w * psi[c];
          }
          for (std::size_t s = 0; s < ms.size(); ++s)
            if (lhs[s] != swapped[s])
              return bad("i=" + std::to_string(i) + " component " + ms[s].word() + ": " + to_string(lhs[s]) + " vs " + to_string(swapped[s]));
        }
        return ok();
      });
    }
}

// ---- driver -----------------------------------------------------------------

const std::vector<std::pair<std::string, int>>& caps_table() {
  static const std::vector<std::pair<std::string, int>> t = {
      {"rs", kFplCap},          {"cmatrix", kPolyCap}, {"poly", kPolyCap},     {"factorization", kPolyCap},
      {"sumrules", kPolyCap},   {"roots", kPolyCap},   {"wheel", kMultiCap},   {"antisym", kMultiCap},
      {"asm", kFormulaCap},     {"qkz-spot", kMultiCap}};
  return t;
}

void plan_suite(Plan& plan, const std::string& name, int n_max, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv(name)), static_cast<std::uint32_t>(fnv(name) >> 32)};
  std::mt19937_64 base(seq);
  PointSampler sampler(base());
  plan.suite = name;
  if (name == "rs") plan_rs(plan, n_max);
  else if (name == "cmatrix") plan_cmatrix(plan, n_max, sampler);
  else if (name == "poly") plan_poly(plan, n_max);
  else if (name == "factorization") plan_factorization(plan, n_max, sampler);
  else if (name == "sumrules") plan_sumrules(plan, n_max);
  else if (name == "roots") plan_roots(plan, n_max);
  else if (name == "wheel") plan_wheel(plan, n_max, sampler);
  else if (name == "antisym") plan_antisym(plan, n_max);
  else if (name == "asm") plan_asm(plan, n_max);
  else if (name == "qkz-spot") plan_qkz(plan, n_max, sampler);
  else throw UsageError("unknown suite: " + name);
}

std::vector<CheckResult> execute(std::vector<Task>& tasks) {
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      out[i].name = tasks[i].first;
      try {
        Outcome o = tasks[i].second();
        out[i].status = o.status;
        out[i].witness = std::move(o.witness);
      } catch (const std::exception& e) {
        out[i].status = CheckStatus::Fail;
        out[i].witness = std::string("exception: ") + e.what();
      }
    }
  };
  const int w = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int k = 1; k < w; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [n, c] : caps_table()) v.push_back(n);
    return v;
  }();
  return names;
}

int suite_cap(const std::string& name) {
  if (name == "all") return kFormulaCap;
  for (const auto& [n, c] : caps_table())
    if (n == name) return c;
  throw UsageError("unknown suite: " + name);
}

SuiteReport run_suite(const std::string& name, int n_max, std::uint64_t seed) {
  const int cap = suite_cap(name);
  if (n_max < 1 || n_max > cap)
    throw UsageError("n_max for suite " + name + " must lie in 1.." + std::to_string(cap));
  const auto start = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  if (name == "all") {
    for (const auto& [sub, sub_cap] : caps_table()) {
      Plan plan;
      plan_suite(plan, sub, std::min(n_max, sub_cap), seed);
      for (auto& t : plan.tasks) tasks.push_back(std::move(t));
    }
  } else {
    Plan plan;
    plan_suite(plan, name, n_max, seed);
    tasks = std::move(plan.tasks);
  }
  SuiteReport r;
  r.suite = name;
  r.n_max = n_max;
  r.seed = seed;
  r.checks = execute(tasks);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(j);
  }
  Json out = {{"suite", r.suite}, {"n_max", r.n_max}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
  if (timing) out["seconds"] = r.seconds;
  return out;
}

std::string to_text(const SuiteReport& r, bool timing) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.status == CheckStatus::Pass ? "PASS " : c.status == CheckStatus::Fail ? "FAIL " : "SKIP ") << c.name;
    if (!c.witness.empty()) os << ": " << c.witness;
    os << '\n';
  }
  os << "suite " << r.suite << " (n_max " << r.n_max << ", seed " << r.seed << "): " << (r.passed() ? "PASS" : "FAIL") << ", "
     << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, " << r.count(CheckStatus::Skip)
     << " skipped";
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
    os << ", " << buf << " s";
  }
  os << '\n';
  return os.str();
}

std::string emit_table(const std::string& kind, int n, const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  const bool json = format == "json";
  std::ostringstream os;
  auto keyed = [&](const std::vector<std::pair<std::string, std::string>>& rows) {
    if (json) {
      Json j = Json::object();
      for (const auto& [k, v] : rows) j[k] = v;
      os << j.dump() << '\n';
    } else {
      for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
    }
  };
  std::vector<std::pair<std::string, std::string>> rows;
  if (kind == "psi" || kind == "g") {
    if (n < 1 || n > kPolyCap) throw UsageError("table size must lie in 1.." + std::to_string(kPolyCap));
    for (const auto& pi : all_matchings(n)) {
      const PolyTau v = kind == "psi" ? psi_tau(pi) : g_poly(pi);
      rows.emplace_back(pi.word(), to_string(v.eval<BigRational>(1)));
    }
    keyed(rows);
  } else if (kind == "counts") {
    if (n < 1 || n > kFplCap) throw UsageError("table size must lie in 1.." + std::to_string(kFplCap));
    auto counts = count_by_matching(n);
    const auto& ms = all_matchings(n);
    for (std::size_t i = 0; i < ms.size(); ++i) rows.emplace_back(ms[i].word(), str(counts[i]));
    keyed(rows);
  } else if (kind == "refined-asm") {
    if (n < 1 || n > kFplCap) throw UsageError("table size must lie in 1.." + std::to_string(kFplCap));
    auto r = refined_asm_counts(n);
    if (json) {
      Json j = Json::array();
      for (const auto& x : r) j.push_back(str(x));
      os << j.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << str(r[i]);
      os << '\n';
    }
  } else if (kind == "c-matrix") {
    if (n < 1 || n > kPolyCap) throw UsageError("table size must lie in 1.." + std::to_string(kPolyCap));
    const CMatrix& c = c_matrix(n);
    if (json) {
      os << to_json(c).dump() << '\n';
    } else {
      const auto& ms = c.basis();
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
          if (!is_zero(c.at(i, j))) os << ms[i].word() << ',' << ms[j].word() << ',' << to_string(c.at(i, j)) << '\n';
    }
  } else {
    throw UsageError("unknown table kind: " + kind);
  }
  return os.str();
}

}  // namespace fplpoly
