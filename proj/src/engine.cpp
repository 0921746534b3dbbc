#include "fplpoly/engine.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "fplpoly/basis.hpp"

namespace fplpoly {

namespace {

std::mutex mu;
std::map<int, std::unique_ptr<std::vector<PolyTauT>>> poly_cache;
std::map<int, std::unique_ptr<std::vector<PolyTau>>> tau_cache;
std::map<int, std::unique_ptr<std::vector<LaurentPoly>>> cinv_q_cache;

template <class T, class Build>
const T& cached(std::map<int, std::unique_ptr<T>>& cache, int n, Build build) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto v = std::make_unique<T>(build());
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::move(v);
  return *slot;
}

}  // namespace

const std::vector<PolyTauT>& psi_poly_table(int n) {
  return cached(poly_cache, n, [n] {
    const auto& ms = all_matchings(n);
    const CMatrix& Ci = c_inverse(n);
    std::vector<PolyTauT> phi;
    for (const auto& a : ms) phi.push_back(phi_tau_t(a));
    std::vector<PolyTauT> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      PolyTauT s;
      for (std::size_t j = 0; j <= i; ++j) {
        const PolyTau& c = Ci.at(i, j);
        if (is_zero(c)) continue;
        std::vector<PolyTau> scaled;
        for (const auto& x : phi[j].coeffs()) scaled.push_back(x * c);
        s += PolyTauT(std::move(scaled));
      }
      out.push_back(std::move(s));
    }
    return out;
  });
}

const std::vector<PolyTau>& psi_tau_table(int n) {
  return cached(tau_cache, n, [n] {
    const auto& ms = all_matchings(n);
    const CMatrix& Ci = c_inverse(n);
    std::vector<PolyTau> phi;
    for (const auto& a : ms) phi.push_back(phi_tau(a));
    std::vector<PolyTau> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      PolyTau s;
      for (std::size_t j = 0; j <= i; ++j) s += Ci.at(i, j) * phi[j];
      out.push_back(std::move(s));
    }
    return out;
  });
}

PolyTau psi_tau(const Matching& pi) { return psi_tau_table(pi.size())[index_of(pi)]; }
PolyTauT psi_poly(const Matching& pi) { return psi_poly_table(pi.size())[index_of(pi)]; }
PolyTau g_poly(const Matching& pi) { return eval_t(psi_poly(pi), BigRational(-pi.size())); }

const std::vector<LaurentPoly>& c_inverse_q(int n) {
  return cached(cinv_q_cache, n, [n] {
    const CMatrix& Ci = c_inverse(n);
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < Ci.dim(); ++i)
      for (std::size_t j = 0; j < Ci.dim(); ++j) out.push_back(tau_to_laurent(Ci.at(i, j)));
    return out;
  });
}

std::vector<LaurentScalar> psi_neg_multi_all(int n, int p, const PointSpec& z) {
  const auto& ms = all_matchings(n);
  const auto& ciq = c_inverse_q(n);
  const std::size_t N = ms.size();
  std::vector<LaurentScalar> phi;
  for (const auto& a : ms) phi.push_back(eval_Phi_neg(a, p, z));
  std::vector<LaurentScalar> out;
  for (std::size_t i = 0; i < N; ++i) {
    LaurentScalar s;
    for (std::size_t j = 0; j <= i; ++j) {
      const LaurentPoly& c = ciq[i * N + j];
      if (is_zero(c) || is_zero(phi[j])) continue;
      s += LaurentScalar(c) * phi[j];
    }
    out.push_back(std::move(s));
  }
  return out;
}

LaurentScalar psi_neg_multi(const Matching& pi, int p, const PointSpec& z) {
  return psi_neg_multi_all(pi.size(), p, z)[index_of(pi)];
}

LaurentScalar g_multi(const Matching& pi, const PointSpec& z) { return psi_neg_multi(pi, pi.size(), z); }

PointSpec outer_args(const PointSpec& z, int p) {
  const int n = static_cast<int>(z.size()) / 2;
  PointSpec out;
  for (int i : outer_points(n, p)) out.push_back(z[i - 1]);
  return out;
}

PointSpec inner_args(const PointSpec& z, int p) {
  const int n = static_cast<int>(z.size()) / 2;
  PointSpec out;
  for (int i : inner_points(n, p)) out.push_back(z[i - 1]);
  return out;
}

std::string FactorReport::describe() const {
  return pi.word() + " p=" + std::to_string(p) + " m_p=" + std::to_string(m) + ": psi(tau,-p) = " + to_string(lhs) +
         ", expected " + to_string(rhs);
}

FactorReport factor_check(const Matching& pi, int p) {
  FactorReport r;
  r.pi = pi;
  r.p = p;
  r.m = m_p(pi, p);
  r.lhs = eval_t(psi_poly(pi), BigRational(-p));
  if (r.m == 0) {
    auto parts = decompose(pi, p);
    r.rhs = g_poly(parts->first) * psi_tau(parts->second);
  }
  r.ok = r.lhs == r.rhs;
  return r;
}

}  // namespace fplpoly
