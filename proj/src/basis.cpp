#include "fplpoly/basis.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fplpoly {

namespace {

struct RecursionResult {
  bool zero = false;
  LaurentPoly acc{1};
  std::vector<int> rest;
};

using ArchChooser = std::function<std::size_t(const std::vector<int>&)>;

RecursionResult run_recursion(std::vector<int> a, std::string w, const ArchChooser& choose) {
  RecursionResult r;
  while (!w.empty()) {
    std::vector<int> small;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == '(' && w[i + 1] == ')') small.push_back(static_cast<int>(i) + 1);
    const int j = small[choose(small)];
    int s = static_cast<int>(std::count(a.begin(), a.end(), j));
    if (s == 0) {
      r.zero = true;
      return r;
    }
    r.acc *= qint(s);
    std::vector<int> next;
    for (int v : a) {
      if (v < j) next.push_back(v);
      else if (v > j) next.push_back(v - 2);
    }
    for (int k = 0; k < s - 1; ++k) next.push_back(j - 1);
    std::sort(next.begin(), next.end());
    a = std::move(next);
    w.erase(static_cast<std::size_t>(j) - 1, 2);
  }
  r.rest = std::move(a);
  return r;
}

std::size_t leftmost(const std::vector<int>&) { return 0; }

PolyTau finish(const RecursionResult& r) {
  if (r.zero) return PolyTau();
  return laurent_to_tau(r.acc);
}

}  // namespace

PolyTau c_entry(const GenSequence& a, const Matching& pi) {
  if (a.size() != pi.size()) throw std::invalid_argument("c_entry: size mismatch");
  return finish(run_recursion(a.seq(), pi.word(), leftmost));
}

PolyTau c_entry_random(const GenSequence& a, const Matching& pi, std::mt19937_64& rng) {
  if (a.size() != pi.size()) throw std::invalid_argument("c_entry: size mismatch");
  auto pick = [&rng](const std::vector<int>& v) {
    return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng));
  };
  return finish(run_recursion(a.seq(), pi.word(), pick));
}

PolyTau c_entry_inner(const GenSequence& c, const Matching& beta) {
  if (c.size() < beta.size()) throw std::invalid_argument("c_entry_inner: inner part shorter than beta");
  RecursionResult r = run_recursion(c.seq(), beta.word(), leftmost);
  if (r.zero) return PolyTau();
  for (int v : r.rest)
    if (v != 0) throw std::logic_error("c_entry_inner: surplus entry did not reach the cut");
  return laurent_to_tau(r.acc);
}

CMatrix::CMatrix(int n, std::vector<PolyTau> entries) : n_(n), basis_(&all_matchings(n)), e_(std::move(entries)) {
  if (e_.size() != basis_->size() * basis_->size()) throw std::invalid_argument("CMatrix: wrong entry count");
}

namespace {

std::mutex cache_mu;
std::map<int, std::unique_ptr<CMatrix>> c_cache, cinv_cache;

std::unique_ptr<CMatrix> build_c(int n) {
  const auto& ms = all_matchings(n);
  std::vector<PolyTau> e;
  e.reserve(ms.size() * ms.size());
  for (const auto& a : ms)
    for (const auto& pi : ms) e.push_back(c_entry(a, pi));
  return std::make_unique<CMatrix>(n, std::move(e));
}

std::unique_ptr<CMatrix> build_inverse(const CMatrix& C) {
  const std::size_t N = C.dim();
  std::vector<PolyTau> inv(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    if (C.at(i, i) != PolyTau(1)) throw std::logic_error("c_inverse: diagonal entry is not 1");
    for (std::size_t j = i + 1; j < N; ++j)
      if (!is_zero(C.at(i, j))) throw std::logic_error("c_inverse: C is not lower triangular in lexicographic order");
  }
  for (std::size_t i = 0; i < N; ++i) {
    inv[i * N + i] = PolyTau(1);
    for (std::size_t j = i; j-- > 0;) {
      PolyTau s;
      for (std::size_t k = j; k < i; ++k)
        if (!is_zero(C.at(i, k)) && !is_zero(inv[k * N + j])) s += C.at(i, k) * inv[k * N + j];
      inv[i * N + j] = -s;
    }
  }
  return std::make_unique<CMatrix>(C.n(), std::move(inv));
}

}  // namespace

const CMatrix& c_matrix(int n) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = c_cache.find(n);
    if (it != c_cache.end()) return *it->second;
  }
  auto built = build_c(n);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& slot = c_cache[n];
  if (!slot) slot = std::move(built);
  return *slot;
}

const CMatrix& c_inverse(int n) {
  const CMatrix& C = c_matrix(n);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cinv_cache.find(n);
    if (it != cinv_cache.end()) return *it->second;
  }
  auto built = build_inverse(C);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& slot = cinv_cache[n];
  if (!slot) slot = std::move(built);
  return *slot;
}

bool is_identity_product(const CMatrix& a, const CMatrix& b) {
  const std::size_t N = a.dim();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      PolyTau s;
      for (std::size_t k = 0; k < N; ++k)
        if (!is_zero(a.at(i, k)) && !is_zero(b.at(k, j))) s += a.at(i, k) * b.at(k, j);
      if (s != PolyTau(i == j ? 1 : 0)) return false;
    }
  return true;
}

namespace {

std::mutex reduce_mu;
std::map<std::vector<int>, SeqExpansion> reduce_cache;

bool pigeonhole_vanishes(const std::vector<int>& b) {
  // the first m+1 integration variables can only pick poles among z_1..z_m
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] <= static_cast<int>(i)) return true;
  return false;
}

SeqExpansion reduce_raw(const std::vector<int>& b);

SeqExpansion reduce_cached(const std::vector<int>& b) {
  {
    std::lock_guard<std::mutex> lock(reduce_mu);
    auto it = reduce_cache.find(b);
    if (it != reduce_cache.end()) return it->second;
  }
  SeqExpansion r = reduce_raw(b);
  std::lock_guard<std::mutex> lock(reduce_mu);
  reduce_cache.emplace(b, r);
  return r;
}

void accumulate(SeqExpansion& into, const SeqExpansion& from, const PolyTau& factor) {
  for (const auto& [m, c] : from) {
    PolyTau& slot = into[m];
    slot += c * factor;
    if (is_zero(slot)) into.erase(m);
  }
}

SeqExpansion reduce_raw(const std::vector<int>& b) {
  if (pigeonhole_vanishes(b)) return {};
  std::size_t k = 0;
  while (k + 1 < b.size() && b[k] != b[k + 1]) ++k;
  if (k + 1 >= b.size()) return {{Matching::from_sequence(b), PolyTau(1)}};
  std::vector<int> check = b, tilde = b;
  check[k] -= 1;
  tilde[k] -= 1;
  tilde[k + 1] -= 1;
  std::sort(tilde.begin(), tilde.end());
  SeqExpansion out;
  accumulate(out, reduce_cached(tilde), PolyTau(-1));
  accumulate(out, reduce_cached(check), -PolyTau::var());
  return out;
}

}  // namespace

SeqExpansion reduce_sequence(const GenSequence& b) {
  if (!b.is_bounded()) throw std::invalid_argument("reduce_sequence: sequence violates b_i <= 2i-1: " + b.to_string());
  return reduce_cached(b.seq());
}

PolyTau c_entry_general(const GenSequence& b, const Matching& alpha) {
  if (b.size() != alpha.size()) throw std::invalid_argument("c_entry_general: size mismatch");
  PolyTau r;
  for (const auto& [f, coef] : reduce_sequence(b)) r += coef * c_entry(f, alpha);
  return r;
}

}  // namespace fplpoly
