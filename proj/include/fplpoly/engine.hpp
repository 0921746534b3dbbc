#pragma once

#include <string>
#include <vector>

#include "fplpoly/contour.hpp"
#include "fplpoly/laurent.hpp"
#include "fplpoly/matching.hpp"
#include "fplpoly/poly.hpp"

namespace fplpoly {

// psi_pi(tau) = sum_a Cinv_{pi,a} phi_a(tau)
PolyTau psi_tau(const Matching& pi);
// psi_pi(tau, t) = sum_a Cinv_{pi,a} phi_a(tau, t)
PolyTauT psi_poly(const Matching& pi);
// g_pi(tau) = psi_pi(tau, -|pi|)
PolyTau g_poly(const Matching& pi);

// Whole tables over all_matchings(n); cached.
const std::vector<PolyTauT>& psi_poly_table(int n);
const std::vector<PolyTau>& psi_tau_table(int n);

// Cinv with tau replaced by -q - 1/q.
const std::vector<LaurentPoly>& c_inverse_q(int n);

// Psi_{pi,-p}(z) = sum_a Cinv_{pi,a} Phi_{a,-p}(z), 0 <= p <= n; every pi at once.
std::vector<LaurentScalar> psi_neg_multi_all(int n, int p, const PointSpec& z);
LaurentScalar psi_neg_multi(const Matching& pi, int p, const PointSpec& z);
inline LaurentScalar psi_multi(const Matching& pi, const PointSpec& z) { return psi_neg_multi(pi, 0, z); }
// G_pi(z) = Psi_{pi,-|pi|}(z)
LaurentScalar g_multi(const Matching& pi, const PointSpec& z);

// Outer arguments (z_1..z_p, z_{2n+1-p}..z_{2n}) and inner arguments z_{p+1}..z_{2n-p}.
PointSpec outer_args(const PointSpec& z, int p);
PointSpec inner_args(const PointSpec& z, int p);

struct FactorReport {
  Matching pi;
  int p = 0;
  int m = 0;       // m_p(pi)
  bool ok = false;
  PolyTau lhs;     // psi_pi(tau, -p)
  PolyTau rhs;     // 0, or g_alpha(tau) psi_beta(tau)
  std::string describe() const;
};

FactorReport factor_check(const Matching& pi, int p);

}  // namespace fplpoly
