#pragma once

#include <stdexcept>
#include <vector>

#include "fplpoly/laurent.hpp"
#include "fplpoly/matching.hpp"
#include "fplpoly/poly.hpp"

namespace fplpoly {

// ---- homogeneous constant-term extraction --------------------------------
//
// Every formula reads one coefficient of
//   F(u) = prod_{i<j} (u_j - u_i)(1 + tau u_j + u_i u_j)
// times a per-variable series.

// [prod u_i^{a_i-1}] F
PolyTau phi_tau(const GenSequence& a);
// phi_tau of (a)_t as a polynomial in t
PolyTauT phi_tau_t(const GenSequence& a);
// phi_tau_t(a) at t = -p, read directly from the series (1 + tau u)^{-p}
PolyTau phi_at_neg(const GenSequence& a, int p);

PolyTau sum_g(int n);
PolyTau sum_psi(int n);
// sum_i A_{n,i} x^{i-1} (integer coefficients)
PolyQ a_n_x(int n);

// Same coefficient as phi_tau, computed by untruncated sparse expansion. Test oracle only.
PolyTau phi_tau_bruteforce(const GenSequence& a);

// ---- residue evaluation of the multivariate integrals ---------------------

// z_1..z_{2n}; entries are Laurent polynomials in q (rationals, q^k, q^k + c, ...).
using PointSpec = std::vector<LaurentPoly>;

struct DegeneratePoint : std::domain_error {
  using std::domain_error::domain_error;
};

// Phi_a(z); a may be any weakly increasing sequence with a_i <= 2i-1.
LaurentScalar eval_Phi(const GenSequence& a, const PointSpec& z);
// Phi_{a,-p}(z) for 0 <= p <= n; p = 0 coincides with eval_Phi.
LaurentScalar eval_Phi_neg(const GenSequence& a, int p, const PointSpec& z);

// Value at a point where individual residues are singular (for instance q^eps or
// (1,...,1)), obtained by exact interpolation along a line through the point.
LaurentScalar limit_Phi(const GenSequence& a, int p, const PointSpec& z0);

// Total degree of Phi_{a,-p} as a polynomial in z.
int phi_total_degree(int n, int p);

// q^{-1} at the openers of pi, q at the closers.
PointSpec q_eps_point(const Matching& pi);
PointSpec homogeneous_point(int n);

}  // namespace fplpoly
