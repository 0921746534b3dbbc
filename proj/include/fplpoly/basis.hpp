#pragma once

#include <map>
#include <random>
#include <vector>

#include "fplpoly/laurent.hpp"
#include "fplpoly/matching.hpp"
#include "fplpoly/poly.hpp"

namespace fplpoly {

// C_{a,pi}: strip small arches of pi one at a time, multiplying by [s] with
// s = #{a_i = j} for the removed arch (j, j+1). Accumulated in q, converted once.
PolyTau c_entry(const GenSequence& a, const Matching& pi);
// Same recursion, but the small arch removed at each step is drawn from rng.
PolyTau c_entry_random(const GenSequence& a, const Matching& pi, std::mt19937_64& rng);
// Inner-part coefficient C_{c,beta} for |c| >= |beta|; surplus entries must end at 0.
PolyTau c_entry_inner(const GenSequence& c, const Matching& beta);

class CMatrix {
 public:
  CMatrix(int n, std::vector<PolyTau> entries);
  int n() const { return n_; }
  std::size_t dim() const { return basis_->size(); }
  const std::vector<Matching>& basis() const { return *basis_; }
  const PolyTau& at(std::size_t row, std::size_t col) const { return e_[row * dim() + col]; }
  const PolyTau& at(const Matching& a, const Matching& pi) const { return at(index_of(a), index_of(pi)); }

 private:
  int n_;
  const std::vector<Matching>* basis_;
  std::vector<PolyTau> e_;
};

// Full matrix over all_matchings(n), every entry from c_entry. Cached per n.
const CMatrix& c_matrix(int n);
// Inverse by forward substitution in the lexicographic order of all_matchings(n).
const CMatrix& c_inverse(int n);
// Row-by-column product, used to confirm C * C^{-1} = 1.
bool is_identity_product(const CMatrix& a, const CMatrix& b);

using SeqExpansion = std::map<Matching, PolyTau>;

// Phi_b as a combination of Phi_f over matchings f, via Phi_b = -Phi_{b~} - tau Phi_{b^}.
SeqExpansion reduce_sequence(const GenSequence& b);
PolyTau c_entry_general(const GenSequence& b, const Matching& alpha);

}  // namespace fplpoly
