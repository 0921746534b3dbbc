#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fplpoly/rational.hpp"

namespace fplpoly {

struct YoungDiagram {
  std::vector<int> rows;  // weakly decreasing, no zero rows
  int boxes() const;
  YoungDiagram transpose() const;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

BigInt hook_product(const YoungDiagram& y);

// Perfect noncrossing matching on 1..2n, stored as the opener positions a_1 < ... < a_n.
class Matching {
 public:
  Matching() = default;

  static Matching from_sequence(std::vector<int> seq);
  static Matching from_word(std::string_view word);
  static Matching from_arches(std::vector<std::pair<int, int>> arches);
  static Matching from_dyck(const std::vector<int>& steps);  // +1 up, -1 down
  static Matching from_young(int n, const YoungDiagram& y);
  // Parenthesis word or comma-separated opener list.
  static Matching parse(std::string_view text);
  static Matching nested(int n);   // ((...))
  static Matching chain(int n);    // ()()...()

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  std::string word() const;
  std::string seq_string() const;
  std::vector<std::pair<int, int>> arches() const;  // sorted by opener
  std::vector<int> partners() const;                // index 1..2n
  std::vector<int> dyck() const;
  YoungDiagram young() const;
  int d() const;

  Matching rotate() const;     // every endpoint moves to its predecessor, 1 -> 2n
  Matching conjugate() const;  // mirror i -> 2n+1-i

  friend bool operator==(const Matching& a, const Matching& b) { return a.seq_ == b.seq_; }
  friend bool operator!=(const Matching& a, const Matching& b) { return !(a == b); }
  friend bool operator<(const Matching& a, const Matching& b) { return a.seq_ < b.seq_; }

 private:
  explicit Matching(std::vector<int> seq) : seq_(std::move(seq)) {}
  std::vector<int> seq_;
};

bool leq(const Matching& s, const Matching& m);

// Weakly increasing sequence of positive integers; the entrywise bound a_i <= 2i-1 is
// reported by is_bounded() rather than enforced, since outer/inner parts can exceed it.
class GenSequence {
 public:
  GenSequence() = default;
  explicit GenSequence(std::vector<int> seq);
  GenSequence(const Matching& m) : seq_(m.seq()) {}  // NOLINT

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  bool is_bounded() const;
  bool is_matching() const;
  Matching to_matching() const;
  std::string to_string() const;
  friend bool operator==(const GenSequence&, const GenSequence&) = default;
  friend bool operator<(const GenSequence& a, const GenSequence& b) { return a.seq_ < b.seq_; }

 private:
  std::vector<int> seq_;
};

Matching nest(const Matching& m, int p);
GenSequence nest_seq(const GenSequence& a, int p);

int m_p(const Matching& m, int p);

// (alpha, beta) with alpha the outer matching of size p; absent when m_p != 0.
std::optional<std::pair<Matching, Matching>> decompose(const Matching& m, int p);
Matching compose(const Matching& alpha, const Matching& beta);

struct SplitSequence {
  GenSequence outer;  // b
  GenSequence inner;  // c
};
SplitSequence split_sequence(const GenSequence& a, int p);
// Inverse of split_sequence for an original sequence of length n.
GenSequence join_sequence(const GenSequence& b, const GenSequence& c, int p, int n);

// Outer/inner point lists for the p-cut of 1..2n: (1..p, 2n+1-p..2n) and p+1..2n-p.
std::vector<int> outer_points(int n, int p);
std::vector<int> inner_points(int n, int p);

// All matchings of size n, lexicographic in the opener sequence.
const std::vector<Matching>& all_matchings(int n);
std::size_t index_of(const Matching& m);

BigInt catalan(int n);

}  // namespace fplpoly

template <>
struct std::hash<fplpoly::Matching> {
  std::size_t operator()(const fplpoly::Matching& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : m.seq()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
