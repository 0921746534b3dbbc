#include "fplpoly/matching.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fplpoly {

int YoungDiagram::boxes() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

YoungDiagram YoungDiagram::transpose() const {
  YoungDiagram t;
  if (rows.empty()) return t;
  for (int c = 0; c < rows.front(); ++c) {
    int len = 0;
    while (len < static_cast<int>(rows.size()) && rows[len] > c) ++len;
    t.rows.push_back(len);
  }
  return t;
}

BigInt hook_product(const YoungDiagram& y) {
  BigInt h = 1;
  YoungDiagram t = y.transpose();
  for (int r = 0; r < static_cast<int>(y.rows.size()); ++r)
    for (int c = 0; c < y.rows[r]; ++c) h *= (y.rows[r] - c - 1) + (t.rows[c] - r - 1) + 1;
  return h;
}

Matching Matching::from_sequence(std::vector<int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1 || seq[i] > 2 * static_cast<int>(i) + 1)
      throw std::invalid_argument("opener sequence violates 1 <= a_i <= 2i-1 at position " + std::to_string(i + 1));
    if (i > 0 && seq[i] <= seq[i - 1]) throw std::invalid_argument("opener sequence is not strictly increasing");
  }
  return Matching(std::move(seq));
}

Matching Matching::from_word(std::string_view word) {
  std::vector<int> seq;
  int depth = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == '(') {
      seq.push_back(static_cast<int>(i) + 1);
      ++depth;
    } else if (word[i] == ')') {
      if (--depth < 0) throw std::invalid_argument("unbalanced parentheses: '" + std::string(word) + "'");
    } else {
      throw std::invalid_argument("unexpected character in parenthesis word: '" + std::string(word) + "'");
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses: '" + std::string(word) + "'");
  return Matching(std::move(seq));
}

Matching Matching::from_arches(std::vector<std::pair<int, int>> arches) {
  const int n = static_cast<int>(arches.size());
  std::vector<int> seen(2 * n + 1, 0);
  for (auto& [i, j] : arches) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 2 * n || i == j) throw std::invalid_argument("arch endpoint out of range");
    if (seen[i]++ || seen[j]++) throw std::invalid_argument("arches are not disjoint");
  }
  for (const auto& [i, j] : arches)
    for (const auto& [k, l] : arches)
      if (i < k && k < j && j < l) throw std::invalid_argument("crossing arches");
  std::vector<int> seq;
  for (const auto& a : arches) seq.push_back(a.first);
  std::sort(seq.begin(), seq.end());
  return Matching(std::move(seq));
}

Matching Matching::from_dyck(const std::vector<int>& steps) {
  std::string w;
  int h = 0;
  for (int s : steps) {
    if (s != 1 && s != -1) throw std::invalid_argument("Dyck steps must be +1 or -1");
    h += s;
    if (h < 0) throw std::invalid_argument("Dyck path dips below the axis");
    w += s > 0 ? '(' : ')';
  }
  if (h != 0) throw std::invalid_argument("Dyck path does not return to the axis");
  return from_word(w);
}

Matching Matching::from_young(int n, const YoungDiagram& y) {
  if (static_cast<int>(y.rows.size()) > n) throw std::invalid_argument("Young diagram has too many rows");
  std::vector<int> seq(n);
  for (int k = 1; k <= n; ++k) {
    int row = k <= static_cast<int>(y.rows.size()) ? y.rows[k - 1] : 0;
    if (row > n - k) throw std::invalid_argument("Young diagram does not fit the staircase");
    if (k > 1 && k <= static_cast<int>(y.rows.size()) && row > y.rows[k - 2])
      throw std::invalid_argument("Young diagram rows must be weakly decreasing");
    seq[n - k] = row + n + 1 - k;
  }
  return from_sequence(std::move(seq));
}

Matching Matching::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}') s += c;
  if (s.find_first_of("()") != std::string::npos) return from_word(s);
  std::vector<int> seq;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("cannot parse matching: '" + std::string(text) + "'");
    seq.push_back(std::stoi(item));
  }
  if (seq.empty()) throw std::invalid_argument("cannot parse matching: '" + std::string(text) + "'");
  return from_sequence(std::move(seq));
}

Matching Matching::nested(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i + 1;
  return Matching(std::move(seq));
}

Matching Matching::chain(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = 2 * i + 1;
  return Matching(std::move(seq));
}

std::string Matching::word() const {
  std::string w(2 * seq_.size(), ')');
  for (int a : seq_) w[a - 1] = '(';
  return w;
}

std::string Matching::seq_string() const { return GenSequence(*this).to_string(); }

std::vector<std::pair<int, int>> Matching::arches() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> stack;
  std::string w = word();
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i] == '(') {
      stack.push_back(i + 1);
    } else {
      out.emplace_back(stack.back(), i + 1);
      stack.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Matching::partners() const {
  std::vector<int> p(2 * seq_.size() + 1, 0);
  for (const auto& [i, j] : arches()) p[i] = j, p[j] = i;
  return p;
}

std::vector<int> Matching::dyck() const {
  std::vector<int> s;
  for (char c : word()) s.push_back(c == '(' ? 1 : -1);
  return s;
}

YoungDiagram Matching::young() const {
  YoungDiagram y;
  const int n = size();
  for (int k = 1; k <= n; ++k) {
    int row = seq_[n - k] - (n + 1 - k);
    if (row > 0) y.rows.push_back(row);
  }
  return y;
}

int Matching::d() const {
  int s = 0;
  for (int i = 0; i < size(); ++i) s += seq_[i] - (i + 1);
  return s;
}

Matching Matching::rotate() const {
  const int N = 2 * size();
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : arches()) out.emplace_back(i == 1 ? N : i - 1, j - 1);
  return from_arches(std::move(out));
}

Matching Matching::conjugate() const {
  const int N = 2 * size();
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : arches()) out.emplace_back(N + 1 - j, N + 1 - i);
  return from_arches(std::move(out));
}

bool leq(const Matching& s, const Matching& m) {
  if (s.size() != m.size()) throw std::invalid_argument("leq: size mismatch");
  for (int i = 0; i < s.size(); ++i)
    if (s.seq()[i] > m.seq()[i]) return false;
  return true;
}

GenSequence::GenSequence(std::vector<int> seq) : seq_(std::move(seq)) {
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (seq_[i] < 1) throw std::invalid_argument("sequence entries must be positive");
    if (i > 0 && seq_[i] < seq_[i - 1]) throw std::invalid_argument("sequence must be weakly increasing");
  }
}

bool GenSequence::is_bounded() const {
  for (std::size_t i = 0; i < seq_.size(); ++i)
    if (seq_[i] > 2 * static_cast<int>(i) + 1) return false;
  return true;
}

bool GenSequence::is_matching() const {
  if (!is_bounded()) return false;
  for (std::size_t i = 1; i < seq_.size(); ++i)
    if (seq_[i] == seq_[i - 1]) return false;
  return true;
}

Matching GenSequence::to_matching() const { return Matching::from_sequence(seq_); }

std::string GenSequence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < seq_.size(); ++i) s += (i ? "," : "") + std::to_string(seq_[i]);
  return s;
}

Matching nest(const Matching& m, int p) { return nest_seq(GenSequence(m), p).to_matching(); }

GenSequence nest_seq(const GenSequence& a, int p) {
  if (p < 0) throw std::invalid_argument("nest: negative p");
  std::vector<int> s;
  for (int i = 1; i <= p; ++i) s.push_back(i);
  for (int v : a.seq()) s.push_back(v + p);
  return GenSequence(std::move(s));
}

namespace {
void check_cut(int n, int p) {
  if (p < 1 || p > n - 1)
    throw std::out_of_range("p = " + std::to_string(p) + " outside 1.." + std::to_string(n - 1));
}
}  // namespace

int m_p(const Matching& m, int p) {
  const int n = m.size();
  check_cut(n, p);
  const int ph = 2 * n + 1 - p;
  int l = 0, r = 0;
  for (const auto& [a1, a2] : m.arches()) {
    if (a1 <= p && p < a2 && a2 < ph) ++l;
    if (p < a1 && a1 < ph && a2 >= ph) ++r;
  }
  return (l + r) / 2;
}

std::vector<int> outer_points(int n, int p) {
  std::vector<int> v;
  for (int i = 1; i <= p; ++i) v.push_back(i);
  for (int i = 2 * n + 1 - p; i <= 2 * n; ++i) v.push_back(i);
  return v;
}

std::vector<int> inner_points(int n, int p) {
  std::vector<int> v;
  for (int i = p + 1; i <= 2 * n - p; ++i) v.push_back(i);
  return v;
}

std::optional<std::pair<Matching, Matching>> decompose(const Matching& m, int p) {
  const int n = m.size();
  if (m_p(m, p) != 0) return std::nullopt;
  const int ph = 2 * n + 1 - p;
  std::vector<std::pair<int, int>> outer, inner;
  for (const auto& [i, j] : m.arches()) {
    if (i > p && j < ph) {
      inner.emplace_back(i - p, j - p);
    } else {
      auto relabel = [&](int x) { return x >= ph ? x - 2 * (n - p) : x; };
      outer.emplace_back(relabel(i), relabel(j));
    }
  }
  return std::make_pair(Matching::from_arches(std::move(outer)), Matching::from_arches(std::move(inner)));
}

Matching compose(const Matching& alpha, const Matching& beta) {
  const int p = alpha.size(), k = beta.size();
  std::vector<std::pair<int, int>> arches;
  for (const auto& [i, j] : alpha.arches()) {
    auto relabel = [&](int x) { return x > p ? x + 2 * k : x; };
    arches.emplace_back(relabel(i), relabel(j));
  }
  for (const auto& [i, j] : beta.arches()) arches.emplace_back(i + p, j + p);
  return Matching::from_arches(std::move(arches));
}

SplitSequence split_sequence(const GenSequence& a, int p) {
  const int n = a.size();
  check_cut(n, p);
  const int ph = 2 * n + 1 - p;
  std::vector<int> b, c;
  for (int v : a.seq()) {
    if (v <= p) b.push_back(v);
    else if (v < ph) c.push_back(v - p);
    else b.push_back(v - 2 * (n - p));
  }
  int s = static_cast<int>(c.size()) - (n - p);
  for (int i = 0; i < s; ++i) b.push_back(p);
  std::sort(b.begin(), b.end());
  return {GenSequence(std::move(b)), GenSequence(std::move(c))};
}

GenSequence join_sequence(const GenSequence& b, const GenSequence& c, int p, int n) {
  int s = b.size() + c.size() - n;
  std::vector<int> out;
  for (int v : b.seq()) {
    if (v == p && s > 0) {
      --s;
      continue;
    }
    out.push_back(v > p ? v + 2 * (n - p) : v);
  }
  if (s != 0) throw std::invalid_argument("join_sequence: inconsistent outer part");
  for (int v : c.seq()) out.push_back(v + p);
  std::sort(out.begin(), out.end());
  return GenSequence(std::move(out));
}

const std::vector<Matching>& all_matchings(int n) {
  if (n < 0) throw std::invalid_argument("all_matchings: negative n");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Matching>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Matching>>();
    std::vector<int> seq(n);
    // a_i ranges over (a_{i-1}, 2i-1]; depth-first in increasing order gives lexicographic output.
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        slot->push_back(Matching::from_sequence(seq));
        return;
      }
      int lo = i == 0 ? 1 : seq[i - 1] + 1;
      for (int v = lo; v <= 2 * i + 1; ++v) {
        seq[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return *slot;
}

std::size_t index_of(const Matching& m) {
  const auto& all = all_matchings(m.size());
  auto it = std::lower_bound(all.begin(), all.end(), m);
  if (it == all.end() || *it != m) throw std::logic_error("index_of: matching not found");
  return static_cast<std::size_t>(it - all.begin());
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace fplpoly
