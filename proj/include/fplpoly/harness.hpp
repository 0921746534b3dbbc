#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fplpoly/contour.hpp"
#include "fplpoly/json_io.hpp"

namespace fplpoly {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // failure detail or skip reason
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by name
  double seconds = 0;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
};

// Bad suite name, bad table kind, or a size beyond the hard cap. The CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Suite names accepted by run_suite, "all" included.
const std::vector<std::string>& suite_names();
// Largest n_max accepted for the suite. "all" hands min(n_max, cap) to each member suite.
int suite_cap(const std::string& name);

SuiteReport run_suite(const std::string& name, int n_max, std::uint64_t seed);

Json to_json(const SuiteReport& r, bool timing = false);
std::string to_text(const SuiteReport& r, bool timing = false);

// kind in {psi, g, counts, refined-asm, c-matrix}, format in {json, csv}.
std::string emit_table(const std::string& kind, int n, const std::string& format);

// FPLPOLY_WORKERS if set and positive, otherwise the hardware thread count (at least 1).
int worker_count();

// Small distinct nonzero rationals, |numerator| <= 13 and 1 <= denominator <= 13.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  BigRational draw();
  // count distinct values as constant Laurent polynomials
  PointSpec point(int count);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kFplCap = 6;
inline constexpr int kPolyCap = 6;
inline constexpr int kMultiCap = 4;
inline constexpr int kFormulaCap = 15;

}  // namespace fplpoly
