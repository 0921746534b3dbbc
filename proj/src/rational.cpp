#include "fplpoly/rational.hpp"

#include <stdexcept>

namespace fplpoly {

std::string to_string(const BigRational& x) { return x.get_str(); }
std::string to_string(const BigInt& x) { return x.get_str(); }

BigRational parse_rational(std::string_view s) {
  std::string str(s);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + str + "'"); };
  if (str.empty()) throw bad();
  std::size_t slash = str.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = str.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + str + "'");
  BigRational r(BigInt(num), d);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// Binomial with the usual extension to negative upper argument.
BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // C(-m, k) = (-1)^k C(m+k-1, k)
  long m = -n;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m + k - 1), static_cast<unsigned long>(k));
  return (k % 2) ? BigInt(-r) : r;
}

}  // namespace fplpoly
