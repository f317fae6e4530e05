#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "structring/error.hpp"

namespace structring {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Representative of `a` in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, or nullopt
/// when gcd(a, m) != 1.
inline std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::parse_error, "bad integer literal '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::parse_error, "bad integer literal '" + text + "'");
    }
  }
  BigInt value(text.substr(start));
  return text[0] == '-' ? BigInt(-value) : value;
}

/// Parses "a" or "a/b".
inline BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + text + "'");
  return BigRational(num, den);
}

inline std::string to_string(const BigRational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Moduli are capped below 2^62 so that residues fit in JSON integers and the
// trial-division factorisation below is complete.
inline const BigInt& max_modulus() {
  static const BigInt limit = BigInt(1) << 62;
  return limit;
}

/// Returns (p, e) with m = p^e when m is a prime power, nullopt otherwise.
/// Trial division up to 2^21 leaves a cofactor with at most two prime
/// factors when m < 2^62, which is settled by a primality and a square test.
inline std::optional<std::pair<BigInt, unsigned>> prime_power(BigInt m) {
  if (m < 2) return std::nullopt;
  if (m >= max_modulus()) throw Error(ErrorCode::invalid_argument, "modulus must be below 2^62");
  for (std::uint64_t d = 2; d < (1u << 21) && BigInt(d) * d <= m; ++d) {
    if (m % d != 0) continue;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(BigInt(d), e);
  }
  if (boost::multiprecision::miller_rabin_test(m, 25)) return std::make_pair(m, 1u);
  BigInt root = boost::multiprecision::sqrt(m);
  if (root * root == m && boost::multiprecision::miller_rabin_test(root, 25)) {
    return std::make_pair(root, 2u);
  }
  return std::nullopt;
}

inline bool is_prime(const BigInt& m) {
  auto pp = prime_power(m);
  return pp && pp->second == 1;
}

}  // namespace structring
