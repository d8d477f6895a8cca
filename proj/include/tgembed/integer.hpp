#pragma once

// Exact integer primitives. All arithmetic in the library goes through GMP:
// inputs are small but intermediates (shift values built from prime powers)
// are not.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgembed/error.hpp"

namespace tgembed {

using Integer = mpz_class;
using Rational = mpq_class;

/// Non-negative greatest common divisor; gcd(0, 0) == 0.
inline Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

inline bool divides(const Integer& m, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

/// Floor and ceiling division for a positive divisor.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// Non-negative residue of n modulo m > 0.
inline Integer mod(const Integer& n, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// Elementary symmetric polynomial: the sum over all k-subsets of `xs` of the
/// product of their entries. sigma_0 == 1.
inline Integer elementary_symmetric(int k, std::span<const Integer> xs) {
  if (k < 0 || static_cast<std::size_t>(k) > xs.size()) {
    throw DomainError("elementary_symmetric: k = " + std::to_string(k) +
                      " outside [0, " + std::to_string(xs.size()) + "]");
  }
  // e[j] holds sigma_j of the prefix processed so far.
  std::vector<Integer> e(static_cast<std::size_t>(k) + 1, Integer(0));
  e[0] = 1;
  for (const Integer& x : xs) {
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[static_cast<std::size_t>(k)];
}

inline Integer elementary_symmetric(int k, std::initializer_list<Integer> xs) {
  return elementary_symmetric(k, std::span<const Integer>(xs.begin(), xs.size()));
}

template <std::size_t N>
Integer elementary_symmetric(int k, const std::array<Integer, N>& xs) {
  return elementary_symmetric(k, std::span<const Integer>(xs));
}

/// Parses an optionally signed decimal integer; throws ValidationError.
inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = s.size() > start;
  for (std::size_t i = start; ok && i < s.size(); ++i) ok = s[i] >= '0' && s[i] <= '9';
  if (!ok) throw ValidationError("not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// Renders a tuple as "(x1,x2,...)".
template <std::size_t N>
std::string tuple_string(const std::array<Integer, N>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ',';
    out += xs[i].get_str();
  }
  return out + ")";
}

}  // namespace tgembed
