#pragma once

// Integer factorization: trial division, then Pollard-Brent rho with a
// deterministic seed, each cofactor confirmed by a primality test. Gives up
// with FactorizationIncomplete rather than returning a wrong answer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tgembed/error.hpp"
#include "tgembed/integer.hpp"

namespace tgembed {

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent); primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Integer value() const {
    Integer v = sign;
    for (const auto& f : factors) v *= pow(f.prime, f.exponent);
    return v;
  }

  std::vector<Integer> primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorOptions {
  /// Trial division runs over all primes up to this bound.
  std::uint64_t trial_bound = 1'000'000;
  /// Composite cofactors with more decimal digits than this are not attempted.
  std::size_t max_digits = 60;
  /// Upper bound on rho iterations per attempt.
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
  /// Number of rho attempts (distinct polynomials) per cofactor.
  int rho_attempts = 16;
  std::uint64_t seed = 0x5eed'0f'c0ffeeULL;
};

/// Strong probable-prime test (GMP's Baillie-PSW plus Miller-Rabin rounds);
/// deterministic below 2^64.
inline bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

namespace detail {

inline std::size_t decimal_digits(const Integer& n) {
  Integer a = abs(n);
  return a.get_str().size();
}

// Brent's cycle-finding variant of Pollard rho on x -> x^2 + c (mod n).
// Returns a nontrivial factor of n, or 0 when the budget runs out.
inline Integer rho_brent(const Integer& n, const Integer& c, const Integer& start,
                         std::uint64_t budget) {
  const auto step = [&](const Integer& v) {
    Integer w = v * v + c;
    return mod(w, n);
  };
  Integer y = start, x, ys, q = 1, g = 1;
  const std::uint64_t m = 128;
  std::uint64_t r = 1, used = 0;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = step(y);
        q = mod(q * abs(x - y), n);
      }
      g = gcd(q, n);
      k += m;
    }
    used += r;
    r *= 2;
    if (g == 1 && used > budget) return 0;
  }
  if (g == n) {
    // Backtrack from the last saved point one step at a time.
    do {
      ys = step(ys);
      g = gcd(x - ys, n);
    } while (g == 1);
  }
  return (g == n) ? Integer(0) : g;
}

}  // namespace detail

/// Factors a nonzero integer. Throws DomainError for 0 and
/// FactorizationIncomplete when the effort bound is exceeded.
inline Factorization factorize(const Integer& n, const FactorOptions& options = {}) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");

  Factorization result;
  result.sign = sgn(n) < 0 ? -1 : 1;
  Integer rest = abs(n);
  std::vector<Integer> found;

  const auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      found.emplace_back(p);
    }
  };

  strip(2);
  std::uint64_t p = 3;
  for (; p <= options.trial_bound && rest > 1; p += 2) {
    if (Integer(p) * p > rest) break;
    strip(static_cast<unsigned long>(p));
  }

  if (rest > 1) {
    // Every prime below p has been removed, so a remainder below p^2 is prime.
    std::vector<Integer> pending;
    if (Integer(p) * p > rest) {
      found.push_back(rest);
    } else {
      pending.push_back(rest);
    }

    std::mt19937_64 rng(options.seed);
    while (!pending.empty()) {
      Integer m = pending.back();
      pending.pop_back();
      if (is_probable_prime(m)) {
        found.push_back(m);
        continue;
      }
      if (detail::decimal_digits(m) > options.max_digits) {
        throw FactorizationIncomplete("factorize: composite cofactor " + m.get_str() +
                                          " exceeds " + std::to_string(options.max_digits) +
                                          " digits",
                                      m.get_str());
      }
      Integer d = 0;
      for (int attempt = 0; attempt < options.rho_attempts && d == 0; ++attempt) {
        Integer c = Integer(static_cast<unsigned long>(rng() % 1'000'003 + 1));
        Integer start = Integer(static_cast<unsigned long>(rng() % 1'000'003 + 2));
        d = detail::rho_brent(m, c, start, options.rho_iterations);
      }
      if (d == 0) {
        throw FactorizationIncomplete("factorize: rho did not split " + m.get_str(), m.get_str());
      }
      pending.push_back(d);
      pending.push_back(m / d);
    }
  }

  std::sort(found.begin(), found.end());
  for (const Integer& f : found) {
    if (!result.factors.empty() && result.factors.back().prime == f) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({f, 1});
    }
  }
  return result;
}

}  // namespace tgembed
