#pragma once

// Bazaikin parameters q = (q1, ..., q5) and the ten Eschenburg spaces that
// sit inside each Bazaikin space as totally geodesic submanifolds.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "tgembed/error.hpp"
#include "tgembed/eschenburg.hpp"
#include "tgembed/integer.hpp"

namespace tgembed {

using Quintuple = std::array<Integer, 5>;

/// Integral 5-tuple. Parity is a predicate input, not an invariant, so that
/// singular candidates can be represented and reported.
class BazParams {
 public:
  explicit BazParams(Quintuple q) : q_(std::move(q)) {}

  const Quintuple& q() const noexcept { return q_; }
  const Integer& operator[](std::size_t i) const { return q_[i]; }

  Integer qsum() const { return q_[0] + q_[1] + q_[2] + q_[3] + q_[4]; }

  bool all_odd() const {
    return std::all_of(q_.begin(), q_.end(), [](const Integer& x) { return is_odd(x); });
  }

  std::string str() const { return "q=" + tuple_string(q_); }

  friend bool operator==(const BazParams&, const BazParams&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BazParams& b) { return os << b.str(); }

 private:
  Quintuple q_;
};

/// 1-based index pair {first < second} into q.
struct IndexPair {
  int first = 0;
  int second = 0;

  std::string str() const {
    return "q" + std::to_string(first) + "+q" + std::to_string(second);
  }
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// A disjoint pair of pair-sums whose gcd is not 2.
struct PairGcdViolation {
  IndexPair left;
  IndexPair right;
  Integer gcd;
};

namespace detail {

/// The 15 unordered pairs of disjoint unordered index pairs, 0-based.
inline const std::array<std::array<int, 4>, 15>& disjoint_pair_pairs() {
  static const auto table = [] {
    std::array<std::array<int, 4>, 15> out{};
    std::size_t n = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = i + 1; k < 5; ++k)
          for (int l = k + 1; l < 5; ++l)
            if (k != j && l != j) out[n++] = {i, j, k, l};
    return out;
  }();
  return table;
}

}  // namespace detail

/// Disjoint pair-sums (q_i + q_j, q_k + q_l) with gcd != 2. Parity is not checked here.
inline std::vector<PairGcdViolation> freeness_violations(const BazParams& bz) {
  std::vector<PairGcdViolation> out;
  for (const auto& [i, j, k, l] : detail::disjoint_pair_pairs()) {
    Integer g = gcd(bz[i] + bz[j], bz[k] + bz[l]);
    if (g != 2) out.push_back({{i + 1, j + 1}, {k + 1, l + 1}, std::move(g)});
  }
  return out;
}

/// All q_i odd and gcd(q_i + q_j, q_k + q_l) == 2 for the 15 disjoint pair-pairs.
inline bool is_free_baz(const BazParams& bz) {
  if (!bz.all_odd()) return false;
  for (const auto& [i, j, k, l] : detail::disjoint_pair_pairs()) {
    if (gcd(bz[i] + bz[j], bz[k] + bz[l]) != 2) return false;
  }
  return true;
}

/// Same predicate evaluated literally over all 120 permutations of S5.
inline bool is_free_baz_oracle(const BazParams& bz) {
  if (!bz.all_odd()) return false;
  std::array<int, 5> s{0, 1, 2, 3, 4};
  do {
    if (gcd(bz[s[0]] + bz[s[1]], bz[s[2]] + bz[s[3]]) != 2) return false;
  } while (std::next_permutation(s.begin(), s.end()));
  return true;
}

/// All ten pair sums strictly positive, or all strictly negative.
inline bool is_pc_baz(const BazParams& bz) {
  int positive = 0, negative = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const int s = sgn(Integer(bz[i] + bz[j]));
      positive += s > 0;
      negative += s < 0;
    }
  }
  return positive == 10 || negative == 10;
}

/// sigma3 of the 6-tuple (q1, ..., q5, -qsum).
inline Integer sigma3_extended(const BazParams& bz) {
  const std::array<Integer, 6> ext{bz[0], bz[1], bz[2], bz[3], bz[4], -bz.qsum()};
  return elementary_symmetric(3, ext);
}

/// Order of H^6: |sigma3(q1, ..., q5, -qsum)| / 8, defined for odd q.
inline Integer h6_order(const BazParams& bz) {
  if (!bz.all_odd()) throw DomainError("h6_order needs all q_i odd: " + bz.str(), "even_entry");
  const Integer s = sigma3_extended(bz);
  if (!divides(8, s)) {
    throw InvariantViolation("sigma3 = " + s.get_str() + " not divisible by 8 for " + bz.str());
  }
  return abs(s) / 8;
}

struct Submanifold {
  IndexPair pair;  // the two q's entering b with a minus sign
  EschParams esch;
};

/// The ten embedded Eschenburg spaces, one per 2-subset {l, m}:
/// a = ((q_i - 1)/2 over the complement), b = ((qsum - 1)/2, -(q_l + 1)/2, -(q_m + 1)/2).
/// Parameters are returned raw (not canonicalized).
inline std::vector<Submanifold> submanifolds(const BazParams& bz) {
  if (!bz.all_odd()) throw DomainError("submanifolds needs all q_i odd: " + bz.str(), "even_entry");
  const Integer half_q = (bz.qsum() - 1) / 2;
  std::vector<Submanifold> out;
  out.reserve(10);
  for (int l = 0; l < 5; ++l) {
    for (int m = l + 1; m < 5; ++m) {
      Triple a;
      std::size_t n = 0;
      for (int i = 0; i < 5; ++i) {
        if (i != l && i != m) a[n++] = (bz[i] - 1) / 2;
      }
      Triple b{half_q, -(bz[l] + 1) / 2, -(bz[m] + 1) / 2};
      out.push_back({{l + 1, m + 1}, EschParams(a, b)});
    }
  }
  return out;
}

/// Number of isometry classes (distinct canonical forms) among the ten.
inline std::size_t distinct_submanifold_count(const BazParams& bz) {
  std::set<EschParams> seen;
  for (const auto& s : submanifolds(bz)) seen.insert(canonicalize(s.esch));
  return seen.size();
}

}  // namespace tgembed
