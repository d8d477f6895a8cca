#pragma once

// Eschenburg parameters (a, b): two integer triples with equal sums
// describing the circle action z * A = diag(z^a) A diag(z^-b) on SU(3).

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "tgembed/error.hpp"
#include "tgembed/integer.hpp"

namespace tgembed {

using Triple = std::array<Integer, 3>;

class EschParams {
 public:
  /// Throws ValidationError unless sum(a) == sum(b).
  EschParams(Triple a, Triple b) : a_(std::move(a)), b_(std::move(b)) {
    const Integer sa = a_[0] + a_[1] + a_[2];
    const Integer sb = b_[0] + b_[1] + b_[2];
    if (sa != sb) {
      throw ValidationError("Eschenburg parameters need equal sums: sum(a) = " + sa.get_str() +
                            ", sum(b) = " + sb.get_str());
    }
  }

  const Triple& a() const noexcept { return a_; }
  const Triple& b() const noexcept { return b_; }

  Integer a_min() const { return std::min({a_[0], a_[1], a_[2]}); }
  Integer a_max() const { return std::max({a_[0], a_[1], a_[2]}); }
  Integer sum() const { return a_[0] + a_[1] + a_[2]; }

  /// (a + c, b + c): isometric to the original.
  EschParams shifted(const Integer& c) const {
    Triple a = a_, b = b_;
    for (auto& x : a) x += c;
    for (auto& x : b) x += c;
    return {a, b};
  }

  /// (-a, -b): the reparameterization z -> conj(z).
  EschParams negated() const {
    Triple a = a_, b = b_;
    for (auto& x : a) x = -x;
    for (auto& x : b) x = -x;
    return {a, b};
  }

  std::string str() const { return "a=" + tuple_string(a_) + " b=" + tuple_string(b_); }

  friend bool operator==(const EschParams& l, const EschParams& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

  /// Lexicographic on (a1, a2, a3, b1, b2, b3).
  friend std::strong_ordering operator<=>(const EschParams& l, const EschParams& r) {
    for (std::size_t i = 0; i < 6; ++i) {
      const Integer& x = i < 3 ? l.a_[i] : l.b_[i - 3];
      const Integer& y = i < 3 ? r.a_[i] : r.b_[i - 3];
      const int c = cmp(x, y);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const EschParams& e) { return os << e.str(); }

 private:
  Triple a_;
  Triple b_;
};

namespace detail {

inline constexpr std::array<std::array<int, 3>, 6> kS3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

/// The two indices complementary to k in {0, 1, 2}.
inline constexpr std::array<int, 2> complement(int k) {
  return k == 0 ? std::array<int, 2>{1, 2} : k == 1 ? std::array<int, 2>{0, 2}
                                                    : std::array<int, 2>{0, 1};
}

inline bool below(const Integer& x, const EschParams& e) { return x < e.a_min(); }
inline bool above(const Integer& x, const EschParams& e) { return x > e.a_max(); }

}  // namespace detail

/// Freeness of the circle action: gcd(a1 - b_s(1), a2 - b_s(2)) == 1 for all s in S3.
inline bool is_free(const EschParams& e) {
  const auto& a = e.a();
  const auto& b = e.b();
  for (const auto& s : detail::kS3) {
    if (gcd(a[0] - b[s[0]], a[1] - b[s[1]]) != 1) return false;
  }
  return true;
}

/// Same predicate as is_free, decided by enumerating candidate common
/// divisors m >= 2 instead of computing gcds. Intended for small entries.
inline bool is_free_oracle(const EschParams& e) {
  const auto& a = e.a();
  const auto& b = e.b();
  for (const auto& s : detail::kS3) {
    const Integer d1 = abs(Integer(a[0] - b[s[0]]));
    const Integer d2 = abs(Integer(a[1] - b[s[1]]));
    if (d1 == 0 && d2 == 0) return false;
    // Divisors of 0 are unrestricted, so the bound comes from the other side.
    const Integer bound = d1 == 0 ? d2 : d2 == 0 ? d1 : std::min(d1, d2);
    for (Integer m = 2; m <= bound; ++m) {
      if (divides(m, d1) && divides(m, d2)) return false;
    }
  }
  return true;
}

/// Order of the ineffective kernel: gcd over all a_i - b_j (0 iff all vanish).
inline Integer kernel_order(const EschParams& e) {
  Integer g = 0;
  for (const auto& x : e.a())
    for (const auto& y : e.b()) g = gcd(g, x - y);
  return g;
}

/// Removes the ineffective kernel: subtract t = a1 mod g and divide by g.
inline EschParams effectivize(const EschParams& e) {
  const Integer g = kernel_order(e);
  if (g == 0) throw DegenerateActionError("effectivize: all differences a_i - b_j vanish");
  const Integer t = mod(e.a()[0], g);
  Triple a = e.a(), b = e.b();
  for (auto& x : a) x = (x - t) / g;
  for (auto& x : b) x = (x - t) / g;
  return {a, b};
}

/// Isometry-canonical representative: a sorted descending, (b2, b3) sorted
/// descending, b1 fixed, then shifted so that min(a) == 0.
inline EschParams canonicalize(const EschParams& e) {
  Triple a = e.a(), b = e.b();
  std::sort(a.begin(), a.end(), std::greater<>());
  if (b[1] < b[2]) std::swap(b[1], b[2]);
  return EschParams(a, b).shifted(-a[2]);
}

/// Every b_i lies strictly outside [min(a), max(a)].
inline bool admits_positive_curvature(const EschParams& e) {
  for (const auto& x : e.b()) {
    if (!detail::below(x, e) && !detail::above(x, e)) return false;
  }
  return true;
}

/// Positive curvature for the fixed metric and labeling: additionally b2
/// and b3 lie on the same side of [min(a), max(a)].
inline bool is_pc_metric(const EschParams& e) {
  if (!admits_positive_curvature(e)) return false;
  const auto& b = e.b();
  return detail::below(b[1], e) == detail::below(b[2], e);
}

/// b3 <= b2 < a3 <= a2 <= a1 < b1, on the labeling as given.
inline bool satisfies_first_chain(const EschParams& e) {
  const auto& a = e.a();
  const auto& b = e.b();
  return b[2] <= b[1] && b[1] < a[2] && a[2] <= a[1] && a[1] <= a[0] && a[0] < b[0];
}

/// Relabels a positively curved space into the first chain without shifting:
/// sorts a and (b2, b3), negating all entries first when b2, b3 lie above a.
inline EschParams pc_oriented(const EschParams& e) {
  if (!is_pc_metric(e)) throw NotPositivelyCurvedError("not positively curved: " + e.str());
  const EschParams base = detail::above(e.b()[1], e) ? e.negated() : e;
  Triple a = base.a(), b = base.b();
  std::sort(a.begin(), a.end(), std::greater<>());
  if (b[1] < b[2]) std::swap(b[1], b[2]);
  return {a, b};
}

/// Canonical first-chain representative: pc_oriented followed by the shift to min(a) == 0.
inline EschParams pc_normal_form(const EschParams& e) { return canonicalize(pc_oriented(e)); }

inline Integer sigma(int k, const Triple& t) { return elementary_symmetric(k, t); }

/// Order of H^4: |sigma2(a) - sigma2(b)|. Zero for some degenerate inputs.
inline Integer h4_order(const EschParams& e) {
  return abs(Integer(sigma(2, e.a()) - sigma(2, e.b())));
}

/// Cohomogeneity-one family a = (p, 1, 1), b = (p + 2, 0, 0), p >= 1.
inline EschParams family_cohomogeneity_one(const Integer& p) {
  if (p < 1) throw DomainError("cohomogeneity-one family needs p >= 1, got " + p.get_str());
  return {{p, 1, 1}, {p + 2, 0, 0}};
}

enum class FamilyVariant { A, B };

/// Cohomogeneity-two counterexample families, period 15015 = 3*5*7*11*13.
inline EschParams family_cohomogeneity_two(FamilyVariant variant, const Integer& k) {
  if (k < 0) throw DomainError("cohomogeneity-two family needs k >= 0, got " + k.get_str());
  const Integer base = 15015 * k + (variant == FamilyVariant::A ? 39 : 12909);
  return {{base, 0, 0}, {base + 16, -3, -13}};
}

}  // namespace tgembed
