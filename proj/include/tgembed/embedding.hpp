#pragma once

// Totally geodesic embeddings of an Eschenburg space E(a, b) into the
// Bazaikin candidates q^c obtained from the shifted parameters (a + c, b + c).

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tgembed/bazaikin.hpp"
#include "tgembed/error.hpp"
#include "tgembed/eschenburg.hpp"
#include "tgembed/factorize.hpp"
#include "tgembed/integer.hpp"

namespace tgembed {

/// (2(a1+c)+1, 2(a2+c)+1, 2(a3+c)+1, -(2(b2+c)+1), -(2(b3+c)+1)); its sum is 2(b1+c)+1.
inline BazParams candidate_q(const EschParams& e, const Integer& c) {
  const auto& a = e.a();
  const auto& b = e.b();
  return BazParams({2 * (a[0] + c) + 1, 2 * (a[1] + c) + 1, 2 * (a[2] + c) + 1,
                    -(2 * (b[1] + c) + 1), -(2 * (b[2] + c) + 1)});
}

/// d^c_{kl} = gcd(a_i + a_j + 1 + 2c, a_k - b_l), {i, j, k} = {1, 2, 3}; indexed [k][l].
inline std::array<std::array<Integer, 3>, 3> shift_gcds(const EschParams& e, const Integer& c) {
  const auto& a = e.a();
  const auto& b = e.b();
  std::array<std::array<Integer, 3>, 3> d;
  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = detail::complement(k);
    const Integer s = a[i] + a[j] + 1 + 2 * c;
    for (int l = 0; l < 3; ++l) d[k][l] = gcd(s, a[k] - b[l]);
  }
  return d;
}

/// The candidate q^c is a genuine Bazaikin space: E free and every d^c_{kl} == 1.
inline bool nonsingular_shift(const EschParams& e, const Integer& c) {
  if (!is_free(e)) return false;
  for (const auto& row : shift_gcds(e, c))
    for (const auto& d : row)
      if (d != 1) return false;
  return true;
}

/// Closed integer interval [lo, hi].
struct ShiftWindow {
  Integer lo;
  Integer hi;

  bool empty() const { return lo > hi; }
  bool contains(const Integer& c) const { return lo <= c && c <= hi; }
  Integer size() const { return empty() ? Integer(0) : Integer(hi - lo + 1); }
  std::string str() const { return lo.get_str() + " <= c <= " + hi.get_str(); }

  friend bool operator==(const ShiftWindow&, const ShiftWindow&) = default;
};

/// Shifts c with -(a2 + a3 + 1) < 2c < -(b2 + b3 + 1), i.e. those making q^c
/// positively curved. Requires the first chain b3 <= b2 < a3 <= a2 <= a1 < b1.
inline ShiftWindow pc_shift_window(const EschParams& e) {
  if (!satisfies_first_chain(e)) {
    throw NormalFormError("pc_shift_window needs b3 <= b2 < a3 <= a2 <= a1 < b1: " + e.str());
  }
  const auto& a = e.a();
  const auto& b = e.b();
  const Integer lower = -(a[1] + a[2] + 1);  // 2c > lower
  const Integer upper = -(b[1] + b[2] + 1);  // 2c < upper
  return {floor_div(lower, 2) + 1, ceil_div(upper, 2) - 1};
}

struct EmbeddingCertificate {
  EschParams esch;  // base parameters; the embedded copy uses esch shifted by `shift`
  Integer shift;
  BazParams baz;
  bool baz_free = false;
  bool baz_pc = false;
  bool esch_pc = false;
  Integer h6;  // 0 unless baz_free
  std::vector<PairGcdViolation> offending_pairs;

  EschParams shifted_esch() const { return esch.shifted(shift); }
};

/// Evaluates the candidate q^c for E and records every verdict.
inline EmbeddingCertificate certify(const EschParams& e, const Integer& c) {
  EmbeddingCertificate cert{e, c, candidate_q(e, c)};
  cert.baz_free = is_free_baz(cert.baz);
  cert.baz_pc = is_pc_baz(cert.baz);
  cert.esch_pc = is_pc_metric(e);
  if (cert.baz_free) {
    cert.h6 = h6_order(cert.baz);
  } else {
    cert.h6 = 0;
    cert.offending_pairs = freeness_violations(cert.baz);
  }
  return cert;
}

struct WindowReport {
  EschParams esch;  // first-chain labeling the window refers to
  ShiftWindow window;
  std::vector<EmbeddingCertificate> certificates;  // one per c, ascending
  bool any_nonsingular = false;
  std::vector<std::string> notes;
};

namespace detail {

// The cohomogeneity-one family (p, 1, 1), (p + 2, 0, 0) up to a shift t. Its
// window is often quoted as the closed range [-1 - t, -t]; c = -t gives
// q4 + q5 = -2 there, so only -1 - t survives strict positivity.
inline std::optional<std::string> cohomogeneity_one_note(const EschParams& e, const ShiftWindow& w) {
  const auto& a = e.a();
  const auto& b = e.b();
  if (!(a[1] == a[2] && b[1] == b[2] && b[1] == a[2] - 1 && b[0] == a[0] + 2)) return std::nullopt;
  const Integer t = a[2] - 1;
  const Integer quoted_lo = -1 - t, quoted_hi = -t;
  return "cohomogeneity-one family: the range " + quoted_lo.get_str() + " <= c <= " +
         quoted_hi.get_str() + " is sometimes quoted, but c = " + quoted_hi.get_str() +
         " gives q4 + q5 = -2; strict pair-sum positivity yields {" + w.lo.get_str() + ".." +
         w.hi.get_str() + "}";
}

}  // namespace detail

/// Orients E into the first chain (pc_oriented, no shift) and certifies every
/// shift in its positive-curvature window.
inline WindowReport window_scan(const EschParams& e) {
  EschParams oriented = pc_oriented(e);
  WindowReport report{oriented, pc_shift_window(oriented), {}, false, {}};
  for (Integer c = report.window.lo; c <= report.window.hi; ++c) {
    auto cert = certify(oriented, c);
    if (!cert.baz_pc) {
      throw InvariantViolation("window shift c = " + c.get_str() + " not positively curved for " +
                               oriented.str());
    }
    report.any_nonsingular = report.any_nonsingular || cert.baz_free;
    report.certificates.push_back(std::move(cert));
  }
  if (auto note = detail::cohomogeneity_one_note(oriented, report.window)) {
    report.notes.push_back(*note);
  }
  return report;
}

/// P: product over the nine (k, l) of the distinct primes of a_k - b_l that
/// are coprime to a_i + a_j + 1. A prime counts once per pair it qualifies in.
inline Integer coprime_shift_base(const EschParams& e, const FactorOptions& options = {}) {
  if (!is_free(e)) throw DomainError("coprime shifts need a free action: " + e.str(), "not_free");
  const auto& a = e.a();
  const auto& b = e.b();
  Integer product = 1;
  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = detail::complement(k);
    const Integer s = a[i] + a[j] + 1;
    for (int l = 0; l < 3; ++l) {
      const Integer diff = a[k] - b[l];
      if (diff == 0) continue;
      for (const Integer& p : factorize(diff, options).primes()) {
        if (gcd(p, s) == 1) product *= p;
      }
    }
  }
  return product;
}

/// c_mu = sign * 2^(mu - 1) * P^mu; every such shift gives a nonsingular candidate.
inline Integer coprime_shift(const EschParams& e, unsigned long mu, int sign,
                             const FactorOptions& options = {}) {
  if (mu < 1) throw DomainError("coprime_shift needs mu >= 1");
  if (sign != 1 && sign != -1) throw DomainError("coprime_shift sign must be +1 or -1");
  const Integer base = coprime_shift_base(e, options);
  return sign * pow(Integer(2), mu - 1) * pow(base, mu);
}

/// The 6-tuple (2(a+c)+1, -2(b+c)-1) whose sigma3 is 8 * (+/-)|H^6|.
inline std::array<Integer, 6> shifted_six_tuple(const EschParams& e, const Integer& c) {
  const auto& a = e.a();
  const auto& b = e.b();
  return {2 * (a[0] + c) + 1, 2 * (a[1] + c) + 1, 2 * (a[2] + c) + 1,
          -2 * (b[0] + c) - 1, -2 * (b[1] + c) - 1, -2 * (b[2] + c) - 1};
}

/// 8(s3(a) - s3(b)) - 8(s1(a) + 2c + 1)(s2(a) - s2(b)).
inline Integer sigma3_shift_closed_form(const EschParams& e, const Integer& c) {
  const Integer d3 = sigma(3, e.a()) - sigma(3, e.b());
  const Integer d2 = sigma(2, e.a()) - sigma(2, e.b());
  return 8 * d3 - 8 * (sigma(1, e.a()) + 2 * c + 1) * d2;
}

/// Where |sigma3(q_c)| == |sigma3(q_d)| for c != d: everywhere when
/// s2(a) == s2(b), otherwise exactly on c + d == value.
struct CollisionLocus {
  std::optional<Rational> value;  // nullopt means "everywhere"

  bool everywhere() const { return !value.has_value(); }

  bool collides(const Integer& c, const Integer& d) const {
    if (c == d) return true;
    if (everywhere()) return true;
    return Rational(Integer(c + d)) == *value;
  }
};

/// (s3(a) - s3(b)) / (s2(a) - s2(b)) - s1(a) - 1.
inline CollisionLocus collision_locus(const EschParams& e) {
  const Integer d2 = sigma(2, e.a()) - sigma(2, e.b());
  if (d2 == 0) return {std::nullopt};
  Rational v(sigma(3, e.a()) - sigma(3, e.b()), d2);
  v.canonicalize();
  v -= sigma(1, e.a()) + 1;
  return {v};
}

/// n embeddings of E into nonsingular Bazaikin spaces with pairwise distinct
/// |H^6|, taken from the shifts c_mu for mu = 1, 2, ... and both signs.
inline std::vector<EmbeddingCertificate> homotopy_distinct_embeddings(
    const EschParams& e, std::size_t n, const FactorOptions& options = {}) {
  if (!is_free(e)) throw DomainError("distinct embeddings need a free action: " + e.str(), "not_free");
  if (n < 1) throw DomainError("distinct embeddings need n >= 1");
  const Integer base = coprime_shift_base(e, options);
  std::vector<EmbeddingCertificate> out;
  std::set<Integer> seen;
  // Each mu contributes two candidates and at most one pair can collide.
  for (unsigned long mu = 1; out.size() < n; ++mu) {
    if (mu > n + 2) throw InvariantViolation("more |H^6| collisions than the collision locus allows");
    const Integer magnitude = pow(Integer(2), mu - 1) * pow(base, mu);
    for (int sign : {1, -1}) {
      if (out.size() == n) break;
      auto cert = certify(e, sign * magnitude);
      if (!cert.baz_free) {
        throw InvariantViolation("coprime shift c = " + cert.shift.get_str() +
                                 " produced a singular candidate for " + e.str());
      }
      if (seen.insert(cert.h6).second) out.push_back(std::move(cert));
    }
  }
  return out;
}

struct DualEmbedding {
  EschParams esch;  // (b + c, a + c), used with shift 0
  BazParams baz;    // (qsum, -q4, -q5, -q2, -q3)
};

/// E(b, a) embeds into (qsum, -q4, -q5, -q2, -q3) whenever E(a, b) embeds into q^c.
inline DualEmbedding dual_embedding(const EschParams& e, const Integer& c) {
  if (!nonsingular_shift(e, c)) {
    throw SingularCandidateError("dual embedding needs a nonsingular candidate; c = " + c.get_str() +
                                 " is singular for " + e.str());
  }
  const BazParams q = candidate_q(e, c);
  const EschParams s = e.shifted(c);
  return {EschParams(s.b(), s.a()), BazParams({q.qsum(), -q[3], -q[4], -q[1], -q[2]})};
}

}  // namespace tgembed
