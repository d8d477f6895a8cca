#pragma once

// Batch verification and search over positively curved Eschenburg spaces
// whose whole positive-curvature window consists of singular candidates.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tgembed/embedding.hpp"
#include "tgembed/error.hpp"
#include "tgembed/eschenburg.hpp"
#include "tgembed/integer.hpp"

namespace tgembed {

struct SurveyRow {
  EschParams esch;
  ShiftWindow window;
  std::vector<bool> verdicts;  // nonsingular? for c = window.lo + i
  bool is_counterexample = false;
  Integer h4;
  std::string label;
};

/// One mismatch found by a batch verification.
struct Mismatch {
  std::string where;
  std::string expected;
  std::string actual;
};

template <class T>
struct Checked {
  T value;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

inline SurveyRow survey_row(const EschParams& e, std::string label = {}) {
  const WindowReport report = window_scan(e);
  SurveyRow row{report.esch, report.window, {}, false, h4_order(report.esch), std::move(label)};
  row.verdicts.reserve(report.certificates.size());
  for (const auto& cert : report.certificates) row.verdicts.push_back(cert.baz_free);
  row.is_counterexample = !report.window.empty() && !report.any_nonsingular;
  return row;
}

/// The candidate q^c written with c symbolic, e.g. "(79 + 2c, 1 + 2c, 1 + 2c, 5 - 2c, 25 - 2c)".
inline std::string q_formula(const EschParams& e) {
  const auto& a = e.a();
  const auto& b = e.b();
  std::string out = "(";
  for (int i = 0; i < 3; ++i) out += Integer(2 * a[i] + 1).get_str() + " + 2c, ";
  out += Integer(-(2 * b[1] + 1)).get_str() + " - 2c, ";
  out += Integer(-(2 * b[2] + 1)).get_str() + " - 2c)";
  return out;
}

struct Table1Row {
  std::array<long, 3> a;
  std::array<long, 3> b;
  const char* q_formula;
  long c_lo;
  long c_hi;
};

// Positively curved Eschenburg spaces with no nonsingular candidate in the window.
inline constexpr std::array<Table1Row, 9> kTable1 = {{
    {{39, 0, 0}, {55, -3, -13}, "(79 + 2c, 1 + 2c, 1 + 2c, 5 - 2c, 25 - 2c)", 0, 7},
    {{77, 2, 0}, {93, -3, -11}, "(155 + 2c, 5 + 2c, 1 + 2c, 5 - 2c, 21 - 2c)", -1, 6},
    {{171, 2, 0}, {187, -3, -11}, "(343 + 2c, 5 + 2c, 1 + 2c, 5 - 2c, 21 - 2c)", -1, 6},
    {{225, 4, 0}, {247, -5, -13}, "(451 + 2c, 9 + 2c, 1 + 2c, 9 - 2c, 25 - 2c)", -2, 8},
    {{281, 3, 0}, {294, -2, -8}, "(563 + 2c, 7 + 2c, 1 + 2c, 3 - 2c, 15 - 2c)", -1, 4},
    {{309, 6, 0}, {323, -3, -5}, "(619 + 2c, 13 + 2c, 1 + 2c, 5 - 2c, 9 - 2c)", -3, 3},
    {{664, 2, 0}, {678, -3, -9}, "(1329 + 2c, 5 + 2c, 1 + 2c, 5 - 2c, 17 - 2c)", -1, 5},
    {{827, 4, 0}, {843, -3, -9}, "(1655 + 2c, 9 + 2c, 1 + 2c, 5 - 2c, 17 - 2c)", -2, 5},
    {{12909, 0, 0}, {12925, -3, -13}, "(25819 + 2c, 1 + 2c, 1 + 2c, 5 - 2c, 25 - 2c)", 0, 7},
}};

inline EschParams table1_esch(const Table1Row& row) {
  return {{row.a[0], row.a[1], row.a[2]}, {row.b[0], row.b[1], row.b[2]}};
}

namespace detail {

inline void expect(std::vector<Mismatch>& out, bool cond, const std::string& where,
                   const std::string& expected, const std::string& actual) {
  if (!cond) out.push_back({where, expected, actual});
}

inline std::string flag(bool v) { return v ? "true" : "false"; }

// Shared checks for a row that must be a free, positively curved counterexample.
inline void expect_counterexample(std::vector<Mismatch>& out, const std::string& where,
                                  const EschParams& e, const SurveyRow& row) {
  expect(out, is_free(e), where + ": free", "true", "false");
  expect(out, is_pc_metric(e), where + ": positively curved", "true", "false");
  for (std::size_t i = 0; i < row.verdicts.size(); ++i) {
    const Integer c = row.window.lo + static_cast<unsigned long>(i);
    expect(out, !row.verdicts[i], where + ": singular at c = " + c.get_str(), "singular",
           "nonsingular");
  }
  expect(out, row.is_counterexample, where + ": counterexample", "true", flag(row.is_counterexample));
}

}  // namespace detail

/// Recomputes every row of the counterexample table and compares windows and
/// symbolic candidates against the recorded values.
inline Checked<std::vector<SurveyRow>> verify_table1() {
  Checked<std::vector<SurveyRow>> result;
  for (std::size_t r = 0; r < kTable1.size(); ++r) {
    const auto& ref = kTable1[r];
    const std::string where = "row " + std::to_string(r + 1);
    const EschParams e = table1_esch(ref);
    if (!is_pc_metric(e)) {
      result.mismatches.push_back({where + ": positively curved", "true", "false"});
      continue;
    }
    SurveyRow row = survey_row(e, where);
    const ShiftWindow expected{ref.c_lo, ref.c_hi};
    detail::expect(result.mismatches, row.esch == e, where + ": first-chain labeling", e.str(),
                   row.esch.str());
    detail::expect(result.mismatches, row.window == expected, where + ": window", expected.str(),
                   row.window.str());
    detail::expect(result.mismatches, q_formula(e) == ref.q_formula, where + ": q^c", ref.q_formula,
                   q_formula(e));
    detail::expect_counterexample(result.mismatches, where, e, row);
    result.value.push_back(std::move(row));
  }
  return result;
}

/// Both cohomogeneity-two families for 0 <= k <= k_max (A rows first).
inline Checked<std::vector<SurveyRow>> verify_infinite_families(long k_max) {
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  Checked<std::vector<SurveyRow>> result;
  for (auto variant : {FamilyVariant::A, FamilyVariant::B}) {
    const std::string name = variant == FamilyVariant::A ? "A" : "B";
    for (long k = 0; k <= k_max; ++k) {
      const std::string where = name + " k=" + std::to_string(k);
      const EschParams e = family_cohomogeneity_two(variant, k);
      if (!is_pc_metric(e)) {
        result.mismatches.push_back({where + ": positively curved", "true", "false"});
        continue;
      }
      SurveyRow row = survey_row(e, where);
      detail::expect_counterexample(result.mismatches, where, e, row);
      if (k == 0) {
        const EschParams table = table1_esch(variant == FamilyVariant::A ? kTable1.front() : kTable1.back());
        detail::expect(result.mismatches, e == table, where + ": table row", table.str(), e.str());
      }
      result.value.push_back(std::move(row));
    }
  }
  return result;
}

struct CohomOneEntry {
  Integer p;
  EmbeddingCertificate certificate;  // at c = -1
  ShiftWindow window;
  std::vector<std::string> notes;
};

/// For 1 <= p <= p_max: the shift c = -1 of (p, 1, 1), (p + 2, 0, 0) gives the
/// nonsingular, positively curved q = (2p - 1, 1, 1, 1, 1).
inline Checked<std::vector<CohomOneEntry>> verify_cohomogeneity_one(long p_max) {
  if (p_max < 1) throw DomainError("p_max must be >= 1");
  Checked<std::vector<CohomOneEntry>> result;
  auto& bad = result.mismatches;
  for (long p = 1; p <= p_max; ++p) {
    const std::string where = "p=" + std::to_string(p);
    const EschParams e = family_cohomogeneity_one(p);
    const WindowReport report = window_scan(e);
    CohomOneEntry entry{p, certify(e, -1), report.window, report.notes};
    const BazParams expected({2 * p - 1, 1, 1, 1, 1});
    detail::expect(bad, entry.certificate.baz == expected, where + ": q", expected.str(),
                   entry.certificate.baz.str());
    detail::expect(bad, entry.certificate.baz_free, where + ": nonsingular", "true", "false");
    detail::expect(bad, entry.certificate.baz_pc, where + ": positively curved", "true", "false");
    detail::expect(bad, report.window == ShiftWindow{-1, -1}, where + ": window", "-1 <= c <= -1",
                   report.window.str());
    detail::expect(bad, !report.notes.empty(), where + ": window note", "present", "missing");
    result.value.push_back(std::move(entry));
  }
  return result;
}

struct ScanStats {
  std::uint64_t total = 0;  // free, positively curved normal forms in the box
  std::uint64_t embeddable = 0;
  std::uint64_t counterexamples = 0;

  friend bool operator==(const ScanStats&, const ScanStats&) = default;
};

struct ScanResult {
  ScanStats stats;
  std::vector<SurveyRow> rows;  // counterexamples, by (h4, parameters), at most `limit`
};

struct ScanOptions {
  unsigned workers = 1;
  std::optional<long> only_a1;  // restrict to a single value of a1
};

namespace detail {

// Visits every first-chain normal form a = (a1, a2, 0), b3 <= b2 < 0 <= a2 <= a1 < b1
// with all |entries| <= max_abs and a1 in the given shard.
template <class Visit>
void enumerate_normal_forms(long max_abs, unsigned shard, unsigned shards,
                            const std::optional<long>& only_a1, Visit&& visit) {
  for (long a1 = 0; a1 <= max_abs; ++a1) {
    if (static_cast<unsigned long>(a1) % shards != shard) continue;
    if (only_a1 && *only_a1 != a1) continue;
    for (long a2 = 0; a2 <= a1; ++a2) {
      for (long b2 = -1; b2 >= -max_abs; --b2) {
        for (long b3 = b2; b3 >= -max_abs; --b3) {
          const long b1 = a1 + a2 - b2 - b3;
          if (b1 > max_abs) break;  // b1 grows as b3 decreases
          if (b1 <= a1) continue;
          visit(EschParams({a1, a2, 0}, {b1, b2, b3}));
        }
      }
    }
  }
}

}  // namespace detail

/// Exhaustive search of free, positively curved isometry classes whose
/// first-chain normal form has all entries bounded by max_abs. Results do
/// not depend on the number of workers.
inline ScanResult scan_box(long max_abs, std::size_t limit, const ScanOptions& options = {}) {
  if (max_abs < 1) throw DomainError("max_abs must be >= 1");
  if (limit < 1) throw DomainError("limit must be >= 1");
  const unsigned shards = std::max(1u, options.workers);
  std::vector<ScanResult> partial(shards);

  // std::function rather than the closure type: GCC 11 rejects jthread over a local lambda here.
  const std::function<void(unsigned)> run_shard = [&](unsigned shard) {
    ScanResult& out = partial[shard];
    detail::enumerate_normal_forms(max_abs, shard, shards, options.only_a1, [&](const EschParams& e) {
      if (!is_free(e)) return;
      ++out.stats.total;
      const ShiftWindow w = pc_shift_window(e);
      for (Integer c = w.lo; c <= w.hi; ++c) {
        if (nonsingular_shift(e, c)) {
          ++out.stats.embeddable;
          return;
        }
      }
      ++out.stats.counterexamples;
      out.rows.push_back(survey_row(e));
    });
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) threads.emplace_back(run_shard, s);
  }

  ScanResult merged;
  for (auto& part : partial) {
    merged.stats.total += part.stats.total;
    merged.stats.embeddable += part.stats.embeddable;
    merged.stats.counterexamples += part.stats.counterexamples;
    for (auto& row : part.rows) merged.rows.push_back(std::move(row));
  }
  std::sort(merged.rows.begin(), merged.rows.end(), [](const SurveyRow& l, const SurveyRow& r) {
    if (l.h4 != r.h4) return l.h4 < r.h4;
    return l.esch < r.esch;
  });
  if (merged.rows.size() > limit) merged.rows.erase(merged.rows.begin() + static_cast<std::ptrdiff_t>(limit), merged.rows.end());
  return merged;
}

}  // namespace tgembed
