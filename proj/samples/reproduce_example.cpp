// Walks through one Eschenburg space: its invariants, the candidate Bazaikin
// spaces along the shift parameter, the positive-curvature window, and a
// few homotopy-distinct embeddings.

#include <iostream>

#include "tgembed/tgembed.hpp"

int main() {
  using namespace tgembed;

  std::cout << std::boolalpha;
  const EschParams e({2, 0, 0}, {15, -2, -11});
  std::cout << e << "\n"
            << "  free: " << is_free(e) << "  positively curved: " << is_pc_metric(e)
            << "  |H^4| = " << h4_order(e) << "\n\n";

  for (int c : {0, -1, 2, 5}) {
    const EmbeddingCertificate cert = certify(e, c);
    std::cout << "c = " << c << ": " << cert.baz << (cert.baz_free ? "  nonsingular" : "  singular")
              << (cert.baz_pc ? ", positively curved" : "");
    if (cert.baz_free) std::cout << ", |H^6| = " << cert.h6;
    for (const auto& v : cert.offending_pairs) {
      std::cout << "\n    gcd(" << v.left.str() << ", " << v.right.str() << ") = " << v.gcd;
    }
    std::cout << '\n';
  }

  const WindowReport report = window_scan(e);
  std::cout << "\npositive-curvature window: " << report.window.str() << '\n';
  for (const auto& cert : report.certificates) {
    std::cout << "  c = " << cert.shift << (cert.baz_free ? "  nonsingular" : "  singular") << '\n';
  }

  std::cout << "\nc_1 = " << coprime_shift(e, 1, 1) << '\n';
  for (const auto& cert : homotopy_distinct_embeddings(e, 3)) {
    std::cout << "  |H^6| = " << cert.h6 << " at c with " << cert.shift.get_str().size() << " digits\n";
  }
  const CollisionLocus locus = collision_locus(e);
  if (!locus.everywhere()) std::cout << "|H^6| collides only when c + d = " << *locus.value << '\n';

  const SurveyRow row = survey_row(EschParams({39, 0, 0}, {55, -3, -13}));
  std::cout << '\n' << row.esch << ": window " << row.window.str()
            << (row.is_counterexample ? ", every candidate singular\n" : "\n");
  return 0;
}
