#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"
#include "tgembed/tgembed.hpp"

namespace tgembed::cli {
namespace {

template <std::size_t N>
std::array<Integer, N> parse_tuple(const std::string& text, const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != N) {
    throw ValidationError("--" + name + " expects " + std::to_string(N) + " comma-separated integers, got '" +
                          text + "'");
  }
  std::array<Integer, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_integer(parts[i]);
  return out;
}

struct Options {
  std::string format = "text";
  std::uint64_t seed = FactorOptions{}.seed;
  std::uint64_t factor_bound = FactorOptions{}.trial_bound;
  std::size_t factor_digits = FactorOptions{}.max_digits;

  std::string a, b, q, c;
  unsigned long mu_max = 3;
  std::size_t n = 3;
  long k_max = 10;
  long p_max = 10;
  long max_abs = 60;
  std::size_t limit = 20;
  unsigned workers = 1;

  FactorOptions factor() const {
    FactorOptions f;
    f.seed = seed;
    f.trial_bound = factor_bound;
    f.max_digits = factor_digits;
    return f;
  }

  EschParams esch() const { return EschParams(parse_tuple<3>(a, "a"), parse_tuple<3>(b, "b")); }
  BazParams baz() const { return BazParams(parse_tuple<5>(q, "q")); }
  Integer shift() const { return parse_integer(c); }
};

Json esch_input(const Options& o) { return {{"a", o.a}, {"b", o.b}}; }

void verify_esch(const Options& o, Report& r) {
  r.input = esch_input(o);
  const EschParams e = o.esch();
  const EschParams canon = canonicalize(e);
  const Integer g = kernel_order(e);
  Json rec = {
      {"a", tuple_to_json(e.a())},
      {"b", tuple_to_json(e.b())},
      {"free", is_free(e)},
      {"admits_positive_curvature", admits_positive_curvature(e)},
      {"pc_metric", is_pc_metric(e)},
      {"h4", integer_to_json(h4_order(e))},
      {"kernel_order", integer_to_json(g)},
      {"canonical_a", tuple_to_json(canon.a())},
      {"canonical_b", tuple_to_json(canon.b())},
  };
  if (g >= 2) {
    const EschParams eff = effectivize(e);
    rec["effective_a"] = tuple_to_json(eff.a());
    rec["effective_b"] = tuple_to_json(eff.b());
  }
  if (is_pc_metric(e)) {
    const EschParams nf = pc_normal_form(e);
    rec["pc_normal_a"] = tuple_to_json(nf.a());
    rec["pc_normal_b"] = tuple_to_json(nf.b());
  }
  r.results.push_back(rec);
}

void verify_baz(const Options& o, Report& r) {
  r.input = {{"q", o.q}};
  const BazParams bz = o.baz();
  Json rec = {
      {"q", tuple_to_json(bz.q())},
      {"qsum", integer_to_json(bz.qsum())},
      {"all_odd", bz.all_odd()},
      {"free", is_free_baz(bz)},
      {"offending_pairs", violations_json(freeness_violations(bz))},
      {"pc", is_pc_baz(bz)},
      {"h6", bz.all_odd() ? integer_to_json(h6_order(bz)) : Json(nullptr)},
  };
  r.results.push_back(rec);
}

void embed(const Options& o, Report& r) {
  r.input = esch_input(o);
  r.input["c"] = o.c;
  r.results.push_back(certificate_json(certify(o.esch(), o.shift())));
}

void window(const Options& o, Report& r) {
  r.input = esch_input(o);
  const WindowReport w = window_scan(o.esch());
  r.summary = {
      {"a", tuple_to_json(w.esch.a())},
      {"b", tuple_to_json(w.esch.b())},
      {"window_lo", integer_to_json(w.window.lo)},
      {"window_hi", integer_to_json(w.window.hi)},
      {"any_nonsingular", w.any_nonsingular},
      {"h4", integer_to_json(h4_order(w.esch))},
  };
  for (const auto& cert : w.certificates) r.results.push_back(certificate_json(cert));
  r.notes = w.notes;
}

void lemma2(const Options& o, Report& r) {
  r.input = esch_input(o);
  r.input["mu_max"] = o.mu_max;
  if (o.mu_max < 1) throw DomainError("--mu-max must be >= 1");
  const EschParams e = o.esch();
  const FactorOptions f = o.factor();
  r.summary = {{"prime_product", integer_to_json(coprime_shift_base(e, f))}};
  for (unsigned long mu = 1; mu <= o.mu_max; ++mu) {
    for (int sign : {1, -1}) {
      const Integer c = coprime_shift(e, mu, sign, f);
      const auto cert = certify(e, c);
      const bool ok = nonsingular_shift(e, c);
      r.results.push_back({
          {"mu", mu},
          {"sign", sign},
          {"c", integer_to_json(c)},
          {"nonsingular", ok},
          {"baz_free", cert.baz_free},
          {"baz_pc", cert.baz_pc},
          {"h6", integer_to_json(cert.h6)},
      });
      if (!ok || !cert.baz_free) {
        r.mismatches.push_back({"mu=" + std::to_string(mu) + " sign=" + std::to_string(sign),
                                "nonsingular", "singular"});
      }
    }
  }
}

void distinct(const Options& o, Report& r) {
  r.input = esch_input(o);
  r.input["n"] = o.n;
  const auto certs = homotopy_distinct_embeddings(o.esch(), o.n, o.factor());
  std::set<Integer> h6;
  for (const auto& cert : certs) {
    r.results.push_back(certificate_json(cert));
    h6.insert(cert.h6);
    if (!cert.baz_free) r.mismatches.push_back({"c=" + cert.shift.get_str(), "nonsingular", "singular"});
  }
  const bool all_distinct = h6.size() == certs.size();
  if (!all_distinct) r.mismatches.push_back({"h6", "pairwise distinct", "repeated value"});
  r.summary = {{"count", certs.size()}, {"h6_pairwise_distinct", all_distinct}};
}

void submanifolds_cmd(const Options& o, Report& r) {
  r.input = {{"q", o.q}};
  const BazParams bz = o.baz();
  bool all_free = true;
  for (const auto& s : submanifolds(bz)) {
    const EschParams canon = canonicalize(s.esch);
    const bool free = is_free(s.esch);
    all_free = all_free && free;
    r.results.push_back({
        {"pair", Json::array({s.pair.first, s.pair.second})},
        {"a", tuple_to_json(s.esch.a())},
        {"b", tuple_to_json(s.esch.b())},
        {"canonical_a", tuple_to_json(canon.a())},
        {"canonical_b", tuple_to_json(canon.b())},
        {"free", free},
        {"pc_metric", is_pc_metric(s.esch)},
        {"h4", integer_to_json(h4_order(s.esch))},
    });
  }
  r.summary = {
      {"q", tuple_to_json(bz.q())},
      {"baz_free", is_free_baz(bz)},
      {"all_submanifolds_free", all_free},
      {"distinct_count", distinct_submanifold_count(bz)},
  };
}

void dual(const Options& o, Report& r) {
  r.input = esch_input(o);
  r.input["c"] = o.c;
  const EschParams e = o.esch();
  const Integer c = o.shift();
  const DualEmbedding d = dual_embedding(e, c);
  const BazParams q = candidate_q(e, c);
  const bool dual_free = is_free_baz(d.baz);
  const Integer h6 = h6_order(q);
  const Integer dual_h6 = h6_order(d.baz);
  r.results.push_back({
      {"a", tuple_to_json(e.a())},
      {"b", tuple_to_json(e.b())},
      {"c", integer_to_json(c)},
      {"q", tuple_to_json(q.q())},
      {"dual_a", tuple_to_json(d.esch.a())},
      {"dual_b", tuple_to_json(d.esch.b())},
      {"dual_q", tuple_to_json(d.baz.q())},
      {"dual_free", dual_free},
      {"h6", integer_to_json(h6)},
      {"dual_h6", integer_to_json(dual_h6)},
  });
  if (!dual_free) r.mismatches.push_back({"dual_q", "free", "singular"});
  if (h6 != dual_h6) r.mismatches.push_back({"dual_h6", h6.get_str(), dual_h6.get_str()});
}

void add_rows(Report& r, const Checked<std::vector<SurveyRow>>& checked) {
  for (const auto& row : checked.value) r.results.push_back(survey_row_json(row));
  r.mismatches = checked.mismatches;
}

void table1(const Options&, Report& r) {
  const auto checked = verify_table1();
  add_rows(r, checked);
  r.summary = {{"rows", checked.value.size()}, {"all_match", checked.ok()}};
}

void families(const Options& o, Report& r) {
  r.input = {{"k_max", o.k_max}};
  const auto checked = verify_infinite_families(o.k_max);
  add_rows(r, checked);
  r.summary = {{"rows", checked.value.size()}, {"all_counterexamples", checked.ok()}};
}

void cohom1(const Options& o, Report& r) {
  r.input = {{"p_max", o.p_max}};
  const auto checked = verify_cohomogeneity_one(o.p_max);
  for (const auto& entry : checked.value) {
    const auto& cert = entry.certificate;
    r.results.push_back({
        {"p", integer_to_json(entry.p)},
        {"a", tuple_to_json(cert.esch.a())},
        {"b", tuple_to_json(cert.esch.b())},
        {"c", integer_to_json(cert.shift)},
        {"q", tuple_to_json(cert.baz.q())},
        {"baz_free", cert.baz_free},
        {"baz_pc", cert.baz_pc},
        {"window_lo", integer_to_json(entry.window.lo)},
        {"window_hi", integer_to_json(entry.window.hi)},
    });
    for (const auto& note : entry.notes) {
      if (std::find(r.notes.begin(), r.notes.end(), note) == r.notes.end()) r.notes.push_back(note);
    }
  }
  r.mismatches = checked.mismatches;
  r.summary = {{"checked", checked.value.size()}, {"all_nonsingular_pc", checked.ok()}};
}

void scan(const Options& o, Report& r) {
  r.input = {{"max_abs", o.max_abs}, {"limit", o.limit}, {"workers", o.workers}};
  const ScanResult res = scan_box(o.max_abs, o.limit, {.workers = o.workers});
  r.summary = {
      {"total", res.stats.total},
      {"embeddable", res.stats.embeddable},
      {"counterexamples", res.stats.counterexamples},
  };
  for (const auto& row : res.rows) r.results.push_back(survey_row_json(row));
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

// Best-effort format lookup for errors raised before option parsing finished.
Format sniff_format(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format" && i + 1 < args.size()) return parse_format(args[i + 1]);
    if (args[i].rfind("--format=", 0) == 0) return parse_format(args[i].substr(9));
  }
  return Format::Text;
}

int emit(const Report& report, Format format, std::ostream& out, std::ostream& err) {
  if (report.error && format != Format::Json) {
    err << "error [" << report.error->reason << "]: " << report.error->message << '\n';
    return report.exit_code;
  }
  out << render(report, format);
  out.flush();
  return report.exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Totally geodesic embeddings of Eschenburg spaces into Bazaikin spaces", "tgembed"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for randomized routines (factorization)");
  app.add_option("--factor-bound", o.factor_bound, "Trial-division bound for factorization");
  app.add_option("--factor-digits", o.factor_digits, "Largest composite (in digits) factorization attempts");

  using Handler = std::function<void(const Options&, Report&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  const auto esch_opts = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "a1,a2,a3")->required();
    sub->add_option("--b", o.b, "b1,b2,b3")->required();
  };

  auto* s = add("verify-esch", "Freeness, curvature, |H^4| and normal forms of E(a,b)", verify_esch);
  esch_opts(s);
  s = add("verify-baz", "Freeness, curvature and |H^6| of B(q)", verify_baz);
  s->add_option("--q", o.q, "q1,...,q5")->required();
  s = add("embed", "Certificate for the candidate q^c", embed);
  esch_opts(s);
  s->add_option("--c", o.c, "shift c")->required();
  s = add("window", "Certify every shift in the positive-curvature window", window);
  esch_opts(s);
  s = add("lemma2", "Coprime shifts c_mu and their verification", lemma2);
  esch_opts(s);
  s->add_option("--mu-max", o.mu_max, "largest mu")->default_val(3);
  s = add("distinct", "Embeddings with pairwise distinct |H^6|", distinct);
  esch_opts(s);
  s->add_option("--n", o.n, "number of embeddings")->default_val(3)->check(CLI::PositiveNumber);
  s = add("submanifolds", "The ten embedded Eschenburg spaces of B(q)", submanifolds_cmd);
  s->add_option("--q", o.q, "q1,...,q5")->required();
  s = add("dual", "Dual embedding of E(b,a)", dual);
  esch_opts(s);
  s->add_option("--c", o.c, "shift c")->required();
  add("table1", "Verify the nine recorded counterexamples", table1);
  s = add("families", "Verify the cohomogeneity-two counterexample families", families);
  s->add_option("--k-max", o.k_max, "largest k")->default_val(10);
  s = add("cohom1", "Verify the cohomogeneity-one family at c = -1", cohom1);
  s->add_option("--p-max", o.p_max, "largest p")->default_val(10);
  s = add("scan", "Search a parameter box for counterexamples", scan);
  s->add_option("--max-abs", o.max_abs, "entry bound")->default_val(60);
  s->add_option("--limit", o.limit, "max rows reported")->default_val(20);
  s->add_option("--workers", o.workers, "worker threads")->default_val(1)->check(CLI::PositiveNumber);

  Report report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report.command = args.empty() ? "" : args.front();
    report.error = ErrorInfo{"invalid_arguments", e.what()};
    report.exit_code = kExitInvalidInput;
    return emit(report, sniff_format(args), out, err);
  }

  const Format format = parse_format(o.format);
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    report.command = sub->get_name();
    try {
      handler(o, report);
      report.exit_code = report.mismatches.empty() ? kExitOk : kExitVerificationFailed;
    } catch (const FactorizationIncomplete& e) {
      report.error = ErrorInfo{e.reason(), e.what()};
      report.exit_code = kExitLimitReached;
    } catch (const InvariantViolation& e) {
      report.error = ErrorInfo{e.reason(), e.what()};
      report.exit_code = kExitVerificationFailed;
    } catch (const Error& e) {
      report.error = ErrorInfo{e.reason(), e.what()};
      report.exit_code = kExitInvalidInput;
    }
    return emit(report, format, out, err);
  }
  return kExitInvalidInput;
}

}  // namespace tgembed::cli
