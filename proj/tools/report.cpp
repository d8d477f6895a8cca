#include "report.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace tgembed::cli {

Json integer_to_json(const Integer& x) {
  if (abs(x) <= Integer(std::to_string(kMaxSafeJsonInteger))) {
    return Json(std::stoll(x.get_str()));
  }
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ValidationError("expected an integer, got " + j.dump());
}

Json violations_json(const std::vector<PairGcdViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back({{"pairs", v.left.str() + ", " + v.right.str()}, {"gcd", integer_to_json(v.gcd)}});
  }
  return out;
}

Json certificate_json(const EmbeddingCertificate& cert) {
  const EschParams shifted = cert.shifted_esch();
  return {
      {"a", tuple_to_json(cert.esch.a())},
      {"b", tuple_to_json(cert.esch.b())},
      {"c", integer_to_json(cert.shift)},
      {"shifted_a", tuple_to_json(shifted.a())},
      {"shifted_b", tuple_to_json(shifted.b())},
      {"q", tuple_to_json(cert.baz.q())},
      {"baz_free", cert.baz_free},
      {"baz_pc", cert.baz_pc},
      {"esch_pc", cert.esch_pc},
      {"h6", integer_to_json(cert.h6)},
      {"offending_pairs", violations_json(cert.offending_pairs)},
  };
}

Json survey_row_json(const SurveyRow& row) {
  Json verdicts = Json::array();
  for (bool v : row.verdicts) verdicts.push_back(v);
  return {
      {"a", tuple_to_json(row.esch.a())},
      {"b", tuple_to_json(row.esch.b())},
      {"q_formula", q_formula(row.esch)},
      {"window_lo", integer_to_json(row.window.lo)},
      {"window_hi", integer_to_json(row.window.hi)},
      {"verdicts", verdicts},
      {"counterexample", row.is_counterexample},
      {"h4", integer_to_json(row.h4)},
      {"label", row.label},
  };
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["input"] = input;
  if (error) {
    j["error"] = {{"reason", error->reason}, {"message", error->message}, {"exit_code", exit_code}};
    return j;
  }
  j["summary"] = summary;
  j["results"] = results;
  j["discrepancy_notes"] = notes;
  Json mism = Json::array();
  for (const auto& m : mismatches) {
    mism.push_back({{"where", m.where}, {"expected", m.expected}, {"actual", m.actual}});
  }
  j["mismatches"] = mism;
  j["status"] = exit_code == 0 ? "ok" : "verification_failed";
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  switch (v.type()) {
    case Json::value_t::string:
      return v.get<std::string>();
    case Json::value_t::null:
      return "-";
    case Json::value_t::array: {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += scalar_text(v[i]);
      }
      return out + ")";
    }
    case Json::value_t::object: {
      std::string out;
      for (const auto& [k, x] : v.items()) {
        if (!out.empty()) out += ' ';
        out += k + "=" + scalar_text(x);
      }
      return "[" + out + "]";
    }
    default:
      return v.dump();
  }
}

// Column keys in order of first appearance across all records.
std::vector<std::string> columns(const Json& records) {
  std::vector<std::string> keys;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  }
  return keys;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  const Json records = report.results.empty() ? Json::array({report.summary}) : report.results;
  const auto keys = columns(records);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_field(keys[i]);
  os << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "") << (r.contains(keys[i]) ? csv_field(scalar_text(r[keys[i]])) : "");
    }
    os << '\n';
  }
  return os.str();
}

void render_fields(std::ostringstream& os, const Json& obj) {
  for (const auto& [k, v] : obj.items()) os << "  " << k << ": " << scalar_text(v) << '\n';
}

void render_table(std::ostringstream& os, const Json& records) {
  const auto keys = columns(records);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
  for (const auto& r : records) {
    auto& row = cells.emplace_back();
    for (std::size_t i = 0; i < keys.size(); ++i) {
      row.push_back(r.contains(keys[i]) ? scalar_text(r[keys[i]]) : "");
      width[i] = std::max(width[i], row.back().size());
    }
  }
  const auto line = [&](const std::vector<std::string>& row) {
    os << ' ';
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << ' ' << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 1, ' ');
    }
    os << '\n';
  };
  line(keys);
  for (const auto& row : cells) line(row);
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "command: " << report.command << " (tgembed " << kVersion << ")\n";
  if (!report.input.empty()) {
    os << "input:\n";
    render_fields(os, report.input);
  }
  if (report.error) {
    os << "error [" << report.error->reason << "]: " << report.error->message << '\n';
    return os.str();
  }
  if (!report.summary.empty()) {
    os << "summary:\n";
    render_fields(os, report.summary);
  }
  if (report.results.size() == 1) {
    os << "result:\n";
    render_fields(os, report.results[0]);
  } else if (!report.results.empty()) {
    os << "results:\n";
    render_table(os, report.results);
  }
  if (!report.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : report.notes) os << "  - " << n << '\n';
  }
  if (!report.mismatches.empty()) {
    os << "mismatches:\n";
    for (const auto& m : report.mismatches) {
      os << "  - " << m.where << ": expected " << m.expected << ", got " << m.actual << '\n';
    }
  }
  os << "status: " << (report.exit_code == 0 ? "ok" : "verification failed") << '\n';
  return os.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return report.to_json().dump(2) + "\n";
    case Format::Csv:
      return report.error ? std::string() : render_csv(report);
    case Format::Text:
      break;
  }
  return render_text(report);
}

}  // namespace tgembed::cli
