#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgembed/tgembed.hpp"

namespace tgembed::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

/// Largest magnitude emitted as a JSON number; larger integers become decimal strings.
inline constexpr long long kMaxSafeJsonInteger = 9007199254740991LL;  // 2^53 - 1

Json integer_to_json(const Integer& x);

/// Accepts both encodings produced by integer_to_json.
Integer integer_from_json(const Json& j);

template <std::size_t N>
Json tuple_to_json(const std::array<Integer, N>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_to_json(x));
  return out;
}

struct ErrorInfo {
  std::string reason;
  std::string message;
};

struct Report {
  std::string command;
  Json input = Json::object();
  Json summary = Json::object();
  Json results = Json::array();
  std::vector<std::string> notes;
  std::vector<Mismatch> mismatches;
  std::optional<ErrorInfo> error;
  int exit_code = 0;

  Json to_json() const;
};

std::string render(const Report& report, Format format);

// Record builders shared by the subcommands.
Json certificate_json(const EmbeddingCertificate& cert);
Json survey_row_json(const SurveyRow& row);
Json violations_json(const std::vector<PairGcdViolation>& violations);

}  // namespace tgembed::cli
