#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rlab::cli {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kEnvelopeSchema = "rigidity-lab/envelope/v1";

std::string sha256_hex(const std::string& data);

/// Compact dump with sorted keys; the checksum is taken over this text.
std::string canonical_text(const Json& j);

struct ResultEnvelope {
  std::string command;
  std::vector<std::string> argv;
  Json config;
  std::string timestamp;
  std::string tool_version = kToolVersion;
  std::string payload_schema;
  Json payload;
  std::string checksum;  // "sha256:<hex>" of canonical_text(payload)

  Json to_json() const;
  static ResultEnvelope from_json(const Json& j);
};

ResultEnvelope make_envelope(std::string command, std::vector<std::string> argv, Json config,
                             std::string payload_schema, Json payload);

/// Recomputes the payload checksum.
bool verify_envelope(const Json& envelope);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace rlab::cli
