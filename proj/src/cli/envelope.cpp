#include "rlab/cli/envelope.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace rlab::cli {

std::string sha256_hex(const std::string& data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

// nlohmann::json keeps object keys in a std::map, so dump() is already sorted.
std::string canonical_text(const Json& j) { return j.dump(); }

Json ResultEnvelope::to_json() const {
  return Json{{"schema", kEnvelopeSchema},
              {"command", command},
              {"argv", argv},
              {"config", config},
              {"timestamp", timestamp},
              {"tool_version", tool_version},
              {"payload_schema", payload_schema},
              {"payload", payload},
              {"checksum", checksum}};
}

ResultEnvelope ResultEnvelope::from_json(const Json& j) {
  ResultEnvelope e;
  e.command = j.at("command").get<std::string>();
  e.argv = j.at("argv").get<std::vector<std::string>>();
  e.config = j.at("config");
  e.timestamp = j.at("timestamp").get<std::string>();
  e.tool_version = j.at("tool_version").get<std::string>();
  e.payload_schema = j.at("payload_schema").get<std::string>();
  e.payload = j.at("payload");
  e.checksum = j.at("checksum").get<std::string>();
  return e;
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ResultEnvelope make_envelope(std::string command, std::vector<std::string> argv, Json config,
                             std::string payload_schema, Json payload) {
  ResultEnvelope e;
  e.command = std::move(command);
  e.argv = std::move(argv);
  e.config = std::move(config);
  e.timestamp = utc_timestamp();
  e.payload_schema = std::move(payload_schema);
  e.payload = std::move(payload);
  e.checksum = "sha256:" + sha256_hex(canonical_text(e.payload));
  return e;
}

bool verify_envelope(const Json& envelope) {
  if (!envelope.contains("payload") || !envelope.contains("checksum")) return false;
  return envelope.at("checksum") == "sha256:" + sha256_hex(canonical_text(envelope.at("payload")));
}

}  // namespace rlab::cli
