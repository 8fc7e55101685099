#pragma once

#include <filesystem>
#include <string>

#include "rlab/cli/envelope.hpp"

namespace rlab::cli {

/// Content-addressed result directory. Each envelope is written atomically to
/// <dir>/<hex>.json, where <hex> is the payload checksum, and a line is added
/// to <dir>/index.tsv under an exclusive lock.
class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path dir);
  /// Returns the path of the stored envelope. Identical payloads share a file.
  std::filesystem::path put(const ResultEnvelope& e);
  /// Reads and verifies an envelope; throws std::runtime_error on a bad checksum.
  Json get(const std::string& checksum) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Writes `text` to a temporary file in the same directory and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& text);

}  // namespace rlab::cli
