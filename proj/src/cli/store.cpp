#include "rlab/cli/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rlab::cli {

namespace fs = std::filesystem;

namespace {

class FileLock {
 public:
  explicit FileLock(const fs::path& p) : fd_(::open(p.c_str(), O_CREAT | O_RDWR, 0644)) {
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) throw std::runtime_error("cannot lock " + p.string());
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

std::string hex_of(const std::string& checksum) {
  auto colon = checksum.find(':');
  return colon == std::string::npos ? checksum : checksum.substr(colon + 1);
}

}  // namespace

void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  static std::atomic<unsigned long> counter{0};
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

ResultStore::ResultStore(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path ResultStore::put(const ResultEnvelope& e) {
  std::string hex = hex_of(e.checksum);
  fs::path file = dir_ / (hex + ".json");
  FileLock lock(dir_ / ".lock");
  bool fresh = !fs::exists(file);
  if (fresh) write_atomically(file, e.to_json().dump(2) + "\n");
  std::string input;
  if (e.config.contains("inputs"))
    for (const auto& s : e.config["inputs"]) input += (input.empty() ? "" : ",") + s.get<std::string>();
  std::ostringstream line;
  line << hex << '\t' << e.timestamp << '\t' << e.command << '\t' << (input.empty() ? "-" : input) << '\t'
       << (fresh ? "new" : "existing") << '\n';
  std::string index;
  fs::path index_path = dir_ / "index.tsv";
  if (fs::exists(index_path)) {
    std::ifstream in(index_path);
    std::stringstream ss;
    ss << in.rdbuf();
    index = ss.str();
  } else {
    index = "checksum\ttimestamp\tcommand\tinputs\tstatus\n";
  }
  write_atomically(index_path, index + line.str());
  return file;
}

Json ResultStore::get(const std::string& checksum) const {
  std::ifstream in(dir_ / (hex_of(checksum) + ".json"));
  if (!in) throw std::runtime_error("no stored result " + checksum);
  Json j = Json::parse(in);
  if (!verify_envelope(j)) throw std::runtime_error("checksum mismatch in stored result " + checksum);
  return j;
}

}  // namespace rlab::cli
