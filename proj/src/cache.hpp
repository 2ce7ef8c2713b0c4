#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace macq {

// 64-bit FNV-1a digest, rendered as 16 hex digits
std::string fnv1a64_hex(const std::string& s);

// Append-only key/value store, one line-delimited text file per kind under
// one directory.  Each line is "key TAB checksum TAB payload"; lines whose
// checksum or shape is off are skipped with a warning, so a torn write costs
// a recomputation, never a wrong value.  An empty directory disables it.
class DiskCache {
 public:
  DiskCache() = default;
  explicit DiskCache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<std::string> load(const std::string& kind,
                                  const std::string& key) const;
  void store(const std::string& kind, const std::string& key,
             const std::string& payload) const;

 private:
  struct KindState {
    bool loaded = false;
    std::map<std::string, std::string> entries;
  };

  std::string dir_;
  mutable std::mutex mtx_;
  mutable std::map<std::string, KindState> kinds_;

  std::string path_for(const std::string& kind) const;
  KindState& slurp(const std::string& kind) const;  // callers hold the lock
};

}  // namespace macq
