#include "cache.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace macq {

namespace {

bool clean_field(const std::string& s) {
  return s.find('\t') == std::string::npos && s.find('\n') == std::string::npos;
}

bool clean_kind(const std::string& kind) {
  if (kind.empty()) return false;
  for (char c : kind)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-')) return false;
  return true;
}

}  // namespace

std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
  return os.str();
}

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string DiskCache::path_for(const std::string& kind) const {
  if (!clean_kind(kind)) throw std::logic_error("bad cache kind: " + kind);
  return dir_ + "/" + kind + ".records";
}

DiskCache::KindState& DiskCache::slurp(const std::string& kind) const {
  KindState& state = kinds_[kind];
  if (state.loaded) return state;
  state.loaded = true;
  std::ifstream in(path_for(kind));
  std::string line;
  size_t bad = 0;
  while (std::getline(in, line)) {
    size_t a = line.find('\t');
    size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos) {
      ++bad;
      continue;
    }
    std::string key = line.substr(0, a);
    std::string sum = line.substr(a + 1, b - a - 1);
    std::string payload = line.substr(b + 1);
    if (sum != fnv1a64_hex(payload)) {
      ++bad;
      continue;
    }
    state.entries[std::move(key)] = std::move(payload);
  }
  if (bad > 0)
    std::cerr << "warning: skipped " << bad << " corrupt record(s) in "
              << path_for(kind) << "\n";
  return state;
}

std::optional<std::string> DiskCache::load(const std::string& kind,
                                           const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::lock_guard<std::mutex> lock(mtx_);
  KindState& state = slurp(kind);
  auto it = state.entries.find(key);
  if (it == state.entries.end()) return std::nullopt;
  return it->second;
}

void DiskCache::store(const std::string& kind, const std::string& key,
                      const std::string& payload) const {
  if (!enabled()) return;
  if (!clean_field(key) || !clean_field(payload))
    throw std::logic_error("cache fields must be single-line tab-free text");
  std::lock_guard<std::mutex> lock(mtx_);
  KindState& state = slurp(kind);
  auto it = state.entries.find(key);
  if (it != state.entries.end() && it->second == payload) return;
  state.entries[key] = payload;
  std::ofstream out(path_for(kind), std::ios::app);
  out << key << '\t' << fnv1a64_hex(payload) << '\t' << payload << '\n';
}

}  // namespace macq
