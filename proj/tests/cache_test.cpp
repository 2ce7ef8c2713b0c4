#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "cache.hpp"

using namespace macq;

namespace {

// fresh scratch directory per test case, removed on destruction
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("macq-cache-test-" + std::to_string(std::rand()));
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string str() const { return path.string(); }
};

std::string slurp_file(const std::string& p) {
  std::ifstream in(p);
  std::string all((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  return all;
}

}  // namespace

TEST_CASE("fnv1a64 reference digests") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("hello world") == "779a65e7023cd2e7");
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}

TEST_CASE("disabled cache is inert") {
  DiskCache cache;
  CHECK_FALSE(cache.enabled());
  CHECK_FALSE(cache.load("J", "v1:J:2,1").has_value());
  cache.store("J", "v1:J:2,1", "anything");
  CHECK_FALSE(cache.load("J", "v1:J:2,1").has_value());
}

TEST_CASE("store and load round trip") {
  TempDir dir;
  DiskCache cache(dir.str());
  CHECK(cache.enabled());
  CHECK(cache.dir() == dir.str());
  CHECK_FALSE(cache.load("J", "v1:J:2,1").has_value());
  cache.store("J", "v1:J:2,1", "payload one");
  cache.store("J", "v1:J:3", "payload two");
  CHECK(cache.load("J", "v1:J:2,1") == std::optional<std::string>("payload one"));
  CHECK(cache.load("J", "v1:J:3") == std::optional<std::string>("payload two"));
  CHECK_FALSE(cache.load("J", "v1:J:4").has_value());
  // kinds are separate files
  CHECK_FALSE(cache.load("interp", "v1:J:2,1").has_value());
  cache.store("interp", "v1:interp:2,1:3", "wide");
  CHECK(std::filesystem::exists(dir.path / "J.records"));
  CHECK(std::filesystem::exists(dir.path / "interp.records"));

  // a fresh instance reads the same records back from disk
  DiskCache again(dir.str());
  CHECK(again.load("J", "v1:J:2,1") == std::optional<std::string>("payload one"));
  CHECK(again.load("interp", "v1:interp:2,1:3") ==
        std::optional<std::string>("wide"));
}

TEST_CASE("identical stores do not grow the file") {
  TempDir dir;
  DiskCache cache(dir.str());
  cache.store("J", "k", "same");
  auto size1 = std::filesystem::file_size(dir.path / "J.records");
  cache.store("J", "k", "same");
  auto size2 = std::filesystem::file_size(dir.path / "J.records");
  CHECK(size1 == size2);
  // a changed payload appends and the newest line wins
  cache.store("J", "k", "fresh");
  CHECK(cache.load("J", "k") == std::optional<std::string>("fresh"));
  DiskCache again(dir.str());
  CHECK(again.load("J", "k") == std::optional<std::string>("fresh"));
}

TEST_CASE("record lines carry a checksum") {
  TempDir dir;
  DiskCache cache(dir.str());
  cache.store("J", "key", "value");
  std::string line = slurp_file((dir.path / "J.records").string());
  CHECK(line == "key\t" + fnv1a64_hex("value") + "\tvalue\n");
}

TEST_CASE("corrupt records are skipped") {
  TempDir dir;
  {
    DiskCache cache(dir.str());
    cache.store("J", "good", "payload");
  }
  {
    std::ofstream out((dir.path / "J.records").string(), std::ios::app);
    out << "torn line without tabs\n";
    out << "bad\t0000000000000000\tchecksum does not match\n";
  }
  DiskCache cache(dir.str());
  CHECK(cache.load("J", "good") == std::optional<std::string>("payload"));
  CHECK_FALSE(cache.load("J", "bad").has_value());
  CHECK_FALSE(cache.load("J", "torn line without tabs").has_value());
}

TEST_CASE("field hygiene is enforced") {
  TempDir dir;
  DiskCache cache(dir.str());
  CHECK_THROWS_AS(cache.store("J", "has\ttab", "x"), std::logic_error);
  CHECK_THROWS_AS(cache.store("J", "key", "has\nnewline"), std::logic_error);
  CHECK_THROWS_AS(cache.store("bad kind!", "key", "x"), std::logic_error);
  CHECK_THROWS_AS(cache.load("", "key"), std::logic_error);
  CHECK_THROWS_AS(cache.store("no/slashes", "key", "x"), std::logic_error);
}
