#include "doctest.h"

#include <cstring>
#include <string>

#include "macq.h"

namespace {

// run one compute call and hand back status plus rendered text
int compute(macq_ctx* ctx, const char* kind, const char* lambda,
            const char* family, int n, const char* format, std::string* text) {
  char* out = nullptr;
  int rc = macq_compute(ctx, kind, lambda, family, n, format, &out);
  if (text) *text = out ? out : "";
  macq_string_free(out);
  return rc;
}

}  // namespace

TEST_CASE("context lifecycle and version") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  REQUIRE(ctx != nullptr);
  CHECK(std::strlen(macq_version()) > 0);
  CHECK(std::string(macq_last_error(ctx)).empty());
  macq_ctx_free(ctx);
  macq_ctx_free(nullptr);
  macq_ctx* ctx2 = macq_ctx_new("");
  REQUIRE(ctx2 != nullptr);
  macq_ctx_free(ctx2);
}

TEST_CASE("compute the integral form") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  std::string text;
  CHECK(compute(ctx, "J", "2", nullptr, 0, nullptr, &text) == MACQ_OK);
  CHECK(text.find("m[2]") != std::string::npos);
  CHECK(text.find("m[1,1]") != std::string::npos);
  CHECK(std::string(macq_last_error(ctx)).empty());

  CHECK(compute(ctx, "J", "2", nullptr, 0, "records", &text) == MACQ_OK);
  CHECK(text.find('\t') != std::string::npos);
  CHECK(text.find("mu=2") != std::string::npos);
  macq_ctx_free(ctx);
}

TEST_CASE("compute interpolation polynomials") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  std::string narrow, wide;
  CHECK(compute(ctx, "interp", "1", nullptr, 0, nullptr, &narrow) == MACQ_OK);
  CHECK(compute(ctx, "interp", "1", nullptr, 2, nullptr, &wide) == MACQ_OK);
  CHECK(narrow != wide);
  CHECK(wide.find("m[1]") != std::string::npos);
  // an empty lambda string means the empty partition
  std::string trivial;
  CHECK(compute(ctx, "interp", "", nullptr, 1, nullptr, &trivial) == MACQ_OK);
  macq_ctx_free(ctx);
}

TEST_CASE("compute family objects") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  std::string text;
  CHECK(compute(ctx, "kappa", nullptr, "1;1", 0, nullptr, &text) == MACQ_OK);
  CHECK(text.find("m[") != std::string::npos);
  CHECK(compute(ctx, "T", nullptr, "1;1", 0, nullptr, &text) == MACQ_OK);
  CHECK(text.find("T{1,2}") != std::string::npos);
  CHECK(text.find("order at q=1") != std::string::npos);
  CHECK(compute(ctx, "ie", nullptr, "1;1", 0, nullptr, &text) == MACQ_OK);
  CHECK(text.find("IE_1") != std::string::npos);
  CHECK(text.find("IE_2") != std::string::npos);
  CHECK(compute(ctx, "kostka", nullptr, "2", 0, nullptr, &text) == MACQ_OK);
  CHECK(text.find("K[2] = ") != std::string::npos);
  CHECK(text.find("K[1,1] = ") != std::string::npos);
  macq_ctx_free(ctx);
}

TEST_CASE("usage errors set the message and null the output") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  char* out = reinterpret_cast<char*>(0x1);
  CHECK(macq_compute(ctx, "nope", "1", nullptr, 0, nullptr, &out) ==
        MACQ_ERR_USAGE);
  CHECK(out == nullptr);
  CHECK(std::strlen(macq_last_error(ctx)) > 0);

  // a later success clears the sticky message
  std::string text;
  CHECK(compute(ctx, "J", "1", nullptr, 0, nullptr, &text) == MACQ_OK);
  CHECK(std::string(macq_last_error(ctx)).empty());

  CHECK(compute(ctx, "J", nullptr, nullptr, 0, nullptr, nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(compute(ctx, "J", "not a partition", nullptr, 0, nullptr, nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(compute(ctx, "kappa", nullptr, nullptr, 0, nullptr, nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(compute(ctx, "interp", "2,1", nullptr, 1, nullptr, nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(compute(ctx, "J", "2", nullptr, 0, "yaml", nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(macq_compute(nullptr, "J", "1", nullptr, 0, nullptr, nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(macq_compute(ctx, "J", "1", nullptr, 0, nullptr, nullptr) ==
        MACQ_ERR_USAGE);
  CHECK(std::strlen(macq_last_error(ctx)) > 0);
  macq_ctx_free(ctx);
}

TEST_CASE("verify runs suites through the context") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  char* out = nullptr;
  CHECK(macq_verify(ctx, "weisner", 0, 4, 0, nullptr, &out) == MACQ_OK);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).find("suite weisner") != std::string::npos);
  CHECK(std::string(out).find("PASS") != std::string::npos);
  macq_string_free(out);
  out = nullptr;
  CHECK(macq_verify(ctx, "zasada", 0, 2, 0, "records", &out) == MACQ_OK);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).find("result=pass") != std::string::npos);
  macq_string_free(out);
  macq_ctx_free(ctx);
}

TEST_CASE("verify rejects bad requests") {
  macq_ctx* ctx = macq_ctx_new(nullptr);
  char* out = nullptr;
  CHECK(macq_verify(ctx, "not-a-suite", 0, 0, 0, nullptr, &out) ==
        MACQ_ERR_USAGE);
  CHECK(out == nullptr);
  CHECK(std::strlen(macq_last_error(ctx)) > 0);
  CHECK(macq_verify(ctx, "weisner", 99, 0, 0, nullptr, &out) ==
        MACQ_ERR_USAGE);
  CHECK(macq_verify(ctx, nullptr, 0, 0, 0, nullptr, &out) == MACQ_ERR_USAGE);
  macq_ctx_free(ctx);
}

TEST_CASE("suite listing is canonical") {
  std::string suites = macq_suites();
  const char* expected[] = {"sfp",
                            "scp",
                            "ie",
                            "weisner",
                            "zasada",
                            "eigen",
                            "kostka-integrality",
                            "kostka-positivity",
                            "q1-factorization",
                            "stability"};
  size_t pos = 0;
  for (const char* name : expected) {
    size_t found = suites.find(name, pos);
    CHECK(found != std::string::npos);
    pos = found;
  }
  CHECK(suites.find("not-a-suite") == std::string::npos);
}
