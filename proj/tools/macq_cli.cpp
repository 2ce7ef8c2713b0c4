// Command-line driver.  Talks to the engine exclusively through the C
// interface in macq.h; every computation, cache access and report lives
// behind that boundary.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "macq.h"

namespace {

const char* cache_dir_from_env() {
  const char* dir = std::getenv("MACQ_CACHE_DIR");
  return dir ? dir : "";
}

int emit(macq_ctx* ctx, int status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    macq_string_free(out);
  }
  if (status != MACQ_OK) std::fprintf(stderr, "error: %s\n", macq_last_error(ctx));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Macdonald polynomial engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(macq_version()));

  std::string cache_dir = cache_dir_from_env();
  app.add_option("--cache-dir", cache_dir,
                 "directory for the persistent result cache");

  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "records"}));

  auto* compute = app.add_subcommand(
      "compute", "compute one object: J, interp, kappa, T, ie, kostka");
  compute->fallthrough();
  std::string kind;
  compute->add_option("kind", kind, "object kind")->required();
  std::string lambda, family;
  auto* lam_opt = compute->add_option(
      "--lambda", lambda, "partition, e.g. 2,1 (use - for the empty one)");
  auto* fam_opt = compute->add_option(
      "--family", family, "semicolon-joined partitions, e.g. 2,1;1;1");
  int nvars = 0;
  compute->add_option("--n", nvars, "variable count (0 takes the default)");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->fallthrough();
  std::string suite;
  verify->add_option("suite", suite, std::string("one of:\n") + macq_suites())
      ->required();
  int max_size = 0, r = 0, jobs = 0;
  verify->add_option("--max-size", max_size,
                     "bound on the total partition size (0 takes the default)");
  verify->add_option("--r", r, "bound on the family length (0 takes the default)");
  verify->add_option("--jobs", jobs, "worker threads (0 takes the default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : MACQ_ERR_USAGE;
  }

  macq_ctx* ctx = macq_ctx_new(cache_dir.c_str());
  if (!ctx) {
    std::fprintf(stderr, "error: context allocation failed\n");
    return MACQ_ERR_INTERNAL;
  }

  int status = MACQ_ERR_USAGE;
  char* out = nullptr;
  if (compute->parsed()) {
    status = macq_compute(ctx, kind.c_str(), *lam_opt ? lambda.c_str() : nullptr,
                          *fam_opt ? family.c_str() : nullptr, nvars,
                          format.c_str(), &out);
  } else if (verify->parsed()) {
    status = macq_verify(ctx, suite.c_str(), max_size, r, jobs, format.c_str(),
                         &out);
  }
  int code = emit(ctx, status, out);
  macq_ctx_free(ctx);
  return code;
}
