#pragma once

#include <string>

#include "cache.hpp"
#include "kostka.hpp"

namespace macq {

// canonical text for a monomial-basis coefficient map: "mu=RATIO" pieces
// joined by "|", keys in partition order, the empty map as ""
std::string serialize_mcoeffs(const std::map<Partition, QTRatio>& coeffs);
std::map<Partition, QTRatio> parse_mcoeffs(const std::string& payload);

// Computation front door with a persistent cache behind it.  Every result
// is produced by the exact routines; the cache only skips recomputation.
class Session {
 public:
  explicit Session(std::string cache_dir = "");

  const DiskCache& cache() const { return cache_; }

  MacdonaldJ j_poly(const Partition& lam);
  InterpolationJ interp(const Partition& lam, int nvars);
  std::map<Partition, QTRatio> op_column(char op, const Partition& mu,
                                         int nvars);
  KostkaTable kostka_table(const std::vector<Partition>& lambdas);

  // cache-aware sources, handed to the check routines
  JProvider j_provider();
  InterpProvider interp_provider();

 private:
  DiskCache cache_;
};

}  // namespace macq
