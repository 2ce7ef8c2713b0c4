#pragma once

#include <map>
#include <vector>

#include "cumulants.hpp"

namespace macq {

// one coefficient of the twisted-Schur expansion after taking out the
// expected power of (q - 1)
struct KostkaEntry {
  QTRatio value;
  bool is_polynomial = false;   // in Q[q, t]: constant denominator
  bool is_integer = false;      // in Z[q, t]: denominator exactly one
  bool is_nonnegative = false;  // polynomial with nonnegative coefficients
};

struct KostkaTable {
  std::vector<Partition> family;
  std::map<Partition, KostkaEntry> entries;  // every mu of size |family sum|
};

// derived flags for one coefficient value
KostkaEntry classify_kostka(QTRatio value);

// expand the cumulant of the J family over the twisted Schur basis and
// divide each coefficient exactly by (q - 1)^{r - 1}; inexact division is a
// hard error because the integrality theorem promises it never happens
KostkaTable multivariate_kostka(const std::vector<Partition>& lambdas);
KostkaTable multivariate_kostka(const std::vector<Partition>& lambdas,
                                const JProvider& jp);

struct KostkaAudit {
  bool all_polynomial = true;
  bool all_integer = true;
  bool all_nonnegative = true;  // conjecture evidence, never a hard failure
};

KostkaAudit audit(const KostkaTable& table);

}  // namespace macq
