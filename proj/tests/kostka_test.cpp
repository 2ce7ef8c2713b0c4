#include "doctest.h"

#include <string>
#include <vector>

#include "kostka.hpp"
#include "macdonald.hpp"

using namespace macq;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

const QTPoly one(1);
const QTPoly q = QTPoly::q();
const QTPoly t = QTPoly::t();

// rebuild the cumulant of the J family over the twisted Schur basis from a
// finished table, for comparison against the direct computation
SymFunc reexpand(const KostkaTable& table) {
  int r = int(table.family.size());
  QTRatio scale{(q - one).pow(unsigned(r - 1))};
  SymFunc out(SFBasis::splet);
  for (const auto& [mu, entry] : table.entries)
    out += SymFunc::unit(SFBasis::splet, mu, entry.value * scale);
  return out;
}

SymFunc j_cumulant(const std::vector<Partition>& lambdas) {
  int r = int(lambdas.size());
  IndexedFamily<SymFunc> fam(r, SymFunc::unit(SFBasis::m, P("-")));
  for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
    fam.set(mask, macdonald_j(family_sum_mask(lambdas, mask)).expansion);
  return kappa(fam, fam.full_mask());
}

}  // namespace

TEST_CASE("coefficient classification") {
  KostkaEntry e = classify_kostka(QTRatio(q + t));
  CHECK(e.is_polynomial);
  CHECK(e.is_integer);
  CHECK(e.is_nonnegative);

  e = classify_kostka(QTRatio(q - one));
  CHECK(e.is_polynomial);
  CHECK(e.is_integer);
  CHECK_FALSE(e.is_nonnegative);

  e = classify_kostka(QTRatio::fraction(one, QTPoly(2)));
  CHECK(e.is_polynomial);
  CHECK_FALSE(e.is_integer);
  CHECK(e.is_nonnegative);

  e = classify_kostka(QTRatio::fraction(one, one - t));
  CHECK_FALSE(e.is_polynomial);
  CHECK_FALSE(e.is_integer);
  CHECK_FALSE(e.is_nonnegative);

  e = classify_kostka(QTRatio(0));
  CHECK(e.is_polynomial);
  CHECK(e.is_integer);
  CHECK(e.is_nonnegative);
}

TEST_CASE("single partition tables") {
  KostkaTable table = multivariate_kostka({P("1")});
  CHECK(table.family == std::vector<Partition>{P("1")});
  CHECK(table.entries.size() == 1);
  CHECK(table.entries.at(P("1")).value == QTRatio(1));

  table = multivariate_kostka({P("2")});
  CHECK(table.entries.size() == 2);
  CHECK(table.entries.at(P("2")).value == QTRatio(1));
  CHECK(table.entries.at(P("1,1")).value == QTRatio(q));

  table = multivariate_kostka({P("1,1")});
  CHECK(table.entries.size() == 2);
  CHECK(table.entries.at(P("2")).value == QTRatio(t));
  CHECK(table.entries.at(P("1,1")).value == QTRatio(1));
}

TEST_CASE("pair table at minimal size") {
  KostkaTable table = multivariate_kostka({P("1"), P("1")});
  CHECK(table.entries.size() == 2);
  CHECK(table.entries.at(P("1,1")).value == QTRatio(1));
  CHECK(table.entries.at(P("2")).value == QTRatio(0));
  KostkaAudit a = audit(table);
  CHECK(a.all_polynomial);
  CHECK(a.all_integer);
  CHECK(a.all_nonnegative);
}

TEST_CASE("tables re-expand to the cumulant") {
  std::vector<std::vector<Partition>> families = {
      {P("2,1")},
      {P("3")},
      {P("1"), P("1")},
      {P("1"), P("2")},
      {P("1"), P("1"), P("1")},
  };
  for (const auto& lambdas : families) {
    KostkaTable table = multivariate_kostka(lambdas);
    int total = family_sum_mask(lambdas, (1u << lambdas.size()) - 1).size();
    CHECK(int(table.entries.size()) == int(partitions_of(total).size()));
    CHECK(reexpand(table) == j_cumulant(lambdas).changed(SFBasis::splet));
  }
}

TEST_CASE("integrality flags hold at desk scale") {
  std::vector<std::vector<Partition>> families = {
      {P("2,2")}, {P("1"), P("1,1")}, {P("2"), P("2")}};
  for (const auto& lambdas : families) {
    KostkaAudit a = audit(multivariate_kostka(lambdas));
    CHECK(a.all_polynomial);
    CHECK(a.all_integer);
    CHECK(a.all_nonnegative);
  }
}

TEST_CASE("provider is consulted per subset") {
  int calls = 0;
  JProvider counting = [&calls](const Partition& lam) {
    ++calls;
    return macdonald_j(lam).expansion;
  };
  multivariate_kostka({P("1"), P("1")}, counting);
  CHECK(calls == 3);
  CHECK_THROWS_AS(multivariate_kostka({}), std::invalid_argument);
}

TEST_CASE("audit reports violations") {
  KostkaTable table;
  table.family = {P("1")};
  table.entries.emplace(P("1"),
                        classify_kostka(QTRatio::fraction(one, one - t)));
  KostkaAudit a = audit(table);
  CHECK_FALSE(a.all_polynomial);
  CHECK_FALSE(a.all_integer);
  CHECK_FALSE(a.all_nonnegative);
}
