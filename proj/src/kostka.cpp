#include "kostka.hpp"

namespace macq {

namespace {

// divide by (q - 1)^power, done on the numerator: the fraction is reduced,
// so whenever the quotient is polynomial the full power sits in the numerator
QTRatio shave_q1(const QTRatio& c, int power) {
  if (c.is_zero() || power == 0) return c;
  QTPoly num = c.num();
  QTPoly qm1 = QTPoly::q() - QTPoly(1);
  for (int s = 0; s < power; ++s) num = QTPoly::div_exact(num, qm1);
  return QTRatio::fraction(num, c.den());
}

}  // namespace

KostkaEntry classify_kostka(QTRatio value) {
  KostkaEntry e;
  e.value = std::move(value);
  e.is_polynomial = e.value.den().is_constant();
  e.is_integer = e.value.den().is_one();
  e.is_nonnegative = e.is_polynomial;
  if (e.is_nonnegative)
    for (const auto& [exp, coeff] : e.value.num().terms())
      if (coeff < 0) {
        e.is_nonnegative = false;
        break;
      }
  return e;
}

KostkaTable multivariate_kostka(const std::vector<Partition>& lambdas) {
  return multivariate_kostka(lambdas, [](const Partition& lam) {
    return macdonald_j(lam).expansion;
  });
}

KostkaTable multivariate_kostka(const std::vector<Partition>& lambdas,
                                const JProvider& jp) {
  int r = int(lambdas.size());
  if (r < 1) throw std::invalid_argument("need at least one partition");
  IndexedFamily<SymFunc> fam(r, SymFunc::unit(SFBasis::m, Partition{}));
  for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
    fam.set(mask, jp(family_sum_mask(lambdas, mask)));

  SymFunc twisted = kappa(fam, fam.full_mask()).changed(SFBasis::splet);
  KostkaTable table;
  table.family = lambdas;
  Partition total = family_sum_mask(lambdas, fam.full_mask());
  for (const Partition& mu : partitions_of(total.size())) {
    QTRatio c = twisted.coeff(mu);
    QTRatio shaved;
    try {
      shaved = shave_q1(c, r - 1);
    } catch (const std::domain_error&) {
      throw std::runtime_error("coefficient of " + mu.str() + " for family " +
                               family_str(lambdas) +
                               " is not divisible by the expected power of q-1");
    }
    table.entries.emplace(mu, classify_kostka(std::move(shaved)));
  }
  return table;
}

KostkaAudit audit(const KostkaTable& table) {
  KostkaAudit a;
  for (const auto& [mu, e] : table.entries) {
    a.all_polynomial = a.all_polynomial && e.is_polynomial;
    a.all_integer = a.all_integer && e.is_integer;
    a.all_nonnegative = a.all_nonnegative && e.is_nonnegative;
  }
  return a;
}

}  // namespace macq
