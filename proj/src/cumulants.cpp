#include "cumulants.hpp"

#include <algorithm>

namespace macq {

std::vector<int> mask_elements(unsigned mask) {
  std::vector<int> out;
  for (int i = 1; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

unsigned mask_of(const std::vector<int>& items) {
  unsigned mask = 0;
  for (int i : items) {
    if (i < 1 || i > 20) throw std::out_of_range("element out of range");
    mask |= 1u << (i - 1);
  }
  return mask;
}

std::vector<std::vector<int>> positive_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0 || total < parts) return out;
  std::vector<int> cur(size_t(parts), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[size_t(pos)] = left;
      out.push_back(cur);
      return;
    }
    // keep at least one unit for every later slot
    for (int v = 1; v <= left - (parts - 1 - pos); ++v) {
      cur[size_t(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

BigInt multinomial(int total, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative multinomial part");
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("parts must sum to the total");
  BigInt num = 1;
  for (int i = 2; i <= total; ++i) num *= i;
  for (int p : parts)
    for (int i = 2; i <= p; ++i) num /= i;
  return num;
}

QTRatio t_error(const IndexedFamily<QTRatio>& fam, unsigned h) {
  if (h == 0 || h > fam.full_mask())
    throw std::out_of_range("subset out of range");
  int hsize = std::popcount(h);
  if (hsize < 2)
    throw std::invalid_argument("error term needs at least two elements");
  QTRatio prod(1);
  unsigned g = h;
  while (true) {
    const QTRatio& u = fam.at(g);
    if (u.is_zero())
      throw std::domain_error("zero family entry inside the subset");
    if ((hsize - std::popcount(g)) % 2 == 0)
      prod *= u;
    else
      prod /= u;
    if (g == 0) break;
    g = (g - 1) & h;
  }
  return prod - QTRatio(1);
}

QTPoly ie_sum(const std::vector<Partition>& lambdas, int j, int N) {
  int r = int(lambdas.size());
  if (r < 1 || r > 20) throw std::invalid_argument("family size out of range");
  QTPoly acc;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    QTPoly term = partition_binomial(family_sum_mask(lambdas, mask), j, N);
    if ((r - std::popcount(mask)) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

std::optional<long> min_ord_q1(const SymFunc& f) {
  std::optional<long> best;
  for (const auto& [lam, c] : f.coeffs()) {
    std::optional<long> o = c.ord_at_q1();
    if (!o) continue;
    if (!best || *o < *best) best = o;
  }
  return best;
}

namespace {

void add_line(CumulantReport& rep, unsigned mask, long target,
              std::optional<long> ord) {
  OrdLine line;
  line.mask = mask;
  line.target = target;
  line.ord = ord;
  line.pass = !ord || *ord >= target;  // absent order means identically zero
  rep.pass = rep.pass && line.pass;
  rep.lines.push_back(std::move(line));
}

}  // namespace

CumulantReport check_small_cumulant_j(const std::vector<Partition>& lambdas) {
  return check_small_cumulant_j(lambdas, [](const Partition& lam) {
    return macdonald_j(lam).expansion;
  });
}

CumulantReport check_small_cumulant_j(const std::vector<Partition>& lambdas,
                                      const JProvider& jp) {
  int r = int(lambdas.size());
  IndexedFamily<SymFunc> fam(r, SymFunc::unit(SFBasis::m, Partition{}));
  for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
    fam.set(mask, jp(family_sum_mask(lambdas, mask)));
  CumulantReport rep;
  rep.family = "J " + family_str(lambdas);
  for (unsigned h = 1; h <= fam.full_mask(); ++h)
    add_line(rep, h, std::popcount(h) - 1, min_ord_q1(kappa(fam, h)));
  return rep;
}

CumulantReport check_small_cumulant_interp(const std::vector<Partition>& lambdas,
                                           int nvars) {
  return check_small_cumulant_interp(
      lambdas, nvars, [](const Partition& lam, int n) {
        return interpolation_j(lam, n).expansion;
      });
}

CumulantReport check_small_cumulant_interp(const std::vector<Partition>& lambdas,
                                           int nvars,
                                           const InterpProvider& ip) {
  int r = int(lambdas.size());
  IndexedFamily<SymFunc> fam(r, SymFunc::unit(SFBasis::m, Partition{}));
  std::map<Partition, SymFunc> seen;
  for (unsigned mask = 1; mask <= fam.full_mask(); ++mask) {
    Partition sum = family_sum_mask(lambdas, mask);
    auto it = seen.find(sum);
    if (it == seen.end()) it = seen.emplace(sum, ip(sum, nvars)).first;
    fam.set(mask, it->second);
  }
  CumulantReport rep;
  rep.family = "interp " + family_str(lambdas) + " n=" + std::to_string(nvars);
  for (unsigned h = 1; h <= fam.full_mask(); ++h)
    add_line(rep, h, std::popcount(h) - 1, min_ord_q1(kappa(fam, h)));
  return rep;
}

CumulantReport check_strong_factorization_hooks(
    const std::vector<Partition>& lambdas) {
  int r = int(lambdas.size());
  IndexedFamily<QTRatio> fam(r, QTRatio(1));
  for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
    fam.set(mask, QTRatio(hook_poly(family_sum_mask(lambdas, mask))));
  CumulantReport rep;
  rep.family = "hooks " + family_str(lambdas);
  for (unsigned h = 1; h <= fam.full_mask(); ++h) {
    if (std::popcount(h) < 2) continue;
    add_line(rep, h, std::popcount(h) - 1, t_error(fam, h).ord_at_q1());
  }
  return rep;
}

bool scp_holds(const IndexedFamily<QTRatio>& fam) {
  for (unsigned h = 1; h <= fam.full_mask(); ++h) {
    if (std::popcount(h) < 2) continue;
    QTRatio scaled = kappa(fam, h);
    for (int i : mask_elements(h)) {
      const QTRatio& u = fam.at(1u << (i - 1));
      if (u.is_zero())
        throw std::domain_error("zero family entry inside the subset");
      scaled /= u;
    }
    std::optional<long> o = scaled.ord_at_q1();
    if (o && *o < std::popcount(h) - 1) return false;
  }
  return true;
}

bool sfp_holds(const IndexedFamily<QTRatio>& fam) {
  for (unsigned h = 1; h <= fam.full_mask(); ++h) {
    if (std::popcount(h) < 2) continue;
    std::optional<long> o = t_error(fam, h).ord_at_q1();
    if (o && *o < std::popcount(h) - 1) return false;
  }
  return true;
}

}  // namespace macq
