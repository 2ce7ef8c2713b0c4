#pragma once

#include <bit>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macdonald.hpp"
#include "setpartition.hpp"

namespace macq {

// subsets of [r] are bitmasks: bit i-1 set means element i is in
std::vector<int> mask_elements(unsigned mask);   // 1-based, ascending
unsigned mask_of(const std::vector<int>& items);

// family (u_I) indexed by the subsets of [r], with u_emptyset fixed to the
// ring unit; the unit also seeds products and zero accumulators generically
template <typename V>
class IndexedFamily {
 public:
  IndexedFamily(int r, V unit)
      : r_(r), unit_(std::move(unit)) {
    if (r < 0 || r > 20) throw std::invalid_argument("family size out of range");
    values_.assign(size_t(1) << r, unit_);
  }

  int r() const { return r_; }
  unsigned full_mask() const { return (1u << r_) - 1; }
  const V& unit() const { return unit_; }
  V zero() const { return unit_ * QTRatio(0); }

  const V& at(unsigned mask) const {
    if (mask >= values_.size()) throw std::out_of_range("subset out of range");
    return values_[mask];
  }
  // the empty-set entry defaults to the unit; cumulants never read it, but
  // the error terms do, and some scalar families override it
  void set(unsigned mask, V v) {
    if (mask >= values_.size()) throw std::out_of_range("subset out of range");
    values_[mask] = std::move(v);
  }

 private:
  int r_;
  V unit_;
  std::vector<V> values_;
};

// partial cumulant sum_{pi of H} mobius(pi, one block) prod_{B in pi} u_B
template <typename V>
V kappa(const IndexedFamily<V>& fam, unsigned h) {
  if (h == 0 || h > fam.full_mask())
    throw std::out_of_range("subset out of range");
  V acc = fam.zero();
  for (const auto& blocks : set_partitions_of(mask_elements(h))) {
    V prod = fam.unit();
    for (const auto& block : blocks) prod = prod * fam.at(mask_of(block));
    acc += prod * QTRatio(QTPoly(mobius_to_top(int(blocks.size()))));
  }
  return acc;
}

// moment recovered from a family of cumulants: sum_{pi of H} prod kappa_B
template <typename V>
V moments_from_cumulants(const IndexedFamily<V>& kappas, unsigned h) {
  if (h == 0 || h > kappas.full_mask())
    throw std::out_of_range("subset out of range");
  V acc = kappas.zero();
  for (const auto& blocks : set_partitions_of(mask_elements(h))) {
    V prod = kappas.unit();
    for (const auto& block : blocks) prod = prod * kappas.at(mask_of(block));
    acc += prod;
  }
  return acc;
}

// compositions of total into a fixed number of positive parts
std::vector<std::vector<int>> positive_compositions(int total, int parts);
// total! / prod parts!  (parts must sum to total)
BigInt multinomial(int total, const std::vector<int>& parts);

// forced Leibniz action of the k-fold derivation on the cumulant: expand
// kappa over set partitions and let d^k hit one factor of each product
template <typename V>
V deformed_action(const IndexedFamily<V>& fam, int k,
                  const std::function<V(const V&)>& d) {
  if (k < 1) throw std::invalid_argument("derivation order must be positive");
  std::vector<std::pair<unsigned, V>> dk;  // d^k u_B, computed once per mask
  auto derived = [&](unsigned mask) -> const V& {
    for (const auto& [m, v] : dk)
      if (m == mask) return v;
    V v = fam.at(mask);
    for (int s = 0; s < k; ++s) v = d(v);
    return dk.emplace_back(mask, std::move(v)).second;
  };
  V acc = fam.zero();
  for (const auto& blocks : set_partitions_of(mask_elements(fam.full_mask()))) {
    QTRatio weight{QTPoly(mobius_to_top(int(blocks.size())))};
    for (size_t i = 0; i < blocks.size(); ++i) {
      V prod = fam.unit();
      for (size_t j = 0; j < blocks.size(); ++j)
        prod = prod * (j == i ? derived(mask_of(blocks[j]))
                              : fam.at(mask_of(blocks[j])));
      acc += prod * weight;
    }
  }
  return acc;
}

// the matching expansion over products of cumulants: sum over set partitions
// with at most k blocks and positive orders alpha summing to k of
// multinomial(k, alpha) prod_B d^{alpha(B)} kappa_B
template <typename V>
V cumulant_differential_rhs(const IndexedFamily<V>& fam, int k,
                            const std::function<V(const V&)>& d) {
  if (k < 1) throw std::invalid_argument("derivation order must be positive");
  std::vector<std::pair<unsigned, V>> kap;  // cumulant per block mask
  auto kappa_at = [&](unsigned mask) -> const V& {
    for (const auto& [m, v] : kap)
      if (m == mask) return v;
    return kap.emplace_back(mask, kappa(fam, mask)).second;
  };
  V acc = fam.zero();
  for (const auto& blocks : set_partitions_of(mask_elements(fam.full_mask()))) {
    int m = int(blocks.size());
    if (m > k) continue;
    for (const auto& alpha : positive_compositions(k, m)) {
      V prod = fam.unit();
      for (int i = 0; i < m; ++i) {
        V piece = kappa_at(mask_of(blocks[size_t(i)]));
        for (int s = 0; s < alpha[size_t(i)]; ++s) piece = d(piece);
        prod = prod * piece;
      }
      acc += prod * QTRatio(QTPoly(multinomial(k, alpha)));
    }
  }
  return acc;
}

// cumulative factorization error prod_{G subseteq H} u_G^{(-1)^{|H|-|G|}} - 1
QTRatio t_error(const IndexedFamily<QTRatio>& fam, unsigned h);

// alternating sum over subsets I of binom-weighted part counts of lambda^I:
// sum_I (-1)^{r-|I|} b^N_j(lambda^I)
QTPoly ie_sum(const std::vector<Partition>& lambdas, int j, int N);

// one (q-1)-adic order check: the value attached to a subset, the achieved
// order (absent when the value vanishes identically) and the target
struct OrdLine {
  unsigned mask = 0;
  long target = 0;
  std::optional<long> ord;
  bool pass = false;
};

struct CumulantReport {
  std::string family;
  std::vector<OrdLine> lines;
  bool pass = true;
};

// minimal (q-1)-adic order over the monomial coefficients
std::optional<long> min_ord_q1(const SymFunc& f);

// small cumulant checks: every subset H must give ord(kappa_H) >= |H| - 1
CumulantReport check_small_cumulant_j(const std::vector<Partition>& lambdas);
CumulantReport check_small_cumulant_j(const std::vector<Partition>& lambdas,
                                      const JProvider& jp);
CumulantReport check_small_cumulant_interp(const std::vector<Partition>& lambdas,
                                           int nvars);
CumulantReport check_small_cumulant_interp(const std::vector<Partition>& lambdas,
                                           int nvars, const InterpProvider& ip);
// strong factorization for the scalar family of hook products:
// ord(T_H) >= |H| - 1 for every H with at least two elements
CumulantReport check_strong_factorization_hooks(
    const std::vector<Partition>& lambdas);

// scalar-family property tests used by the equivalence checks:
// scp: ord(kappa_H / prod_{h in H} u_h) >= |H| - 1 for every |H| >= 2
// sfp: ord(T_H) >= |H| - 1 for every |H| >= 2
bool scp_holds(const IndexedFamily<QTRatio>& fam);
bool sfp_holds(const IndexedFamily<QTRatio>& fam);

}  // namespace macq
