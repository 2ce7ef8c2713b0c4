#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qt_poly.hpp"

namespace macq {

// Integer partition, parts weakly decreasing and positive.  The empty
// partition is allowed everywhere and prints as "-".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;            // sum of parts
  int length() const { return int(parts_.size()); }
  int part(int i) const;       // 1-based, 0 beyond the length
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  std::string str() const;

 private:
  std::vector<int> parts_;
};

// box (i, j) of a diagram: i = column, j = row, both 1-based
struct Box {
  int col = 1;
  int row = 1;
};

// entry-wise sum of parts
Partition oplus(const Partition& a, const Partition& b);

enum class PartRel { less, equal, greater, incomparable };

// dominance order on partitions of equal size; unequal sizes are an error
PartRel dominance(const Partition& a, const Partition& b);

// extension across sizes: any partition of smaller size lies strictly below
// any partition of larger size; equal sizes fall back to dominance
PartRel extended_relation(const Partition& a, const Partition& b);
bool extended_below_eq(const Partition& a, const Partition& b);

// arm and leg of a box; the box must lie inside the diagram
int arm(const Partition& lam, const Box& b);
int leg(const Partition& lam, const Box& b);
std::vector<Box> boxes(const Partition& lam);

// prod over boxes of (1 - q^{arm} t^{leg + 1})
QTPoly hook_poly(const Partition& lam);

// sum_{1 <= i <= N} binom(lam_i, j) t^{N - i}; requires N >= length, j >= 1
QTPoly partition_binomial(const Partition& lam, int j, int N);

// evaluation point (q^{mu_1} t^{N-1}, ..., q^{mu_N} t^0); requires N >= length
std::vector<QTRatio> tilde_point(const Partition& mu, int N);

// Arm decomposition of a box across a family of diagrams.  For a family
// lam^1..lam^r, a diagram index g, a box b of lam^g and a subset I
// containing g, the columns of all lam^i with i in I merge into the columns
// of the entry-wise sum lam^I, sorted by length with ties resolved by
// diagram index and then by original column position.  contributions[i] is
// the per-diagram arm count a_i(b) and arm_in_sum is the arm length of the
// merged box inside lam^I, computed independently of the contributions.
struct ArmSplit {
  std::map<int, int> contributions;  // keyed by 1-based diagram index in I
  int arm_in_sum = 0;
};
ArmSplit arm_split(const std::vector<Partition>& lambdas, int g, const Box& b,
                   const std::vector<int>& I);

// partitions of n in descending lex order: (n) first, (1^n) last
std::vector<Partition> partitions_of(int n);
// sizes 0..n, each size block in the order above
std::vector<Partition> partitions_up_to(int n);

// sum over a subset of a family (1-based indices)
Partition family_sum(const std::vector<Partition>& lambdas,
                     const std::vector<int>& I);
Partition family_sum_mask(const std::vector<Partition>& lambdas, unsigned mask);

std::string family_str(const std::vector<Partition>& lambdas);
std::vector<Partition> parse_family(const std::string& s);

}  // namespace macq
