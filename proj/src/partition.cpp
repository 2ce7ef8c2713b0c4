#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("nonpositive part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("parts not weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  if (s == "-" || s.empty()) return Partition();
  std::vector<int> parts;
  std::istringstream is(s);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition: " + s);
    }
    if (used != piece.size()) throw std::invalid_argument("bad partition: " + s);
    parts.push_back(v);
  }
  return Partition(parts);
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int i = 1; i <= (parts_.empty() ? 0 : parts_[0]); ++i) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= i) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition oplus(const Partition& a, const Partition& b) {
  std::vector<int> s;
  int n = std::max(a.length(), b.length());
  for (int i = 1; i <= n; ++i) s.push_back(a.part(i) + b.part(i));
  while (!s.empty() && s.back() == 0) s.pop_back();
  return Partition(s);
}

PartRel dominance(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance needs equal sizes");
  if (a == b) return PartRel::equal;
  int n = std::max(a.length(), b.length());
  bool le = true, ge = true;
  int sa = 0, sb = 0;
  for (int i = 1; i <= n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) le = false;
    if (sa < sb) ge = false;
  }
  if (le) return PartRel::less;
  if (ge) return PartRel::greater;
  return PartRel::incomparable;
}

PartRel extended_relation(const Partition& a, const Partition& b) {
  if (a.size() < b.size()) return PartRel::less;
  if (a.size() > b.size()) return PartRel::greater;
  return dominance(a, b);
}

bool extended_below_eq(const Partition& a, const Partition& b) {
  PartRel r = extended_relation(a, b);
  return r == PartRel::less || r == PartRel::equal;
}

int arm(const Partition& lam, const Box& b) {
  if (b.row < 1 || b.row > lam.length() || b.col < 1 || b.col > lam.part(b.row))
    throw std::out_of_range("box outside diagram");
  return lam.part(b.row) - b.col;
}

int leg(const Partition& lam, const Box& b) {
  if (b.row < 1 || b.row > lam.length() || b.col < 1 || b.col > lam.part(b.row))
    throw std::out_of_range("box outside diagram");
  return lam.conjugate().part(b.col) - b.row;
}

std::vector<Box> boxes(const Partition& lam) {
  std::vector<Box> bs;
  for (int j = 1; j <= lam.length(); ++j)
    for (int i = 1; i <= lam.part(j); ++i) bs.push_back(Box{i, j});
  return bs;
}

QTPoly hook_poly(const Partition& lam) {
  QTPoly h(1L);
  for (const Box& b : boxes(lam)) {
    h *= QTPoly(1L) - QTPoly::term(1, arm(lam, b), leg(lam, b) + 1);
  }
  return h;
}

QTPoly partition_binomial(const Partition& lam, int j, int N) {
  if (j < 1) throw std::invalid_argument("partition_binomial needs j >= 1");
  if (N < lam.length())
    throw std::invalid_argument("partition_binomial needs N >= length");
  QTPoly out;
  for (int i = 1; i <= N; ++i) {
    BigInt c = binomial(lam.part(i), j);
    if (c != 0) out += QTPoly::term(c, 0, N - i);
  }
  return out;
}

std::vector<QTRatio> tilde_point(const Partition& mu, int N) {
  if (N < mu.length()) throw std::invalid_argument("tilde_point needs N >= length");
  std::vector<QTRatio> pt;
  for (int i = 1; i <= N; ++i)
    pt.push_back(QTRatio(QTPoly::term(1, mu.part(i), N - i)));
  return pt;
}

namespace {

// columns of lam as lengths, position c holds the length of column c
std::vector<int> column_lengths(const Partition& lam) {
  return lam.conjugate().parts();
}

}  // namespace

ArmSplit arm_split(const std::vector<Partition>& lambdas, int g, const Box& b,
                   const std::vector<int>& I) {
  if (g < 1 || g > int(lambdas.size())) throw std::out_of_range("bad diagram index");
  if (std::find(I.begin(), I.end(), g) == I.end())
    throw std::invalid_argument("subset must contain the diagram of the box");
  for (int i : I)
    if (i < 1 || i > int(lambdas.size())) throw std::out_of_range("bad subset index");
  const Partition& lamg = lambdas[g - 1];
  int L = leg(lamg, b) + b.row;  // column length of the box, validates b too

  ArmSplit out;
  for (int i : I) {
    if (i == g) {
      out.contributions[i] = arm(lamg, b);
    } else {
      const Partition& lam = lambdas[i - 1];
      std::vector<int> cols = column_lengths(lam);
      int row_len = lam.part(b.row);
      int cnt = 0;
      for (int c = 1; c <= row_len; ++c) {
        int len = cols[c - 1];
        if (i < g ? len < L : len <= L) ++cnt;
      }
      out.contributions[i] = cnt;
    }
  }

  // independent computation inside the merged diagram
  std::vector<int> sortedI = I;
  std::sort(sortedI.begin(), sortedI.end());
  struct Col {
    int len, diagram, pos;
  };
  std::vector<Col> merged;
  for (int i : sortedI) {
    std::vector<int> cols = column_lengths(lambdas[i - 1]);
    for (int c = 1; c <= int(cols.size()); ++c)
      merged.push_back(Col{cols[c - 1], i, c});
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Col& x, const Col& y) { return x.len > y.len; });
  int pos = -1;
  for (int k = 0; k < int(merged.size()); ++k) {
    if (merged[k].diagram == g && merged[k].pos == b.col) {
      pos = k + 1;
      break;
    }
  }
  Partition sum;
  std::vector<Partition> sub;
  for (int i : sortedI) sub.push_back(lambdas[i - 1]);
  for (const Partition& p : sub) sum = oplus(sum, p);
  out.arm_in_sum = sum.part(b.row) - pos;
  return out;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto block = partitions_of(m);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Partition family_sum(const std::vector<Partition>& lambdas,
                     const std::vector<int>& I) {
  Partition s;
  for (int i : I) {
    if (i < 1 || i > int(lambdas.size())) throw std::out_of_range("bad subset index");
    s = oplus(s, lambdas[i - 1]);
  }
  return s;
}

Partition family_sum_mask(const std::vector<Partition>& lambdas, unsigned mask) {
  Partition s;
  for (int i = 0; i < int(lambdas.size()); ++i)
    if (mask & (1u << i)) s = oplus(s, lambdas[i]);
  return s;
}

std::string family_str(const std::vector<Partition>& lambdas) {
  std::ostringstream os;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (i) os << ';';
    os << lambdas[i].str();
  }
  return os.str();
}

std::vector<Partition> parse_family(const std::string& s) {
  std::vector<Partition> fam;
  std::istringstream is(s);
  std::string piece;
  while (std::getline(is, piece, ';')) fam.push_back(Partition::parse(piece));
  return fam;
}

}  // namespace macq
