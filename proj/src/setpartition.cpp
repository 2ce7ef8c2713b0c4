#include "setpartition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace macq {

SetPartition SetPartition::from_labels(std::vector<int> raw) {
  // renumber by first appearance
  SetPartition sp;
  std::vector<int> remap;
  sp.labels_.assign(raw.size(), 0);
  int next = 0;
  for (size_t k = 0; k < raw.size(); ++k) {
    int r = raw[k];
    if (r < 0) throw std::invalid_argument("bad label");
    if (remap.size() <= size_t(r)) remap.resize(r + 1, -1);
    if (remap[r] < 0) remap[r] = next++;
    sp.labels_[k] = remap[r];
  }
  sp.nblocks_ = next;
  return sp;
}

SetPartition::SetPartition(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 0) throw std::invalid_argument("negative ground set");
  labels_.assign(n, -1);
  int id = 0;
  for (const auto& blk : blocks) {
    for (int e : blk) {
      if (e < 1 || e > n) throw std::invalid_argument("element out of range");
      if (labels_[e - 1] != -1) throw std::invalid_argument("element repeated");
      labels_[e - 1] = id;
    }
    ++id;
  }
  for (int l : labels_)
    if (l == -1) throw std::invalid_argument("element not covered");
  *this = from_labels(labels_);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<int> raw(n);
  for (int k = 0; k < n; ++k) raw[k] = k;
  return from_labels(raw);
}

SetPartition SetPartition::one_block(int n) {
  if (n == 0) return from_labels({});
  return from_labels(std::vector<int>(n, 0));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> bs(nblocks_);
  for (size_t k = 0; k < labels_.size(); ++k) bs[labels_[k]].push_back(int(k) + 1);
  return bs;
}

bool SetPartition::refines(const SetPartition& o) const {
  if (ground_size() != o.ground_size())
    throw std::invalid_argument("mismatched ground sets");
  // same block here must imply same block there
  std::vector<int> img(nblocks_, -1);
  for (size_t k = 0; k < labels_.size(); ++k) {
    int& t = img[labels_[k]];
    if (t == -1) t = o.labels_[k];
    else if (t != o.labels_[k]) return false;
  }
  return true;
}

SetPartition SetPartition::join(const SetPartition& o) const {
  if (ground_size() != o.ground_size())
    throw std::invalid_argument("mismatched ground sets");
  int n = ground_size();
  std::vector<int> parent(n);
  for (int k = 0; k < n; ++k) parent[k] = k;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  auto link_blocks = [&](const std::vector<int>& lab) {
    std::vector<int> first(n, -1);
    for (int k = 0; k < n; ++k) {
      int b = lab[k];
      if (first[b] == -1) first[b] = k;
      else unite(k, first[b]);
    }
  };
  link_blocks(labels_);
  link_blocks(o.labels_);
  std::vector<int> raw(n);
  for (int k = 0; k < n; ++k) raw[k] = find(k);
  return from_labels(raw);
}

SetPartition SetPartition::meet(const SetPartition& o) const {
  if (ground_size() != o.ground_size())
    throw std::invalid_argument("mismatched ground sets");
  int n = ground_size();
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> raw(n);
  for (int k = 0; k < n; ++k) {
    auto key = std::make_pair(labels_[k], o.labels_[k]);
    auto it = ids.emplace(key, int(ids.size())).first;
    raw[k] = it->second;
  }
  return from_labels(raw);
}

std::vector<SetPartition> SetPartition::enumerate(int n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  if (n == 0) {
    out.push_back(from_labels({}));
    return out;
  }
  // iterate restricted growth strings
  while (true) {
    out.push_back(from_labels(rgs));
    int k = n - 1;
    while (k > 0) {
      int maxpref = 0;
      for (int i = 0; i < k; ++i) maxpref = std::max(maxpref, rgs[i]);
      if (rgs[k] <= maxpref) break;
      --k;
    }
    if (k == 0) break;
    ++rgs[k];
    for (int i = k + 1; i < n; ++i) rgs[i] = 0;
  }
  return out;
}

std::vector<SetPartition> SetPartition::interval(const SetPartition& pi,
                                                 const SetPartition& sigma) {
  if (!pi.refines(sigma)) throw std::invalid_argument("not an interval");
  // an omega in [pi, sigma] merges pi-blocks within each sigma-block
  int n = pi.ground_size();
  std::vector<int> reps;  // first element of each pi-block
  std::vector<int> seen(pi.block_count(), 0);
  for (int k = 0; k < n; ++k) {
    if (!seen[pi.labels()[k]]) {
      seen[pi.labels()[k]] = 1;
      reps.push_back(k);
    }
  }
  // group pi-block reps by sigma-block
  std::vector<std::vector<int>> groups(sigma.block_count());
  for (int rep : reps) groups[sigma.labels()[rep]].push_back(rep);

  std::vector<std::vector<int>> raws{std::vector<int>(n, -1)};
  int next_id = 0;
  for (const auto& grp : groups) {
    auto parts = set_partitions_of(grp);
    std::vector<std::vector<int>> expanded;
    for (const auto& raw : raws) {
      for (const auto& blocks : parts) {
        std::vector<int> nr = raw;
        int added = 0;
        for (const auto& blk : blocks) {
          for (int rep : blk) {
            // paint all elements of the pi-blocks merged into this block
            for (int k = 0; k < n; ++k)
              if (pi.labels()[k] == pi.labels()[rep]) nr[k] = next_id + added;
          }
          ++added;
        }
        expanded.push_back(std::move(nr));
      }
    }
    // reserve one id per pi-block in the group so ids never collide across
    // groups, whatever block counts the individual partitions use
    next_id += int(grp.size());
    raws = std::move(expanded);
  }
  std::vector<SetPartition> out;
  out.reserve(raws.size());
  for (auto& raw : raws) out.push_back(from_labels(raw));
  return out;
}

BigInt mobius_to_top(int nblocks) {
  if (nblocks < 1) throw std::invalid_argument("empty partition has no top");
  BigInt f = 1;
  for (int i = 2; i <= nblocks - 1; ++i) f *= i;
  return (nblocks % 2 == 1) ? f : -f;
}

BigInt SetPartition::mobius(const SetPartition& pi, const SetPartition& sigma) {
  if (!pi.refines(sigma))
    throw std::invalid_argument("mobius needs pi <= sigma");
  // product over sigma-blocks of mobius_to_top(number of pi-blocks inside)
  std::vector<int> counts(sigma.block_count(), 0);
  std::vector<int> seen(pi.block_count(), 0);
  for (size_t k = 0; k < pi.labels_.size(); ++k) {
    if (!seen[pi.labels_[k]]) {
      seen[pi.labels_[k]] = 1;
      ++counts[sigma.labels_[k]];
    }
  }
  BigInt m = 1;
  for (int c : counts) m *= mobius_to_top(c);
  return m;
}

BigInt SetPartition::weisner_sum(const SetPartition& pi, const SetPartition& tau,
                                 const SetPartition& sigma) {
  if (!pi.refines(tau) || !tau.refines(sigma) || pi == tau)
    throw std::invalid_argument("weisner_sum needs pi < tau <= sigma");
  BigInt s = 0;
  for (const SetPartition& omega : interval(pi, sigma)) {
    if (omega.join(tau) == sigma) s += mobius(pi, omega);
  }
  return s;
}

std::string SetPartition::str() const {
  std::ostringstream os;
  os << '{';
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b) os << '|';
    for (size_t k = 0; k < bs[b].size(); ++k) {
      if (k) os << ',';
      os << bs[b][k];
    }
  }
  os << '}';
  return os.str();
}

std::vector<std::vector<std::vector<int>>> set_partitions_of(
    const std::vector<int>& items) {
  std::vector<std::vector<std::vector<int>>> out;
  int n = int(items.size());
  for (const SetPartition& sp : SetPartition::enumerate(n)) {
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : sp.blocks()) {
      std::vector<int> mapped;
      for (int e : blk) mapped.push_back(items[e - 1]);
      blocks.push_back(std::move(mapped));
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

BigInt bell_number(int n) {
  // Bell triangle
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace macq
