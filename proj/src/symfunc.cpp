#include "symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "linalg.hpp"

namespace macq {

namespace {

using Col = std::map<Partition, QTRatio>;

void add_to(Col& acc, const Partition& lam, const QTRatio& c) {
  auto it = acc.find(lam);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(lam, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

Partition concat_parts(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

// complete homogeneous functions h_0..h_max expanded over power sums, via
// the Newton recursion k h_k = sum_{i=1}^{k} p_i h_{k-i}
std::vector<Col> h_in_p(int max) {
  std::vector<Col> hs(max + 1);
  hs[0].emplace(Partition(), QTRatio(1));
  for (int k = 1; k <= max; ++k) {
    QTRatio inv_k = QTRatio(1) / QTRatio(k);
    for (int i = 1; i <= k; ++i) {
      Partition pi({i});
      for (const auto& [nu, c] : hs[k - i])
        add_to(hs[k], concat_parts(nu, pi), c * inv_k);
    }
  }
  return hs;
}

// Schur function in the power sum basis by the h-determinant, expanded as a
// sum over permutations; nonzero terms only use h indices between 0 and d
Col schur_in_p(const Partition& mu, const std::vector<Col>& hs) {
  int l = mu.length();
  if (l == 0) return {{Partition(), QTRatio(1)}};
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  Col out;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Col prod{{Partition(), QTRatio(inversions % 2 ? -1 : 1)}};
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      int idx = mu.part(i + 1) - (i + 1) + (perm[i] + 1);
      if (idx < 0 || idx >= int(hs.size())) {
        dead = true;
        break;
      }
      Col next;
      for (const auto& [nua, ca] : prod)
        for (const auto& [nub, cb] : hs[idx])
          add_to(next, concat_parts(nua, nub), ca * cb);
      prod = std::move(next);
    }
    if (!dead)
      for (const auto& [nu, c] : prod) add_to(out, nu, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct DegreeTables {
  std::vector<Partition> order;
  // to_m[B] maps lam to the monomial expansion of B_lam; from_m[B] maps lam
  // to the B expansion of m_lam
  std::map<SFBasis, std::map<Partition, Col>> to_m, from_m;
};

std::map<Partition, Col> invert_cols(const std::vector<Partition>& order,
                                     const std::map<Partition, Col>& cols) {
  int n = int(order.size());
  std::map<Partition, int> idx;
  for (int i = 0; i < n; ++i) idx.emplace(order[i], i);
  QTMatrix a(n, std::vector<QTRatio>(n));
  for (int j = 0; j < n; ++j)
    for (const auto& [lam, c] : cols.at(order[j])) a[idx.at(lam)][j] = c;
  QTMatrix inv = qt_invert(std::move(a));
  std::map<Partition, Col> out;
  for (int j = 0; j < n; ++j) {
    Col col;
    for (int i = 0; i < n; ++i)
      if (!inv[i][j].is_zero()) col.emplace(order[i], inv[i][j]);
    out.emplace(order[j], std::move(col));
  }
  return out;
}

std::map<Partition, Col> compose_cols(const std::map<Partition, Col>& first,
                                      const std::map<Partition, Col>& then) {
  std::map<Partition, Col> out;
  for (const auto& [lam, col] : first) {
    Col acc;
    for (const auto& [nu, c] : col)
      for (const auto& [rho, k] : then.at(nu)) add_to(acc, rho, c * k);
    out.emplace(lam, std::move(acc));
  }
  return out;
}

DegreeTables build_tables(int d) {
  DegreeTables T;
  T.order = partitions_of(d);

  std::map<Partition, Col> p_to_m;
  for (const auto& lam : T.order) {
    NVarPoly f = NVarPoly::constant(d, QTRatio(1));
    for (int i = 1; i <= lam.length(); ++i)
      f = f * monomial_sym(Partition({lam.part(i)}), d);
    p_to_m.emplace(lam, extract_sym(f));
  }

  auto hs = h_in_p(d);
  std::map<Partition, Col> s_to_p, splet_to_p;
  for (const auto& mu : T.order) {
    Col sp = schur_in_p(mu, hs);
    Col tw;
    for (const auto& [nu, c] : sp) {
      QTPoly scale(1);
      for (int i = 1; i <= nu.length(); ++i)
        scale *= QTPoly(1) - QTPoly::t(nu.part(i));
      tw.emplace(nu, c * QTRatio(scale));
    }
    s_to_p.emplace(mu, std::move(sp));
    splet_to_p.emplace(mu, std::move(tw));
  }

  T.to_m[SFBasis::p] = p_to_m;
  T.to_m[SFBasis::s] = compose_cols(s_to_p, p_to_m);
  T.to_m[SFBasis::splet] = compose_cols(splet_to_p, p_to_m);
  for (SFBasis b : {SFBasis::p, SFBasis::s, SFBasis::splet})
    T.from_m[b] = invert_cols(T.order, T.to_m[b]);
  return T;
}

const DegreeTables& tables_for(int d) {
  static std::mutex mtx;
  static std::map<int, DegreeTables> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_tables(d)).first;
  return it->second;
}

// monomial basis product of a single pair, memoized; the expansion is
// independent of the variable count once it reaches the total degree
const Col& m_pair_product(Partition la, Partition mu) {
  if (mu < la) std::swap(la, mu);
  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, Col> cache;
  std::pair<Partition, Partition> key{la, mu};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int nvars = la.size() + mu.size();
  Col out = extract_sym(monomial_sym(la, nvars) * monomial_sym(mu, nvars));
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

std::string basis_letter(SFBasis b) {
  switch (b) {
    case SFBasis::m:
      return "m";
    case SFBasis::p:
      return "p";
    case SFBasis::s:
      return "s";
    case SFBasis::splet:
      return "S";
  }
  throw std::invalid_argument("unknown basis");
}

SymFunc::SymFunc(SFBasis b, std::map<Partition, QTRatio> coeffs) : basis_(b) {
  for (auto& [lam, c] : coeffs)
    if (!c.is_zero()) coeffs_.emplace(lam, std::move(c));
}

SymFunc SymFunc::unit(SFBasis b, const Partition& lam, const QTRatio& c) {
  SymFunc f(b);
  f.insert(lam, c);
  return f;
}

QTRatio SymFunc::coeff(const Partition& lam) const {
  auto it = coeffs_.find(lam);
  return it == coeffs_.end() ? QTRatio() : it->second;
}

int SymFunc::degree() const {
  int d = 0;
  for (const auto& [lam, c] : coeffs_) d = std::max(d, lam.size());
  return d;
}

void SymFunc::insert(const Partition& lam, const QTRatio& c) {
  add_to(coeffs_, lam, c);
}

SymFunc SymFunc::operator-() const {
  SymFunc out(basis_);
  for (const auto& [lam, c] : coeffs_) out.coeffs_.emplace(lam, -c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.basis_ != basis_) return *this += o.changed(basis_);
  for (const auto& [lam, c] : o.coeffs_) insert(lam, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (o.basis_ != basis_) return *this -= o.changed(basis_);
  for (const auto& [lam, c] : o.coeffs_) insert(lam, -c);
  return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc out = *this;
  out += o;
  return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc out = *this;
  out -= o;
  return out;
}

SymFunc& SymFunc::operator*=(const QTRatio& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lam, v] : coeffs_) v *= c;
  return *this;
}

SymFunc SymFunc::operator*(const QTRatio& c) const {
  SymFunc out = *this;
  out *= c;
  return out;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  if (basis_ == SFBasis::p && o.basis_ == SFBasis::p) {
    SymFunc out(SFBasis::p);
    for (const auto& [la, ca] : coeffs_)
      for (const auto& [mu, cb] : o.coeffs_)
        out.insert(concat_parts(la, mu), ca * cb);
    return out;
  }
  SymFunc a = changed(SFBasis::m);
  SymFunc b = o.changed(SFBasis::m);
  SymFunc out(SFBasis::m);
  for (const auto& [la, ca] : a.coeffs_)
    for (const auto& [mu, cb] : b.coeffs_) {
      QTRatio w = ca * cb;
      for (const auto& [nu, k] : m_pair_product(la, mu))
        out.insert(nu, w * k);
    }
  return out.changed(basis_);
}

SymFunc SymFunc::changed(SFBasis target) const {
  if (target == basis_) return *this;
  SymFunc out(target);
  std::map<int, Col> slices;
  for (const auto& [lam, c] : coeffs_) slices[lam.size()].emplace(lam, c);
  for (const auto& [d, slice] : slices) {
    const DegreeTables& T = tables_for(d);
    Col mcoef;
    if (basis_ == SFBasis::m) {
      mcoef = slice;
    } else {
      const auto& cols = T.to_m.at(basis_);
      for (const auto& [lam, c] : slice)
        for (const auto& [nu, k] : cols.at(lam)) add_to(mcoef, nu, c * k);
    }
    if (target == SFBasis::m) {
      for (const auto& [nu, c] : mcoef) out.insert(nu, c);
    } else {
      const auto& cols = T.from_m.at(target);
      for (const auto& [lam, c] : mcoef)
        for (const auto& [nu, k] : cols.at(lam)) out.insert(nu, c * k);
    }
  }
  return out;
}

std::string SymFunc::str() const {
  if (coeffs_.empty()) return "0";
  std::string letter = basis_letter(basis_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << letter << "[" << lam.str() << "]";
  }
  return os.str();
}

SymFunc twist_one_minus_t(const SymFunc& f) {
  SymFunc p = f.changed(SFBasis::p);
  std::map<Partition, QTRatio> out;
  for (const auto& [lam, c] : p.coeffs()) {
    QTPoly scale(1);
    for (int i = 1; i <= lam.length(); ++i)
      scale *= QTPoly(1) - QTPoly::t(lam.part(i));
    out.emplace(lam, c * QTRatio(scale));
  }
  return SymFunc(SFBasis::p, std::move(out));
}

SymFunc top_degree_part(const SymFunc& f) {
  if (f.is_zero()) return f;
  int top = f.degree();
  std::map<Partition, QTRatio> out;
  for (const auto& [lam, c] : f.coeffs())
    if (lam.size() == top) out.emplace(lam, c);
  return SymFunc(f.basis(), std::move(out));
}

QTRatio qt_inner(const SymFunc& f, const SymFunc& g) {
  SymFunc a = f.changed(SFBasis::p);
  SymFunc b = g.changed(SFBasis::p);
  QTRatio acc;
  for (const auto& [lam, ca] : a.coeffs()) {
    QTRatio cb = b.coeff(lam);
    if (cb.is_zero()) continue;
    QTPoly qs(1), ts(1);
    for (int i = 1; i <= lam.length(); ++i) {
      qs *= QTPoly(1) - QTPoly::q(lam.part(i));
      ts *= QTPoly(1) - QTPoly::t(lam.part(i));
    }
    acc += ca * cb * QTRatio(QTPoly(z_factor(lam))) * QTRatio::fraction(qs, ts);
  }
  return acc;
}

NVarPoly to_polynomial(const SymFunc& f, int nvars) {
  SymFunc m = f.changed(SFBasis::m);
  NVarPoly out(nvars);
  for (const auto& [lam, c] : m.coeffs()) {
    if (lam.length() > nvars) continue;
    out += monomial_sym(lam, nvars) * c;
  }
  return out;
}

BigInt z_factor(const Partition& lam) {
  std::map<int, int> mult;
  for (int v : lam.parts()) ++mult[v];
  BigInt z = 1;
  for (const auto& [v, m] : mult) {
    for (int i = 0; i < m; ++i) z *= v;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

}  // namespace macq
