#include "npoly.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace macq {

NVarPoly::NVarPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

NVarPoly NVarPoly::constant(int nvars, const QTRatio& c) {
  NVarPoly p(nvars);
  p.insert(Exps(nvars, 0), c);
  return p;
}

NVarPoly NVarPoly::term(int nvars, Exps exps, QTRatio coeff) {
  if (int(exps.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  NVarPoly p(nvars);
  p.insert(std::move(exps), std::move(coeff));
  return p;
}

NVarPoly NVarPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index");
  Exps e(nvars, 0);
  e[i - 1] = 1;
  return term(nvars, std::move(e), QTRatio(1));
}

QTRatio NVarPoly::coeff(const Exps& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QTRatio() : it->second;
}

bool NVarPoly::operator==(const NVarPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

void NVarPoly::insert(Exps exps, QTRatio coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NVarPoly NVarPoly::operator-() const {
  NVarPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

NVarPoly& NVarPoly::operator+=(const NVarPoly& o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

NVarPoly& NVarPoly::operator-=(const NVarPoly& o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

NVarPoly NVarPoly::operator+(const NVarPoly& o) const {
  NVarPoly out = *this;
  out += o;
  return out;
}

NVarPoly NVarPoly::operator-(const NVarPoly& o) const {
  NVarPoly out = *this;
  out -= o;
  return out;
}

NVarPoly NVarPoly::operator*(const NVarPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("variable count mismatch");
  NVarPoly out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(nvars_);
      for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
      out.insert(std::move(e), ca * cb);
    }
  return out;
}

NVarPoly& NVarPoly::operator*=(const NVarPoly& o) {
  *this = *this * o;
  return *this;
}

NVarPoly& NVarPoly::operator*=(const QTRatio& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v = v * c;
  return *this;
}

NVarPoly NVarPoly::operator*(const QTRatio& c) const {
  NVarPoly out = *this;
  out *= c;
  return out;
}

NVarPoly NVarPoly::shifted_q(int i) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("variable index");
  NVarPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    out.insert(e, c * QTRatio(QTPoly::q(e[i - 1])));
  return out;
}

NVarPoly NVarPoly::times_power(int i, int k) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("variable index");
  if (k == 0) return *this;
  NVarPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne[i - 1] += k;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

NVarPoly NVarPoly::derivative(int i, int order) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("variable index");
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order == 0) return *this;
  NVarPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    BigInt fac = 1;
    for (int s = 0; s < order; ++s) fac *= e[i - 1] - s;
    if (fac == 0) continue;
    Exps ne = e;
    ne[i - 1] -= order;
    out.insert(std::move(ne), c * QTRatio(QTPoly(fac)));
  }
  return out;
}

NVarPoly NVarPoly::substituted(int i, const QTRatio& value) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("variable index");
  NVarPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    int k = ne[i - 1];
    ne[i - 1] = 0;
    out.insert(std::move(ne), c * value.pow(k));
  }
  return out;
}

QTRatio NVarPoly::evaluate(const std::vector<QTRatio>& point) const {
  if (int(point.size()) != nvars_)
    throw std::invalid_argument("point dimension mismatch");
  QTRatio acc;
  for (const auto& [e, c] : terms_) {
    QTRatio m = c;
    for (int v = 0; v < nvars_; ++v)
      if (e[v] != 0) m = m * point[v].pow(e[v]);
    acc += m;
  }
  return acc;
}

NVarPoly NVarPoly::div_exact(const NVarPoly& num, const NVarPoly& den) {
  if (num.nvars_ != den.nvars_)
    throw std::invalid_argument("variable count mismatch");
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  int n = num.nvars_;
  if (num.is_zero()) return NVarPoly(n);

  // shift both operands so every exponent is nonnegative; the quotient's
  // lowest exponent per variable is exactly the difference of the operands'
  // lowest exponents, so the shifted division has a polynomial quotient
  // precisely when the original has a Laurent one
  auto min_exps = [n](const NVarPoly& p) {
    Exps m = p.terms_.begin()->first;
    for (const auto& [e, c] : p.terms_)
      for (int v = 0; v < n; ++v) m[v] = std::min(m[v], e[v]);
    return m;
  };
  Exps mnum = min_exps(num), mden = min_exps(den);
  NVarPoly a = num, b = den;
  for (int v = 0; v < n; ++v) {
    if (mnum[v] != 0) a = a.times_power(v + 1, -mnum[v]);
    if (mden[v] != 0) b = b.times_power(v + 1, -mden[v]);
  }

  // reduction by a homogeneous divisor stays inside fixed-degree layers,
  // each a finite monomial set, so the loop below must terminate
  long bdeg = -1;
  for (const auto& [e, c] : b.terms_) {
    long d = std::accumulate(e.begin(), e.end(), 0L);
    if (bdeg < 0)
      bdeg = d;
    else if (d != bdeg)
      throw std::invalid_argument("divisor must be homogeneous");
  }

  Exps blead = b.terms_.rbegin()->first;
  QTRatio bleadc = b.terms_.rbegin()->second;
  NVarPoly quot(n);
  while (!a.is_zero()) {
    const auto& [ae, ac] = *a.terms_.rbegin();
    Exps qe(n);
    for (int v = 0; v < n; ++v) {
      qe[v] = ae[v] - blead[v];
      if (qe[v] < 0) throw std::domain_error("inexact polynomial division");
    }
    NVarPoly qterm = term(n, std::move(qe), ac / bleadc);
    quot += qterm;
    a -= qterm * b;
  }
  for (int v = 0; v < n; ++v) {
    int back = mnum[v] - mden[v];
    if (back != 0) quot = quot.times_power(v + 1, back);
  }
  return quot;
}

std::string NVarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int v = 0; v < nvars_; ++v) {
      int e = it->first[v];
      if (e == 0) continue;
      os << "*x" << (v + 1);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

NVarPoly monomial_sym(const Partition& lam, int nvars) {
  if (lam.length() > nvars)
    throw std::invalid_argument("more parts than variables");
  std::vector<int> exps(nvars, 0);
  for (int i = 1; i <= lam.length(); ++i) exps[i - 1] = lam.part(i);
  std::sort(exps.begin(), exps.end());
  NVarPoly out(nvars);
  do {
    out += NVarPoly::term(nvars, exps, QTRatio(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

NVarPoly vandermonde(int nvars) {
  NVarPoly out = NVarPoly::constant(nvars, QTRatio(1));
  for (int i = 1; i <= nvars; ++i)
    for (int j = i + 1; j <= nvars; ++j)
      out *= NVarPoly::variable(nvars, i) - NVarPoly::variable(nvars, j);
  return out;
}

std::map<Partition, QTRatio> extract_sym(const NVarPoly& f) {
  std::map<Partition, QTRatio> out;
  auto work = f.terms();
  while (!work.empty()) {
    std::vector<int> exps = work.begin()->first;
    QTRatio c = work.begin()->second;
    std::sort(exps.begin(), exps.end());
    if (!exps.empty() && exps.front() < 0)
      throw std::invalid_argument("negative exponent in symmetric extraction");
    std::vector<int> parts(exps.rbegin(), exps.rend());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    Partition shape(parts);
    // the whole orbit of the exponent vector must carry the same coefficient
    do {
      auto it = work.find(exps);
      if (it == work.end() || !(it->second == c))
        throw std::invalid_argument("polynomial is not symmetric");
      work.erase(it);
    } while (std::next_permutation(exps.begin(), exps.end()));
    out.emplace(std::move(shape), std::move(c));
  }
  return out;
}

namespace {

// prod_{j != i} (t x_i - x_j)
NVarPoly tshift_product(int nvars, int i) {
  NVarPoly out = NVarPoly::constant(nvars, QTRatio(1));
  NVarPoly txi = NVarPoly::variable(nvars, i) * QTRatio(QTPoly::t());
  for (int j = 1; j <= nvars; ++j)
    if (j != i) out *= txi - NVarPoly::variable(nvars, j);
  return out;
}

// Vandermonde determinant of the variables other than x_i
NVarPoly vandermonde_without(int nvars, int i) {
  NVarPoly out = NVarPoly::constant(nvars, QTRatio(1));
  for (int j = 1; j <= nvars; ++j)
    for (int k = j + 1; k <= nvars; ++k)
      if (j != i && k != i)
        out *= NVarPoly::variable(nvars, j) - NVarPoly::variable(nvars, k);
  return out;
}

// sum_i A_i g_i times the full Vandermonde, assembled without denominators:
// prod_{j != i}(x_i - x_j) equals (-1)^{i-1} Vandermonde / Vandermonde_(i)
NVarPoly alternating_sum(int nvars, const std::function<NVarPoly(int)>& gi) {
  NVarPoly num(nvars);
  for (int i = 1; i <= nvars; ++i) {
    NVarPoly piece =
        tshift_product(nvars, i) * vandermonde_without(nvars, i) * gi(i);
    if (i % 2 == 0) piece *= QTRatio(-1);
    num += piece;
  }
  return num;
}

}  // namespace

NVarPoly a_weighted_sum(const std::vector<NVarPoly>& g) {
  if (g.empty()) throw std::invalid_argument("need at least one summand");
  int nvars = g.front().nvars();
  for (const NVarPoly& p : g)
    if (p.nvars() != nvars)
      throw std::invalid_argument("summands disagree on variable count");
  if (int(g.size()) != nvars)
    throw std::invalid_argument("need one summand per variable");
  NVarPoly num =
      alternating_sum(nvars, [&](int i) { return g[size_t(i) - 1]; });
  return NVarPoly::div_exact(num, vandermonde(nvars));
}

NVarPoly apply_E(const NVarPoly& f) {
  NVarPoly num =
      alternating_sum(f.nvars(), [&](int i) { return f.shifted_q(i); });
  return NVarPoly::div_exact(num, vandermonde(f.nvars()));
}

NVarPoly apply_D(const NVarPoly& f) {
  NVarPoly num = alternating_sum(f.nvars(), [&](int i) {
    NVarPoly h = f.shifted_q(i) - f;
    return h - h.times_power(i, -1);
  });
  return NVarPoly::div_exact(num, vandermonde(f.nvars()));
}

NVarPoly apply_D_diff_term(const NVarPoly& f, int j) {
  if (j < 1) throw std::invalid_argument("differential order must be positive");
  NVarPoly num = alternating_sum(f.nvars(), [&](int i) {
    NVarPoly d = f.derivative(i, j);
    return d.times_power(i, j) - d.times_power(i, j - 1);
  });
  return NVarPoly::div_exact(num, vandermonde(f.nvars()));
}

std::map<Partition, QTRatio> operator_column(char op, const Partition& mu,
                                             int nvars) {
  if (op != 'E' && op != 'D') throw std::invalid_argument("unknown operator");
  using Key = std::tuple<char, std::string, int>;
  static std::mutex mtx;
  static std::map<Key, std::map<Partition, QTRatio>> cache;
  Key key{op, mu.str(), nvars};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  NVarPoly f = monomial_sym(mu, nvars);
  auto col = extract_sym(op == 'E' ? apply_E(f) : apply_D(f));
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(std::move(key), std::move(col)).first->second;
}

}  // namespace macq
