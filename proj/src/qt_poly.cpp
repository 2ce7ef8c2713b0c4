#include "qt_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace macq {

QTPoly::QTPoly(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

QTPoly::QTPoly(BigInt c) {
  if (c != 0) terms_[{0, 0}] = std::move(c);
}

QTPoly QTPoly::term(BigInt c, int a, int b) {
  QTPoly p;
  if (c != 0) p.terms_[{a, b}] = std::move(c);
  return p;
}

bool QTPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return e == QTExp{0, 0} && c == 1;
}

bool QTPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0};
}

void QTPoly::add_term(const QTExp& e, const BigInt& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QTPoly QTPoly::operator-() const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
  QTPoly r = *this;
  r += o;
  return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const {
  QTPoly r = *this;
  r -= o;
  return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
  QTPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    }
  }
  return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly QTPoly::pow(unsigned e) const {
  QTPoly r(1L);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

int QTPoly::min_q_exp() const {
  if (terms_.empty()) throw std::domain_error("min_q_exp of zero");
  return terms_.begin()->first.first;
}

int QTPoly::max_q_exp() const {
  if (terms_.empty()) throw std::domain_error("max_q_exp of zero");
  return terms_.rbegin()->first.first;
}

int QTPoly::min_t_exp() const {
  if (terms_.empty()) throw std::domain_error("min_t_exp of zero");
  int m = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) m = std::min(m, e.second);
  return m;
}

int QTPoly::max_t_exp() const {
  if (terms_.empty()) throw std::domain_error("max_t_exp of zero");
  int m = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) m = std::max(m, e.second);
  return m;
}

QTExp QTPoly::leading_exp() const {
  if (terms_.empty()) throw std::domain_error("leading_exp of zero");
  return terms_.rbegin()->first;
}

const BigInt& QTPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of zero");
  return terms_.rbegin()->second;
}

QTPoly QTPoly::shifted(int dq, int dt) const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.terms_[{e.first + dq, e.second + dt}] = c;
  return r;
}

QTPoly QTPoly::inverted_params() const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.terms_[{-e.first, -e.second}] = c;
  return r;
}

QTPoly QTPoly::at_q1() const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.add_term({0, e.second}, c);
  return r;
}

QTPoly QTPoly::derivative_q() const {
  QTPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first != 0) r.add_term({e.first - 1, e.second}, c * e.first);
  }
  return r;
}

BigInt QTPoly::signed_content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (!terms_.empty() && leading_coeff() < 0) g = -g;
  return g;
}

QTPoly QTPoly::div_exact(const QTPoly& a, const QTPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  // reduce by the lex-leading term of b; valid because lex is a monomial
  // order once exponents are shifted to be nonnegative
  int sq = std::min(0, a.is_zero() ? 0 : std::min(a.min_q_exp(), b.min_q_exp()));
  int st = 0;
  if (!a.is_zero()) st = std::min({0, a.min_t_exp(), b.min_t_exp()});
  QTPoly rem = a.shifted(-2 * sq, -2 * st);
  QTPoly div = b.shifted(-sq, -st);
  QTPoly quot;
  const QTExp lb = div.leading_exp();
  const BigInt& cb = div.leading_coeff();
  while (!rem.is_zero()) {
    const QTExp la = rem.leading_exp();
    QTExp de{la.first - lb.first, la.second - lb.second};
    if (de.first < 0 || de.second < 0)
      throw std::domain_error("inexact polynomial division");
    BigInt qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(),
                rem.terms_.rbegin()->second.get_mpz_t(), cb.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact polynomial division");
    QTPoly qt = term(qc, de.first, de.second);
    quot += qt;
    rem -= qt * div;
  }
  return quot.shifted(sq, st);
}

namespace {

// dense univariate polynomial in t over Z
using TPoly = std::vector<BigInt>;

void t_trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly t_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  t_trim(r);
  return r;
}

TPoly t_scale(const TPoly& a, const BigInt& c) {
  if (c == 0) return {};
  TPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

TPoly t_sub(const TPoly& a, const TPoly& b) {
  TPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), BigInt(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  t_trim(r);
  return r;
}

BigInt t_content(const TPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

TPoly t_div_scalar(const TPoly& a, const BigInt& c) {
  TPoly r = a;
  for (auto& x : r) {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw std::domain_error("inexact scalar division");
    x = q;
  }
  return r;
}

// exact division in Z[t]
TPoly t_div_exact(const TPoly& a, const TPoly& b) {
  if (b.empty()) throw std::domain_error("t_div_exact by zero");
  TPoly rem = a, quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, BigInt(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    BigInt qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                b.back().get_mpz_t());
    if (r != 0) throw std::domain_error("inexact division in Z[t]");
    size_t off = rem.size() - b.size();
    quot[off] = qc;
    for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= qc * b[i];
    t_trim(rem);
  }
  if (!rem.empty()) throw std::domain_error("inexact division in Z[t]");
  t_trim(quot);
  return quot;
}

// primitive PRS gcd in Z[t]
TPoly t_gcd(TPoly a, TPoly b) {
  t_trim(a);
  t_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  BigInt ca = t_content(a), cb = t_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = t_div_scalar(a, ca);
  b = t_div_scalar(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    TPoly rem = a;
    BigInt lb = b.back();
    while (rem.size() >= b.size() && !rem.empty()) {
      BigInt lc = rem.back();
      size_t off = rem.size() - b.size();
      rem = t_scale(rem, lb);
      for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= lc * b[i];
      t_trim(rem);
    }
    a = b;
    if (rem.empty()) {
      b.clear();
    } else {
      b = t_div_scalar(rem, t_content(rem));
    }
  }
  TPoly g = t_scale(a, c);
  if (!g.empty() && g.back() < 0) g = t_scale(g, BigInt(-1));
  return g;
}

// polynomial in q with Z[t] coefficients, dense in q
using QTDense = std::vector<TPoly>;

void qt_trim(QTDense& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

QTDense to_dense(const QTPoly& p) {
  QTDense d;
  for (const auto& [e, c] : p.terms()) {
    if (e.first < 0 || e.second < 0)
      throw std::domain_error("gcd requires nonnegative exponents");
    if (d.size() <= size_t(e.first)) d.resize(e.first + 1);
    TPoly& tc = d[e.first];
    if (tc.size() <= size_t(e.second)) tc.resize(e.second + 1, BigInt(0));
    tc[e.second] = c;
  }
  for (auto& tc : d) t_trim(tc);
  qt_trim(d);
  return d;
}

QTPoly from_dense(const QTDense& d) {
  QTPoly p;
  for (size_t a = 0; a < d.size(); ++a)
    for (size_t b = 0; b < d[a].size(); ++b)
      if (d[a][b] != 0) p += QTPoly::term(d[a][b], int(a), int(b));
  return p;
}

TPoly qt_content(const QTDense& p) {
  TPoly g;
  for (const auto& c : p) g = t_gcd(g, c);
  return g;
}

QTDense qt_div_tpoly(const QTDense& p, const TPoly& d) {
  QTDense r = p;
  for (auto& c : r)
    if (!c.empty()) c = t_div_exact(c, d);
  return r;
}

QTDense qt_scale(const QTDense& p, const TPoly& s) {
  QTDense r = p;
  for (auto& c : r) c = t_mul(c, s);
  qt_trim(r);
  return r;
}

// pseudo-remainder prem(a, b) = lc(b)^{deg a - deg b + 1} a mod b in
// (Z[t])[q]; the full scaling power is what keeps the subresultant
// divisions exact, so top up whenever the degree drops early
QTDense qt_prem(QTDense a, const QTDense& b) {
  const TPoly& lb = b.back();
  long target = long(a.size()) - long(b.size()) + 1;
  long steps = 0;
  while (a.size() >= b.size() && !a.empty()) {
    TPoly la = a.back();
    size_t off = a.size() - b.size();
    a = qt_scale(a, lb);
    ++steps;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = t_sub(a[off + i], t_mul(la, b[i]));
    qt_trim(a);
  }
  for (; steps < target; ++steps) a = qt_scale(a, lb);
  return a;
}

TPoly t_pow(const TPoly& a, unsigned e) {
  TPoly r{BigInt(1)};
  for (unsigned i = 0; i < e; ++i) r = t_mul(r, a);
  return r;
}

}  // namespace

QTPoly QTPoly::gcd(const QTPoly& x, const QTPoly& y) {
  if (x.is_zero() && y.is_zero()) return QTPoly(0L);
  if (x.is_zero() || y.is_zero()) {
    QTPoly g = x.is_zero() ? y : x;
    if (g.leading_coeff() < 0) g = -g;
    return g;
  }
  QTDense a = to_dense(x), b = to_dense(y);
  TPoly ca = qt_content(a), cb = qt_content(b);
  a = qt_div_tpoly(a, ca);
  b = qt_div_tpoly(b, cb);
  TPoly cg = t_gcd(ca, cb);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() == 1) {
    // q-degree 0: gcd of the q-contents only
    QTDense g{t_gcd(qt_content(a), b[0])};
    g[0] = t_mul(g[0], cg);
    if (!g[0].empty() && g[0].back() < 0) g[0] = t_scale(g[0], BigInt(-1));
    return from_dense(g);
  }
  // subresultant PRS on the primitive parts
  TPoly gfac{BigInt(1)}, hfac{BigInt(1)};
  while (true) {
    long delta = long(a.size()) - long(b.size());
    QTDense rem = qt_prem(a, b);
    if (rem.empty()) break;
    if (rem.size() == 1) {
      // nontrivial remainder of q-degree 0: primitive parts are coprime in q
      b = QTDense{TPoly{BigInt(1)}};
      break;
    }
    QTDense newa = b;
    TPoly denom = t_mul(gfac, t_pow(hfac, unsigned(delta)));
    QTDense newb = qt_div_tpoly(rem, denom);
    a = std::move(newa);
    b = std::move(newb);
    gfac = a.back();
    if (delta >= 1) {
      // h = g^delta / h^{delta-1}
      hfac = t_div_exact(t_pow(gfac, unsigned(delta)), t_pow(hfac, unsigned(delta - 1)));
    } else {
      hfac = t_mul(t_pow(hfac, unsigned(-delta + 1)), t_pow(gfac, 0));
    }
  }
  TPoly bc = qt_content(b);
  QTDense g = qt_div_tpoly(b, bc);
  g = qt_scale(g, cg);
  QTPoly out = from_dense(g);
  if (out.leading_coeff() < 0) out = -out;
  return out;
}

long QTPoly::q1_multiplicity() const {
  if (is_zero()) throw std::domain_error("q1_multiplicity of zero");
  QTPoly f = shifted(-min_q_exp(), 0);
  const QTPoly qm1 = QTPoly::q() - QTPoly(1L);
  long m = 0;
  while (f.at_q1().is_zero()) {
    f = div_exact(f, qm1);
    ++m;
  }
  return m;
}

std::string QTPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*q^" << e.first << "*t^" << e.second;
  }
  return os.str();
}

namespace {

void parse_fail(const std::string& s) {
  throw std::invalid_argument("cannot parse polynomial: " + s);
}

}  // namespace

QTPoly QTPoly::parse(const std::string& s) {
  if (s == "0") return QTPoly();
  QTPoly p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(" + ", pos);
    std::string tm = s.substr(pos, end == std::string::npos ? end : end - pos);
    size_t s1 = tm.find("*q^");
    if (s1 == std::string::npos) parse_fail(s);
    size_t s2 = tm.find("*t^", s1 + 3);
    if (s2 == std::string::npos) parse_fail(s);
    BigInt c;
    try {
      c = BigInt(tm.substr(0, s1));
    } catch (const std::invalid_argument&) {
      parse_fail(s);
    }
    errno = 0;
    char* next = nullptr;
    const std::string as = tm.substr(s1 + 3, s2 - s1 - 3);
    const std::string bs = tm.substr(s2 + 3);
    long a = std::strtol(as.c_str(), &next, 10);
    if (as.empty() || *next != '\0' || errno != 0) parse_fail(s);
    long b = std::strtol(bs.c_str(), &next, 10);
    if (bs.empty() || *next != '\0' || errno != 0) parse_fail(s);
    p += term(c, int(a), int(b));
    pos = end == std::string::npos ? s.size() : end + 3;
  }
  return p;
}

int QTPoly::compare(const QTPoly& x, const QTPoly& y) {
  auto i = x.terms_.begin();
  auto j = y.terms_.begin();
  for (; i != x.terms_.end() && j != y.terms_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first ? -1 : 1;
    int c = cmp(i->second, j->second);
    if (c != 0) return c;
  }
  if (i != x.terms_.end()) return 1;
  if (j != y.terms_.end()) return -1;
  return 0;
}

QTRatio::QTRatio(const QTPoly& p) : num_(p), den_(1L) {
  if (!p.is_zero() && (p.min_q_exp() < 0 || p.min_t_exp() < 0)) normalize();
}

QTRatio QTRatio::fraction(const QTPoly& num, const QTPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  QTRatio r;
  r.num_ = num;
  r.den_ = den;
  r.normalize();
  return r;
}

void QTRatio::normalize() {
  if (num_.is_zero()) {
    den_ = QTPoly(1L);
    return;
  }
  // clear negative exponents jointly, keep the common monomial factor out
  int sq = std::min(num_.min_q_exp(), den_.min_q_exp());
  int st = std::min(num_.min_t_exp(), den_.min_t_exp());
  num_ = num_.shifted(-sq, -st);
  den_ = den_.shifted(-sq, -st);
  if (!den_.is_one()) {
    QTPoly g = QTPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = QTPoly::div_exact(num_, g);
      den_ = QTPoly::div_exact(den_, g);
    }
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QTPoly QTRatio::laurent() const {
  if (!is_laurent()) throw std::domain_error("not a Laurent polynomial");
  const auto& [e, c] = *den_.terms().begin();
  if (c != 1) throw std::domain_error("not a Laurent polynomial");
  return num_.shifted(-e.first, -e.second);
}

QTRatio QTRatio::operator-() const {
  QTRatio r = *this;
  r.num_ = -r.num_;
  return r;
}

QTRatio QTRatio::operator+(const QTRatio& o) const {
  if (den_.is_one() && o.den_.is_one()) {
    QTRatio r;
    r.num_ = num_ + o.num_;
    r.den_ = QTPoly(1L);
    return r;
  }
  return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QTRatio QTRatio::operator-(const QTRatio& o) const { return *this + (-o); }

QTRatio QTRatio::operator*(const QTRatio& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return QTRatio();
  if (den_.is_one() && o.den_.is_one()) {
    QTRatio r;
    r.num_ = num_ * o.num_;
    r.den_ = QTPoly(1L);
    return r;
  }
  return fraction(num_ * o.num_, den_ * o.den_);
}

QTRatio QTRatio::operator/(const QTRatio& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return QTRatio();
  return fraction(num_ * o.den_, den_ * o.num_);
}

QTRatio QTRatio::pow(long e) const {
  if (e == 0) return QTRatio(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return QTRatio();
  }
  QTRatio base = *this;
  if (e < 0) {
    base = QTRatio(1) / base;
    e = -e;
  }
  QTRatio r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

QTRatio QTRatio::inverted_params() const {
  return fraction(num_.inverted_params(), den_.inverted_params());
}

QTRatio QTRatio::at_q1() const {
  QTPoly d = den_.at_q1();
  if (d.is_zero()) throw std::domain_error("denominator vanishes at q = 1");
  return fraction(num_.at_q1(), d);
}

std::optional<long> QTRatio::ord_at_q1() const {
  if (is_zero()) return std::nullopt;
  return num_.q1_multiplicity() - den_.q1_multiplicity();
}

std::string QTRatio::str() const { return num_.str() + " / " + den_.str(); }

QTRatio QTRatio::parse(const std::string& s) {
  size_t sep = s.find(" / ");
  if (sep == std::string::npos)
    throw std::invalid_argument("cannot parse ratio: " + s);
  return fraction(QTPoly::parse(s.substr(0, sep)),
                  QTPoly::parse(s.substr(sep + 3)));
}

int QTRatio::compare(const QTRatio& x, const QTRatio& y) {
  int c = QTPoly::compare(x.num_, y.num_);
  if (c != 0) return c;
  return QTPoly::compare(x.den_, y.den_);
}

BigInt binomial(long n, long k) {
  if (k < 0) throw std::invalid_argument("binomial with negative k");
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= BigInt(n - i);
  }
  for (long i = 2; i <= k; ++i) r /= BigInt(i);
  return r;
}

long q_clear_degree(const QTPoly& f) {
  if (f.is_zero()) return 0;
  return std::max(0, -f.min_q_exp());
}

QTPoly qm1_coeff_at(const QTPoly& f, long k, long norm) {
  QTPoly out;
  for (const auto& [e, c] : f.terms()) {
    BigInt w = binomial(e.first + norm, k);
    if (w != 0) out += QTPoly::term(c * w, 0, e.second);
  }
  return out;
}

QTPoly qm1_coeff(const QTPoly& f, long k) {
  return qm1_coeff_at(f, k, q_clear_degree(f));
}

long q_clear_degree(const QTRatio& f) {
  if (f.is_zero()) return 0;
  return q_clear_degree(f.laurent());
}

QTPoly qm1_coeff_at(const QTRatio& f, long k, long norm) {
  if (f.is_zero()) return QTPoly();
  return qm1_coeff_at(f.laurent(), k, norm);
}

QTPoly qm1_coeff(const QTRatio& f, long k) {
  if (f.is_zero()) return QTPoly();
  return qm1_coeff(f.laurent(), k);
}

}  // namespace macq
