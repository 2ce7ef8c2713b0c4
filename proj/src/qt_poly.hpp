#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace macq {

using BigInt = mpz_class;

// Exponent pair (a, b) standing for q^a * t^b.  Negative exponents are
// allowed, so QTPoly is a Laurent polynomial ring Z[q^{+-1}, t^{+-1}].
// The map order is lex on (a, b), which fixes term order everywhere:
// iteration, printing, leading-term selection.
using QTExp = std::pair<int, int>;

class QTPoly {
 public:
  using Terms = std::map<QTExp, BigInt>;

  QTPoly() = default;
  QTPoly(long c);                 // NOLINT: implicit on purpose, scalars embed
  explicit QTPoly(BigInt c);

  static QTPoly term(BigInt c, int a, int b);
  static QTPoly q(int a = 1) { return term(1, a, 0); }
  static QTPoly t(int b = 1) { return term(1, 0, b); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // true when the poly is a single term c * q^a * t^b
  bool is_monomial() const { return terms_.size() == 1; }

  bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QTPoly& o) const { return !(*this == o); }

  QTPoly operator-() const;
  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly operator+(const QTPoly& o) const;
  QTPoly operator-(const QTPoly& o) const;
  QTPoly operator*(const QTPoly& o) const;
  QTPoly& operator*=(const QTPoly& o);
  QTPoly pow(unsigned e) const;

  int min_q_exp() const;  // throws std::domain_error on zero
  int max_q_exp() const;
  int min_t_exp() const;
  int max_t_exp() const;
  QTExp leading_exp() const;       // lex-largest exponent, throws on zero
  const BigInt& leading_coeff() const;

  // multiply by q^dq * t^dt
  QTPoly shifted(int dq, int dt) const;
  // q -> q^{-1}, t -> t^{-1}
  QTPoly inverted_params() const;
  // substitute q = 1 (collapses q exponents)
  QTPoly at_q1() const;
  QTPoly derivative_q() const;

  // gcd of all coefficients, with the sign of the lex-leading coefficient;
  // zero for the zero polynomial
  BigInt signed_content() const;

  // exact division, throws std::domain_error when not exact over Z
  static QTPoly div_exact(const QTPoly& a, const QTPoly& b);
  // gcd in Z[q,t] of two polynomials with nonnegative exponents, including
  // integer content; result has positive lex-leading coefficient.
  // Subresultant PRS with q as the main variable.
  static QTPoly gcd(const QTPoly& a, const QTPoly& b);

  // multiplicity of (q - 1) as a factor; input must be nonzero
  long q1_multiplicity() const;

  // canonical text: terms "c*q^a*t^b" joined by " + ", lex-ascending (a, b);
  // the zero polynomial prints as "0"
  std::string str() const;
  static QTPoly parse(const std::string& s);

  // deterministic total order (term-by-term lex compare), used for sorting
  static int compare(const QTPoly& x, const QTPoly& y);

 private:
  Terms terms_;
  void add_term(const QTExp& e, const BigInt& c);
  friend class QTRatio;
};

// Element of the fraction field Q(q, t), kept in a canonical form:
//  - num and den have nonnegative exponents,
//  - min over both of the q-valuations is 0, same for t,
//  - gcd(num, den) = 1 in Z[q,t] (content included),
//  - den has positive lex-leading coefficient,
//  - zero is 0/1.
// Equality is therefore structural.
class QTRatio {
 public:
  QTRatio() : num_(0L), den_(1L) {}
  QTRatio(long c) : num_(c), den_(1L) {}  // NOLINT: implicit embedding
  QTRatio(const QTPoly& p);               // NOLINT: implicit embedding
  static QTRatio fraction(const QTPoly& num, const QTPoly& den);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // true when den is a monomial, i.e. the value is a Laurent polynomial
  bool is_laurent() const { return den_.is_monomial(); }
  bool is_polynomial() const { return den_.is_one(); }
  // Laurent polynomial view (throws when den is not a monomial)
  QTPoly laurent() const;

  bool operator==(const QTRatio& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QTRatio& o) const { return !(*this == o); }

  QTRatio operator-() const;
  QTRatio operator+(const QTRatio& o) const;
  QTRatio operator-(const QTRatio& o) const;
  QTRatio operator*(const QTRatio& o) const;
  QTRatio operator/(const QTRatio& o) const;  // throws on zero divisor
  QTRatio& operator+=(const QTRatio& o) { return *this = *this + o; }
  QTRatio& operator-=(const QTRatio& o) { return *this = *this - o; }
  QTRatio& operator*=(const QTRatio& o) { return *this = *this * o; }
  QTRatio& operator/=(const QTRatio& o) { return *this = *this / o; }
  QTRatio pow(long e) const;  // negative e inverts, throws on zero base

  QTRatio inverted_params() const;
  // substitute q = 1; throws when the denominator vanishes there
  QTRatio at_q1() const;

  // (q - 1)-adic order: multiplicity in num minus multiplicity in den.
  // nullopt encodes +infinity (the zero element).
  std::optional<long> ord_at_q1() const;

  std::string str() const;  // "NUM / DEN", both canonical polynomial text
  static QTRatio parse(const std::string& s);
  static int compare(const QTRatio& x, const QTRatio& y);

 private:
  QTPoly num_, den_;
  void normalize();
};

// Coefficient of (q - 1)^k in the expansion of q^norm * f around q = 1,
// where f is Laurent in q.  For a single term c q^a t^b the contribution is
// c * binom(a + norm, k) * t^b, with the generalized binomial, so any
// integer norm is meaningful.  The result is a polynomial in t alone.
QTPoly qm1_coeff_at(const QTPoly& f, long k, long norm);

// Smallest nonnegative d with q^d f free of negative q exponents.
long q_clear_degree(const QTPoly& f);

// Coefficient extraction at the polynomial's own clearing degree,
// norm = q_clear_degree(f).
QTPoly qm1_coeff(const QTPoly& f, long k);

// Same for a Laurent-valued ratio (den must be a monomial).
QTPoly qm1_coeff(const QTRatio& f, long k);
long q_clear_degree(const QTRatio& f);
QTPoly qm1_coeff_at(const QTRatio& f, long k, long norm);

// binom(n, k) for any integer n and k >= 0
BigInt binomial(long n, long k);

}  // namespace macq
