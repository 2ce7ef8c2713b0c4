// Laurent polynomials in x_1..x_N with rational q,t coefficients, plus the
// t-deformed shift operators built from divided differences.  This is the
// engine behind the eigenoperator route: everything is assembled as one big
// numerator and divided exactly by the Vandermonde determinant, so a failed
// division is a hard error, never a rounding artifact.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "partition.hpp"
#include "qt_poly.hpp"

namespace macq {

class NVarPoly {
 public:
  // exponent vectors are fixed-length, one slot per variable, possibly
  // negative; map ordering (vector lex) doubles as the monomial order
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, QTRatio>;

  explicit NVarPoly(int nvars);
  static NVarPoly constant(int nvars, const QTRatio& c);
  static NVarPoly term(int nvars, Exps exps, QTRatio coeff);
  static NVarPoly variable(int nvars, int i);  // x_i, 1-based

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QTRatio coeff(const Exps& exps) const;

  bool operator==(const NVarPoly& o) const;
  bool operator!=(const NVarPoly& o) const { return !(*this == o); }

  NVarPoly operator-() const;
  NVarPoly& operator+=(const NVarPoly& o);
  NVarPoly& operator-=(const NVarPoly& o);
  NVarPoly operator+(const NVarPoly& o) const;
  NVarPoly operator-(const NVarPoly& o) const;
  NVarPoly operator*(const NVarPoly& o) const;
  NVarPoly& operator*=(const NVarPoly& o);
  NVarPoly& operator*=(const QTRatio& c);
  NVarPoly operator*(const QTRatio& c) const;

  // substitution x_i -> q x_i (multiplies each term by q^exponent)
  NVarPoly shifted_q(int i) const;
  // multiply by x_i^k, k may be negative
  NVarPoly times_power(int i, int k) const;
  // iterated d/dx_i, with the falling-factorial rule on Laurent terms
  NVarPoly derivative(int i, int order) const;
  // substitute a scalar for x_i; the variable slot stays (exponent 0)
  NVarPoly substituted(int i, const QTRatio& value) const;
  QTRatio evaluate(const std::vector<QTRatio>& point) const;

  // exact division, lex-leading reduction; the divisor must be homogeneous
  // (the only divisor used internally is the Vandermonde determinant);
  // throws std::domain_error when the quotient does not exist
  static NVarPoly div_exact(const NVarPoly& num, const NVarPoly& den);

  std::string str() const;

 private:
  void insert(Exps exps, QTRatio coeff);
  int nvars_;
  Terms terms_;
};

// monomial symmetric polynomial: sum of x^alpha over the distinct
// rearrangements alpha of lam padded with zeros to nvars slots
NVarPoly monomial_sym(const Partition& lam, int nvars);

// product of (x_i - x_j) over i < j
NVarPoly vandermonde(int nvars);

// expand a symmetric polynomial over the monomial basis; throws
// std::invalid_argument when f has a negative exponent or is not symmetric
std::map<Partition, QTRatio> extract_sym(const NVarPoly& f);

// sum_i A_i(x;t) g[i-1] with A_i = prod_{j != i} (t x_i - x_j)/(x_i - x_j);
// requires one summand per variable, all in the same variable count
NVarPoly a_weighted_sum(const std::vector<NVarPoly>& g);

// E f = sum_i A_i(x;t) f(.., q x_i, ..) with
// A_i = prod_{j != i} (t x_i - x_j)/(x_i - x_j)
NVarPoly apply_E(const NVarPoly& f);

// D f = sum_i A_i(x;t) (1 - 1/x_i) (f(.., q x_i, ..) - f)
NVarPoly apply_D(const NVarPoly& f);

// the j-th differential term sum_i A_i (x_i^j - x_i^{j-1}) d^j/dx_i^j f;
// summing (q-1)^j/j! times these over j >= 1 reproduces D on polynomials
NVarPoly apply_D_diff_term(const NVarPoly& f, int j);

// column of an operator matrix over the monomial basis: the expansion of
// op(m_mu) in nvars variables; op is 'E' or 'D'; memoized process-wide
std::map<Partition, QTRatio> operator_column(char op, const Partition& mu,
                                             int nvars);

}  // namespace macq
