// Symmetric functions over the rational q,t field, expanded over one of four
// bases: monomial (m), power sum (p), Schur (s), and the twisted Schur
// family S_lam, the image of s_lam under p_k -> (1 - t^k) p_k.  Basis
// changes go through exact per-degree transition matrices; products go
// through faithful expansions in enough variables.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "npoly.hpp"
#include "partition.hpp"
#include "qt_poly.hpp"

namespace macq {

enum class SFBasis { m, p, s, splet };

// one-letter tag used in printing and serialization: m, p, s, S
std::string basis_letter(SFBasis b);

class SymFunc {
 public:
  SymFunc() : basis_(SFBasis::m) {}
  explicit SymFunc(SFBasis b) : basis_(b) {}
  SymFunc(SFBasis b, std::map<Partition, QTRatio> coeffs);
  static SymFunc unit(SFBasis b, const Partition& lam,
                      const QTRatio& c = QTRatio(1));

  SFBasis basis() const { return basis_; }
  const std::map<Partition, QTRatio>& coeffs() const { return coeffs_; }
  QTRatio coeff(const Partition& lam) const;
  bool is_zero() const { return coeffs_.empty(); }
  // largest term size in the support (0 for the zero function)
  int degree() const;

  // structural equality: same basis, same coefficients
  bool operator==(const SymFunc& o) const {
    return basis_ == o.basis_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);  // o is converted to this basis
  SymFunc& operator-=(const SymFunc& o);
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc& operator*=(const QTRatio& c);
  SymFunc operator*(const QTRatio& c) const;
  // product of symmetric functions, returned in the left operand's basis
  SymFunc operator*(const SymFunc& o) const;

  SymFunc changed(SFBasis target) const;

  std::string str() const;  // "(ratio)*m[2,1] + ...", support in map order

 private:
  SFBasis basis_;
  std::map<Partition, QTRatio> coeffs_;
  void insert(const Partition& lam, const QTRatio& c);
};

// the substitution p_k -> (1 - t^k) p_k, returned in the power sum basis
SymFunc twist_one_minus_t(const SymFunc& f);

// the terms of maximal degree, in the same basis (zero input stays zero)
SymFunc top_degree_part(const SymFunc& f);

// scalar product with <p_lam, p_mu> = delta * z_lam *
// prod_i (1 - q^{lam_i}) / (1 - t^{lam_i})
QTRatio qt_inner(const SymFunc& f, const SymFunc& g);

// restriction to nvars variables (monomials with more parts than variables
// vanish); faithful when nvars >= every support length
NVarPoly to_polynomial(const SymFunc& f, int nvars);

// z_lam = prod over part values k of k^{mult} * mult!
BigInt z_factor(const Partition& lam);

}  // namespace macq
