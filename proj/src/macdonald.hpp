#pragma once

#include <functional>
#include <map>

#include "npoly.hpp"
#include "symfunc.hpp"

namespace macq {

// Integral form J_lambda, homogeneous of degree |lambda|.  The monomial
// expansion is dominance-supported and carries hook_poly(lambda) on m_lambda.
struct MacdonaldJ {
  Partition lambda;
  SymFunc expansion;  // monomial basis
};

// Inhomogeneous interpolation polynomial in a fixed variable count, stored
// through its monomial expansion (degrees 0..|lambda| mixed in one SymFunc).
struct InterpolationJ {
  Partition lambda;
  int nvars = 0;
  SymFunc expansion;  // monomial basis
};

// supplies the monomial-basis column of E m_mu in nvars variables;
// lets callers reroute column computation through a persistent cache
using ColumnProvider =
    std::function<std::map<Partition, QTRatio>(const Partition&, int)>;

// cache-aware sources for expansions consumed by downstream modules
using JProvider = std::function<SymFunc(const Partition&)>;
using InterpProvider = std::function<SymFunc(const Partition&, int)>;

// sum_{1 <= i <= N} q^{lam_i} t^{N - i}, the E eigenvalue
QTRatio eigenvalue_e(const Partition& lam, int nvars);

// sum_{1 <= i <= N} (q^{lam_i} - 1) t^{N - i}, the D eigenvalue
QTRatio eigenvalue_d(const Partition& lam, int nvars);

// J via the triangular eigenproblem for E in |lambda| variables: fill the
// dominance ideal below lambda top-down and scale by hook_poly(lambda)
MacdonaldJ macdonald_j_eigen(const Partition& lam);
MacdonaldJ macdonald_j_eigen(const Partition& lam, const ColumnProvider& col);

// J via Gram-Schmidt against the q,t scalar product, walking a linear
// extension of dominance upward from (1^n); independent of the eigen route
MacdonaldJ macdonald_j_gram(const Partition& lam);

// memoized eigen-route J, shared process-wide
const MacdonaldJ& macdonald_j(const Partition& lam);

// interpolation polynomial with nvars variables (default |lambda|): fix the
// top coefficient to hook_poly(lambda), solve the square vanishing system on
// the extended-order ideal, then check every remaining vanishing condition
InterpolationJ interpolation_j(const Partition& lam);
InterpolationJ interpolation_j(const Partition& lam, int nvars);

NVarPoly interp_polynomial(const InterpolationJ& jp);

// eigenvector check for D: with parameters inverted coefficient-wise, the
// interpolation polynomial satisfies D f = eigenvalue_d(lambda, nvars) f
struct InterpEigenReport {
  bool pass = false;
  NVarPoly residual{0};  // D f - eigenvalue * f
};
InterpEigenReport verify_interp_eigen(const InterpolationJ& jp);

}  // namespace macq
