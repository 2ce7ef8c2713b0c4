#include "macdonald.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace macq {

namespace {

void require_width(const Partition& lam, int nvars) {
  if (nvars < lam.length())
    throw std::invalid_argument("fewer variables than parts of " + lam.str());
}

}  // namespace

QTRatio eigenvalue_e(const Partition& lam, int nvars) {
  require_width(lam, nvars);
  QTPoly sum;
  for (int i = 1; i <= nvars; ++i)
    sum += QTPoly::term(1, lam.part(i), nvars - i);
  return QTRatio(sum);
}

QTRatio eigenvalue_d(const Partition& lam, int nvars) {
  require_width(lam, nvars);
  QTPoly sum;
  for (int i = 1; i <= nvars; ++i)
    sum += (QTPoly::q(lam.part(i)) - QTPoly(1)) * QTPoly::t(nvars - i);
  return QTRatio(sum);
}

MacdonaldJ macdonald_j_eigen(const Partition& lam) {
  return macdonald_j_eigen(lam, [](const Partition& mu, int nvars) {
    return operator_column('E', mu, nvars);
  });
}

MacdonaldJ macdonald_j_eigen(const Partition& lam, const ColumnProvider& col) {
  int n = lam.size();
  if (n == 0) return {lam, SymFunc::unit(SFBasis::m, Partition{})};
  int nvars = n;

  // coefficients of P_lam over the dominance ideal, found top-down; the
  // descending lex listing refines dominance, so every contributor to a
  // coefficient is already processed when its turn comes
  struct Node {
    Partition part;
    QTRatio coeff;
    std::map<Partition, QTRatio> column;  // E m_part over monomials
  };
  std::vector<Node> nodes;
  nodes.push_back({lam, QTRatio(1), col(lam, nvars)});

  QTRatio elam = eigenvalue_e(lam, nvars);
  std::vector<Partition> order = partitions_of(n);
  size_t pos = 0;
  while (!(order[pos] == lam)) ++pos;
  for (size_t k = pos + 1; k < order.size(); ++k) {
    const Partition& nu = order[k];
    if (dominance(nu, lam) != PartRel::less) continue;
    QTRatio acc;
    for (const Node& node : nodes) {
      auto it = node.column.find(nu);
      if (it != node.column.end()) acc += node.coeff * it->second;
    }
    if (acc.is_zero()) continue;
    QTRatio gap = elam - eigenvalue_e(nu, nvars);
    if (gap.is_zero())
      throw std::runtime_error("eigenvalue collision between " + lam.str() +
                               " and " + nu.str());
    nodes.push_back({nu, acc / gap, col(nu, nvars)});
  }

  QTRatio hook{hook_poly(lam)};
  std::map<Partition, QTRatio> out;
  for (Node& node : nodes)
    out.emplace(std::move(node.part), hook * node.coeff);
  return {lam, SymFunc(SFBasis::m, std::move(out))};
}

namespace {

QTPoly poly_lcm(const QTPoly& a, const QTPoly& b) {
  return QTPoly::div_exact(a, QTPoly::gcd(a, b)) * b;
}

}  // namespace

MacdonaldJ macdonald_j_gram(const Partition& lam) {
  int n = lam.size();
  if (n == 0) return {lam, SymFunc::unit(SFBasis::m, Partition{})};

  // orthogonalize upward from the dominance-minimal partition: the target
  // is the unique vector that is monic at m_lam, supported on m_mu for mu
  // processed earlier, and orthogonal to those m_mu.  Solve that linear
  // system directly against the Gram matrix with fraction-free elimination
  // so every intermediate stays a polynomial.
  std::vector<Partition> order = partitions_of(n);
  std::vector<Partition> basis;  // ascending, ending at lam
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    basis.push_back(*it);
    if (*it == lam) break;
  }
  size_t m = basis.size();

  // p expansions of the m_mu and the diagonal scalar-product weights
  std::vector<std::map<Partition, QTRatio>> pcols(m);
  for (size_t i = 0; i < m; ++i)
    pcols[i] = SymFunc::unit(SFBasis::m, basis[i]).changed(SFBasis::p).coeffs();
  std::map<Partition, QTRatio> weight;
  for (const Partition& rho : partitions_of(n)) {
    QTPoly qs(1), ts(1);
    for (int i = 1; i <= rho.length(); ++i) {
      qs *= QTPoly(1) - QTPoly::q(rho.part(i));
      ts *= QTPoly(1) - QTPoly::t(rho.part(i));
    }
    weight.emplace(rho, QTRatio(QTPoly(z_factor(rho))) *
                            QTRatio::fraction(qs, ts));
  }
  auto gram = [&](size_t i, size_t j) {
    QTRatio acc;
    for (const auto& [rho, ca] : pcols[i]) {
      auto it = pcols[j].find(rho);
      if (it == pcols[j].end()) continue;
      acc += ca * it->second * weight.at(rho);
    }
    return acc;
  };

  if (m == 1)
    return {lam, SymFunc::unit(SFBasis::m, lam, QTRatio(hook_poly(lam)))};

  // row j states <v, m_{basis[j]}> = 0; clear each row to polynomials
  size_t rows = m - 1;
  std::vector<std::vector<QTPoly>> a(rows,
                                     std::vector<QTPoly>(m, QTPoly(0)));
  for (size_t j = 0; j < rows; ++j) {
    std::vector<QTRatio> entries(m);
    QTPoly common(1);
    for (size_t i = 0; i < m; ++i) {
      entries[i] = gram(i, j);
      common = poly_lcm(common, entries[i].den());
    }
    for (size_t i = 0; i < m; ++i)
      a[j][i] = entries[i].num() *
                QTPoly::div_exact(common, entries[i].den());
  }
  // move the lam column to the right-hand side
  for (size_t j = 0; j < rows; ++j) a[j][rows] = -a[j][rows];

  // Bareiss elimination; exact division keeps entries at minor size
  QTPoly prev(1);
  for (size_t k = 0; k < rows; ++k) {
    if (a[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < rows && a[swap][k].is_zero()) ++swap;
      if (swap == rows)
        throw std::runtime_error("singular Gram matrix at " + lam.str());
      std::swap(a[k], a[swap]);
    }
    for (size_t i = k + 1; i < rows; ++i) {
      for (size_t j = k + 1; j <= rows; ++j)
        a[i][j] = QTPoly::div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j],
                                    prev);
      a[i][k] = QTPoly(0);
    }
    prev = a[k][k];
  }

  std::vector<QTRatio> coef(rows);
  for (size_t k = rows; k-- > 0;) {
    QTRatio acc{a[k][rows]};
    for (size_t j = k + 1; j < rows; ++j)
      acc -= QTRatio(a[k][j]) * coef[j];
    coef[k] = acc / QTRatio(a[k][k]);
  }

  QTRatio hook{hook_poly(lam)};
  std::map<Partition, QTRatio> out;
  out.emplace(lam, hook);
  for (size_t i = 0; i < rows; ++i)
    if (!coef[i].is_zero()) out.emplace(basis[i], coef[i] * hook);
  return {lam, SymFunc(SFBasis::m, std::move(out))};
}

const MacdonaldJ& macdonald_j(const Partition& lam) {
  static std::mutex mtx;
  static std::map<Partition, MacdonaldJ> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  MacdonaldJ j = macdonald_j_eigen(lam);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(lam, std::move(j)).first->second;
}

InterpolationJ interpolation_j(const Partition& lam) {
  return interpolation_j(lam, lam.size());
}

InterpolationJ interpolation_j(const Partition& lam, int nvars) {
  int n = lam.size();
  if (nvars < n)
    throw std::invalid_argument(
        "need at least " + std::to_string(n) + " variables for " + lam.str() +
        " so every vanishing point exists");

  QTRatio alam{hook_poly(lam)};
  if (n == 0) return {lam, nvars, SymFunc::unit(SFBasis::m, Partition{})};

  // unknown support: the strict extended-order ideal below lam; every other
  // partition of size <= n only contributes a vanishing condition
  std::vector<Partition> support;
  std::vector<Partition> extra;
  for (const Partition& mu : partitions_up_to(n)) {
    if (mu == lam) continue;
    (extended_below_eq(mu, lam) ? support : extra).push_back(mu);
  }

  auto row_at = [&](const Partition& mu) {
    std::vector<QTRatio> pt = tilde_point(mu, nvars);
    std::vector<QTRatio> row;
    row.reserve(support.size() + 1);
    for (const Partition& nu : support)
      row.push_back(monomial_sym(nu, nvars).evaluate(pt));
    row.push_back(monomial_sym(lam, nvars).evaluate(pt));
    return row;
  };

  // square subsystem: vanishing at the tilde points of the support itself
  QTMatrix a;
  std::vector<QTRatio> b;
  for (const Partition& mu : support) {
    std::vector<QTRatio> row = row_at(mu);
    b.push_back(-(alam * row.back()));
    row.pop_back();
    a.push_back(std::move(row));
  }
  std::vector<QTRatio> sol = qt_solve(a, b);

  // the skipped conditions must hold on their own; a nonzero residual means
  // the support convention does not match the vanishing characterization
  for (const Partition& mu : extra) {
    std::vector<QTRatio> row = row_at(mu);
    QTRatio res = alam * row.back();
    for (size_t i = 0; i < support.size(); ++i) res += sol[i] * row[i];
    if (!res.is_zero())
      throw std::runtime_error("vanishing condition failed at " + mu.str() +
                               " for " + lam.str());
  }

  std::map<Partition, QTRatio> out;
  out.emplace(lam, alam);
  for (size_t i = 0; i < support.size(); ++i)
    out.emplace(support[i], sol[i]);
  return {lam, nvars, SymFunc(SFBasis::m, std::move(out))};
}

NVarPoly interp_polynomial(const InterpolationJ& jp) {
  return to_polynomial(jp.expansion, jp.nvars);
}

InterpEigenReport verify_interp_eigen(const InterpolationJ& jp) {
  NVarPoly base = interp_polynomial(jp);
  NVarPoly f(jp.nvars);
  for (const auto& [exps, c] : base.terms())
    f += NVarPoly::term(jp.nvars, exps, c.inverted_params());
  NVarPoly residual =
      apply_D(f) - f * eigenvalue_d(jp.lambda, jp.nvars);
  return {residual.is_zero(), std::move(residual)};
}

}  // namespace macq
