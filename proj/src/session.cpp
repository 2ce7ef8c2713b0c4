#include "session.hpp"

#include <sstream>

namespace macq {

std::string serialize_mcoeffs(const std::map<Partition, QTRatio>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs) {
    if (!first) os << '|';
    first = false;
    os << lam.str() << '=' << c.str();
  }
  return os.str();
}

std::map<Partition, QTRatio> parse_mcoeffs(const std::string& payload) {
  std::map<Partition, QTRatio> out;
  if (payload.empty()) return out;
  std::istringstream is(payload);
  std::string piece;
  while (std::getline(is, piece, '|')) {
    size_t eq = piece.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad coefficient record: " + piece);
    out.emplace(Partition::parse(piece.substr(0, eq)),
                QTRatio::parse(piece.substr(eq + 1)));
  }
  return out;
}

Session::Session(std::string cache_dir) : cache_(std::move(cache_dir)) {}

MacdonaldJ Session::j_poly(const Partition& lam) {
  std::string key = "v1:J:" + lam.str();
  if (auto hit = cache_.load("J", key))
    return {lam, SymFunc(SFBasis::m, parse_mcoeffs(*hit))};
  MacdonaldJ j = macdonald_j_eigen(lam, [this](const Partition& mu, int n) {
    return op_column('E', mu, n);
  });
  cache_.store("J", key, serialize_mcoeffs(j.expansion.coeffs()));
  return j;
}

InterpolationJ Session::interp(const Partition& lam, int nvars) {
  std::string key = "v1:interp:" + lam.str() + ":" + std::to_string(nvars);
  if (auto hit = cache_.load("interp", key))
    return {lam, nvars, SymFunc(SFBasis::m, parse_mcoeffs(*hit))};
  InterpolationJ j = interpolation_j(lam, nvars);
  cache_.store("interp", key, serialize_mcoeffs(j.expansion.coeffs()));
  return j;
}

std::map<Partition, QTRatio> Session::op_column(char op, const Partition& mu,
                                                int nvars) {
  std::string key = "v1:" + std::string(1, op) + ":" + mu.str() + ":" +
                    std::to_string(nvars);
  if (auto hit = cache_.load("operator-matrix", key)) return parse_mcoeffs(*hit);
  std::map<Partition, QTRatio> col = operator_column(op, mu, nvars);
  cache_.store("operator-matrix", key, serialize_mcoeffs(col));
  return col;
}

KostkaTable Session::kostka_table(const std::vector<Partition>& lambdas) {
  std::string key = "v1:kostka:" + family_str(lambdas);
  if (auto hit = cache_.load("kostka", key)) {
    KostkaTable table;
    table.family = lambdas;
    for (const auto& [mu, value] : parse_mcoeffs(*hit))
      table.entries.emplace(mu, classify_kostka(value));
    return table;
  }
  KostkaTable table = multivariate_kostka(lambdas, j_provider());
  std::map<Partition, QTRatio> values;
  for (const auto& [mu, entry] : table.entries)
    values.emplace(mu, entry.value);
  cache_.store("kostka", key, serialize_mcoeffs(values));
  return table;
}

JProvider Session::j_provider() {
  return [this](const Partition& lam) { return j_poly(lam).expansion; };
}

InterpProvider Session::interp_provider() {
  return [this](const Partition& lam, int nvars) {
    return interp(lam, nvars).expansion;
  };
}

}  // namespace macq
