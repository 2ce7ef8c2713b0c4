#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace macq {

namespace {

// ---------- scheduling ----------

void parallel_for(int jobs, int n, const std::function<void(int)>& body) {
  int workers = std::max(1, std::min(jobs, n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mtx;
  std::exception_ptr err;
  auto drain = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

using Outcome = std::pair<bool, std::string>;

struct Instance {
  std::string name;
  std::function<Outcome()> run;
};

VerifyResult run_instances(std::string suite, bool advisory,
                           const VerifyOptions& opt,
                           std::vector<Instance> instances) {
  VerifyResult res;
  res.suite = std::move(suite);
  res.advisory = advisory;
  res.lines.resize(instances.size());
  parallel_for(opt.jobs, int(instances.size()), [&](int i) {
    Outcome out = instances[size_t(i)].run();
    res.lines[size_t(i)] = {instances[size_t(i)].name, out.first,
                            std::move(out.second)};
  });
  for (const VerifyLine& line : res.lines)
    if (!advisory) res.pass = res.pass && line.pass;
  res.checked = int(res.lines.size());
  return res;
}

Outcome ok() { return {true, "ok"}; }
Outcome fail(std::string why) { return {false, std::move(why)}; }

// ---------- shared helpers ----------

JProvider j_source(const VerifyOptions& opt) {
  if (opt.session) return opt.session->j_provider();
  return [](const Partition& lam) { return macdonald_j(lam).expansion; };
}

InterpProvider interp_source(const VerifyOptions& opt) {
  if (opt.session) return opt.session->interp_provider();
  return [](const Partition& lam, int nvars) {
    return interpolation_j(lam, nvars).expansion;
  };
}

std::string subset_str(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_elements(mask)) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(i);
  }
  return s + "}";
}

std::string ord_str(const std::optional<long>& o) {
  return o ? std::to_string(*o) : "inf";
}

Outcome report_outcome(const CumulantReport& rep) {
  for (const OrdLine& line : rep.lines)
    if (!line.pass)
      return fail("subset " + subset_str(line.mask) + " ord " +
                  ord_str(line.ord) + " below target " +
                  std::to_string(line.target));
  return ok();
}

// multisets of exactly r nonempty partitions with total size <= total_max,
// smallest families first
std::vector<std::vector<Partition>> families(int r, int total_max) {
  std::vector<Partition> pool;
  for (int n = 1; n + (r - 1) <= total_max; ++n)
    for (const Partition& p : partitions_of(n)) pool.push_back(p);
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, size_t start, int left) -> void {
    if (int(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    int slots = r - int(cur.size());
    for (size_t i = start; i < pool.size(); ++i) {
      if (pool[i].size() * slots > left) break;  // pool sizes ascend
      cur.push_back(pool[i]);
      self(self, i, left - pool[i].size());
      cur.pop_back();
    }
  };
  rec(rec, 0, total_max);
  return out;
}

// multisets of exactly r nonempty partitions, each of size <= each_max
std::vector<std::vector<Partition>> families_each_max(int r, int each_max) {
  std::vector<Partition> pool;
  for (int n = 1; n <= each_max; ++n)
    for (const Partition& p : partitions_of(n)) pool.push_back(p);
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (int(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

IndexedFamily<QTRatio> hook_family(const std::vector<Partition>& lambdas) {
  IndexedFamily<QTRatio> fam(int(lambdas.size()), QTRatio(1));
  for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
    fam.set(mask, QTRatio(hook_poly(family_sum_mask(lambdas, mask))));
  return fam;
}

// v_I = 1 - C q^{c + sum_{i in I} c_i}, including the empty-set entry
IndexedFamily<QTRatio> power_family(int r, const QTRatio& cfac, int c,
                                    const std::vector<int>& ci) {
  IndexedFamily<QTRatio> fam(r, QTRatio(1));
  for (unsigned mask = 0; mask <= fam.full_mask(); ++mask) {
    int e = c;
    for (int i : mask_elements(mask)) e += ci[size_t(i - 1)];
    fam.set(mask, QTRatio(1) - cfac * QTRatio(QTPoly::q(e)));
  }
  return fam;
}

QTPoly random_qtpoly(std::mt19937_64& rng, int max_terms, int max_exp,
                     int max_coeff) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<int> co(-max_coeff, max_coeff);
  QTPoly p;
  int terms = nt(rng);
  for (int k = 0; k < terms; ++k) p += QTPoly::term(co(rng), ex(rng), ex(rng));
  return p;
}

NVarPoly random_npoly(std::mt19937_64& rng, int nvars, int max_terms,
                      int max_deg) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<int> dg(0, max_deg);
  NVarPoly p(nvars);
  int terms = nt(rng);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> exps(size_t(nvars), 0);
    for (int v = 0; v < nvars; ++v) exps[size_t(v)] = dg(rng);
    p += NVarPoly::term(nvars, std::move(exps),
                        QTRatio(random_qtpoly(rng, 2, 2, 2)));
  }
  return p;
}

QTRatio qm1_power(int j) {
  return QTRatio((QTPoly::q() - QTPoly(1)).pow(unsigned(j)));
}

// ---------- suites ----------

VerifyResult suite_sfp(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  int rmax = std::min(opt.r, 4);
  for (int r = 2; r <= rmax; ++r)
    for (const auto& fam : families(r, std::min(opt.max_size, 8)))
      ins.push_back({"hooks " + family_str(fam),
                     [fam]() {
                       return report_outcome(
                           check_strong_factorization_hooks(fam));
                     }});

  std::mt19937_64 rng(0x5f9c1a2b3d4e6f70ull);
  for (int r = 2; r <= rmax; ++r)
    for (int k = 0; k < 12; ++k) {
      IndexedFamily<QTRatio> fam(r, QTRatio(1));
      QTPoly qm1 = QTPoly::q() - QTPoly(1);
      for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
        fam.set(mask,
                QTRatio(QTPoly(1) + qm1 * random_qtpoly(rng, 2, 2, 2)));
      ins.push_back(
          {"equivalence r=" + std::to_string(r) + " #" + std::to_string(k),
           [fam]() {
             bool scp = scp_holds(fam);
             bool sfp = sfp_holds(fam);
             if (scp == sfp) return ok();
             return fail(std::string("scp ") + (scp ? "holds" : "fails") +
                         " while sfp " + (sfp ? "holds" : "fails"));
           }});
    }

  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int r = 2; r <= std::min(rmax, 3); ++r)
    for (int k = 0; k < 10; ++k) {
      int c = small(rng);
      std::vector<int> ci(size_t(r), 0);
      for (int& v : ci) v = small(rng);
      int which = pick(rng);
      QTRatio cfac = which == 0   ? QTRatio(QTPoly::t())
                     : which == 1 ? QTRatio(QTPoly::t(2))
                                  : QTRatio(2);
      IndexedFamily<QTRatio> fam = power_family(r, cfac, c, ci);
      ins.push_back(
          {"power-family r=" + std::to_string(r) + " #" + std::to_string(k),
           [fam]() {
             for (unsigned h = 1; h <= fam.full_mask(); ++h) {
               if (std::popcount(h) < 2) continue;
               std::optional<long> o = t_error(fam, h).ord_at_q1();
               if (o && *o < std::popcount(h))
                 return fail("subset " + subset_str(h) + " ord " + ord_str(o) +
                             " below size " + std::to_string(std::popcount(h)));
             }
             return ok();
           }});
    }
  return run_instances("sfp", false, opt, std::move(ins));
}

VerifyResult suite_scp(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  JProvider jp = j_source(opt);
  InterpProvider ip = interp_source(opt);
  for (int r = 2; r <= std::min(opt.r, 3); ++r) {
    for (const auto& fam : families(r, opt.max_size))
      ins.push_back({"J " + family_str(fam), [fam, jp]() {
                       return report_outcome(check_small_cumulant_j(fam, jp));
                     }});
    for (const auto& fam : families(r, std::min(opt.max_size, 4))) {
      int nvars = family_sum_mask(fam, (1u << fam.size()) - 1).size();
      ins.push_back({"interp " + family_str(fam) + " n=" +
                         std::to_string(nvars),
                     [fam, nvars, ip]() {
                       return report_outcome(
                           check_small_cumulant_interp(fam, nvars, ip));
                     }});
      ins.push_back(
          {"interp-top " + family_str(fam), [fam, nvars, ip, r]() {
             IndexedFamily<SymFunc> ufam(r,
                                         SymFunc::unit(SFBasis::m, Partition{}));
             for (unsigned mask = 1; mask <= ufam.full_mask(); ++mask)
               ufam.set(mask, ip(family_sum_mask(fam, mask), nvars));
             SymFunc kap = kappa(ufam, ufam.full_mask());
             Partition top = family_sum_mask(fam, ufam.full_mask());
             for (const auto& [nu, c] : kap.coeffs())
               if (!extended_below_eq(nu, top))
                 return fail("support reaches " + nu.str());
             std::optional<long> o = kap.coeff(top).ord_at_q1();
             if (o && *o < r - 1)
               return fail("leading coefficient ord " + ord_str(o));
             return ok();
           }});
    }
  }
  return run_instances("scp", false, opt, std::move(ins));
}

VerifyResult suite_ie(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  for (int r = 2; r <= std::min(opt.r, 4); ++r)
    for (const auto& fam : families_each_max(r, 3))
      ins.push_back({"vanish " + family_str(fam), [fam, r]() {
                       Partition total =
                           family_sum_mask(fam, (1u << fam.size()) - 1);
                       for (int j = 1; j < r; ++j)
                         for (int n = std::max(1, total.length()); n <= 4; ++n)
                           if (!ie_sum(fam, j, n).is_zero())
                             return fail("nonzero at j=" + std::to_string(j) +
                                         " n=" + std::to_string(n));
                       return ok();
                     }});
  for (int size = 1; size <= opt.max_size; ++size)
    for (const Partition& lam : partitions_of(size))
      ins.push_back({"first-order " + lam.str(), [lam]() {
                       for (int n = std::max(1, lam.length()); n <= 4; ++n)
                         if (ie_sum({lam}, 1, n) !=
                             partition_binomial(lam, 1, n))
                           return fail("mismatch at n=" + std::to_string(n));
                       return ok();
                     }});
  return run_instances("ie", false, opt, std::move(ins));
}

VerifyResult suite_weisner(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  for (int n = 1; n <= 5; ++n)
    ins.push_back({"mobius n=" + std::to_string(n), [n]() {
                     auto all = SetPartition::enumerate(n);
                     for (const auto& sig : all)
                       for (const auto& pi : all) {
                         if (!pi.refines(sig)) continue;
                         BigInt sum = 0;
                         for (const auto& om : SetPartition::interval(pi, sig))
                           sum += SetPartition::mobius(pi, om);
                         BigInt want = pi == sig ? 1 : 0;
                         if (sum != want)
                           return fail("recurrence off at " + pi.str() +
                                       " <= " + sig.str());
                       }
                     return ok();
                   }});
  for (int n = 2; n <= 5; ++n)
    ins.push_back({"weisner n=" + std::to_string(n), [n]() {
                     auto all = SetPartition::enumerate(n);
                     for (const auto& sig : all)
                       for (const auto& pi : all) {
                         if (pi == sig || !pi.refines(sig)) continue;
                         for (const auto& tau :
                              SetPartition::interval(pi, sig)) {
                           if (tau == pi) continue;
                           if (SetPartition::weisner_sum(pi, tau, sig) != 0)
                             return fail("nonzero sum at " + pi.str() + " < " +
                                         tau.str() + " <= " + sig.str());
                         }
                       }
                     return ok();
                   }});
  ins.push_back({"mobius sampled n=6", []() {
                   auto all = SetPartition::enumerate(6);
                   std::mt19937_64 rng(0x7d2c91e4b8a6f350ull);
                   std::uniform_int_distribution<size_t> at(0, all.size() - 1);
                   for (int k = 0; k < 300; ++k) {
                     SetPartition sig = all[at(rng)];
                     SetPartition pi = all[at(rng)].meet(sig);
                     BigInt sum = 0;
                     for (const auto& om : SetPartition::interval(pi, sig))
                       sum += SetPartition::mobius(pi, om);
                     BigInt want = pi == sig ? 1 : 0;
                     if (sum != want)
                       return fail("recurrence off at " + pi.str() + " <= " +
                                   sig.str());
                   }
                   return ok();
                 }});
  ins.push_back({"weisner sampled n=6", []() {
                   auto all = SetPartition::enumerate(6);
                   std::mt19937_64 rng(0x3b8d5f06c7a21e94ull);
                   std::uniform_int_distribution<size_t> at(0, all.size() - 1);
                   int done = 0;
                   while (done < 300) {
                     SetPartition sig = all[at(rng)];
                     SetPartition pi = all[at(rng)].meet(sig);
                     if (pi == sig) continue;
                     SetPartition tau = pi.join(all[at(rng)].meet(sig));
                     if (tau == pi) continue;
                     ++done;
                     if (SetPartition::weisner_sum(pi, tau, sig) != 0)
                       return fail("nonzero sum at " + pi.str() + " < " +
                                   tau.str() + " <= " + sig.str());
                   }
                   return ok();
                 }});
  return run_instances("weisner", false, opt, std::move(ins));
}

VerifyResult suite_zasada(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  std::mt19937_64 rng(0x1f83d9abfb41bd6bull);
  for (int i = 0; i < 108; ++i) {
    int r = 1 + i % 3;
    int k = 1 + (i / 3) % 3;
    int nvars = 1 + (i / 9) % 2;
    int dvar = 1 + (i / 18) % nvars;
    IndexedFamily<NVarPoly> fam(r, NVarPoly::constant(nvars, QTRatio(1)));
    for (unsigned mask = 1; mask <= fam.full_mask(); ++mask)
      fam.set(mask, random_npoly(rng, nvars, 3, 3));
    ins.push_back({"random #" + std::to_string(i) + " r=" + std::to_string(r) +
                       " k=" + std::to_string(k) + " vars=" +
                       std::to_string(nvars),
                   [fam, k, dvar]() {
                     std::function<NVarPoly(const NVarPoly&)> d =
                         [dvar](const NVarPoly& f) {
                           return f.derivative(dvar, 1);
                         };
                     if (deformed_action(fam, k, d) !=
                         cumulant_differential_rhs(fam, k, d))
                       return fail("sides differ");
                     return ok();
                   }});
  }
  return run_instances("zasada", false, opt, std::move(ins));
}

VerifyResult suite_eigen(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  JProvider jp = j_source(opt);
  InterpProvider ip = interp_source(opt);
  for (int n = 1; n <= opt.max_size; ++n)
    for (const Partition& lam : partitions_of(n))
      ins.push_back({"dual-route " + lam.str(), [lam, jp]() {
                       SymFunc eigen = jp(lam);
                       SymFunc gram = macdonald_j_gram(lam).expansion;
                       if (!(eigen == gram)) return fail("routes disagree");
                       return ok();
                     }});
  for (int n = 1; n <= std::min(opt.max_size, 4); ++n)
    for (const Partition& lam : partitions_of(n))
      ins.push_back(
          {"interp-defining " + lam.str(), [lam, jp, ip]() {
             int nvars = lam.size();
             InterpolationJ jpoly{lam, nvars, ip(lam, nvars)};
             NVarPoly f = interp_polynomial(jpoly);
             for (const Partition& mu : partitions_up_to(nvars)) {
               if (mu == lam) continue;
               if (!f.evaluate(tilde_point(mu, nvars)).is_zero())
                 return fail("does not vanish at " + mu.str());
             }
             if (!(jpoly.expansion.coeff(lam) == QTRatio(hook_poly(lam))))
               return fail("leading coefficient is not the hook product");
             for (const auto& [nu, c] : jpoly.expansion.coeffs())
               if (!extended_below_eq(nu, lam))
                 return fail("support reaches " + nu.str());
             if (!(top_degree_part(jpoly.expansion) == jp(lam)))
               return fail("top degree detaches from the homogeneous form");
             return ok();
           }});
  for (int n = 0; n <= std::min(opt.max_size, 3); ++n)
    for (const Partition& lam : partitions_of(n)) {
      ins.push_back({"interp-eigen " + lam.str(), [lam, ip]() {
                       int nvars = std::max(lam.size(), 1);
                       InterpolationJ jpoly{lam, nvars, ip(lam, nvars)};
                       InterpEigenReport rep = verify_interp_eigen(jpoly);
                       if (!rep.pass) return fail("nonzero residual");
                       return ok();
                     }});
      ins.push_back(
          {"interp-extend " + lam.str(), [lam, ip]() {
             int nvars = std::max(lam.size(), 1);
             NVarPoly small =
                 to_polynomial(ip(lam, nvars), nvars);
             NVarPoly big = to_polynomial(ip(lam, nvars + 1), nvars + 1)
                                .substituted(nvars + 1, QTRatio(1));
             std::map<std::vector<int>, QTRatio> lhs;
             for (const auto& [exps, c] : big.terms()) {
               int deg = 0;
               for (int e : exps) deg += e;
               std::vector<int> head(exps.begin(), exps.end() - 1);
               lhs.emplace(std::move(head), c * QTRatio(QTPoly::t(deg)));
             }
             std::map<std::vector<int>, QTRatio> rhs;
             QTRatio scale{QTPoly::t(lam.size())};
             for (const auto& [exps, c] : small.terms())
               rhs.emplace(exps, c * scale);
             if (lhs != rhs)
               return fail("variable extension breaks the scaled match");
             return ok();
           }});
    }
  for (int n = 0; n <= opt.max_size; ++n)
    for (const Partition& lam : partitions_of(n))
      ins.push_back(
          {"eigenvalue-series " + lam.str(), [lam]() {
             for (int nvars = std::max(1, lam.length());
                  nvars <= std::max(1, lam.size()) + 1; ++nvars) {
               QTRatio direct = eigenvalue_d(lam, nvars);
               QTRatio series;
               for (int j = 1; j <= lam.part(1); ++j)
                 series += qm1_power(j) *
                           QTRatio(partition_binomial(lam, j, nvars));
               if (!(series == direct))
                 return fail("series mismatch at n=" + std::to_string(nvars));
             }
             return ok();
           }});
  return run_instances("eigen", false, opt, std::move(ins));
}

// shared between the integrality and positivity suites
std::vector<std::vector<Partition>> kostka_families(const VerifyOptions& opt) {
  std::vector<std::vector<Partition>> fams;
  for (int n = 1; n <= std::min(opt.max_size, 4); ++n)
    for (const Partition& lam : partitions_of(n)) fams.push_back({lam});
  for (const auto& fam : families(2, opt.max_size)) fams.push_back(fam);
  return fams;
}

SymFunc kappa_of_j(const std::vector<Partition>& fam, const JProvider& jp) {
  IndexedFamily<SymFunc> ufam(int(fam.size()),
                              SymFunc::unit(SFBasis::m, Partition{}));
  for (unsigned mask = 1; mask <= ufam.full_mask(); ++mask)
    ufam.set(mask, jp(family_sum_mask(fam, mask)));
  return kappa(ufam, ufam.full_mask());
}

VerifyResult suite_kostka_integrality(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  JProvider jp = j_source(opt);
  for (const auto& fam : kostka_families(opt))
    ins.push_back(
        {"table " + family_str(fam), [fam, jp]() {
           KostkaTable table = multivariate_kostka(fam, jp);
           for (const auto& [mu, entry] : table.entries) {
             if (!entry.is_polynomial)
               return fail("entry at " + mu.str() + " is not polynomial: " +
                           entry.value.str());
             if (!entry.is_integer)
               return fail("entry at " + mu.str() +
                           " has non-integer coefficients: " +
                           entry.value.str());
           }
           // undo the normalization and compare against the cumulant
           QTRatio scale = qm1_power(int(fam.size()) - 1);
           std::map<Partition, QTRatio> rebuilt;
           for (const auto& [mu, entry] : table.entries)
             if (!entry.value.is_zero())
               rebuilt.emplace(mu, entry.value * scale);
           if (!(SymFunc(SFBasis::splet, std::move(rebuilt)) ==
                 kappa_of_j(fam, jp).changed(SFBasis::splet)))
             return fail("re-expansion does not match the cumulant");
           return ok();
         }});
  return run_instances("kostka-integrality", false, opt, std::move(ins));
}

VerifyResult suite_kostka_positivity(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  JProvider jp = j_source(opt);
  for (const auto& fam : kostka_families(opt))
    ins.push_back({"table " + family_str(fam), [fam, jp]() -> Outcome {
                     KostkaTable table = multivariate_kostka(fam, jp);
                     for (const auto& [mu, entry] : table.entries)
                       if (!entry.is_nonnegative)
                         return {true, "NEGATIVE coefficient at " + mu.str() +
                                           ": " + entry.value.str() +
                                           " (conjecture evidence against)"};
                     return {true, "all entries nonnegative"};
                   }});
  return run_instances("kostka-positivity", true, opt, std::move(ins));
}

VerifyResult suite_q1_factorization(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  JProvider jp = j_source(opt);
  for (const auto& fam : families(2, opt.max_size))
    ins.push_back({fam[0].str() + " with " + fam[1].str(), [fam, jp]() {
                     SymFunc diff = jp(oplus(fam[0], fam[1])) -
                                    jp(fam[0]) * jp(fam[1]);
                     for (const auto& [nu, c] : diff.coeffs())
                       if (!c.at_q1().is_zero())
                         return fail("coefficient of m " + nu.str() +
                                     " survives the substitution");
                     return ok();
                   }});
  return run_instances("q1-factorization", false, opt, std::move(ins));
}

VerifyResult suite_stability(const VerifyOptions& opt) {
  std::vector<Instance> ins;
  std::mt19937_64 rng(0x243f6a8885a308d3ull);
  std::uniform_int_distribution<int> small(0, 3);
  for (int r = 2; r <= std::min(opt.r, 3); ++r) {
    auto fams = families(r, 4);
    size_t take = std::min<size_t>(fams.size(), 4);
    std::vector<IndexedFamily<QTRatio>> bases;
    std::vector<std::string> labels;
    for (size_t i = 0; i < take; ++i) {
      bases.push_back(hook_family(fams[i]));
      labels.push_back("hooks " + family_str(fams[i]));
    }
    for (int k = 0; k < 2; ++k) {
      int c = small(rng);
      std::vector<int> ci(size_t(r), 0);
      for (int& v : ci) v = small(rng);
      bases.push_back(power_family(r, QTRatio(QTPoly::t()), c, ci));
      labels.push_back("power-family #" + std::to_string(k));
    }
    for (size_t i = 0; i < bases.size(); ++i)
      for (size_t j = i + 1; j < bases.size(); ++j) {
        IndexedFamily<QTRatio> prod(r, QTRatio(1));
        IndexedFamily<QTRatio> quot(r, QTRatio(1));
        for (unsigned mask = 0; mask <= prod.full_mask(); ++mask) {
          prod.set(mask, bases[i].at(mask) * bases[j].at(mask));
          quot.set(mask, bases[i].at(mask) / bases[j].at(mask));
        }
        ins.push_back({"r=" + std::to_string(r) + " " + labels[i] + " and " +
                           labels[j],
                       [a = bases[i], b = bases[j], prod, quot]() {
                         if (!sfp_holds(a) || !sfp_holds(b))
                           return fail("an input family fails on its own");
                         if (!sfp_holds(prod))
                           return fail("entry-wise product fails");
                         if (!sfp_holds(quot))
                           return fail("entry-wise quotient fails");
                         return ok();
                       }});
      }
  }
  return run_instances("stability", false, opt, std::move(ins));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "sfp",   "scp",   "ie",
      "weisner", "zasada", "eigen",
      "kostka-integrality", "kostka-positivity", "q1-factorization",
      "stability"};
  return names;
}

VerifyResult run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (opt.max_size < 1 || opt.max_size > 10)
    throw std::invalid_argument("size bound must be between 1 and 10");
  if (opt.r < 1 || opt.r > 6)
    throw std::invalid_argument("family bound must be between 1 and 6");
  if (opt.jobs < 1 || opt.jobs > 64)
    throw std::invalid_argument("job count must be between 1 and 64");
  if (suite == "sfp") return suite_sfp(opt);
  if (suite == "scp") return suite_scp(opt);
  if (suite == "ie") return suite_ie(opt);
  if (suite == "weisner") return suite_weisner(opt);
  if (suite == "zasada") return suite_zasada(opt);
  if (suite == "eigen") return suite_eigen(opt);
  if (suite == "kostka-integrality") return suite_kostka_integrality(opt);
  if (suite == "kostka-positivity") return suite_kostka_positivity(opt);
  if (suite == "q1-factorization") return suite_q1_factorization(opt);
  if (suite == "stability") return suite_stability(opt);
  throw std::invalid_argument("unknown suite: " + suite);
}

std::string render_plain(const VerifyResult& res) {
  std::ostringstream os;
  os << "suite " << res.suite;
  if (res.advisory) os << " (evidence only)";
  os << "\n";
  for (const VerifyLine& line : res.lines)
    os << (line.pass ? "  pass " : "  FAIL ") << line.name << ": "
       << line.detail << "\n";
  os << (res.pass ? "PASS" : "FAIL") << " checks=" << res.checked << "\n";
  return os.str();
}

std::string render_records(const VerifyResult& res) {
  std::ostringstream os;
  for (const VerifyLine& line : res.lines)
    os << "suite=" << res.suite << "\tcheck=" << line.name << "\tpass="
       << (line.pass ? 1 : 0) << "\tdetail=" << line.detail << "\n";
  os << "suite=" << res.suite << "\tresult=" << (res.pass ? "pass" : "fail")
     << "\tchecked=" << res.checked << "\n";
  return os.str();
}

}  // namespace macq
