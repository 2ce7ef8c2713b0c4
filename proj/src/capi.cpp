#include "macq.h"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "verify.hpp"

using namespace macq;

struct macq_ctx {
  Session session;
  std::string last_error;
  explicit macq_ctx(std::string dir) : session(std::move(dir)) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool want_records(const char* format, std::string* err) {
  std::string f = format ? format : "plain";
  if (f.empty() || f == "plain") return false;
  if (f == "records") return true;
  *err = "unknown format: " + f;
  return false;
}

std::string render_symfunc(const SymFunc& f, bool records) {
  if (!records) return f.str() + "\n";
  std::ostringstream os;
  for (const auto& [lam, c] : f.coeffs())
    os << "basis=" << basis_letter(f.basis()) << "\tmu=" << lam.str()
       << "\tvalue=" << c.str() << "\n";
  return os.str();
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

std::string compute_text(macq_ctx* ctx, const std::string& kind,
                         const char* lambda, const char* family, int n,
                         bool records) {
  auto need_lambda = [&]() {
    if (!lambda) throw std::invalid_argument("kind " + kind + " needs --lambda");
    return Partition::parse(lambda);
  };
  auto need_family = [&]() {
    if (!family) throw std::invalid_argument("kind " + kind + " needs --family");
    std::vector<Partition> fam = parse_family(family);
    if (fam.empty()) throw std::invalid_argument("empty family");
    if (fam.size() > 12) throw std::invalid_argument("family too long");
    return fam;
  };

  if (kind == "J") return render_symfunc(ctx->session.j_poly(need_lambda()).expansion, records);

  if (kind == "interp") {
    Partition lam = need_lambda();
    int nvars = n > 0 ? n : lam.size();
    return render_symfunc(ctx->session.interp(lam, nvars).expansion, records);
  }

  if (kind == "kappa") {
    std::vector<Partition> fam = need_family();
    IndexedFamily<SymFunc> ufam(int(fam.size()),
                                SymFunc::unit(SFBasis::m, Partition{}));
    JProvider jp = ctx->session.j_provider();
    for (unsigned mask = 1; mask <= ufam.full_mask(); ++mask)
      ufam.set(mask, jp(family_sum_mask(fam, mask)));
    return render_symfunc(kappa(ufam, ufam.full_mask()), records);
  }

  if (kind == "T") {
    std::vector<Partition> fam = need_family();
    IndexedFamily<QTRatio> hooks(int(fam.size()), QTRatio(1));
    for (unsigned mask = 1; mask <= hooks.full_mask(); ++mask)
      hooks.set(mask, QTRatio(hook_poly(family_sum_mask(fam, mask))));
    std::ostringstream os;
    for (unsigned h = 1; h <= hooks.full_mask(); ++h) {
      if (std::popcount(h) < 2) continue;
      QTRatio val = t_error(hooks, h);
      if (records)
        os << "subset=" << subset_str(h) << "\tord=" << ord_str(val.ord_at_q1())
           << "\tvalue=" << val.str() << "\n";
      else
        os << "T" << subset_str(h) << " = " << val.str()
           << "   [order at q=1: " << ord_str(val.ord_at_q1()) << "]\n";
    }
    return os.str();
  }

  if (kind == "ie") {
    std::vector<Partition> fam = need_family();
    Partition total = family_sum_mask(fam, (1u << fam.size()) - 1);
    int nvars = n > 0 ? n : std::max(total.size(), 1);
    if (nvars < total.length())
      throw std::invalid_argument("n must cover the longest partition sum");
    std::ostringstream os;
    for (int j = 1; j <= int(fam.size()); ++j) {
      QTPoly val = ie_sum(fam, j, nvars);
      if (records)
        os << "j=" << j << "\tn=" << nvars << "\tvalue=" << val.str() << "\n";
      else
        os << "IE_" << j << " (n=" << nvars << ") = " << val.str() << "\n";
    }
    return os.str();
  }

  if (kind == "kostka") {
    std::vector<Partition> fam = need_family();
    KostkaTable table = ctx->session.kostka_table(fam);
    std::ostringstream os;
    for (const auto& [mu, entry] : table.entries) {
      if (records) {
        os << "mu=" << mu.str() << "\tvalue=" << entry.value.str()
           << "\tpolynomial=" << (entry.is_polynomial ? 1 : 0)
           << "\tinteger=" << (entry.is_integer ? 1 : 0)
           << "\tnonnegative=" << (entry.is_nonnegative ? 1 : 0) << "\n";
      } else {
        os << "K[" << mu.str() << "] = " << entry.value.str();
        if (!entry.is_polynomial)
          os << "   [not a polynomial]";
        else if (!entry.is_integer)
          os << "   [non-integer coefficients]";
        else if (!entry.is_nonnegative)
          os << "   [NEGATIVE coefficient: conjecture evidence against]";
        os << "\n";
      }
    }
    return os.str();
  }

  throw std::invalid_argument("unknown compute kind: " + kind);
}

}  // namespace

extern "C" {

macq_ctx* macq_ctx_new(const char* cache_dir) {
  try {
    return new macq_ctx(cache_dir ? cache_dir : "");
  } catch (...) {
    return nullptr;
  }
}

void macq_ctx_free(macq_ctx* ctx) { delete ctx; }

const char* macq_version(void) { return "1.0.0"; }

const char* macq_last_error(const macq_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

int macq_compute(macq_ctx* ctx, const char* kind, const char* lambda,
                 const char* family, int n, const char* format, char** out) {
  if (out) *out = nullptr;
  if (!ctx) return MACQ_ERR_USAGE;
  ctx->last_error.clear();
  if (!kind || !out) {
    ctx->last_error = "kind and out are required";
    return MACQ_ERR_USAGE;
  }
  try {
    std::string err;
    bool records = want_records(format, &err);
    if (!err.empty()) throw std::invalid_argument(err);
    *out = dup_string(compute_text(ctx, kind, lambda, family, n, records));
    if (!*out) throw std::bad_alloc();
    return MACQ_OK;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return MACQ_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return MACQ_ERR_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return MACQ_ERR_INTERNAL;
  }
}

int macq_verify(macq_ctx* ctx, const char* suite, int max_size, int r,
                int jobs, const char* format, char** out) {
  if (out) *out = nullptr;
  if (!ctx) return MACQ_ERR_USAGE;
  ctx->last_error.clear();
  if (!suite || !out) {
    ctx->last_error = "suite and out are required";
    return MACQ_ERR_USAGE;
  }
  try {
    std::string err;
    bool records = want_records(format, &err);
    if (!err.empty()) throw std::invalid_argument(err);
    VerifyOptions opt;
    if (max_size > 0) opt.max_size = max_size;
    if (r > 0) opt.r = r;
    if (jobs > 0) opt.jobs = jobs;
    opt.session = &ctx->session;
    VerifyResult res = run_suite(suite, opt);
    *out = dup_string(records ? render_records(res) : render_plain(res));
    if (!*out) throw std::bad_alloc();
    if (!res.pass) {
      ctx->last_error = "suite " + res.suite + " failed";
      return MACQ_ERR_VERIFY;
    }
    return MACQ_OK;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return MACQ_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return MACQ_ERR_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return MACQ_ERR_INTERNAL;
  }
}

const char* macq_suites(void) {
  static const std::string joined = [] {
    std::string s;
    for (const std::string& name : suite_names()) {
      if (!s.empty()) s += '\n';
      s += name;
    }
    return s;
  }();
  return joined.c_str();
}

void macq_string_free(char* s) { std::free(s); }

}  // extern "C"
