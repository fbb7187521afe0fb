#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "zmoments/cache.hpp"
#include "zmoments/characters.hpp"
#include "zmoments/frobenius_schur.hpp"
#include "zmoments/moments.hpp"
#include "zmoments/symseries.hpp"
#include "zmoments/zeta.hpp"

namespace zmoments::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct GoldenF {
  std::vector<int> kappa, lambda;
  const char* value;
};
const GoldenF kGoldenF[] = {
#include "f_tables.inc"
};

struct Settings {
  int k = 1;
  int N = 0;
  int digits = 50;
  int nmax = 4;
  int horizon_k = 3;
  double tol = 0;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "text";
  std::string level = "fast";
};

std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ZMOMENTS_CACHE_DIR"); env && *env) return env;
  return "./cache";
}

ojson cache_versions() {
  return ojson{{"schema_version", kCacheSchemaVersion},
               {"chartable", kCacheSchemaVersion},
               {"ftable", kCacheSchemaVersion},
               {"pzeta", kCacheSchemaVersion},
               {"dimpoly", kCacheSchemaVersion}};
}

std::string tol_string(double tol) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << tol;
  return s.str();
}

ojson coeff_json(const Coefficient& c, int digits) {
  ojson j{{"N", c.N}, {"value", c.value.value.to_string(digits)}, {"error", c.value.error.to_string(3)}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

// ---------------- selftest ----------------

struct Check {
  std::string name;
  std::string kind;  // golden table, invariant, oracle, two-route
  std::function<std::string()> run;  // empty string on success, else a reason
};

std::string check_golden_f() {
  const FTable& f = f_table(6);
  for (const auto& g : kGoldenF) {
    Partition a(g.kappa), b(g.lambda);
    Rational want = parse_rational(g.value);
    auto it = f.find({a, b});
    Rational got = it == f.end() ? Rational(0) : it->second;
    if (got != want) return "f" + a.to_string() + b.to_string() + " = " + to_string(got) + ", expected " + g.value;
  }
  return "";
}

std::string check_orthogonality(int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto& t = character_table(n);
    const auto& parts = t.partitions();
    const size_t m = parts.size();
    // rows: sum_mu chi^a(mu) chi^b(mu) / z_mu = delta
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        Rational s = 0;
        for (size_t c = 0; c < m; ++c)
          s += ratio(static_cast<long>(t.at(a, c) * t.at(b, c)), parts[c].centralizer());
        if (s != (a == b ? 1 : 0)) return "row orthogonality fails at n=" + std::to_string(n);
      }
    // columns: sum_lambda chi^lambda(a) chi^lambda(b) = z_a delta
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        Integer s = 0;
        for (size_t l = 0; l < m; ++l) s += Integer(static_cast<long>(t.at(l, a) * t.at(l, b)));
        if (s != (a == b ? parts[a].centralizer() : Integer(0)))
          return "column orthogonality fails at n=" + std::to_string(n);
      }
  }
  return "";
}

std::string check_dim_triple(int w_max) {
  for (int n = 0; n <= w_max; ++n)
    for (const auto& nu : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
          Integer a = dim_paths(mu, nu), b = dim_skew_det(mu, nu), c = dim_fs(mu, nu);
          if (a != b || a != c) return "dim" + mu.to_string() + nu.to_string() + " disagrees";
        }
  return "";
}

std::string check_g_sequence() {
  const char* want[] = {"1", "1", "2", "42", "24024", "701149020", "1671643033734960"};
  for (int k = 0; k <= 6; ++k)
    if (g_factor(k) != Integer(want[k])) return "g_" + std::to_string(k) + " = " + g_factor(k).get_str();
  return "";
}

std::string check_a2(int digits) {
  Estimate a = a_factor(2, digits);
  const Prec P = a.value.prec();
  BigReal want = BigReal(6, P) / (pi(P) * pi(P));
  BigReal diff = abs(a.value - want);
  if (diff > ten_pow(-(digits - 2), P)) return "a_2 differs from 6/pi^2 by " + diff.to_string(3);
  return "";
}

std::string check_k1(int digits) {
  MomentOptions o;
  o.digits = digits;
  MomentPolynomial p = moment_polynomial(1, o);
  const Prec P = p.c[1].value.value.prec();
  BigReal want = euler_gamma(P) * 2L;
  BigReal d0 = abs(p.c[0].value.value - BigReal(1, P));
  BigReal d1 = abs(p.c[1].value.value - want);
  if (d0 > ten_pow(-(digits - 2), P) || d1 > ten_pow(-(digits - 2), P))
    return "c(1) = [" + p.c[0].value.value.to_string(20) + ", " + p.c[1].value.value.to_string(20) + "]";
  return "";
}

std::string check_bump_gamburd() {
  const Prec P = Prec::digits(40);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> xs;
    while (xs.size() < 4) {
      double x = U(rng);
      bool ok = true;
      for (double y : xs)
        if (std::abs(x - y) < 0.05) ok = false;
      if (ok) xs.push_back(x);
    }
    std::vector<BigReal> pts;
    for (double x : xs) pts.push_back(BigReal::from_double(x, P));
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b)
        for (const auto& kap : partitions_of(a))
          for (const auto& lam : partitions_of(b)) {
            BigReal r = bump_gamburd_residual(kap, lam, pts);
            if (r > ten_pow(-30, P)) return "residual " + r.to_string(3) + " at " + kap.to_string() + lam.to_string();
          }
  }
  return "";
}

std::string check_prime_zeta_routes(int digits) {
  for (int r = 2; r <= 4; ++r) {
    PrimeZetaTaylor m = prime_zeta_taylor(r, 4, digits);
    // direct sum over small primes plus the Mobius tail beyond them
    const long cut = 1000;
    auto head = prime_sum_taylor(r, 4, digits, cut);
    PrimeZetaTaylor tail = prime_zeta_taylor(r, 4, digits, cut);
    for (int n = 0; n <= 4; ++n) {
      BigReal d = abs(m.values[n] - (head[n] + tail.values[n]));
      if (d > ten_pow(-(digits - 5), d.prec()))
        return "r=" + std::to_string(r) + " n=" + std::to_string(n) + " differs by " + d.to_string(3);
    }
  }
  return "";
}

int cmd_selftest(const Settings& s, std::ostream& out) {
  std::vector<Check> checks = {
      {"f-table weights 1..6 equal the published tables", "golden table", check_golden_f},
      {"character orthogonality n <= 6", "invariant", [] { return check_orthogonality(6); }},
      {"dim_paths = dim_skew_det = dim_fs, weight <= 6", "oracle", [] { return check_dim_triple(6); }},
      {"g_k for k = 0..6", "golden table", check_g_sequence},
  };
  if (s.level == "full") {
    checks.push_back({"a_2 = 6/pi^2", "oracle", [] { return check_a2(30); }});
    checks.push_back({"P_1 = [1, 2 gamma]", "oracle", [] { return check_k1(30); }});
    checks.push_back({"Bump-Gamburd residuals at k = 2", "identity", check_bump_gamburd});
    checks.push_back({"prime zeta: Mobius vs direct sum, r = 2..4", "two-route", [] { return check_prime_zeta_routes(30); }});
  }
  int failed = 0;
  ojson report = ojson::array();
  for (const auto& c : checks) {
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) ++failed;
    if (s.format == "json") {
      ojson j{{"check", c.name}, {"kind", c.kind}, {"pass", why.empty()}};
      if (!why.empty()) j["reason"] = why;
      report.push_back(j);
    } else {
      out << (why.empty() ? "PASS" : "FAIL") << "  [" << c.kind << "] " << c.name;
      if (!why.empty()) out << ": " << why;
      out << '\n';
    }
  }
  if (s.format == "json")
    out << ojson{{"level", s.level}, {"checks", report}, {"failed", failed}}.dump(2) << '\n';
  else
    out << (failed ? std::to_string(failed) + " check(s) failed" : "all checks passed") << '\n';
  return failed ? 1 : 0;
}

// ---------------- precompute ----------------

int cmd_precompute(const Settings& s, std::ostream& out) {
  if (s.nmax < 0) throw std::invalid_argument("--nmax must be non-negative");
  DiskCache cache(resolve_cache_dir(s.cache_dir));
  CacheLock lock(cache.dir());
  int reused = 0, computed = 0;
  ojson summary = ojson::object();
  auto tally = [&](const std::string& kind, bool fresh) {
    auto& slot = summary[kind];
    if (slot.is_null()) slot = ojson{{"reused", 0}, {"computed", 0}};
    slot[fresh ? "computed" : "reused"] = slot[fresh ? "computed" : "reused"].get<int>() + 1;
    (fresh ? computed : reused)++;
  };

  for (int n = 0; n <= s.nmax; ++n) {
    bool fresh = true;
    if (auto e = cache.load(CacheKind::chartable, {{"n", n}})) {
      try {
        chartable_from(*e);
        fresh = false;
      } catch (const std::exception&) {
      }
    }
    if (fresh) cache.store(make_entry(character_table(n)));
    tally("chartable", fresh);
  }

  const bool f_fresh = !cache.find_ftable(s.nmax);
  if (f_fresh) cache.store(make_entry(s.nmax, f_table(s.nmax)));
  tally("ftable", f_fresh);

  for (int w = 0; w <= s.nmax; ++w)
    for (int a = 0; a <= w; ++a)
      for (const auto& kap : partitions_of(a))
        for (const auto& lam : partitions_of(w - a)) {
          nlohmann::json params{{"kappa", partition_to_json(kap)}, {"lambda", partition_to_json(lam)}};
          bool fresh = true;
          if (auto e = cache.load(CacheKind::dimpoly, params)) {
            try {
              dimpoly_from(*e);
              fresh = false;
            } catch (const std::exception&) {
            }
          }
          if (fresh) cache.store(make_entry(kap, lam, dim_complement_poly(kap, lam)));
          tally("dimpoly", fresh);
        }

  // prime-zeta coefficients out to the W-truncation horizon for this k
  CachedConstants prov(cache, CachedConstants::Write::lock_held);
  MomentOptions o;
  o.digits = s.digits;
  o.tol = s.tol;
  o.provider = &prov;
  if (s.horizon_k < 0) throw std::invalid_argument("--k must be non-negative");
  ExponentTable W = exponent_table(s.horizon_k, s.nmax, o);
  for (CacheKind kind : {CacheKind::ftable, CacheKind::pzeta}) {
    auto& slot = summary[to_string(kind)];
    if (slot.is_null()) slot = ojson{{"reused", 0}, {"computed", 0}};
    slot["reused"] = slot["reused"].get<int>() + prov.loaded(kind);
    slot["computed"] = slot["computed"].get<int>() + prov.computed(kind);
    reused += prov.loaded(kind);
    computed += prov.computed(kind);
  }

  if (s.format == "json") {
    out << ojson{{"cache_dir", cache.dir().string()},
                 {"nmax", s.nmax},
                 {"digits", s.digits},
                 {"k", s.horizon_k},
                 {"r_max_used", W.r_max_used},
                 {"entries", summary},
                 {"computed", computed},
                 {"reused", reused}}
               .dump(2)
        << '\n';
  } else {
    out << "cache " << cache.dir().string() << " (nmax " << s.nmax << ", " << s.digits << " digits, horizon for k=" << s.horizon_k
        << ": r <= " << W.r_max_used << ")\n";
    for (const auto& [kind, v] : summary.items())
      out << "  " << kind << ": " << v["computed"].get<int>() << " computed, " << v["reused"].get<int>() << " reused\n";
  }
  return 0;
}

// ---------------- coeff / poly ----------------

struct ProviderHolder {
  std::optional<DiskCache> cache;
  std::optional<CachedConstants> prov;
  const ConstantsProvider* get() const { return prov ? &*prov : nullptr; }
};

void setup_provider(const Settings& s, ProviderHolder& h) {
  if (s.no_cache) return;
  h.cache.emplace(resolve_cache_dir(s.cache_dir));
  h.prov.emplace(*h.cache);
}

MomentOptions options(const Settings& s, const ProviderHolder& h) {
  if (s.digits < 5) throw std::invalid_argument("--digits must be at least 5");
  if (s.tol < 0) throw std::invalid_argument("--tol must be non-negative");
  MomentOptions o;
  o.digits = s.digits;
  o.tol = s.tol;
  o.provider = h.get();
  return o;
}

int cmd_coeff(const Settings& s, std::ostream& out) {
  if (s.k < 0) throw std::invalid_argument("--k must be non-negative");
  if (s.N < 0) throw std::invalid_argument("--N must be non-negative");
  ProviderHolder h;
  setup_provider(s, h);
  MomentOptions o = options(s, h);
  Coefficient c;
  int r_max = 0;
  if (s.N > s.k * s.k) {
    c = c_coeff(s.N, s.k, o);
  } else {
    DTable d = d_table(s.k, s.N, o);
    r_max = d.r_max_used;
    c = c_coeff_from(d, s.N, s.digits);
  }
  if (s.format == "json") {
    ojson j{{"schema_version", kCacheSchemaVersion}, {"k", s.k}, {"digits", s.digits}};
    j["coefficient"] = coeff_json(c, s.digits);
    j["truncation"] = ojson{{"r_max_used", r_max}, {"tol", tol_string(o.effective_tol())}};
    j["cache"] = ojson{{"versions", cache_versions()}};
    out << j.dump(2) << '\n';
  } else if (s.format == "csv") {
    out << "# lossy: values only, error estimates omitted (use --format json)\n";
    out << "k,N,value\n" << s.k << ',' << c.N << ',' << c.value.value.to_string(s.digits) << '\n';
  } else {
    out << "c_" << c.N << "(" << s.k << ") = " << c.value.value.to_string(s.digits) << "  +- "
        << c.value.error.to_string(3) << '\n';
    if (!c.note.empty()) out << "note: " << c.note << '\n';
  }
  return 0;
}

int cmd_poly(const Settings& s, std::ostream& out) {
  if (s.k < 1) throw std::invalid_argument("--k must be at least 1");
  ProviderHolder h;
  setup_provider(s, h);
  MomentOptions o = options(s, h);
  MomentPolynomial p = moment_polynomial(s.k, o);
  if (s.format == "json") {
    ojson j{{"schema_version", kCacheSchemaVersion}, {"k", p.k}, {"digits", p.digits}};
    ojson cs = ojson::array();
    for (const auto& c : p.c) cs.push_back(coeff_json(c, p.digits));
    j["coefficients"] = cs;
    j["truncation"] = ojson{{"r_max_used", p.r_max_used}, {"tol", tol_string(p.tol)}};
    j["cache"] = ojson{{"versions", cache_versions()}};
    out << j.dump(2) << '\n';
  } else if (s.format == "csv") {
    out << "# lossy: values only, error estimates omitted (use --format json)\n";
    out << "N,value\n";
    for (const auto& c : p.c) out << c.N << ',' << c.value.value.to_string(p.digits) << '\n';
  } else {
    out << "P_" << p.k << "(x) = sum_N c_N x^(" << p.k * p.k << "-N), " << p.digits << " digits\n";
    for (const auto& c : p.c)
      out << "c_" << c.N << " = " << c.value.value.to_string(p.digits) << "  +- " << c.value.error.to_string(3) << '\n';
    out << "W series truncated at r = " << p.r_max_used << ", tol " << tol_string(p.tol) << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower-order coefficients of the moment polynomials P_k of the Riemann zeta function"};
  app.require_subcommand(1);
  Settings s;
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto add_common = [&](CLI::App* c) {
    c->add_option("--digits", s.digits, "decimal digits of the reported values")->capture_default_str();
    c->add_option("--tol", s.tol, "W-series tolerance (0: 10^-(digits+5))")->capture_default_str();
    c->add_option("--cache-dir", s.cache_dir, "cache directory (default $ZMOMENTS_CACHE_DIR or ./cache)");
    c->add_option("--format", s.format, "output format; csv is lossy")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };

  auto* pre = app.add_subcommand("precompute", "build the on-disk constant caches");
  pre->add_option("--nmax", s.nmax, "largest total weight")->capture_default_str();
  pre->add_option("--k", s.horizon_k, "k whose W-truncation horizon sets the prime-zeta range")->capture_default_str();
  add_common(pre);

  auto* coeff = app.add_subcommand("coeff", "one coefficient c_N(k)");
  coeff->add_option("--k", s.k, "moment parameter")->required();
  coeff->add_option("--N", s.N, "coefficient index")->required();
  coeff->add_flag("--no-cache", s.no_cache, "do not read or write the cache");
  add_common(coeff);

  auto* poly = app.add_subcommand("poly", "all coefficients of P_k");
  poly->add_option("--k", s.k, "moment parameter")->required();
  poly->add_flag("--no-cache", s.no_cache, "do not read or write the cache");
  add_common(poly);

  auto* self = app.add_subcommand("selftest", "built-in consistency checks");
  self->add_option("level", s.level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  self->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int rc = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return rc == 0 ? ok : input_error;
  }

  try {
    if (*pre) return cmd_precompute(s, out);
    if (*coeff) return cmd_coeff(s, out);
    if (*poly) return cmd_poly(s, out);
    if (*self) return cmd_selftest(s, out);
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return io_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return io_error;
  } catch (const NonConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return nonconvergence;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return input_error;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return input_error;
  } catch (const std::logic_error& e) {
    // internal cross-checks between two numeric routes
    err << "consistency check failed: " << e.what() << '\n';
    return nonconvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace zmoments::cli
