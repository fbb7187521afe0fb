#include "zmoments/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>

namespace zmoments {

namespace stdfs = std::filesystem;
using nlohmann::json;

std::string to_string(CacheKind k) {
  switch (k) {
    case CacheKind::chartable: return "chartable";
    case CacheKind::ftable: return "ftable";
    case CacheKind::pzeta: return "pzeta";
    case CacheKind::dimpoly: return "dimpoly";
  }
  throw std::logic_error("unknown cache kind");
}

CacheKind cache_kind_from_string(const std::string& s) {
  for (auto k : {CacheKind::chartable, CacheKind::ftable, CacheKind::pzeta, CacheKind::dimpoly})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown cache kind: " + s);
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const CacheEntry& e) {
  return json{{"kind", to_string(e.kind)},
              {"schema_version", e.schema_version},
              {"params", e.params},
              {"created_with", e.created_with},
              {"payload", e.payload}};
}

CacheEntry entry_from_json(const json& j) {
  CacheEntry e;
  e.kind = cache_kind_from_string(j.at("kind").get<std::string>());
  e.schema_version = j.at("schema_version").get<int>();
  e.params = j.at("params");
  e.created_with = j.value("created_with", json::object());
  e.payload = j.at("payload");
  return e;
}

namespace {

void expect_kind(const CacheEntry& e, CacheKind k) {
  if (e.kind != k) throw std::invalid_argument("cache entry has kind " + to_string(e.kind) + ", expected " + to_string(k));
  if (e.schema_version != kCacheSchemaVersion)
    throw std::invalid_argument("cache entry has schema version " + std::to_string(e.schema_version));
}

json reals_to_json(const std::vector<BigReal>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_exact_string());
  return a;
}

std::vector<BigReal> reals_from_json(const json& a, Prec p) {
  std::vector<BigReal> v;
  for (const auto& s : a) v.emplace_back(s.get<std::string>(), p);
  return v;
}

std::string partition_tag(const Partition& p) {
  if (p.empty()) return "e";
  std::string s;
  for (int x : p.parts()) s += (s.empty() ? "" : "-") + std::to_string(x);
  return s;
}

}  // namespace

CacheEntry make_entry(const CharacterTable& t) {
  CacheEntry e;
  e.kind = CacheKind::chartable;
  e.params = {{"n", t.size()}};
  json rows = json::array();
  for (const auto& p : t.partitions()) rows.push_back(partition_to_json(p));
  e.payload = {{"partitions", rows}, {"values", t.values()}};
  e.created_with = {{"exact", true}};
  return e;
}

CacheEntry make_entry(int N_max, const FTable& f) {
  CacheEntry e;
  e.kind = CacheKind::ftable;
  e.params = {{"N_max", N_max}};
  json rows = json::array();
  for (const auto& [key, v] : f)
    if (key.first.weight() <= N_max)
      rows.push_back({partition_to_json(key.first), partition_to_json(key.second), to_string(v)});
  e.payload = {{"entries", rows}};
  e.created_with = {{"exact", true}};
  return e;
}

CacheEntry make_entry(const PrimeZetaTaylor& c) {
  CacheEntry e;
  e.kind = CacheKind::pzeta;
  const int n_max = static_cast<int>(c.values.size()) - 1;
  e.params = {{"r", c.r}, {"n_max", n_max}, {"digits", c.digits}, {"cutoff", c.cutoff}};
  const Prec p = c.values.empty() ? Prec::digits(c.digits) : c.values.front().prec();
  e.payload = {{"values", reals_to_json(c.values)}, {"tail_bounds", reals_to_json(c.tail_bounds)}};
  e.created_with = {{"digits", c.digits}, {"precision_bits", p.bits}};
  return e;
}

CacheEntry make_entry(const Partition& kappa, const Partition& lambda, const ComplementPoly& b) {
  CacheEntry e;
  e.kind = CacheKind::dimpoly;
  e.params = {{"kappa", partition_to_json(kappa)}, {"lambda", partition_to_json(lambda)}};
  json coeffs = json::array();
  for (const auto& q : b.B.coeffs()) coeffs.push_back(to_string(q));
  e.payload = {{"depth", b.depth}, {"B", coeffs}};
  e.created_with = {{"exact", true}};
  return e;
}

CharacterTable chartable_from(const CacheEntry& e) {
  expect_kind(e, CacheKind::chartable);
  const int n = e.params.at("n").get<int>();
  const auto& parts = partitions_of(n);
  const json& rows = e.payload.at("partitions");
  if (rows.size() != parts.size()) throw std::invalid_argument("chartable entry: wrong number of partitions");
  for (size_t i = 0; i < parts.size(); ++i)
    if (partition_from_json(rows[i]) != parts[i]) throw std::invalid_argument("chartable entry: partition order differs");
  return CharacterTable(n, e.payload.at("values").get<std::vector<std::vector<std::int64_t>>>());
}

FTable ftable_from(const CacheEntry& e) {
  expect_kind(e, CacheKind::ftable);
  FTable f;
  for (const auto& row : e.payload.at("entries"))
    f[{partition_from_json(row.at(0)), partition_from_json(row.at(1))}] = parse_rational(row.at(2).get<std::string>());
  return f;
}

PrimeZetaTaylor pzeta_from(const CacheEntry& e) {
  expect_kind(e, CacheKind::pzeta);
  PrimeZetaTaylor c;
  c.r = e.params.at("r").get<int>();
  c.cutoff = e.params.at("cutoff").get<long>();
  c.digits = e.params.at("digits").get<int>();
  const Prec p{e.created_with.at("precision_bits").get<mpfr_prec_t>()};
  c.values = reals_from_json(e.payload.at("values"), p);
  c.tail_bounds = reals_from_json(e.payload.at("tail_bounds"), p);
  if (c.values.size() != c.tail_bounds.size() ||
      static_cast<int>(c.values.size()) != e.params.at("n_max").get<int>() + 1)
    throw std::invalid_argument("pzeta entry: inconsistent lengths");
  return c;
}

ComplementPoly dimpoly_from(const CacheEntry& e) {
  expect_kind(e, CacheKind::dimpoly);
  std::vector<Rational> c;
  for (const auto& s : e.payload.at("B")) c.push_back(parse_rational(s.get<std::string>()));
  ComplementPoly b;
  b.B = RatPoly(std::move(c));
  b.depth = e.payload.at("depth").get<int>();
  return b;
}

// ---- lock ----

bool CacheLock::acquire(const stdfs::path& dir) {
  std::error_code ec;
  stdfs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir.string() + ": " + ec.message());
  stdfs::path f = dir / ".lock";
  int fd = ::open(f.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST) return false;
    throw CacheError("cannot create lock file " + f.string() + ": " + std::strerror(errno));
  }
  std::string pid = std::to_string(::getpid()) + "\n";
  [[maybe_unused]] auto n = ::write(fd, pid.data(), pid.size());
  ::close(fd);
  file_ = f;
  return true;
}

CacheLock::CacheLock(const stdfs::path& dir) {
  if (!acquire(dir)) throw CacheError("cache directory is locked by another process: " + (dir / ".lock").string());
}

std::optional<CacheLock> CacheLock::try_acquire(const stdfs::path& dir) {
  CacheLock l;
  if (!l.acquire(dir)) return std::nullopt;
  return std::optional<CacheLock>(std::move(l));
}

CacheLock::CacheLock(CacheLock&& o) noexcept : file_(std::move(o.file_)) { o.file_.clear(); }

CacheLock::~CacheLock() {
  if (!file_.empty()) {
    std::error_code ec;
    stdfs::remove(file_, ec);
  }
}

// ---- disk cache ----

DiskCache::DiskCache(stdfs::path dir) : dir_(std::move(dir)) {}

stdfs::path DiskCache::path_for(CacheKind kind, const json& params) const {
  std::string name;
  switch (kind) {
    case CacheKind::chartable: name = "chartable_n" + std::to_string(params.at("n").get<int>()); break;
    case CacheKind::ftable: name = "ftable_N" + std::to_string(params.at("N_max").get<int>()); break;
    case CacheKind::pzeta:
      // one file per (r, cutoff); upgrades in digits or n_max replace it
      name = "pzeta_r" + std::to_string(params.at("r").get<int>()) + "_c" + std::to_string(params.at("cutoff").get<long>());
      break;
    case CacheKind::dimpoly:
      name = "dimpoly_" + partition_tag(partition_from_json(params.at("kappa"))) + "_" +
             partition_tag(partition_from_json(params.at("lambda")));
      break;
  }
  return dir_ / (name + ".json");
}

stdfs::path DiskCache::path_for(const CacheEntry& e) const { return path_for(e.kind, e.params); }

std::optional<CacheEntry> DiskCache::load(CacheKind kind, const json& params) const {
  stdfs::path p = path_for(kind, params);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    CacheEntry e = entry_from_json(json::parse(in));
    if (e.kind != kind || e.schema_version != kCacheSchemaVersion) return std::nullopt;
    return e;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DiskCache::store(const CacheEntry& e) const {
  std::error_code ec;
  stdfs::create_directories(dir_, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  stdfs::path target = path_for(e);
  stdfs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << to_json(e).dump(1) << '\n';
    if (!out) throw CacheError("write failed: " + tmp.string());
  }
  stdfs::rename(tmp, target, ec);
  if (ec) throw CacheError("cannot rename " + tmp.string() + " to " + target.string() + ": " + ec.message());
}

std::optional<PrimeZetaTaylor> DiskCache::find_pzeta(int r, int n_max, int digits, long cutoff) const {
  auto e = load(CacheKind::pzeta, json{{"r", r}, {"cutoff", cutoff}});
  if (!e) return std::nullopt;
  try {
    PrimeZetaTaylor c = pzeta_from(*e);
    if (c.r != r || c.cutoff != cutoff || c.digits < digits || static_cast<int>(c.values.size()) < n_max + 1)
      return std::nullopt;
    // stored precision is at least what a fresh computation would carry
    PrimeZetaTaylor out = c;
    out.digits = digits;
    out.values.resize(n_max + 1, BigReal(Prec{64}));
    out.tail_bounds.resize(n_max + 1, BigReal(Prec{64}));
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<FTable> DiskCache::find_ftable(int N_max) const {
  std::error_code ec;
  if (!stdfs::is_directory(dir_, ec)) return std::nullopt;
  static const std::regex name(R"(ftable_N(\d+)\.json)");
  int best = -1;
  for (const auto& ent : stdfs::directory_iterator(dir_, ec)) {
    std::smatch m;
    std::string fn = ent.path().filename().string();
    if (std::regex_match(fn, m, name)) {
      int n = std::stoi(m[1]);
      if (n >= N_max && (best < 0 || n < best)) best = n;
    }
  }
  if (best < 0) return std::nullopt;
  auto e = load(CacheKind::ftable, json{{"N_max", best}});
  if (!e) return std::nullopt;
  try {
    FTable full = ftable_from(*e), out;
    for (const auto& [key, v] : full)
      if (key.first.weight() <= N_max) out.emplace(key, v);
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ---- provider ----

CachedConstants::CachedConstants(const DiskCache& cache, Write mode) : cache_(cache), mode_(mode) {}

void CachedConstants::save(const CacheEntry& e) const {
  if (mode_ == Write::never) return;
  if (mode_ == Write::lock_held) {
    cache_.store(e);
    return;
  }
  auto lock = CacheLock::try_acquire(cache_.dir());
  if (!lock) return;  // someone else is writing; the value is still returned
  cache_.store(e);
}

PrimeZetaTaylor CachedConstants::prime_zeta(int r, int n_max, int digits, long cutoff) const {
  constexpr int slot = static_cast<int>(CacheKind::pzeta);
  if (auto c = cache_.find_pzeta(r, n_max, digits, cutoff)) {
    ++loaded_[slot];
    return *c;
  }
  PrimeZetaTaylor c = ConstantsProvider::prime_zeta(r, n_max, digits, cutoff);
  ++computed_[slot];
  save(make_entry(c));
  return c;
}

FTable CachedConstants::ftable(int N_max) const {
  constexpr int slot = static_cast<int>(CacheKind::ftable);
  if (auto f = cache_.find_ftable(N_max)) {
    ++loaded_[slot];
    return *f;
  }
  FTable f = ConstantsProvider::ftable(N_max);
  ++computed_[slot];
  save(make_entry(N_max, f));
  return f;
}

}  // namespace zmoments
