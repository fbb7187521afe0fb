#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zmoments/characters.hpp"
#include "zmoments/frobenius_schur.hpp"
#include "zmoments/moments.hpp"
#include "zmoments/zeta.hpp"

namespace zmoments {

inline constexpr int kCacheSchemaVersion = 1;

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CacheKind { chartable, ftable, pzeta, dimpoly };
std::string to_string(CacheKind k);
CacheKind cache_kind_from_string(const std::string& s);

// One self-contained file. Exact rationals are "num/den" strings, big reals
// are decimal strings long enough to restore every bit at the stored precision.
struct CacheEntry {
  CacheKind kind = CacheKind::ftable;
  nlohmann::json params;
  nlohmann::json payload;
  int schema_version = kCacheSchemaVersion;
  nlohmann::json created_with;  // tolerances and precision used to build the payload
};
nlohmann::json to_json(const CacheEntry& e);
CacheEntry entry_from_json(const nlohmann::json& j);

CacheEntry make_entry(const CharacterTable& t);
CacheEntry make_entry(int N_max, const FTable& f);
CacheEntry make_entry(const PrimeZetaTaylor& c);
CacheEntry make_entry(const Partition& kappa, const Partition& lambda, const ComplementPoly& b);

CharacterTable chartable_from(const CacheEntry& e);
FTable ftable_from(const CacheEntry& e);
PrimeZetaTaylor pzeta_from(const CacheEntry& e);
ComplementPoly dimpoly_from(const CacheEntry& e);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// Exclusive writer lock on a cache directory (a lock file created with O_EXCL).
class CacheLock {
 public:
  // Throws CacheError when another process holds the lock.
  explicit CacheLock(const std::filesystem::path& dir);
  static std::optional<CacheLock> try_acquire(const std::filesystem::path& dir);
  CacheLock(CacheLock&& o) noexcept;
  CacheLock& operator=(CacheLock&&) = delete;
  ~CacheLock();

 private:
  CacheLock() = default;
  bool acquire(const std::filesystem::path& dir);
  std::filesystem::path file_;
};

class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const CacheEntry& e) const;
  std::filesystem::path path_for(CacheKind kind, const nlohmann::json& params) const;

  // Missing or unreadable files give nullopt; a file that parses but is
  // inconsistent is treated as missing as well.
  std::optional<CacheEntry> load(CacheKind kind, const nlohmann::json& params) const;
  // Atomic write (temp file + rename). The caller holds the lock.
  void store(const CacheEntry& e) const;

  // Reusable entries only: enough digits, n_max and table size.
  std::optional<PrimeZetaTaylor> find_pzeta(int r, int n_max, int digits, long cutoff) const;
  std::optional<FTable> find_ftable(int N_max) const;

 private:
  std::filesystem::path dir_;
};

// ConstantsProvider backed by a DiskCache. Missing or insufficient entries are
// computed, and written back when the directory lock can be taken (or is
// already held by the caller).
class CachedConstants : public ConstantsProvider {
 public:
  enum class Write { never, if_unlocked, lock_held };
  explicit CachedConstants(const DiskCache& cache, Write mode = Write::if_unlocked);
  PrimeZetaTaylor prime_zeta(int r, int n_max, int digits, long cutoff) const override;
  FTable ftable(int N_max) const override;

  int loaded(CacheKind k) const { return loaded_[static_cast<int>(k)].load(); }
  int computed(CacheKind k) const { return computed_[static_cast<int>(k)].load(); }

 private:
  void save(const CacheEntry& e) const;
  const DiskCache& cache_;
  Write mode_;
  mutable std::atomic<int> loaded_[4] = {}, computed_[4] = {};
};

}  // namespace zmoments
