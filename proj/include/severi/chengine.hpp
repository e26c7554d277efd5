#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "severi/rational.hpp"
#include "severi/tangency.hpp"

namespace severi {

struct ChStateHash {
  std::size_t operator()(const ChState& st) const noexcept;
};

/// Memo table of relative Severi degrees, shared between threads and
/// persisted between runs. Concurrent readers, serialized writers. A stored
/// value is never replaced by a different one.
class SeveriCache {
 public:
  static constexpr const char* kHeader = "SEVERI-CACHE v1";

  SeveriCache() = default;
  SeveriCache(SeveriCache&& other) noexcept;
  SeveriCache& operator=(SeveriCache&& other) noexcept;
  SeveriCache(const SeveriCache&) = delete;
  SeveriCache& operator=(const SeveriCache&) = delete;

  std::optional<BigInt> find(const ChState& key) const;
  /// Throws CacheCorruption if key already holds a different value.
  void insert(const ChState& key, const BigInt& value);

  std::size_t size() const;
  void clear();
  std::uint64_t hits() const noexcept { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const noexcept { return misses_.load(std::memory_order_relaxed); }

  /// All entries ordered by (d, delta, alpha, beta).
  std::vector<std::pair<ChState, BigInt>> sorted_entries() const;

  /// Text serialization; save(load(f)) reproduces f byte for byte when f was
  /// itself written by save.
  void save(const std::filesystem::path& path) const;
  static SeveriCache load(const std::filesystem::path& path);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<ChState, BigInt, ChStateHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// One summand of the Caporaso-Harris recursion: coefficient * N(state).
struct RecursionTerm {
  ChState state;
  BigInt coefficient;
};

/// Value of a state fixed by the guards (too many nodes, negative point
/// count) or the degree-1 base case; nullopt when the recursion must fire.
std::optional<BigInt> closed_value(const ChState& st);

/// Right-hand side of the recursion for a state with no closed value.
/// Terms whose state has closed value zero are dropped.
std::vector<RecursionTerm> recursion_terms(const ChState& st);

/// N^{d,delta}(alpha, beta), evaluated with an explicit work stack.
BigInt relative_severi(const ChState& st, SeveriCache& cache);

/// N^{d,delta} = N^{d,delta}((), (d)).
BigInt severi_degree(std::uint32_t d, std::uint32_t delta, SeveriCache& cache);

/// Rows d = 1..dmax, columns delta = 0..delta_max. Entries are evaluated on
/// `threads` workers; the result does not depend on the thread count.
std::vector<std::vector<BigInt>> severi_table(std::uint32_t dmax, std::uint32_t delta_max,
                                              SeveriCache& cache, unsigned threads = 1);

}  // namespace severi
