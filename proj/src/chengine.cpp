#include "severi/chengine.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "severi/error.hpp"

namespace severi {

std::size_t ChStateHash::operator()(const ChState& st) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(st.d);
  mix(st.delta);
  for (auto p : st.alpha.parts()) mix(p);
  mix(0xffffffffULL);
  for (auto p : st.beta.parts()) mix(p);
  return h;
}

// ---------------------------------------------------------------------------
// SeveriCache

SeveriCache::SeveriCache(SeveriCache&& other) noexcept {
  std::unique_lock lock(other.mutex_);
  map_ = std::move(other.map_);
  hits_ = other.hits_.load();
  misses_ = other.misses_.load();
}

SeveriCache& SeveriCache::operator=(SeveriCache&& other) noexcept {
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    map_ = std::move(other.map_);
    hits_ = other.hits_.load();
    misses_ = other.misses_.load();
  }
  return *this;
}

std::optional<BigInt> SeveriCache::find(const ChState& key) const {
  std::shared_lock lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void SeveriCache::insert(const ChState& key, const BigInt& value) {
  std::unique_lock lock(mutex_);
  const auto [it, inserted] = map_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw Error(ErrorCode::CacheCorruption,
                "conflicting values for N^{" + std::to_string(key.d) + "," + std::to_string(key.delta) +
                    "}(" + key.alpha.to_text() + ";" + key.beta.to_text() + "): " + to_string(it->second) +
                    " vs " + to_string(value));
  }
}

std::size_t SeveriCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void SeveriCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
  hits_ = 0;
  misses_ = 0;
}

std::vector<std::pair<ChState, BigInt>> SeveriCache::sorted_entries() const {
  std::vector<std::pair<ChState, BigInt>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

std::string seq_field(const TangencySeq& s) { return s.empty() ? "-" : s.to_text(); }

}  // namespace

void SeveriCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write cache file " + path.string());
  out << kHeader << '\n';
  for (const auto& [key, value] : sorted_entries()) {
    out << key.d << ' ' << key.delta << ' ' << seq_field(key.alpha) << ' ' << seq_field(key.beta) << ' '
        << to_string(value) << '\n';
  }
  if (!out.flush()) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

SeveriCache SeveriCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read cache file " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty cache file " + path.string());
  if (line != kHeader) {
    if (line.rfind("SEVERI-CACHE ", 0) == 0) {
      throw Error(ErrorCode::VersionMismatch, "unsupported cache version '" + line + "'");
    }
    throw Error(ErrorCode::ParseError, "missing cache header in " + path.string());
  }

  SeveriCache cache;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string d_text, delta_text, alpha_text, beta_text, value_text, extra;
    if (!(fields >> d_text >> delta_text >> alpha_text >> beta_text >> value_text) || (fields >> extra)) {
      throw Error(ErrorCode::ParseError, "malformed cache line " + std::to_string(line_no));
    }
    ChState key;
    try {
      const BigInt d = parse_bigint(d_text);
      const BigInt delta = parse_bigint(delta_text);
      if (d < 1 || delta < 0 || !d.fits_uint_p() || !delta.fits_uint_p()) throw Error(ErrorCode::ParseError, "");
      key.d = static_cast<std::uint32_t>(d.get_ui());
      key.delta = static_cast<std::uint32_t>(delta.get_ui());
      key.alpha = TangencySeq::parse(alpha_text);
      key.beta = TangencySeq::parse(beta_text);
      validate_state(key);
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, "invalid key on cache line " + std::to_string(line_no));
    }
    cache.insert(key, parse_bigint(value_text));
  }
  return cache;
}

// ---------------------------------------------------------------------------
// Recursion

namespace {

std::uint64_t max_nodes(std::uint64_t d) { return d * (d - 1) / 2; }

/// Calls visit(gamma) for every tangency sequence gamma of weight `weight`
/// whose size lies in [min_size, max_size].
void for_each_gamma(std::uint64_t weight, std::uint64_t min_size, std::uint64_t max_size,
                    const std::function<void(const TangencySeq&)>& visit) {
  if (min_size > weight) return;
  // Only parts of order >= 2 are chosen explicitly; order-1 parts fill the
  // remaining weight. Each order-k part lowers the size by k-1 relative to
  // all-ones, and the total drop must stay within [weight-max_size, weight-min_size].
  const std::uint64_t max_drop = weight - min_size;
  const std::uint64_t min_drop = weight > max_size ? weight - max_size : 0;
  std::vector<std::uint32_t> parts(weight + 1, 0);  // parts[k] = count of order k
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t order, std::uint64_t used_weight, std::uint64_t drop) {
        if (order < 2) {
          if (drop < min_drop) return;
          parts[1] = static_cast<std::uint32_t>(weight - used_weight);
          visit(TangencySeq(std::vector<std::uint32_t>(parts.begin() + 1, parts.end())));
          parts[1] = 0;
          return;
        }
        for (std::uint32_t c = 0;; ++c) {
          const std::uint64_t w = used_weight + c * order;
          const std::uint64_t dr = drop + c * (order - 1);
          if (w > weight || dr > max_drop) break;
          parts[order] = c;
          rec(order - 1, w, dr);
        }
        parts[order] = 0;
      };
  if (weight >= 2) {
    rec(std::min<std::uint64_t>(weight, max_drop + 1), 0, 0);
  } else {
    rec(1, 0, 0);
  }
}

}  // namespace

std::optional<BigInt> closed_value(const ChState& st) {
  if (st.delta > max_nodes(st.d)) return BigInt(0);
  if (point_count(st) < 0) return BigInt(0);
  if (st.d == 1) return BigInt(st.delta == 0 ? 1 : 0);
  return std::nullopt;
}

std::vector<RecursionTerm> recursion_terms(const ChState& st) {
  validate_state(st);
  std::vector<RecursionTerm> terms;
#ifndef NDEBUG
  const std::int64_t parent_points = point_count(st);
#endif
  auto push = [&](ChState child, BigInt coefficient) {
    assert(point_count(child) == parent_points - 1);
    const auto fixed = closed_value(child);
    if (fixed && *fixed == 0) return;
    terms.push_back({std::move(child), std::move(coefficient)});
  };

  // Specialize the point to an unassigned tangency of order k.
  for (std::size_t k = 1; k <= st.beta.max_order(); ++k) {
    if (st.beta.count(k) == 0) continue;
    push(ChState{st.d, st.delta, st.alpha.plus_unit(k), st.beta.minus_unit(k)},
         BigInt(static_cast<unsigned long>(k)));
  }

  // The curve degenerates to the line plus a degree d-1 curve with profile
  // alpha' <= alpha, beta' = beta + gamma.
  const std::uint32_t child_d = st.d - 1;
  const std::uint64_t alpha_weight = st.alpha.weight();
  std::vector<std::uint32_t> sub(st.alpha.max_order(), 0);
  while (true) {
    const TangencySeq alpha_sub(sub);
    const std::uint64_t sub_weight = alpha_sub.weight();
    if (sub_weight < alpha_weight) {
      const std::uint64_t gamma_weight = alpha_weight - sub_weight - 1;
      // delta' = delta + |gamma| - (d-1) must lie in [0, max_nodes(d-1)].
      const std::uint64_t min_size = st.delta >= child_d ? 0 : child_d - st.delta;
      const std::uint64_t max_size = max_nodes(child_d) + child_d - st.delta;
      for_each_gamma(gamma_weight, min_size, max_size, [&](const TangencySeq& gamma) {
        std::vector<std::uint32_t> beta_parts(std::max(st.beta.max_order(), gamma.max_order()), 0);
        for (std::size_t k = 1; k <= beta_parts.size(); ++k) {
          beta_parts[k - 1] = st.beta.count(k) + gamma.count(k);
        }
        TangencySeq beta_sup(std::move(beta_parts));
        const auto child_delta = static_cast<std::uint32_t>(st.delta + gamma.size() - child_d);
        BigInt coefficient = seq_binomial(st.alpha, alpha_sub) * seq_binomial(beta_sup, st.beta) *
                             seq_weighted_power(gamma);
        push(ChState{child_d, child_delta, alpha_sub, std::move(beta_sup)}, std::move(coefficient));
      });
    }
    // odometer over 0 <= sub[k] <= alpha[k]
    std::size_t i = 0;
    while (i < sub.size() && sub[i] == st.alpha.count(i + 1)) sub[i++] = 0;
    if (i == sub.size()) break;
    ++sub[i];
  }
  return terms;
}

namespace {

struct Frame {
  ChState state;
  std::vector<RecursionTerm> terms;
  std::size_t next = 0;
  BigInt total = 0;
};

std::optional<BigInt> known_value(const ChState& st, const SeveriCache& cache) {
  if (auto fixed = closed_value(st)) return fixed;
  return cache.find(st);
}

}  // namespace

BigInt relative_severi(const ChState& st, SeveriCache& cache) {
  validate_state(st);
  if (auto known = known_value(st, cache)) return *known;

  std::vector<Frame> stack;
  stack.push_back(Frame{st, recursion_terms(st)});
  while (true) {
    Frame& top = stack.back();
    bool descended = false;
    while (top.next < top.terms.size()) {
      const RecursionTerm& term = top.terms[top.next];
      auto value = known_value(term.state, cache);
      if (!value) {
        ChState child = term.state;
        auto child_terms = recursion_terms(child);
        stack.push_back(Frame{std::move(child), std::move(child_terms)});
        descended = true;
        break;
      }
      top.total += term.coefficient * *value;
      ++top.next;
    }
    if (descended) continue;

    cache.insert(top.state, top.total);
    if (stack.size() == 1) return top.total;
    stack.pop_back();
  }
}

BigInt severi_degree(std::uint32_t d, std::uint32_t delta, SeveriCache& cache) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  return relative_severi(ChState{d, delta, TangencySeq(), TangencySeq::transverse(d)}, cache);
}

std::vector<std::vector<BigInt>> severi_table(std::uint32_t dmax, std::uint32_t delta_max,
                                              SeveriCache& cache, unsigned threads) {
  if (dmax < 1) throw Error(ErrorCode::InvalidArgument, "dmax must be positive");
  std::vector<std::vector<BigInt>> table(dmax, std::vector<BigInt>(delta_max + 1));
  const std::size_t jobs = static_cast<std::size_t>(dmax) * (delta_max + 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      // Largest jobs first, so workers share the deep subproblems early.
      const std::size_t job = next.fetch_add(1);
      if (job >= jobs) return;
      const std::size_t idx = jobs - 1 - job;
      const auto d = static_cast<std::uint32_t>(idx / (delta_max + 1)) + 1;
      const auto delta = static_cast<std::uint32_t>(idx % (delta_max + 1));
      try {
        table[d - 1][delta] = severi_degree(d, delta, cache);
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs;
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace severi
