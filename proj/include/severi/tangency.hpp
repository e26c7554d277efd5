#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

/// Finitely supported sequence of tangency multiplicities. The API is
/// 1-based: count(k) is the number of order-k tangency conditions. Storage
/// is 0-based and never keeps trailing zeros, so equality is structural.
class TangencySeq {
 public:
  TangencySeq() = default;
  explicit TangencySeq(std::vector<std::uint32_t> parts);
  TangencySeq(std::initializer_list<std::uint32_t> parts);

  /// d transverse (order-1) conditions.
  static TangencySeq transverse(std::uint32_t d);

  std::uint32_t count(std::size_t order) const noexcept;
  /// Highest order with a nonzero count, 0 for the empty sequence.
  std::size_t max_order() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }

  /// Sum of k * count(k): the total intersection with the line.
  std::uint64_t weight() const noexcept;
  /// Sum of count(k).
  std::uint64_t size() const noexcept;

  TangencySeq plus_unit(std::size_t order) const;
  /// Requires count(order) >= 1.
  TangencySeq minus_unit(std::size_t order) const;

  /// "2,0,1"; empty string for the empty sequence.
  std::string to_text() const;
  /// Inverse of to_text. Also accepts "-" for empty; trailing zeros are trimmed.
  static TangencySeq parse(std::string_view text);

  friend bool operator==(const TangencySeq&, const TangencySeq&) = default;
  friend std::strong_ordering operator<=>(const TangencySeq&, const TangencySeq&) = default;

 private:
  void trim();

  std::vector<std::uint32_t> parts_;
};

/// Product over k of C(s_k, t_k); zero unless t <= s componentwise.
BigInt seq_binomial(const TangencySeq& s, const TangencySeq& t);

/// Product over k of k^(s_k).
BigInt seq_weighted_power(const TangencySeq& s);

/// A point of the Caporaso-Harris state space: degree-d curves with delta
/// nodes and tangency profile (alpha assigned, beta unassigned) to a fixed line.
struct ChState {
  std::uint32_t d = 1;
  std::uint32_t delta = 0;
  TangencySeq alpha;
  TangencySeq beta;

  friend bool operator==(const ChState&, const ChState&) = default;
  friend std::strong_ordering operator<=>(const ChState&, const ChState&) = default;
};

/// Number of general points the curves pass through:
/// d(d+3)/2 - delta - d + |beta|. Throws InvalidState unless
/// weight(alpha) + weight(beta) == d.
std::int64_t point_count(const ChState& st);

void validate_state(const ChState& st);

}  // namespace severi
