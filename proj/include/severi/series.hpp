#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

/// Truncated power series in q with exact rational coefficients, known
/// modulo q^(order+1). Binary operations truncate to the smaller order and
/// never read past either operand's order.
class RatSeries {
 public:
  /// The zero series known to the given order.
  explicit RatSeries(std::size_t order);
  /// Order is coeffs.size() - 1; an empty list is not a series.
  explicit RatSeries(std::vector<Rat> coeffs);
  RatSeries(std::initializer_list<Rat> coeffs);

  static RatSeries constant(const Rat& c, std::size_t order);
  /// c * q^power, zero when power > order.
  static RatSeries monomial(const Rat& c, std::size_t power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

  /// Same series known only to a lower order; new_order must not exceed order().
  RatSeries truncated(std::size_t new_order) const;

  bool all_integer() const;

  friend bool operator==(const RatSeries&, const RatSeries&) = default;

 private:
  std::vector<Rat> coeffs_;
};

RatSeries operator+(const RatSeries& a, const RatSeries& b);
RatSeries operator-(const RatSeries& a, const RatSeries& b);
RatSeries operator-(const RatSeries& a);
RatSeries operator*(const RatSeries& a, const RatSeries& b);
RatSeries operator*(const Rat& c, const RatSeries& a);

/// Multiplicative inverse; requires a[0] != 0.
RatSeries inverse(const RatSeries& a);

/// Formal exponential; requires a[0] == 0.
RatSeries exp(const RatSeries& a);

/// Formal logarithm; requires a[0] == 1.
RatSeries log(const RatSeries& a);

/// a^e := exp(e * log a); requires a[0] == 1.
RatSeries pow(const RatSeries& a, const Rat& e);

/// f(g(q)); requires g[0] == 0.
RatSeries compose(const RatSeries& f, const RatSeries& g);

/// Compositional inverse; requires g[0] == 0 and g[1] != 0.
RatSeries revert(const RatSeries& g);

/// D = q d/dq.
RatSeries q_derivative(const RatSeries& a);

/// List of coefficient strings, lowest order first.
std::vector<std::string> to_strings(const RatSeries& a);
RatSeries series_from_strings(const std::vector<std::string>& coeffs);

}  // namespace severi
