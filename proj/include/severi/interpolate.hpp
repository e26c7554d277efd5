#pragma once

#include <span>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

/// Dense polynomial with exact rational coefficients, lowest degree first.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  Rat operator()(const Rat& x) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  std::vector<Rat> coeffs_;  // no trailing zeros
};

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]),
/// built from Newton divided differences. The xs must be distinct.
RatPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

}  // namespace severi
