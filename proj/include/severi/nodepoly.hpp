#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "severi/chengine.hpp"
#include "severi/interpolate.hpp"
#include "severi/rational.hpp"

namespace severi {

/// Numerical invariants of a line bundle L on a surface S:
/// x = L^2, y = L.K, z = K^2, t = c2(S).
struct Invariants {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  std::int64_t t = 0;

  /// Throws InvalidInvariants unless z + t = 0 mod 12 and x = y mod 2.
  void validate() const;
  /// chi(O_S) = (z + t) / 12.
  std::int64_t nu() const;
  /// chi(L) = (x - y) / 2 + nu.
  std::int64_t chi() const;
};

/// Degree-d plane curves: (d^2, -3d, 9, 3).
Invariants plane_invariants(std::uint32_t d);

/// T_delta(d): the polynomial that equals N^{d,delta} for all large d.
struct NodePolynomial {
  std::uint32_t delta = 0;
  RatPoly poly;
  std::vector<std::uint32_t> fit_range;  // sampled degrees
  bool verified_extra = false;           // matched the guard degree 3*delta+3
};

/// Interpolates N^{d,delta} at d = delta+2, ..., 3*delta+2 and checks the
/// result at d = 3*delta+3. Throws DegreeCheckFailed on a mismatch or a
/// degree other than 2*delta.
NodePolynomial fit_node_polynomial(std::uint32_t delta, SeveriCache& cache);

Rat evaluate(const NodePolynomial& p, const Rat& d);

struct ThresholdResult {
  std::uint32_t delta = 0;
  std::uint32_t threshold = 1;
  /// Set when threshold > 1: the degree threshold-1 where the polynomial fails.
  struct Mismatch {
    std::uint32_t d;
    Rat polynomial_value;
    BigInt severi_degree;
  };
  std::optional<Mismatch> witness;
};

/// Least d* >= 1 with T_delta(d) = N^{d,delta} for every d in [d*, 3*delta+3].
ThresholdResult threshold(std::uint32_t delta, SeveriCache& cache);
ThresholdResult threshold(const NodePolynomial& p, SeveriCache& cache);

/// q_kappa(d) = kappa! [u^kappa] log(sum_delta T_delta(d) u^delta), which is
/// quadratic in d: a2 d^2 + a1 d + a0.
struct LogForm {
  std::uint32_t kappa = 1;
  Rat a2, a1, a0;

  Rat operator()(const Rat& d) const { return (a2 * d + a1) * d + a0; }
  /// a2 integral and a1, a0 integral multiples of 3.
  bool has_integral_pattern() const;
};

/// Degrees at which q_kappa is sampled before interpolation.
inline constexpr std::uint32_t kLogFormSamples = 8;

/// Forms for kappa = 1..polys.size()-1, from node polynomials indexed by
/// delta (polys[0] = T_0). Throws NotQuadratic if an interpolated q_kappa has
/// a nonzero coefficient in degree 3 or higher.
std::vector<LogForm> log_forms(std::span<const NodePolynomial> polys);
std::vector<LogForm> log_forms(std::uint32_t delta_max, SeveriCache& cache);

/// Complete exponential Bell polynomial
/// P_delta(a_1..a_delta) = delta! [u^delta] exp(sum a_k u^k / k!).
/// a[0] holds a_1; needs a.size() >= delta.
Rat bell_polynomial(std::uint32_t delta, std::span<const Rat> a);

/// n_delta(d) = P_delta(q_1(d), ..., q_delta(d)) / delta! for delta = 0..delta_max.
std::vector<Rat> reconstruct_from_log_forms(std::uint32_t delta_max, const Rat& d,
                                            std::span<const LogForm> forms);

}  // namespace severi
