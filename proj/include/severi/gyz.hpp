#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "severi/chengine.hpp"
#include "severi/modforms.hpp"
#include "severi/nodepoly.hpp"
#include "severi/series.hpp"

namespace severi {

/// sum_{delta <= M} N^{d,delta} u(q)^delta mod q^{M+1}.
struct PlaneSeries {
  std::uint32_t d;
  RatSeries series;
};

/// Requires d >= order + 1 and forms.order >= order.
PlaneSeries plane_generating_series(std::uint32_t d, std::size_t order, SeveriCache& cache,
                                    const FormCatalog& forms);

/// Coefficients of the unknown series B1, B2 recovered from plane data.
struct BSeriesSolution {
  std::size_t order = 0;
  RatSeries b1{0};
  RatSeries b2{0};
  RatSeries log_b1{0};
  RatSeries log_b2{0};
  std::vector<std::uint32_t> d_used;
  /// pairs_agreeing[m] = number of degree pairs whose solution at order m
  /// matched; equal to C(|d_used|, 2) for every m >= 1 when consistent.
  std::vector<std::size_t> pairs_agreeing;
  bool consistent = false;
  bool integral = false;
};

/// Solves 9 l1[m] - 3d l2[m] = R_d[m] for every order m = 1..order, with
/// R_d = log(plane series) - chi(d) log B3 + (1/2) log B4, using every pair of
/// degrees and requiring all pairs to agree. Throws InconsistentSystem if
/// they do not and DegreeTooSmall if some d < order + 1.
BSeriesSolution extract_b_series(std::size_t order, std::span<const std::uint32_t> d_list,
                                 SeveriCache& cache, const FormCatalog& forms);

/// n_delta for delta = 0..order from B1^z B2^y B3^chi B4^(-nu/2), read off in
/// the variable u through the reversion of u(q). Throws NonIntegralPrediction
/// if some n_delta is not an integer.
std::vector<BigInt> gyz_predict(const Invariants& inv, const BSeriesSolution& sol, const FormCatalog& forms,
                                std::size_t order);

/// Same prediction without the integrality requirement.
std::vector<Rat> gyz_predict_rational(const Invariants& inv, const BSeriesSolution& sol,
                                      const FormCatalog& forms, std::size_t order);

}  // namespace severi
