#include "severi/gyz.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "severi/error.hpp"

namespace severi {

namespace {

void require_forms(const FormCatalog& forms, std::size_t order) {
  if (forms.order < order) {
    throw Error(ErrorCode::InvalidArgument, "form catalog order " + std::to_string(forms.order) +
                                                " is below the requested order " + std::to_string(order));
  }
}

}  // namespace

PlaneSeries plane_generating_series(std::uint32_t d, std::size_t order, SeveriCache& cache,
                                    const FormCatalog& forms) {
  if (d < order + 1) {
    throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(d) + " is below order + 1 = " +
                                               std::to_string(order + 1));
  }
  if (order == 0) return PlaneSeries{d, RatSeries::constant(1, 0)};
  require_forms(forms, order);
  std::vector<Rat> counts(order + 1);
  for (std::size_t delta = 0; delta <= order; ++delta) {
    counts[delta] = Rat(severi_degree(d, static_cast<std::uint32_t>(delta), cache));
  }
  return PlaneSeries{d, compose(RatSeries(std::move(counts)), forms.u.truncated(order))};
}

BSeriesSolution extract_b_series(std::size_t order, std::span<const std::uint32_t> d_list,
                                 SeveriCache& cache, const FormCatalog& forms) {
  if (d_list.size() < 2) throw Error(ErrorCode::InvalidArgument, "extraction needs at least two degrees");
  if (std::set<std::uint32_t>(d_list.begin(), d_list.end()).size() != d_list.size()) {
    throw Error(ErrorCode::InvalidArgument, "extraction degrees must be distinct");
  }
  for (auto d : d_list) {
    if (d < order + 1) {
      throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(d) + " is below order + 1 = " +
                                                 std::to_string(order + 1));
    }
  }

  BSeriesSolution sol;
  sol.order = order;
  sol.d_used.assign(d_list.begin(), d_list.end());
  sol.pairs_agreeing.assign(order + 1, 0);
  const std::size_t pair_count = d_list.size() * (d_list.size() - 1) / 2;

  std::vector<Rat> l1(order + 1), l2(order + 1);
  if (order > 0) {
    require_forms(forms, order);
    const RatSeries log_b3 = log(forms.b3.truncated(order));
    const RatSeries log_b4 = log(forms.b4.truncated(order));
    const Rat half_nu(1, 2);  // nu = 1 for the plane

    std::vector<RatSeries> residual;  // R_d, aligned with d_list
    for (auto d : d_list) {
      const RatSeries plane = plane_generating_series(d, order, cache, forms).series;
      const Rat chi(plane_invariants(d).chi());
      residual.push_back(log(plane) - chi * log_b3 + half_nu * log_b4);
    }

    for (std::size_t m = 1; m <= order; ++m) {
      std::optional<std::pair<Rat, Rat>> reference;
      for (std::size_t i = 0; i < d_list.size(); ++i) {
        for (std::size_t j = i + 1; j < d_list.size(); ++j) {
          // 9 l1 - 3 d_i l2 = R_i and 9 l1 - 3 d_j l2 = R_j
          const Rat di(d_list[i]), dj(d_list[j]);
          const Rat s2 = (residual[j][m] - residual[i][m]) / (3 * (di - dj));
          const Rat s1 = (residual[i][m] + 3 * di * s2) / 9;
          if (!reference) reference.emplace(s1, s2);
          if (reference->first != s1 || reference->second != s2) {
            throw Error(ErrorCode::InconsistentSystem,
                        "degrees " + std::to_string(d_list[i]) + "," + std::to_string(d_list[j]) +
                            " disagree at order " + std::to_string(m));
          }
          ++sol.pairs_agreeing[m];
        }
      }
      l1[m] = reference->first;
      l2[m] = reference->second;
    }
  }

  sol.consistent = std::all_of(sol.pairs_agreeing.begin() + 1, sol.pairs_agreeing.end(),
                               [&](std::size_t n) { return n == pair_count; });
  sol.log_b1 = RatSeries(std::move(l1));
  sol.log_b2 = RatSeries(std::move(l2));
  sol.b1 = exp(sol.log_b1);
  sol.b2 = exp(sol.log_b2);
  sol.integral = sol.b1.all_integer() && sol.b2.all_integer();
  return sol;
}

std::vector<Rat> gyz_predict_rational(const Invariants& inv, const BSeriesSolution& sol,
                                      const FormCatalog& forms, std::size_t order) {
  inv.validate();
  if (order > sol.order) {
    throw Error(ErrorCode::InvalidArgument, "prediction order " + std::to_string(order) +
                                                " exceeds the solution order " + std::to_string(sol.order));
  }
  if (order == 0) return {Rat(1)};
  require_forms(forms, order);

  const RatSeries product = pow(sol.b1.truncated(order), Rat(inv.z)) *
                            pow(sol.b2.truncated(order), Rat(inv.y)) *
                            pow(forms.b3.truncated(order), Rat(inv.chi())) *
                            pow(forms.b4.truncated(order), make_rat(-inv.nu(), 2));
  const RatSeries in_u = compose(product, revert(forms.u.truncated(order)));
  return in_u.coeffs();
}

std::vector<BigInt> gyz_predict(const Invariants& inv, const BSeriesSolution& sol, const FormCatalog& forms,
                                std::size_t order) {
  std::vector<BigInt> out;
  const auto values = gyz_predict_rational(inv, sol, forms, order);
  for (std::size_t delta = 0; delta < values.size(); ++delta) {
    if (!is_integer(values[delta])) {
      throw Error(ErrorCode::NonIntegralPrediction,
                  "n_" + std::to_string(delta) + " = " + to_string(values[delta]) + " is not an integer");
    }
    out.push_back(values[delta].get_num());
  }
  return out;
}

}  // namespace severi
