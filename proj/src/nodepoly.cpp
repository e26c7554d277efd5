#include "severi/nodepoly.hpp"

#include <string>

#include "severi/error.hpp"
#include "severi/series.hpp"

namespace severi {

void Invariants::validate() const {
  if ((z + t) % 12 != 0) {
    throw Error(ErrorCode::InvalidInvariants, "z + t = " + std::to_string(z + t) + " is not divisible by 12");
  }
  if ((x - y) % 2 != 0) throw Error(ErrorCode::InvalidInvariants, "x and y must have the same parity");
}

std::int64_t Invariants::nu() const {
  validate();
  return (z + t) / 12;
}

std::int64_t Invariants::chi() const { return (x - y) / 2 + nu(); }

Invariants plane_invariants(std::uint32_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  const std::int64_t dd = d;
  return Invariants{dd * dd, -3 * dd, 9, 3};
}

NodePolynomial fit_node_polynomial(std::uint32_t delta, SeveriCache& cache) {
  NodePolynomial out;
  out.delta = delta;
  std::vector<Rat> xs, ys;
  for (std::uint32_t d = delta + 2; d <= 3 * delta + 2; ++d) {
    out.fit_range.push_back(d);
    xs.emplace_back(d);
    ys.emplace_back(severi_degree(d, delta, cache));
  }
  out.poly = interpolate(xs, ys);

  if (out.poly.degree() != static_cast<int>(2 * delta)) {
    throw Error(ErrorCode::DegreeCheckFailed, "T_" + std::to_string(delta) + " has degree " +
                                                  std::to_string(out.poly.degree()) + ", expected " +
                                                  std::to_string(2 * delta));
  }
  const std::uint32_t guard = 3 * delta + 3;
  const BigInt expected = severi_degree(guard, delta, cache);
  if (out.poly(Rat(guard)) != Rat(expected)) {
    throw Error(ErrorCode::DegreeCheckFailed, "T_" + std::to_string(delta) + " disagrees with N^{" +
                                                  std::to_string(guard) + "," + std::to_string(delta) +
                                                  "} = " + to_string(expected));
  }
  out.verified_extra = true;
  return out;
}

Rat evaluate(const NodePolynomial& p, const Rat& d) { return p.poly(d); }

ThresholdResult threshold(const NodePolynomial& p, SeveriCache& cache) {
  ThresholdResult out;
  out.delta = p.delta;
  std::uint32_t d = 3 * p.delta + 3;
  for (; d >= 1; --d) {
    const BigInt actual = severi_degree(d, p.delta, cache);
    const Rat predicted = evaluate(p, Rat(d));
    if (predicted != Rat(actual)) {
      out.witness = ThresholdResult::Mismatch{d, predicted, actual};
      break;
    }
  }
  out.threshold = d + 1;
  return out;
}

ThresholdResult threshold(std::uint32_t delta, SeveriCache& cache) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "threshold needs delta >= 1");
  return threshold(fit_node_polynomial(delta, cache), cache);
}

bool LogForm::has_integral_pattern() const {
  auto multiple_of_three = [](const Rat& r) { return is_integer(r) && r.get_num() % 3 == 0; };
  return is_integer(a2) && multiple_of_three(a1) && multiple_of_three(a0);
}

std::vector<LogForm> log_forms(std::span<const NodePolynomial> polys) {
  if (polys.size() < 2) throw Error(ErrorCode::InvalidArgument, "log forms need T_0 and T_1 at least");
  const std::size_t delta_max = polys.size() - 1;

  // samples[kappa][i] = q_kappa at d = i + 1
  std::vector<std::vector<Rat>> samples(delta_max + 1);
  std::vector<Rat> xs;
  for (std::uint32_t d = 1; d <= kLogFormSamples; ++d) {
    xs.emplace_back(d);
    std::vector<Rat> c(delta_max + 1);
    for (std::size_t delta = 0; delta <= delta_max; ++delta) c[delta] = evaluate(polys[delta], Rat(d));
    const RatSeries logged = log(RatSeries(std::move(c)));
    for (std::size_t kappa = 1; kappa <= delta_max; ++kappa) {
      samples[kappa].push_back(Rat(factorial(static_cast<unsigned>(kappa))) * logged[kappa]);
    }
  }

  std::vector<LogForm> out;
  for (std::size_t kappa = 1; kappa <= delta_max; ++kappa) {
    const RatPoly q = interpolate(xs, samples[kappa]);
    if (q.degree() > 2) {
      throw Error(ErrorCode::NotQuadratic, "q_" + std::to_string(kappa) + " has degree " +
                                               std::to_string(q.degree()) + " in d");
    }
    out.push_back(LogForm{static_cast<std::uint32_t>(kappa), q.coeff(2), q.coeff(1), q.coeff(0)});
  }
  return out;
}

std::vector<LogForm> log_forms(std::uint32_t delta_max, SeveriCache& cache) {
  if (delta_max < 1) throw Error(ErrorCode::InvalidArgument, "log forms need delta_max >= 1");
  std::vector<NodePolynomial> polys;
  for (std::uint32_t delta = 0; delta <= delta_max; ++delta) polys.push_back(fit_node_polynomial(delta, cache));
  return log_forms(polys);
}

Rat bell_polynomial(std::uint32_t delta, std::span<const Rat> a) {
  if (a.size() < delta) throw Error(ErrorCode::InvalidArgument, "Bell polynomial needs delta arguments");
  std::vector<Rat> c(delta + 1);
  for (std::uint32_t k = 1; k <= delta; ++k) c[k] = a[k - 1] / Rat(factorial(k));
  return Rat(factorial(delta)) * exp(RatSeries(std::move(c)))[delta];
}

std::vector<Rat> reconstruct_from_log_forms(std::uint32_t delta_max, const Rat& d,
                                            std::span<const LogForm> forms) {
  if (forms.size() < delta_max) throw Error(ErrorCode::InvalidArgument, "not enough log forms");
  std::vector<Rat> q;
  for (std::uint32_t k = 0; k < delta_max; ++k) {
    if (forms[k].kappa != k + 1) throw Error(ErrorCode::InvalidArgument, "log forms must be ordered by kappa");
    q.push_back(forms[k](d));
  }
  std::vector<Rat> out;
  for (std::uint32_t delta = 0; delta <= delta_max; ++delta) {
    out.push_back(bell_polynomial(delta, q) / Rat(factorial(delta)));
  }
  return out;
}

}  // namespace severi
