#include "severi/series.hpp"

#include <algorithm>

#include "severi/error.hpp"

namespace severi {

RatSeries::RatSeries(std::size_t order) : coeffs_(order + 1) {}

RatSeries::RatSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
}

RatSeries::RatSeries(std::initializer_list<Rat> coeffs) : RatSeries(std::vector<Rat>(coeffs)) {}

RatSeries RatSeries::constant(const Rat& c, std::size_t order) {
  RatSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

RatSeries RatSeries::monomial(const Rat& c, std::size_t power, std::size_t order) {
  RatSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

RatSeries RatSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw Error(ErrorCode::InvalidArgument, "cannot extend a truncated series");
  }
  return RatSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

bool RatSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Rat> out(m + 1);
  for (std::size_t i = 0; i <= m; ++i) out[i] = a[i] + b[i];
  return RatSeries(std::move(out));
}

RatSeries operator-(const RatSeries& a) {
  std::vector<Rat> out(a.coeffs());
  for (auto& c : out) c = -c;
  return RatSeries(std::move(out));
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) { return a + (-b); }

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Rat> out(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
  }
  return RatSeries(std::move(out));
}

RatSeries operator*(const Rat& c, const RatSeries& a) {
  std::vector<Rat> out(a.coeffs());
  for (auto& x : out) x *= c;
  return RatSeries(std::move(out));
}

RatSeries inverse(const RatSeries& a) {
  if (a[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "inverse of a series with zero constant term");
  const std::size_t m = a.order();
  std::vector<Rat> out(m + 1);
  const Rat inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= m; ++n) {
    Rat acc;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return RatSeries(std::move(out));
}

// f = exp(a) satisfies D f = (D a) f, so n f_n = sum_{k=1..n} k a_k f_{n-k}.
RatSeries exp(const RatSeries& a) {
  if (a[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "exp of a series with nonzero constant term");
  const std::size_t m = a.order();
  std::vector<Rat> out(m + 1);
  out[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    Rat acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += Rat(static_cast<unsigned long>(k)) * a[k] * out[n - k];
    }
    out[n] = acc / static_cast<unsigned long>(n);
  }
  return RatSeries(std::move(out));
}

// b = log(a) satisfies D a = (D b) a, so n b_n = n a_n - sum_{k=1..n-1} k b_k a_{n-k}.
RatSeries log(const RatSeries& a) {
  if (a[0] != 1) throw Error(ErrorCode::ConstantTermNotOne, "log of a series with constant term != 1");
  const std::size_t m = a.order();
  std::vector<Rat> out(m + 1);
  for (std::size_t n = 1; n <= m; ++n) {
    Rat acc = Rat(static_cast<unsigned long>(n)) * a[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (out[k] != 0) acc -= Rat(static_cast<unsigned long>(k)) * out[k] * a[n - k];
    }
    out[n] = acc / static_cast<unsigned long>(n);
  }
  return RatSeries(std::move(out));
}

RatSeries pow(const RatSeries& a, const Rat& e) {
  if (a[0] != 1) throw Error(ErrorCode::ConstantTermNotOne, "rational power of a series with constant term != 1");
  return exp(e * log(a));
}

// Horner in g: f0 + g (f1 + g (f2 + ...)).
RatSeries compose(const RatSeries& f, const RatSeries& g) {
  if (g[0] != 0) throw Error(ErrorCode::PositiveValuationRequired, "composition needs g(0) = 0");
  const std::size_t m = std::min(f.order(), g.order());
  const RatSeries inner = g.truncated(m);
  RatSeries acc = RatSeries::constant(f[m], m);
  for (std::size_t i = m; i-- > 0;) acc = acc * inner + RatSeries::constant(f[i], m);
  return acc;
}

// Order-by-order: [q^n] h(g) = h_n g_1^n + sum_{j<n} h_j [q^n] g^j = 0 for n >= 2.
RatSeries revert(const RatSeries& g) {
  if (g[0] != 0 || g.order() < 1 || g[1] == 0) {
    throw Error(ErrorCode::NotReversible, "reversion needs g(0) = 0 and g'(0) != 0");
  }
  const std::size_t m = g.order();
  std::vector<RatSeries> powers;  // powers[j] = g^j
  powers.reserve(m + 1);
  powers.push_back(RatSeries::constant(1, m));
  for (std::size_t j = 1; j <= m; ++j) powers.push_back(powers.back() * g);

  std::vector<Rat> h(m + 1);
  h[1] = 1 / g[1];
  for (std::size_t n = 2; n <= m; ++n) {
    Rat acc;
    for (std::size_t j = 1; j < n; ++j) acc += h[j] * powers[j][n];
    h[n] = -acc / powers[n][n];
  }
  return RatSeries(std::move(h));
}

RatSeries q_derivative(const RatSeries& a) {
  std::vector<Rat> out(a.coeffs());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= static_cast<unsigned long>(n);
  return RatSeries(std::move(out));
}

std::vector<std::string> to_strings(const RatSeries& a) {
  std::vector<std::string> out;
  out.reserve(a.order() + 1);
  for (const auto& c : a.coeffs()) out.push_back(to_string(c));
  return out;
}

RatSeries series_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> out;
  out.reserve(coeffs.size());
  for (const auto& s : coeffs) out.push_back(parse_rat(s));
  return RatSeries(std::move(out));
}

}  // namespace severi
