#include "severi/interpolate.hpp"

#include "severi/error.hpp"

namespace severi {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "interpolation needs matching, nonempty samples");
  }
  const std::size_t n = xs.size();

  // In-place divided-difference table; afterwards dd[i] = f[x0..xi].
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rat gap = xs[i] - xs[i - level];
      if (gap == 0) throw Error(ErrorCode::InvalidArgument, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }

  // Expand the Newton form by Horner: p = dd[n-1]; p = p (x - x_i) + dd[i].
  std::vector<Rat> p{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Rat> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * xs[i];
    }
    next[0] += dd[i];
    p = std::move(next);
  }
  return RatPoly(std::move(p));
}

}  // namespace severi
