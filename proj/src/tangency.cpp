#include "severi/tangency.hpp"

#include <charconv>

#include "severi/error.hpp"

namespace severi {

TangencySeq::TangencySeq(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) { trim(); }

TangencySeq::TangencySeq(std::initializer_list<std::uint32_t> parts) : parts_(parts) { trim(); }

TangencySeq TangencySeq::transverse(std::uint32_t d) { return TangencySeq({d}); }

void TangencySeq::trim() {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::uint32_t TangencySeq::count(std::size_t order) const noexcept {
  return (order >= 1 && order <= parts_.size()) ? parts_[order - 1] : 0;
}

std::uint64_t TangencySeq::weight() const noexcept {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) w += (i + 1) * parts_[i];
  return w;
}

std::uint64_t TangencySeq::size() const noexcept {
  std::uint64_t n = 0;
  for (auto p : parts_) n += p;
  return n;
}

TangencySeq TangencySeq::plus_unit(std::size_t order) const {
  TangencySeq out = *this;
  if (out.parts_.size() < order) out.parts_.resize(order, 0);
  ++out.parts_[order - 1];
  return out;
}

TangencySeq TangencySeq::minus_unit(std::size_t order) const {
  if (count(order) == 0) throw Error(ErrorCode::InvalidState, "no tangency of order " + std::to_string(order));
  TangencySeq out = *this;
  --out.parts_[order - 1];
  out.trim();
  return out;
}

std::string TangencySeq::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

TangencySeq TangencySeq::parse(std::string_view text) {
  std::vector<std::uint32_t> parts;
  if (text.empty() || text == "-") return TangencySeq();
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::ParseError, "bad tangency sequence '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TangencySeq(std::move(parts));
}

BigInt seq_binomial(const TangencySeq& s, const TangencySeq& t) {
  BigInt out = 1;
  for (std::size_t k = 1; k <= t.max_order(); ++k) {
    if (t.count(k) > s.count(k)) return 0;
    out *= binomial(s.count(k), t.count(k));
  }
  return out;
}

BigInt seq_weighted_power(const TangencySeq& s) {
  BigInt out = 1;
  for (std::size_t k = 2; k <= s.max_order(); ++k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), k, s.count(k));
    out *= p;
  }
  return out;
}

void validate_state(const ChState& st) {
  if (st.d < 1) throw Error(ErrorCode::InvalidState, "degree must be positive");
  if (st.alpha.weight() + st.beta.weight() != st.d) {
    throw Error(ErrorCode::InvalidState,
                "tangency weights " + std::to_string(st.alpha.weight()) + "+" +
                    std::to_string(st.beta.weight()) + " do not add up to d=" + std::to_string(st.d));
  }
}

std::int64_t point_count(const ChState& st) {
  validate_state(st);
  const std::int64_t d = st.d;
  return d * (d + 3) / 2 - static_cast<std::int64_t>(st.delta) - d +
         static_cast<std::int64_t>(st.beta.size());
}

}  // namespace severi
