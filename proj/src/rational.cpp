#include "severi/rational.hpp"

#include <algorithm>
#include <cctype>

#include "severi/error.hpp"

namespace severi {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::string to_string(const BigInt& n) { return n.get_str(10); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!valid_integer_text(text)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::ParseError, "signed denominator: '" + std::string(text) + "'");
  }
  return make_rat(parse_bigint(text.substr(0, slash)), parse_bigint(den_text));
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace severi
