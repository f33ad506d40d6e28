#include "mh/numeric.hpp"

#include <cstdio>
#include <string>

#include "mh/errors.hpp"

namespace mh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw UsageError("not a decimal integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(digits), 10);
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw UsageError("not a decimal number: '" + std::string(text) + "'");
    }
    BigInt num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(negative ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
  }
  return Rational(parse_bigint(text));
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_fraction(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

double to_double(const Rational& value) { return mpq_get_d(value.get_mpq_t()); }

std::string format_double(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

std::string format_fixed(double value, int decimals) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace mh
