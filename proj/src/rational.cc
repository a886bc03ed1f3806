#include "arbor/rational.h"

#include <cctype>
#include <charconv>
#include <numeric>

#include "arbor/error.h"

namespace arbor {

namespace {

std::int64_t ParseInt(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    Fail(ErrorKind::kParameter,
         "not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) Fail(ErrorKind::kParameter, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(ParseInt(text.substr(0, slash), text),
                    ParseInt(text.substr(slash + 1), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) {
      Fail(ErrorKind::kParameter, "too many decimals: '" + std::string(text) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : ParseInt(int_part, text);
    const std::int64_t frac = frac_part.empty() ? 0 : ParseInt(frac_part, text);
    return Rational(whole * den + frac, den);
  }
  return Rational(ParseInt(text, text));
}

Rational Rational::operator*(const Rational& other) const {
  const std::int64_t g1 = std::gcd(num_, other.den_);
  const std::int64_t g2 = std::gcd(other.num_, den_);
  return Rational((num_ / (g1 ? g1 : 1)) * (other.num_ / (g2 ? g2 : 1)),
                  (den_ / (g2 ? g2 : 1)) * (other.den_ / (g1 ? g1 : 1)));
}

Rational Rational::operator/(const Rational& other) const {
  return *this * Rational(other.den_, other.num_);
}

Rational Rational::operator+(const Rational& other) const {
  const std::int64_t l = std::lcm(den_, other.den_);
  return Rational(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

}  // namespace arbor
