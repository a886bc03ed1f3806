#ifndef ARBOR_RATIONAL_H_
#define ARBOR_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace arbor {

// Exact nonnegative-denominator fraction. Expansion parameters are kept
// rational so that flow instances can be scaled to integers.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  // Accepts "p/q", an integer, or a decimal such as "0.125".
  static Rational Parse(std::string_view text);

  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;
  Rational operator+(const Rational& other) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace arbor

#endif  // ARBOR_RATIONAL_H_
