#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace tiematch {

// Exact fraction. Approximation ratios are only ever compared
// in this form so that the 13/9 bound is checked without rounding.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend constexpr bool operator==(const Ratio& lhs, const Ratio& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Ratio& lhs, const Ratio& rhs) {
    return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
  }

  friend constexpr Ratio operator+(const Ratio& lhs, const Ratio& rhs) {
    return Ratio(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 0) {
      // Division by zero is represented as 1/0 (larger than every finite ratio).
      num_ = 1;
      return;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline constexpr Ratio kThirteenNinths{13, 9};

}  // namespace tiematch
