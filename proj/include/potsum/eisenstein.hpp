#pragma once

#include <cstdint>
#include <ostream>

namespace potsum {

/// a + b*w in Z[w], where w is a primitive complex cube root of unity
/// (w^2 = -1 - w).
class EisensteinInt {
 public:
  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}

  /// w^k for any integer k.
  static constexpr EisensteinInt omega_power(std::int64_t k) {
    switch (((k % 3) + 3) % 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      default: return {-1, -1};
    }
  }

  constexpr std::int64_t a() const noexcept { return a_; }
  constexpr std::int64_t b() const noexcept { return b_; }

  constexpr bool is_rational() const noexcept { return b_ == 0; }

  /// a^2 - ab + b^2, the squared complex absolute value.
  constexpr std::int64_t norm() const noexcept { return a_ * a_ - a_ * b_ + b_ * b_; }

  /// Complex conjugate: w <-> w^2.
  constexpr EisensteinInt conj() const noexcept { return {a_ - b_, -b_}; }

  constexpr bool divisible_by(std::int64_t d) const noexcept { return a_ % d == 0 && b_ % d == 0; }
  /// Exact division; only meaningful when divisible_by(d).
  constexpr EisensteinInt divided_by(std::int64_t d) const noexcept { return {a_ / d, b_ / d}; }

  constexpr EisensteinInt& operator+=(const EisensteinInt& o) noexcept {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  constexpr EisensteinInt& operator-=(const EisensteinInt& o) noexcept {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }

  friend constexpr EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend constexpr EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend constexpr EisensteinInt operator-(const EisensteinInt& x) { return {-x.a_, -x.b_}; }
  friend constexpr EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
  }
  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
    return os << x.a_ << (x.b_ < 0 ? " - " : " + ") << (x.b_ < 0 ? -x.b_ : x.b_) << "w";
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

}  // namespace potsum
