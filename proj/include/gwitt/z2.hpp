#pragma once

#include <cstdint>
#include <ostream>

#include <Eigen/Core>

namespace gwitt {

/// The field with two elements, usable as an Eigen scalar.
class Z2 {
 public:
  constexpr Z2() noexcept = default;
  constexpr Z2(long long value) noexcept : bit_(static_cast<std::uint8_t>(value & 1)) {}  // NOLINT

  constexpr int value() const noexcept { return bit_; }
  constexpr explicit operator bool() const noexcept { return bit_ != 0; }

  friend constexpr Z2 operator+(Z2 a, Z2 b) noexcept { return Z2(a.bit_ ^ b.bit_); }
  friend constexpr Z2 operator-(Z2 a, Z2 b) noexcept { return Z2(a.bit_ ^ b.bit_); }
  friend constexpr Z2 operator*(Z2 a, Z2 b) noexcept { return Z2(a.bit_ & b.bit_); }
  constexpr Z2 operator-() const noexcept { return *this; }
  constexpr Z2& operator+=(Z2 o) noexcept { return *this = *this + o; }
  constexpr Z2& operator-=(Z2 o) noexcept { return *this = *this - o; }
  constexpr Z2& operator*=(Z2 o) noexcept { return *this = *this * o; }

  friend constexpr bool operator==(Z2 a, Z2 b) noexcept { return a.bit_ == b.bit_; }

  friend std::ostream& operator<<(std::ostream& os, Z2 x) { return os << x.value(); }

 private:
  std::uint8_t bit_ = 0;
};

inline Z2 abs(Z2 x) noexcept { return x; }

}  // namespace gwitt

namespace Eigen {

template <>
struct NumTraits<gwitt::Z2> : GenericNumTraits<gwitt::Z2> {
  using Real = gwitt::Z2;
  using NonInteger = gwitt::Z2;
  using Literal = gwitt::Z2;
  using Nested = gwitt::Z2;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(1); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
