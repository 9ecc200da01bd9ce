#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace herbert {

/// Arbitrary-precision integer used by every exact computation in the engine.
using Integer = boost::multiprecision::cpp_int;

/// Thrown by Checked64 arithmetic when a result leaves the int64 range.
struct overflow_error : std::overflow_error {
  overflow_error() : std::overflow_error("int64 overflow") {}
};

/// int64 with overflow-checked arithmetic.  Normal-form routines first run
/// with this type and fall back to Integer when it throws.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Checked64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw overflow_error();
    v_ = static_cast<std::int64_t>(v);
  }

  constexpr std::int64_t value() const { return v_; }
  explicit operator Integer() const { return Integer(v_); }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw overflow_error();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw overflow_error();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw overflow_error();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw overflow_error();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw overflow_error();
    return -v_;
  }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }

  friend constexpr bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Checked64 a, Checked64 b) { return a.v_ <=> b.v_; }

 private:
  std::int64_t v_ = 0;
};

inline Checked64 abs(Checked64 a) { return a < 0 ? -a : a; }

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(Checked64 a) { return a.value() == 0; }
inline int sign_of(const Integer& a) { return a.sign(); }
inline int sign_of(Checked64 a) { return a.value() > 0 ? 1 : (a.value() < 0 ? -1 : 0); }

/// Quotient rounded toward negative infinity.
template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (!is_zero(r) && ((sign_of(r) < 0) != (sign_of(b) < 0))) q = q - T(1);
  return q;
}

/// Representative of a modulo m in [0, |m|); m == 0 leaves a unchanged.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.is_zero()) return a;
  Integer am = abs(m);
  Integer r = a % am;
  if (r.sign() < 0) r += am;
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline long long to_ll(const Integer& a) {
  if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
    throw std::range_error("integer does not fit in 64 bits: " + a.str());
  return static_cast<long long>(a);
}

}  // namespace herbert
