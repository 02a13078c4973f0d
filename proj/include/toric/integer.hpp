#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace toric {

/// Arbitrary-precision signed integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t are stored inline; anything larger is held in
/// an immutable, shared GMP integer. Every arithmetic result is normalized
/// back to the inline form when it fits, so equality of representation
/// implies equality of value.
class Integer {
 public:
  Integer() = default;

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      small_ = static_cast<std::int64_t>(v);
    } else if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(INT64_MAX)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &v);
      set_big(std::move(z));
    }
  }

  explicit Integer(const mpz_class& v) { set_big(mpz_class(v)); }

  /// Parses an optionally signed decimal literal; throws std::invalid_argument.
  static Integer parse(std::string_view text);

  [[nodiscard]] bool fits_int64() const noexcept { return !big_; }
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] mpz_class to_mpz() const;
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  /// Truncating division (rounds toward zero); throws std::domain_error on zero.
  Integer& operator/=(const Integer& o);
  /// Remainder of truncating division; sign follows the dividend.
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  Integer operator-() const;

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

 private:
  void set_big(mpz_class&& z);

  std::int64_t small_ = 0;
  std::shared_ptr<const mpz_class> big_;
};

[[nodiscard]] Integer abs(const Integer& v);
/// Non-negative greatest common divisor; gcd(0, 0) = 0.
[[nodiscard]] Integer gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace toric
