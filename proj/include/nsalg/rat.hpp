#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace nsalg {

/// Exact rational number with arbitrary precision.
///
/// Values are kept in lowest terms with a positive denominator. A value whose
/// numerator and denominator both fit in a signed 64-bit word is stored
/// inline; anything larger spills to an immutable GMP rational. The choice of
/// storage is canonical (a value is big only if it cannot be small), so
/// equality never has to compare across representations.
class Rat {
 public:
  Rat() noexcept = default;

  template <std::integral I>
  Rat(I value) {  // NOLINT(google-explicit-constructor): integers embed exactly
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<std::int64_t>(value) != INT64_MIN) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    } else {
      if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(INT64_MAX)) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    }
    *this = from_mpq(mpq_class(std::to_string(value)));
  }

  /// num/den reduced to lowest terms; throws DivisionByZero when den == 0.
  Rat(std::int64_t num, std::int64_t den);

  static Rat from_mpq(mpq_class value);

  /// Accepts "p", "-p", "p/q" with arbitrary-size decimal integers.
  static Rat parse(std::string_view text);

  mpq_class to_mpq() const;
  std::string str() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const noexcept;
  bool is_small() const noexcept { return !big_; }

  Rat operator-() const;
  Rat inverse() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace nsalg
