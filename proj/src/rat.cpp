#include "nsalg/rat.hpp"

#include <ostream>

#include "nsalg/error.hpp"

namespace nsalg {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

int ctz128(u128 x) {
  auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

std::uint64_t abs64(std::int64_t x) {
  return x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

constexpr i128 kMax = INT64_MAX;

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(LONG_MIN);
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    *this = from_mpq(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = static_cast<std::int64_t>(gcd64(abs64(num), static_cast<std::uint64_t>(den)));
  num_ = num / g;
  den_ = den / g;
}

Rat Rat::from_mpq(mpq_class value) {
  value.canonicalize();
  Rat r;
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return r;
}

namespace {

// Assembles a reduced-or-not 128-bit fraction into a canonical Rat.
Rat make_from_128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num <= kMax && num >= -kMax && den <= kMax) {
    return Rat(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }
  return Rat::from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
}

bool valid_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto bad = [&]() -> Rat { fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'"); };
  std::string_view t = text;
  bool neg = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    neg = t.front() == '-';
    t.remove_prefix(1);
  }
  auto slash = t.find('/');
  std::string_view num = t.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!valid_digits(num) || !valid_digits(den)) return bad();
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (neg) n = -n;
  return from_mpq(mpq_class(n, d));
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rat::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rat::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rat Rat::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return Rat(den_, num_);
}

Rat operator+(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) {
        Rat r;
        r.num_ = s;
        return r;
      }
    }
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return make_from_128(num, den);
  }
  return Rat::from_mpq(a.to_mpq() + b.to_mpq());
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rat();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) {
        Rat r;
        r.num_ = p;
        return r;
      }
      return make_from_128(static_cast<i128>(a.num_) * b.num_, 1);
    }
    // Cross-reduce first so the product is already in lowest terms.
    auto g1 = static_cast<std::int64_t>(gcd64(abs64(a.num_), static_cast<std::uint64_t>(b.den_)));
    auto g2 = static_cast<std::int64_t>(gcd64(abs64(b.num_), static_cast<std::uint64_t>(a.den_)));
    i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (num <= kMax && num >= -kMax && den <= kMax) {
      Rat r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    return make_from_128(num, den);
  }
  return Rat::from_mpq(a.to_mpq() * b.to_mpq());
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical storage: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace nsalg
