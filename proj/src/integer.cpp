#include "toric/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace toric {

namespace {

mpz_class widen(std::int64_t v) {
  mpz_class z;
  // long is 64-bit on every platform this builds on (LP64).
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

void Integer::set_big(mpz_class&& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) {
    small_ = mpz_get_si(z.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_shared<const mpz_class>(std::move(z));
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  Integer out;
  out.set_big(mpz_class(s, 10));
  return out;
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : widen(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  set_big(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  set_big(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  set_big(to_mpz() * o.to_mpz());
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !o.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  set_big(std::move(q));
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !o.big_) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    return *this;
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  set_big(std::move(r));
  return *this;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  Integer out;
  out.set_big(-to_mpz());
  return out;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never fits inline
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = 0;
  if (a.big_ && b.big_) {
    c = cmp(*a.big_, *b.big_);
  } else if (a.big_) {
    c = mpz_sgn(a.big_->get_mpz_t());
  } else {
    c = -mpz_sgn(b.big_->get_mpz_t());
  }
  return c <=> 0;
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.fits_int64() && b.fits_int64()) {
    std::int64_t x = a.to_int64();
    std::int64_t y = b.to_int64();
    if (x != std::numeric_limits<std::int64_t>::min() && y != std::numeric_limits<std::int64_t>::min()) {
      x = x < 0 ? -x : x;
      y = y < 0 ? -y : y;
      while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace toric
