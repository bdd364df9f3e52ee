#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanorr {

// Exact rational number with 64-bit numerator and denominator.
//
// Always stored in lowest terms with a positive denominator. Intermediate
// products are formed in 128 bits; a result that does not fit back into
// 64 bits throws std::overflow_error instead of wrapping.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type n) noexcept : num_(n) {}  // NOLINT(implicit)
  constexpr Rational(int_type n, int_type d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
  }

  constexpr int_type num() const noexcept { return num_; }
  constexpr int_type den() const noexcept { return den_; }

  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  // Largest integer <= *this.
  constexpr int_type floor() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  constexpr int_type ceil() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  constexpr Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend constexpr Rational operator+(const Rational& x, const Rational& y) {
    using W = __int128;
    return from_wide(W(x.num_) * y.den_ + W(y.num_) * x.den_, W(x.den_) * y.den_);
  }
  friend constexpr Rational operator-(const Rational& x, const Rational& y) {
    using W = __int128;
    return from_wide(W(x.num_) * y.den_ - W(y.num_) * x.den_, W(x.den_) * y.den_);
  }
  friend constexpr Rational operator*(const Rational& x, const Rational& y) {
    using W = __int128;
    return from_wide(W(x.num_) * y.num_, W(x.den_) * y.den_);
  }
  friend constexpr Rational operator/(const Rational& x, const Rational& y) {
    using W = __int128;
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(W(x.num_) * y.den_, W(x.den_) * y.num_);
  }

  constexpr Rational& operator+=(const Rational& y) { return *this = *this + y; }
  constexpr Rational& operator-=(const Rational& y) { return *this = *this - y; }
  constexpr Rational& operator*=(const Rational& y) { return *this = *this * y; }
  constexpr Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    using W = __int128;
    const W lhs = W(x.num_) * y.den_;
    const W rhs = W(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q" in lowest terms, or "p" when the value is an integer.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p", "-p", "p/q", "-p/q". No whitespace, q > 0.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      return std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    const auto num = parse_int(text.substr(0, slash));
    if (!num) throw bad();
    if (slash == std::string_view::npos) return Rational(*num);
    const auto den = parse_int(text.substr(slash + 1));
    if (!den || *den <= 0 || text.substr(slash + 1).front() == '-' ||
        text.substr(slash + 1).front() == '+')
      throw bad();
    return Rational(*num, *den);
  }

  double to_double() const noexcept { return double(num_) / double(den_); }

 private:
  struct OptInt {
    bool ok = false;
    int_type value = 0;
    explicit operator bool() const { return ok; }
    int_type operator*() const { return value; }
  };

  static constexpr OptInt parse_int(std::string_view s) {
    if (s.empty()) return {};
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return {};
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return {};
      v = v * 10 + (s[i] - '0');
      if (v > (__int128(1) << 63)) return {};
    }
    if (neg) v = -v;
    if (v > INT64_MAX || v < INT64_MIN) return {};
    return {true, int_type(v)};
  }

  static constexpr __int128 wide_gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static constexpr Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = wide_gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = int_type(n);
    r.den_ = int_type(d);
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

constexpr Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace fanorr
