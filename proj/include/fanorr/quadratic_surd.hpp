#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include "fanorr/error.hpp"
#include "fanorr/rational.hpp"

namespace fanorr {

// An exact real number rational + coefficient * sqrt(radicand).
//
// The radicand is a square-free integer >= 2, or 1 with coefficient 0 when
// the value is rational. Arithmetic is closed only between surds sharing a
// radicand (or with rationals); that is all the quadratic-root bounds need.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational r) : rational_(r) {}  // NOLINT(implicit)

  // sqrt(x) for x >= 0, with the square part pulled out of the radical.
  static QuadraticSurd sqrt(const Rational& x) {
    if (x.sign() < 0) throw DomainError("square root of negative rational " + x.to_string());
    if (x.sign() == 0) return {};
    // sqrt(p/q) = sqrt(p*q)/q
    const auto pq = static_cast<std::uint64_t>(x.num()) * static_cast<std::uint64_t>(x.den());
    std::uint64_t square = 1, free = 1, rest = pq;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        square *= f;
      }
      if (rest % f == 0) {
        rest /= f;
        free *= f;
      }
    }
    free *= rest;
    const Rational outer(static_cast<Rational::int_type>(square), x.den());
    if (free == 1) return QuadraticSurd(outer);
    QuadraticSurd s;
    s.coefficient_ = outer;
    s.radicand_ = static_cast<std::int64_t>(free);
    return s;
  }

  const Rational& rational_part() const noexcept { return rational_; }
  const Rational& coefficient() const noexcept { return coefficient_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return coefficient_.sign() == 0; }
  Rational to_rational() const {
    if (!is_rational()) throw DomainError("surd " + to_string() + " is irrational");
    return rational_;
  }

  // Exact sign of rational + coefficient*sqrt(radicand).
  int sign() const {
    const int a = rational_.sign();
    const int b = coefficient_.sign();
    if (b == 0) return a;
    if (a == 0) return b;
    if (a == b) return a;
    // opposite signs: compare rational^2 against coefficient^2 * radicand
    const Rational lhs = rational_ * rational_;
    const Rational rhs = coefficient_ * coefficient_ * Rational(radicand_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? a : b;
  }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    QuadraticSurd r;
    r.radicand_ = common_radicand(x, y);
    r.rational_ = x.rational_ + y.rational_;
    r.coefficient_ = x.coefficient_ + y.coefficient_;
    r.normalize();
    return r;
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x) {
    QuadraticSurd r = x;
    r.rational_ = -r.rational_;
    r.coefficient_ = -r.coefficient_;
    return r;
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    QuadraticSurd r;
    r.radicand_ = common_radicand(x, y);
    r.rational_ = x.rational_ * y.rational_ + x.coefficient_ * y.coefficient_ * Rational(r.radicand_);
    r.coefficient_ = x.rational_ * y.coefficient_ + x.coefficient_ * y.rational_;
    r.normalize();
    return r;
  }
  friend QuadraticSurd operator/(const QuadraticSurd& x, const Rational& y) {
    QuadraticSurd r = x;
    r.rational_ /= y;
    r.coefficient_ /= y;
    return r;
  }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() == 0; }
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() >= 0; }

  // "5/4", "sqrt(41)", "-3/4 + 1/4*sqrt(41)"
  std::string to_string() const {
    if (is_rational()) return rational_.to_string();
    std::string radical = "sqrt(" + std::to_string(radicand_) + ")";
    std::string term;
    if (coefficient_ == Rational(1)) term = radical;
    else if (coefficient_ == Rational(-1)) term = "-" + radical;
    else term = coefficient_.to_string() + "*" + radical;
    if (rational_.sign() == 0) return term;
    if (coefficient_.sign() < 0) {
      term = term.substr(1);
      return rational_.to_string() + " - " + term;
    }
    return rational_.to_string() + " + " + term;
  }

  double to_double() const {
    return rational_.to_double() + coefficient_.to_double() * std::sqrt(double(radicand_));
  }

 private:
  static std::int64_t common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.radicand_;
    if (y.is_rational()) return x.radicand_;
    if (x.radicand_ != y.radicand_)
      throw DomainError("surd arithmetic across radicands " + std::to_string(x.radicand_) +
                        " and " + std::to_string(y.radicand_));
    return x.radicand_;
  }

  void normalize() {
    if (coefficient_.sign() == 0) radicand_ = 1;
  }

  Rational rational_{};
  Rational coefficient_{};
  std::int64_t radicand_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.to_string(); }
}  // namespace fanorr
