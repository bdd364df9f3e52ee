#pragma once

// Orbifold Riemann-Roch for Fano 3-folds with terminal quotient baskets.
//
// A point 1/r(a, r-a, 1) contributes a(r-a)/r to the anticanonical cube and
// the periodic correction l_Q(n) to the plurianticanonical dimensions
//
//   (-K)^3 = 2g - 2 + sum a(r-a)/r
//   h0(-nK) = n(n+1)(2n+1)/12 * (-K)^3 + (2n+1) - sum l_Q(n+1)
//   l_Q(n)  = sum_{k=1}^{n-1} [ka](r - [ka]) / 2r,   [x] = x mod r

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fanorr/error.hpp"
#include "fanorr/rational.hpp"

namespace fanorr {

class QuotientSingularity {
 public:
  QuotientSingularity(int r, int a) : r_(r), a_(a) {
    if (r < 2) throw DomainError("quotient singularity index r=" + std::to_string(r) + " must be >= 2");
    if (a < 1 || a > r - 1)
      throw DomainError("quotient singularity weight a=" + std::to_string(a) + " outside [1, r-1]");
    if (std::gcd(a, r) != 1)
      throw DomainError("quotient singularity 1/" + std::to_string(r) + "(" + std::to_string(a) +
                        ",...) is not terminal: gcd(a, r) != 1");
  }

  int index() const noexcept { return r_; }
  int weight() const noexcept { return a_; }

  // Representative with a <= r/2; (r, a) and (r, r-a) are the same point.
  QuotientSingularity normalized() const { return a_ * 2 <= r_ ? *this : QuotientSingularity(r_, r_ - a_); }

  // a(r-a)/r
  Rational cube_contribution() const { return Rational(std::int64_t(a_) * (r_ - a_), r_); }

  // 1/r(a,r-a,1)
  std::string to_string() const {
    return "1/" + std::to_string(r_) + "(" + std::to_string(a_) + "," + std::to_string(r_ - a_) + ",1)";
  }

  friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
  friend auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;

 private:
  int r_;
  int a_;
};

// Multiset of quotient points, kept normalized and sorted so that equality
// is multiset equality up to a <-> r-a.
class Basket {
 public:
  Basket() = default;
  Basket(std::initializer_list<QuotientSingularity> points) : Basket(std::vector(points)) {}
  explicit Basket(std::vector<QuotientSingularity> points) : points_(std::move(points)) {
    for (auto& p : points_) p = p.normalized();
    std::sort(points_.begin(), points_.end());
  }

  const std::vector<QuotientSingularity>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  Rational cube_contribution() const {
    Rational sum;
    for (const auto& p : points_) sum += p.cube_contribution();
    return sum;
  }

  std::string to_string() const {
    if (points_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < points_.size();) {
      std::size_t j = i;
      while (j < points_.size() && points_[j] == points_[i]) ++j;
      if (!s.empty()) s += ", ";
      if (j - i > 1) s += std::to_string(j - i) + "x";
      s += points_[i].to_string();
      i = j;
    }
    return "{" + s + "}";
  }

  friend bool operator==(const Basket&, const Basket&) = default;

 private:
  std::vector<QuotientSingularity> points_;
};

// l_Q(n). Uses l_Q(n + r) = l_Q(n) + l_Q(r + 1) to fold whole periods.
inline Rational local_contribution(const QuotientSingularity& q, int n) {
  if (n < 0) throw DomainError("local contribution needs n >= 0, got " + std::to_string(n));
  const std::int64_t r = q.index();
  const std::int64_t a = q.weight();
  const auto partial = [&](std::int64_t terms) {
    std::int64_t s = 0;
    for (std::int64_t k = 1; k <= terms; ++k) {
      const std::int64_t ka = (k * a) % r;
      s += ka * (r - ka);
    }
    return s;
  };
  if (n <= 1) return Rational(0);
  const std::int64_t terms = n - 1;
  const std::int64_t total = (terms / r) * partial(r) + partial(terms % r);
  return Rational(total, 2 * r);
}

// 2g - 2 + sum a(r-a)/r. A nonpositive value means "not a Fano candidate";
// see is_fano_candidate().
inline Rational anticanonical_cube(int genus, const Basket& basket) {
  return Rational(2 * std::int64_t(genus) - 2) + basket.cube_contribution();
}

inline bool is_fano_candidate(const Rational& kcube) { return kcube.sign() > 0; }

// The complete Riemann-Roch input for one Fano 3-fold.
//
// The cube is stored independently of genus and basket so that inconsistent
// records can be represented and flagged (rr_consistent()) rather than
// silently repaired.
class FanoNumerics {
 public:
  FanoNumerics(int genus, Rational kcube, Basket basket)
      : genus_(genus), kcube_(kcube), basket_(std::move(basket)) {
    if (kcube_.sign() <= 0) throw DomainError("anticanonical cube " + kcube_.to_string() + " is not positive");
  }

  static FanoNumerics from_genus(int genus, Basket basket) {
    const Rational k = anticanonical_cube(genus, basket);
    if (!is_fano_candidate(k))
      throw DomainError("genus " + std::to_string(genus) + " with basket " + basket.to_string() +
                        " gives (-K)^3 = " + k.to_string() + ": not a Fano candidate");
    return FanoNumerics(genus, k, std::move(basket));
  }

  int genus() const noexcept { return genus_; }
  const Rational& kcube() const noexcept { return kcube_; }
  const Basket& basket() const noexcept { return basket_; }

  bool rr_consistent() const { return kcube_ == anticanonical_cube(genus_, basket_); }

  friend bool operator==(const FanoNumerics&, const FanoNumerics&) = default;

 private:
  int genus_;
  Rational kcube_;
  Basket basket_;
};

struct PluriValue {
  Rational value;
  bool nonnegative_integer = false;
};

inline PluriValue h0_anticanonical(const FanoNumerics& x, int n) {
  if (n < 0) throw DomainError("h0(-nK) needs n >= 0, got " + std::to_string(n));
  const std::int64_t m = n;
  Rational v = Rational(m * (m + 1) * (2 * m + 1), 12) * x.kcube() + Rational(2 * m + 1);
  for (const auto& q : x.basket()) v -= local_contribution(q, n + 1);
  return {v, v.is_integer() && v.sign() >= 0};
}

struct RRSequence {
  std::vector<Rational> values;
  bool integral = true;
  bool nonnegative = true;

  bool valid() const noexcept { return integral && nonnegative; }
};

// h0(-nK) for n = 0..depth.
inline RRSequence rr_hilbert_sequence(const FanoNumerics& x, int depth) {
  if (depth < 0) throw DomainError("sequence depth must be >= 0, got " + std::to_string(depth));
  RRSequence out;
  out.values.reserve(std::size_t(depth) + 1);
  for (int n = 0; n <= depth; ++n) {
    const auto h = h0_anticanonical(x, n);
    out.integral = out.integral && h.value.is_integer();
    out.nonnegative = out.nonnegative && h.value.sign() >= 0;
    out.values.push_back(h.value);
  }
  return out;
}

// h0(-K) = g + 2
inline int genus_from_h0(std::int64_t h0_of_minus_k) {
  if (h0_of_minus_k < 0) throw DomainError("h0(-K) = " + std::to_string(h0_of_minus_k) + " is negative");
  return int(h0_of_minus_k - 2);
}

}  // namespace fanorr
