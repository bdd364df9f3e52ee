#pragma once

// Inequality engine for excluding maximal centers.
//
// On a test surface S through the candidate center write
//   A = O_S(1) = (1/n) H|_S = L + sum gamma_i Gamma_i
// with L nef. Curve centers are excluded by showing every gamma <= 1 from
// L^2 >= 0 or L.Gamma_1 >= 0; point centers by showing L^2 cannot exceed the
// local intersection threshold forced by non-log-canonicity (two_dim_threshold).
// Every verdict here is decided by exact rational or surd sign evaluation.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fanorr/error.hpp"
#include "fanorr/quadratic_surd.hpp"
#include "fanorr/rational.hpp"

namespace fanorr {

// c2 x^2 + c1 x + c0
struct QuadraticForm {
  Rational c2;
  Rational c1;
  Rational c0;

  Rational operator()(const Rational& x) const { return (c2 * x + c1) * x + c0; }
  QuadraticSurd operator()(const QuadraticSurd& x) const { return (QuadraticSurd(c2) * x + QuadraticSurd(c1)) * x + QuadraticSurd(c0); }

  int degree() const { return c2.sign() != 0 ? 2 : (c1.sign() != 0 ? 1 : 0); }

  // "8 - 6*gamma - 5*gamma^2"
  std::string to_string(const std::string& var = "x") const {
    std::string s;
    const auto term = [&](const Rational& c, const std::string& mono) {
      if (c.sign() == 0) return;
      const Rational a = abs(c);
      std::string body;
      if (mono.empty()) body = a.to_string();
      else if (a == Rational(1)) body = mono;
      else body = a.to_string() + "*" + mono;
      if (s.empty()) s = (c.sign() < 0 ? "-" : "") + body;
      else s += (c.sign() < 0 ? " - " : " + ") + body;
    };
    term(c0, "");
    term(c1, var);
    term(c2, var + "^2");
    return s.empty() ? "0" : s;
  }

  friend QuadraticForm operator+(const QuadraticForm& x, const QuadraticForm& y) {
    return {x.c2 + y.c2, x.c1 + y.c1, x.c0 + y.c0};
  }
  friend QuadraticForm operator-(const QuadraticForm& x, const QuadraticForm& y) {
    return {x.c2 - y.c2, x.c1 - y.c1, x.c0 - y.c0};
  }
  friend QuadraticForm operator*(const Rational& k, const QuadraticForm& q) { return {k * q.c2, k * q.c1, k * q.c0}; }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Adjunction on a surface: 2 p_a - 2 = Gamma.(K_S + Gamma).
inline Rational self_intersection_adjunction(int arithmetic_genus, const Rational& ks_dot_c) {
  return Rational(2 * std::int64_t(arithmetic_genus) - 2) - ks_dot_c;
}

// Test-surface data for one fixed curve Gamma: A^2, A.Gamma, Gamma^2.
struct SurfaceCurveCase {
  std::string label;
  Rational asq;
  Rational adotc;
  Rational csq;

  friend bool operator==(const SurfaceCurveCase&, const SurfaceCurveCase&) = default;
};

// L^2 = (A - gamma Gamma)^2 as a quadratic in gamma.
inline QuadraticForm l_squared(const SurfaceCurveCase& c) { return {c.csq, Rational(-2) * c.adotc, c.asq}; }

enum class BoundVerdict { below_one, at_one, above_one };

inline const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::below_one: return "gamma_max < 1";
    case BoundVerdict::at_one: return "gamma_max = 1";
    case BoundVerdict::above_one: return "gamma_max > 1";
  }
  return "?";
}

struct MultiplicityBound {
  QuadraticForm l_squared;
  QuadraticSurd gamma_max;
  BoundVerdict verdict;

  // gamma <= 1 is all a curve exclusion needs.
  bool excluded() const { return verdict != BoundVerdict::above_one; }
};

// The largest gamma >= 0 with A^2 - 2 gamma A.Gamma + gamma^2 Gamma^2 >= 0.
// The verdict against 1 comes from the sign of L^2 at gamma = 1.
inline MultiplicityBound max_fixed_multiplicity(const SurfaceCurveCase& c) {
  if (c.csq.sign() >= 0)
    throw DomainError("no bound from this test surface: Gamma^2 = " + c.csq.to_string() + " is not negative");
  if (c.asq.sign() < 0) throw DomainError("A^2 = " + c.asq.to_string() + " is negative");
  const QuadraticForm q = l_squared(c);
  // c2 < 0, so the larger root is (-c1 - sqrt(D)) / (2 c2).
  const Rational disc = q.c1 * q.c1 - Rational(4) * q.c2 * q.c0;
  const QuadraticSurd root = (QuadraticSurd(-q.c1) - QuadraticSurd::sqrt(disc)) / (Rational(2) * q.c2);
  const int at_one = q(Rational(1)).sign();
  const BoundVerdict v = at_one < 0 ? BoundVerdict::below_one
                                    : (at_one == 0 ? BoundVerdict::at_one : BoundVerdict::above_one);
  return {q, root, v};
}

// Largest multiple of `step` strictly below A^3: with m > n, the degree
// inequality A^3 n^2 >= m^2 deg Gamma forces deg Gamma < A^3.
inline Rational curve_degree_bound(const Rational& a_cube, const Rational& step) {
  if (a_cube.sign() <= 0) throw DomainError("A^3 = " + a_cube.to_string() + " must be positive");
  if (step.sign() <= 0) throw DomainError("degree step " + step.to_string() + " must be positive");
  const Rational k = a_cube / step;
  const auto below = k.is_integer() ? k.num() - 1 : k.floor();
  return Rational(std::max<Rational::int_type>(below, 0)) * step;
}

// The same bound read over integer degrees.
inline Rational::int_type integer_curve_degree_bound(const Rational& a_cube, const Rational& step) {
  return curve_degree_bound(a_cube, step).floor();
}

// Local germ K_S + (1 - a1) D1 + (1 - a2) D2 + (1/m) L at a normal crossing.
struct TwoCurveGerm {
  Rational a1;
  Rational a2;
  Rational m{1};

  friend bool operator==(const TwoCurveGerm&, const TwoCurveGerm&) = default;
};

// If the germ is not log canonical then L^2 > two_dim_threshold (strictly):
//   4 a1 a2 m^2          when a1 <= 1 or a2 <= 1
//   4 (a1 + a2 - 1) m^2  when both exceed 1
inline Rational two_dim_threshold(const TwoCurveGerm& g) {
  if (g.a1.sign() < 0 || g.a2.sign() < 0) throw DomainError("germ coefficients must be nonnegative");
  const Rational m2 = g.m * g.m;
  if (g.a1 <= Rational(1) || g.a2 <= Rational(1)) return Rational(4) * g.a1 * g.a2 * m2;
  return Rational(4) * (g.a1 + g.a2 - Rational(1)) * m2;
}

// A point is excluded when the global (1/n^2) H^2.S is strictly below the
// local threshold. At equality the test is inconclusive.
inline bool mobile_point_exclusion(const Rational& h2s_over_n2, const TwoCurveGerm& g) {
  return h2s_over_n2 < two_dim_threshold(g);
}

struct FixedCurvePointResult {
  bool excluded = false;
  // 4(1 - c) - L^2(c); nonnegative on [0, 1] iff excluded.
  QuadraticForm certificate;
  // Points of [0, 1] where the certificate vanishes (ascending). When the
  // certificate is identically zero, vanishes_identically is set instead.
  std::vector<Rational> equality_locus;
  bool vanishes_identically = false;
};

// With H|_S = L + cB, checks L^2 = A^2 - 2c A.B + c^2 B^2 <= 4(1 - c) for
// every c in [0, 1].
inline FixedCurvePointResult fixed_curve_point_exclusion(const Rational& asq, const Rational& adotb,
                                                         const Rational& bsq) {
  FixedCurvePointResult out;
  const QuadraticForm l2{bsq, Rational(-2) * adotb, asq};
  const QuadraticForm bound{Rational(0), Rational(-4), Rational(4)};
  out.certificate = bound - l2;
  const QuadraticForm& q = out.certificate;
  if (q.degree() == 0 && q.c0.sign() == 0) {
    out.excluded = true;
    out.vanishes_identically = true;
    return out;
  }

  // Minimum over [0, 1]: endpoints, plus the vertex when convex and inside.
  std::vector<Rational> candidates{Rational(0), Rational(1)};
  if (q.c2.sign() > 0) {
    const Rational v = -q.c1 / (Rational(2) * q.c2);
    if (v.sign() > 0 && v < Rational(1)) candidates.push_back(v);
  }
  Rational min = q(candidates.front());
  for (const auto& c : candidates) min = std::min(min, q(c));
  out.excluded = min.sign() >= 0;
  if (out.excluded && min.sign() == 0) {
    std::set<Rational> locus;
    for (const auto& c : candidates)
      if (q(c).sign() == 0) locus.insert(c);
    out.equality_locus.assign(locus.begin(), locus.end());
  }
  return out;
}

// From (1 - gamma1) degO = M.Gamma1 >= (gamma - gamma1) Gamma.Gamma1:
//   gamma <= gamma1 + (1 - gamma1) degO / pairing_lower.
inline Rational component_bound(const Rational& deg_o, const Rational& gamma1, const Rational& pairing_lower) {
  if (pairing_lower.sign() <= 0)
    throw DomainError("no intersection certificate: Gamma.Gamma1 lower bound " + pairing_lower.to_string() +
                      " is not positive");
  if (gamma1.sign() < 0 || gamma1 > Rational(1))
    throw DomainError("gamma1 = " + gamma1.to_string() + " outside [0, 1]");
  return gamma1 + (Rational(1) - gamma1) * deg_o / pairing_lower;
}

// K + (1/n) H is terminal at 1/r(1, a, r-a) iff delta < n / r, where delta is
// the multiplicity along the (1, a, r-a) blowup.
inline bool quotient_terminal_threshold(int r, const Rational& n, const Rational& delta) {
  if (r < 2) throw DomainError("quotient index r=" + std::to_string(r) + " must be >= 2");
  return delta < n / Rational(r);
}

// At an ordinary node, a valuation with mult_F H > n a_F forces the
// multiplicity d on the ordinary blowup to satisfy d > n.
inline bool node_multiplicity_bound(const Rational& n, const Rational& d) { return d > n; }

enum class CenterKind { point, curve };
enum class CenterVerdict { excluded, no_verdict };

// A curve through a terminal quotient point is never the center of a
// divisorial extraction.
inline CenterVerdict quotient_center_rule(CenterKind kind, bool through_quotient_point) {
  return kind == CenterKind::curve && through_quotient_point ? CenterVerdict::excluded : CenterVerdict::no_verdict;
}

inline const char* to_string(CenterVerdict v) {
  return v == CenterVerdict::excluded ? "excluded: curve centers avoid terminal quotient points" : "no verdict";
}

// Subset of the rational line; a missing bound is infinite.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool lower_closed = true;
  bool upper_closed = true;

  static Interval closed(Rational lo, Rational hi) { return {lo, hi, true, true}; }
  static Interval at_least(Rational lo) { return {lo, std::nullopt, true, false}; }
  static Interval everything() { return {std::nullopt, std::nullopt, false, false}; }

  bool contains(const Rational& x) const {
    if (lower && (lower_closed ? x < *lower : x <= *lower)) return false;
    if (upper && (upper_closed ? x > *upper : x >= *upper)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = lower ? (lower_closed ? "[" : "(") + lower->to_string() : "(-inf";
    s += ", ";
    s += upper ? upper->to_string() + (upper_closed ? "]" : ")") : "inf)";
    return s;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// q(beta) = lead(alpha) beta^2 + linear(alpha) beta + constant(alpha).
struct ParamQuadratic {
  QuadraticForm lead;
  QuadraticForm linear;
  QuadraticForm constant;

  friend bool operator==(const ParamQuadratic&, const ParamQuadratic&) = default;
};

struct DiscriminantResult {
  // b^2 - 4ac as a quadratic in alpha.
  QuadraticForm discriminant;
  // Where the supremum over the range is reached; unset when the
  // discriminant does not depend on alpha or is unbounded.
  std::optional<Rational> alpha_star;
  // Supremum of the discriminant over the range; unset when unbounded.
  std::optional<Rational> max_discriminant;
  bool attained = false;
  // No alpha in range admits a beta with q(beta) < 0.
  bool infeasible = false;

  QuadraticForm quarter_discriminant() const { return Rational(1, 4) * discriminant; }
  std::optional<Rational> max_quarter_discriminant() const {
    if (!max_discriminant) return std::nullopt;
    return *max_discriminant / Rational(4);
  }
};

namespace detail {

struct Supremum {
  std::optional<Rational> value;  // unset: +infinity
  std::optional<Rational> where;
  bool attained = false;
};

inline Supremum maximize(const QuadraticForm& f, const Interval& range) {
  if (f.degree() == 0) return {f.c0, std::nullopt, true};
  if (f.c2.sign() < 0) {
    const Rational v = -f.c1 / (Rational(2) * f.c2);
    if (range.contains(v)) return {f(v), v, true};
    // vertex outside: the nearer endpoint, which is finite on that side
    if (range.lower && v <= *range.lower) return {f(*range.lower), *range.lower, range.lower_closed};
    return {f(*range.upper), *range.upper, range.upper_closed};
  }
  // convex or linear: supremum at an end
  const bool up_unbounded = f.c2.sign() > 0 || f.c1.sign() > 0;
  const bool down_unbounded = f.c2.sign() > 0 || f.c1.sign() < 0;
  if ((up_unbounded && !range.upper) || (down_unbounded && !range.lower)) return {};
  std::optional<Supremum> best;
  const auto consider = [&](const std::optional<Rational>& end, bool closed) {
    if (!end) return;
    const Rational val = f(*end);
    if (!best || val > *best->value) best = Supremum{val, *end, closed};
    else if (val == *best->value) best->attained = best->attained || closed;
  };
  consider(range.lower, range.lower_closed);
  consider(range.upper, range.upper_closed);
  return *best;
}

}  // namespace detail

// Decides whether 0 > q(beta; alpha) has a solution with alpha in range. With
// a positive constant leading coefficient, a solution exists exactly where the
// beta-discriminant is positive; the strict sign of its supremum decides.
inline DiscriminantResult discriminant_infeasibility(const ParamQuadratic& pq, const Interval& range) {
  if (pq.lead.degree() != 0) throw DomainError("leading beta-coefficient " + pq.lead.to_string("alpha") + " is not constant");
  if (pq.lead.c0.sign() <= 0) throw DomainError("leading beta-coefficient " + pq.lead.c0.to_string() + " is not positive");
  if (pq.linear.degree() > 1)
    throw DomainError("beta-coefficient " + pq.linear.to_string("alpha") + " makes the discriminant quartic in alpha");
  if (range.lower && range.upper && *range.lower > *range.upper) throw DomainError("empty alpha range " + range.to_string());

  const QuadraticForm& b = pq.linear;
  const QuadraticForm b_squared{b.c1 * b.c1, Rational(2) * b.c1 * b.c0, b.c0 * b.c0};
  DiscriminantResult out;
  out.discriminant = b_squared - Rational(4) * pq.lead.c0 * pq.constant;

  const auto sup = detail::maximize(out.discriminant, range);
  out.max_discriminant = sup.value;
  out.alpha_star = sup.value ? sup.where : std::nullopt;
  out.attained = sup.attained;
  out.infeasible = sup.value && (sup.value->sign() < 0 || (sup.value->sign() == 0 && !sup.attained));
  return out;
}

// Quadratic polynomial in named symbols.
class QuadraticPolynomial {
 public:
  using Pair = std::pair<std::string, std::string>;

  QuadraticPolynomial() = default;
  explicit QuadraticPolynomial(Rational constant) : constant_(constant) {}

  QuadraticPolynomial& add_constant(const Rational& c) {
    constant_ += c;
    return *this;
  }
  QuadraticPolynomial& add_linear(const std::string& x, const Rational& c) {
    bump(linear_, x, c);
    return *this;
  }
  QuadraticPolynomial& add_quadratic(const std::string& x, const std::string& y, const Rational& c) {
    bump(quadratic_, ordered(x, y), c);
    return *this;
  }

  const Rational& constant() const noexcept { return constant_; }
  Rational linear(const std::string& x) const { return lookup(linear_, x); }
  Rational quadratic(const std::string& x, const std::string& y) const { return lookup(quadratic_, ordered(x, y)); }
  const std::map<std::string, Rational>& linear_terms() const noexcept { return linear_; }
  const std::map<Pair, Rational>& quadratic_terms() const noexcept { return quadratic_; }

  std::set<std::string> symbols() const {
    std::set<std::string> s;
    for (const auto& [x, c] : linear_) s.insert(x);
    for (const auto& [xy, c] : quadratic_) {
      s.insert(xy.first);
      s.insert(xy.second);
    }
    return s;
  }

  friend QuadraticPolynomial operator-(const QuadraticPolynomial& p, const QuadraticPolynomial& q) {
    QuadraticPolynomial r = p;
    r.constant_ -= q.constant_;
    for (const auto& [x, c] : q.linear_) bump(r.linear_, x, -c);
    for (const auto& [xy, c] : q.quadratic_) bump(r.quadratic_, xy, -c);
    return r;
  }

  friend bool operator==(const QuadraticPolynomial&, const QuadraticPolynomial&) = default;

  std::string to_string() const {
    std::string s = constant_.sign() != 0 ? constant_.to_string() : "";
    const auto term = [&](const Rational& c, const std::string& mono) {
      const Rational a = abs(c);
      const std::string body = a == Rational(1) ? mono : a.to_string() + "*" + mono;
      if (s.empty()) s = (c.sign() < 0 ? "-" : "") + body;
      else s += (c.sign() < 0 ? " - " : " + ") + body;
    };
    for (const auto& [x, c] : linear_) term(c, x);
    for (const auto& [xy, c] : quadratic_) term(c, xy.first == xy.second ? xy.first + "^2" : xy.first + "*" + xy.second);
    return s.empty() ? "0" : s;
  }

 private:
  static Pair ordered(const std::string& x, const std::string& y) { return x <= y ? Pair{x, y} : Pair{y, x}; }

  template <class Map, class Key>
  static void bump(Map& m, const Key& k, const Rational& c) {
    const Rational v = lookup(m, k) + c;
    if (v.sign() == 0) m.erase(k);
    else m[k] = v;
  }
  template <class Map, class Key>
  static Rational lookup(const Map& m, const Key& k) {
    const auto it = m.find(k);
    return it == m.end() ? Rational(0) : it->second;
  }

  Rational constant_;
  std::map<std::string, Rational> linear_;
  std::map<Pair, Rational> quadratic_;
};

// One fixed component: the curve's name and the symbol for its coefficient.
struct FixedComponent {
  std::string symbol;
  std::string curve;

  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

// Intersection numbers on the test surface: A^2, A.curve, curve.curve'.
struct IntersectionData {
  Rational a_squared;
  std::map<std::string, Rational> a_dot;
  std::map<std::pair<std::string, std::string>, Rational> pairing;

  Rational curve_pairing(const std::string& x, const std::string& y) const {
    if (auto it = pairing.find({x, y}); it != pairing.end()) return it->second;
    if (auto it = pairing.find({y, x}); it != pairing.end()) return it->second;
    throw DomainError("missing pairing " + x + "." + y);
  }
  Rational polarization_pairing(const std::string& x) const {
    if (auto it = a_dot.find(x); it != a_dot.end()) return it->second;
    throw DomainError("missing pairing A." + x);
  }

  friend bool operator==(const IntersectionData&, const IntersectionData&) = default;
};

// (A - sum x_i Gamma_i)^2 expanded in the coefficient symbols x_i.
inline QuadraticPolynomial build_l2_expression(const IntersectionData& data, const std::vector<FixedComponent>& fixed) {
  QuadraticPolynomial p(data.a_squared);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const auto& fi = fixed[i];
    p.add_linear(fi.symbol, Rational(-2) * data.polarization_pairing(fi.curve));
    p.add_quadratic(fi.symbol, fi.symbol, data.curve_pairing(fi.curve, fi.curve));
    for (std::size_t j = i + 1; j < fixed.size(); ++j)
      p.add_quadratic(fi.symbol, fixed[j].symbol, Rational(2) * data.curve_pairing(fi.curve, fixed[j].curve));
  }
  return p;
}

// Reads p as a quadratic in one symbol.
inline QuadraticForm as_univariate(const QuadraticPolynomial& p, const std::string& x) {
  for (const auto& s : p.symbols())
    if (s != x) throw DomainError("polynomial " + p.to_string() + " involves " + s + " besides " + x);
  return {p.quadratic(x, x), p.linear(x), p.constant()};
}

// Reads p as a quadratic in `main` whose coefficients are quadratics in
// `param`.
inline ParamQuadratic as_param_quadratic(const QuadraticPolynomial& p, const std::string& main,
                                         const std::string& param) {
  for (const auto& s : p.symbols())
    if (s != main && s != param) throw DomainError("polynomial " + p.to_string() + " involves unexpected symbol " + s);
  ParamQuadratic q;
  q.lead = {Rational(0), Rational(0), p.quadratic(main, main)};
  q.linear = {Rational(0), p.quadratic(main, param), p.linear(main)};
  q.constant = {p.quadratic(param, param), p.linear(param), p.constant()};
  return q;
}

}  // namespace fanorr
