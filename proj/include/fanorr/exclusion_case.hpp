#pragma once

// Packaged exclusion arguments and their replay. Each case stores its inputs
// together with the expected outputs (quadratic coefficients, certificates,
// maxima) so that a replay both recomputes the verdict and checks that the
// recorded numbers are regenerated exactly.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fanorr/exclusion.hpp"

namespace fanorr {

// Gamma^2 = (2 p_a - 2) - K_S.Gamma + correction. The correction carries
// pullback terms when Gamma passes through a singular point of S.
struct AdjunctionDerivation {
  int arithmetic_genus = 0;
  Rational ks_dot_c;
  Rational correction;

  Rational self_intersection() const {
    return self_intersection_adjunction(arithmetic_genus, ks_dot_c) + correction;
  }
  friend bool operator==(const AdjunctionDerivation&, const AdjunctionDerivation&) = default;
};

struct FixedCurveCase {
  SurfaceCurveCase surface;
  std::optional<AdjunctionDerivation> adjunction;
  // Coefficients of the exceptional curves in the pullback of Gamma, kept as
  // data only.
  std::vector<Rational> pullback;
  QuadraticForm expected;

  friend bool operator==(const FixedCurveCase&, const FixedCurveCase&) = default;
};

struct DegreeBoundCase {
  Rational a_cube;
  Rational step;
  Rational expected;
  std::optional<Rational::int_type> expected_integer;

  friend bool operator==(const DegreeBoundCase&, const DegreeBoundCase&) = default;
};

// gamma <= gamma1 + (1 - gamma1) degO / pairing for every gamma1 in [0, 1].
struct ComponentCase {
  Rational deg_o;
  Rational pairing_lower;

  friend bool operator==(const ComponentCase&, const ComponentCase&) = default;
};

struct QuotientCenterCase {
  CenterKind kind = CenterKind::curve;
  bool through_quotient_point = true;

  friend bool operator==(const QuotientCenterCase&, const QuotientCenterCase&) = default;
};

struct MobilePointCase {
  Rational h2s;
  TwoCurveGerm germ;

  friend bool operator==(const MobilePointCase&, const MobilePointCase&) = default;
};

struct FixedCurvePointCase {
  Rational asq;
  Rational adotb;
  Rational bsq;
  QuadraticForm expected_certificate;
  std::vector<Rational> expected_locus;

  friend bool operator==(const FixedCurvePointCase&, const FixedCurvePointCase&) = default;
};

// L^2 > threshold, with L^2 expanded from intersection data, rewritten as
// 0 > threshold - L^2 in (main, param) and refuted by the discriminant.
struct DiscriminantCase {
  IntersectionData data;
  std::vector<FixedComponent> fixed;
  QuadraticPolynomial threshold;
  std::string main;
  std::string param;
  Interval range;
  QuadraticPolynomial expected_l2;
  ParamQuadratic expected_inequality;
  std::optional<Rational> expected_alpha_star;
  std::optional<Rational> expected_max_quarter;

  friend bool operator==(const DiscriminantCase&, const DiscriminantCase&) = default;
};

using CaseBody = std::variant<FixedCurveCase, DegreeBoundCase, ComponentCase, QuotientCenterCase, MobilePointCase,
                              FixedCurvePointCase, DiscriminantCase>;

struct ExclusionCase {
  std::string label;
  CaseBody body;

  friend bool operator==(const ExclusionCase&, const ExclusionCase&) = default;
};

inline const char* case_kind(const CaseBody& b) {
  static constexpr const char* names[] = {"fixed_curve",       "degree_bound",      "component",   "quotient_center",
                                          "mobile_point",      "fixed_curve_point", "discriminant"};
  return names[b.index()];
}

struct ReplayCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ReplayReport {
  std::string verdict;
  bool excluded = false;
  std::vector<ReplayCheck> checks;

  // Every regenerated number matched and the verdict is an exclusion.
  bool passed() const {
    if (!excluded) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const ReplayCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string opt_string(const std::optional<Rational>& r) { return r ? r->to_string() : "none"; }

struct Replayer {
  ReplayReport& out;

  void check(std::string name, bool pass, std::string detail) {
    out.checks.push_back({std::move(name), pass, std::move(detail)});
  }

  void operator()(const FixedCurveCase& c) {
    if (c.adjunction) {
      const Rational csq = c.adjunction->self_intersection();
      check("adjunction", csq == c.surface.csq,
            "Gamma^2 = " + csq.to_string() + ", recorded " + c.surface.csq.to_string());
    }
    const auto b = max_fixed_multiplicity(c.surface);
    check("quadratic", b.l_squared == c.expected,
          "L^2 = " + b.l_squared.to_string("gamma") + ", expected " + c.expected.to_string("gamma"));
    out.excluded = b.excluded();
    out.verdict = std::string(to_string(b.verdict)) + " (gamma_max = " + b.gamma_max.to_string() + ")";
  }

  void operator()(const DegreeBoundCase& c) {
    const Rational bound = curve_degree_bound(c.a_cube, c.step);
    check("degree-bound", bound == c.expected, "deg < " + c.a_cube.to_string() + " gives deg <= " + bound.to_string());
    if (c.expected_integer) {
      const auto ib = integer_curve_degree_bound(c.a_cube, c.step);
      check("integer-degree-bound", ib == *c.expected_integer, "integer degree <= " + std::to_string(ib));
    }
    out.excluded = true;
    out.verdict = "curves of degree above " + bound.to_string() + " excluded";
  }

  void operator()(const ComponentCase& c) {
    // affine in gamma1, so the endpoints decide the whole interval
    const Rational at0 = component_bound(c.deg_o, Rational(0), c.pairing_lower);
    const Rational at1 = component_bound(c.deg_o, Rational(1), c.pairing_lower);
    out.excluded = at0 <= Rational(1) && at1 <= Rational(1);
    out.verdict = "gamma <= " + std::max(at0, at1).to_string() + " for gamma1 in [0, 1]";
  }

  void operator()(const QuotientCenterCase& c) {
    const auto v = quotient_center_rule(c.kind, c.through_quotient_point);
    out.excluded = v == CenterVerdict::excluded;
    out.verdict = to_string(v);
  }

  void operator()(const MobilePointCase& c) {
    const Rational t = two_dim_threshold(c.germ);
    out.excluded = mobile_point_exclusion(c.h2s, c.germ);
    out.verdict = c.h2s.to_string() + (out.excluded ? " < " : " >= ") + t.to_string();
  }

  void operator()(const FixedCurvePointCase& c) {
    const auto r = fixed_curve_point_exclusion(c.asq, c.adotb, c.bsq);
    check("certificate", r.certificate == c.expected_certificate,
          "4(1 - c) - L^2 = " + r.certificate.to_string("c") + ", expected " + c.expected_certificate.to_string("c"));
    std::string locus;
    for (const auto& x : r.equality_locus) locus += (locus.empty() ? "" : ", ") + x.to_string();
    check("equality-locus", r.equality_locus == c.expected_locus, "{" + locus + "}");
    out.excluded = r.excluded;
    out.verdict = r.excluded ? "L^2 <= 4(1 - c) on [0, 1]" : "L^2 exceeds 4(1 - c) somewhere on [0, 1]";
  }

  void operator()(const DiscriminantCase& c) {
    const auto l2 = build_l2_expression(c.data, c.fixed);
    check("l2-expansion", l2 == c.expected_l2, "L^2 = " + l2.to_string() + ", expected " + c.expected_l2.to_string());
    const auto pq = as_param_quadratic(c.threshold - l2, c.main, c.param);
    check("inequality", pq == c.expected_inequality, "0 > threshold - L^2 = " + (c.threshold - l2).to_string());
    const auto r = discriminant_infeasibility(pq, c.range);
    check("alpha-star", r.alpha_star == c.expected_alpha_star,
          c.param + "* = " + opt_string(r.alpha_star) + ", expected " + opt_string(c.expected_alpha_star));
    check("max-quarter-discriminant", r.max_quarter_discriminant() == c.expected_max_quarter,
          "max Delta/4 = " + opt_string(r.max_quarter_discriminant()) + ", expected " +
              opt_string(c.expected_max_quarter));
    out.excluded = r.infeasible;
    out.verdict = "Delta/4 = " + r.quarter_discriminant().to_string(c.param) + " on " + c.range.to_string() +
                  (r.infeasible ? ": negative, no solution" : ": not negative throughout");
  }
};

}  // namespace detail

// Domain errors raised by the engine propagate; a malformed case is not a
// failed verdict.
inline ReplayReport replay(const ExclusionCase& c) {
  ReplayReport out;
  std::visit(detail::Replayer{out}, c.body);
  return out;
}

}  // namespace fanorr
