#pragma once

// Degree bookkeeping for Sarkisov links of type II.
//
// A link X <- V - - > V' -> Y runs through one midpoint Z, the anticanonical
// model of V (and of V', since the flop is an isomorphism in codimension 1).
// With A = -K_X pulled back and B = -K_V = A - a_E E,
//
//   B^3 = A^3 - a_E^3 E^3
//
// so each end loses exactly its extraction's drop a_E^3 E^3 on the way to Z.

#include <optional>
#include <string>
#include <vector>

#include "fanorr/error.hpp"
#include "fanorr/graded_families.hpp"
#include "fanorr/orbifold_rr.hpp"
#include "fanorr/rational.hpp"

namespace fanorr {

// A divisorial extraction, either with its geometry (discrepancy a_E and
// exceptional cube E^3) or with only a degree drop solved from the ledger
// equation ("inferred") when the geometry is not known.
class ExtractionData {
 public:
  static ExtractionData geometric(std::string label, Rational discrepancy, Rational exc_cube,
                                  std::vector<int> weights = {}) {
    if (discrepancy.sign() <= 0) throw DomainError("discrepancy " + discrepancy.to_string() + " must be positive");
    if (exc_cube.sign() <= 0) throw DomainError("exceptional cube " + exc_cube.to_string() + " must be positive");
    ExtractionData e;
    e.label_ = std::move(label);
    e.discrepancy_ = discrepancy;
    e.exc_cube_ = exc_cube;
    e.weights_ = std::move(weights);
    return e;
  }

  static ExtractionData inferred(std::string label, Rational drop) {
    if (drop.sign() <= 0) throw DomainError("degree drop " + drop.to_string() + " must be positive");
    ExtractionData e;
    e.label_ = std::move(label);
    e.inferred_drop_ = drop;
    return e;
  }

  const std::string& label() const noexcept { return label_; }
  const std::optional<Rational>& discrepancy() const noexcept { return discrepancy_; }
  const std::optional<Rational>& exc_cube() const noexcept { return exc_cube_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  bool is_inferred() const noexcept { return inferred_drop_.has_value(); }
  const std::optional<Rational>& inferred_drop() const noexcept { return inferred_drop_; }

  // a_E^3 * E^3
  Rational degree_drop() const {
    if (inferred_drop_) return *inferred_drop_;
    return *discrepancy_ * *discrepancy_ * *discrepancy_ * *exc_cube_;
  }

  friend bool operator==(const ExtractionData&, const ExtractionData&) = default;

 private:
  ExtractionData() = default;

  std::string label_;
  std::optional<Rational> discrepancy_;
  std::optional<Rational> exc_cube_;
  std::vector<int> weights_;
  std::optional<Rational> inferred_drop_;
};

// A^3 - a_E^3 E^3. A nonpositive result means the link cannot continue.
inline Rational anticanonical_after_extraction(const Rational& a_cube, const ExtractionData& e) {
  return a_cube - e.degree_drop();
}

// The weighted blowup (1, a, r-a) of 1/r(1, a, r-a): the only divisorial
// extraction from a terminal quotient point. a_E = 1/r, E^3 = r^2/(a(r-a)).
inline ExtractionData kawamata_blowup(const QuotientSingularity& q) {
  const int r = q.index();
  const int a = q.weight();
  return ExtractionData::geometric("weighted blowup (1," + std::to_string(a) + "," + std::to_string(r - a) + ") of " +
                                       q.to_string(),
                                   Rational(1, r), Rational(std::int64_t(r) * r, std::int64_t(a) * (r - a)),
                                   {1, a, r - a});
}

// The two extractions from the cA2 point xy + z^3 + t^3 = 0: weighted
// blowups with weights (2,1,1,1) or (1,2,1,1). Both have a_E = 1 and
// E = {xy + z^3 + t^3 = 0} in P(2,1,1,1) with E|E = O(-1), so E^3 = 3/2.
inline ExtractionData cA2_blowup(const std::vector<int>& weights) {
  if (weights != std::vector<int>{2, 1, 1, 1} && weights != std::vector<int>{1, 2, 1, 1}) {
    std::string w;
    for (std::size_t i = 0; i < weights.size(); ++i) w += (i ? "," : "") + std::to_string(weights[i]);
    throw DomainError("no divisorial extraction from xy+z^3+t^3=0 has weights (" + w +
                      "); only (2,1,1,1) and (1,2,1,1) occur");
  }
  const std::string w = weights[0] == 2 ? "(2,1,1,1)" : "(1,2,1,1)";
  return ExtractionData::geometric("weighted blowup " + w + " of xy+z^3+t^3=0", Rational(1), Rational(3, 2), weights);
}

struct LinkEnd {
  FanoNumerics numerics;
  ExtractionData extraction;

  friend bool operator==(const LinkEnd&, const LinkEnd&) = default;
};

struct LinkRecord {
  std::string label;
  LinkEnd left;
  LinkEnd right;
  FanoNumerics midpoint;
  std::optional<Family> midpoint_family;

  friend bool operator==(const LinkRecord&, const LinkRecord&) = default;
};

struct LinkCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct LinkReport {
  std::vector<LinkCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const LinkCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline constexpr int kLinkSeriesDepth = 30;

// Runs every ledger check; failures become report lines, never exceptions.
inline LinkReport verify_link(const LinkRecord& rec) {
  LinkReport report;
  const auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const Rational& mid = rec.midpoint.kcube();

  const auto side = [&](const char* name, const LinkEnd& end) {
    const Rational drop = end.extraction.degree_drop();
    const Rational reached = anticanonical_after_extraction(end.numerics.kcube(), end.extraction);
    add(std::string(name) + "-drop", reached == mid,
        end.numerics.kcube().to_string() + " - " + drop.to_string() + " = " + reached.to_string() + ", midpoint " +
            mid.to_string());
    return reached;
  };
  const Rational from_left = side("left", rec.left);
  const Rational from_right = side("right", rec.right);

  const auto rr_line = [&](std::string name, const FanoNumerics& x) {
    const Rational expected = anticanonical_cube(x.genus(), x.basket());
    add(std::move(name), expected == x.kcube(),
        "2g-2+basket = " + expected.to_string() + ", recorded " + x.kcube().to_string());
  };
  rr_line("midpoint-rr", rec.midpoint);
  rr_line("left-end-rr", rec.left.numerics);
  rr_line("right-end-rr", rec.right.numerics);

  if (rec.midpoint_family) {
    const Family& f = *rec.midpoint_family;
    if (fano_index(f) != 1) {
      add("midpoint-family-cube", false, f.to_string() + " has Fano index " + std::to_string(fano_index(f)));
    } else {
      const Rational fc = family_anticanonical_cube(f);
      add("midpoint-family-cube", fc == mid, f.to_string() + " has (-K)^3 = " + fc.to_string());
    }
    bool series_ok = false;
    std::string detail;
    try {
      const auto series = family_hilbert_series(f, kLinkSeriesDepth);
      const auto rr = rr_hilbert_sequence(rec.midpoint, kLinkSeriesDepth);
      series_ok = true;
      for (int n = 0; n <= kLinkSeriesDepth; ++n) {
        if (rr.values[std::size_t(n)] != Rational(series[std::size_t(n)])) {
          series_ok = false;
          detail = "first mismatch at n=" + std::to_string(n) + ": series " + std::to_string(series[std::size_t(n)]) +
                   ", Riemann-Roch " + rr.values[std::size_t(n)].to_string();
          break;
        }
      }
      if (series_ok) detail = "agree to depth " + std::to_string(kLinkSeriesDepth);
    } catch (const DomainError& e) {
      detail = e.what();
    }
    add("midpoint-family-series", series_ok, detail);
  }

  add("flop-neutral", from_left == from_right,
      "left reaches " + from_left.to_string() + ", right reaches " + from_right.to_string());
  return report;
}

struct DiscrepancyPair {
  Rational discrepancy;    // a_i
  Rational multiplicity;   // m_i

  friend bool operator==(const DiscrepancyPair&, const DiscrepancyPair&) = default;
};

// A mobile system H in |-nK| with (a_i, m_i) for the divisors of interest.
struct MobileSystemData {
  int n = 1;
  std::vector<DiscrepancyPair> pairs;
};

// c(X, H) = min a_i / m_i over pairs with m_i > 0.
inline Rational canonical_threshold(const MobileSystemData& data) {
  std::optional<Rational> best;
  for (const auto& p : data.pairs) {
    if (p.multiplicity.sign() <= 0) continue;
    const Rational c = p.discrepancy / p.multiplicity;
    if (!best || c < *best) best = c;
  }
  if (!best) throw DomainError("canonical threshold undefined: every multiplicity is zero");
  return *best;
}

// m_E >= n a_E
inline bool is_weak_maximal(const MobileSystemData& data, std::size_t pair_index) {
  if (pair_index >= data.pairs.size())
    throw DomainError("pair index " + std::to_string(pair_index) + " out of range");
  const auto& p = data.pairs[pair_index];
  return p.multiplicity >= Rational(data.n) * p.discrepancy;
}

}  // namespace fanorr
