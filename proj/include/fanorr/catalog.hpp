#pragma once

// Fixture catalog: varieties, extractions, links and exclusion cases, each
// tagged with where its numbers come from.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fanorr/exclusion_case.hpp"
#include "fanorr/graded_families.hpp"
#include "fanorr/orbifold_rr.hpp"
#include "fanorr/sarkisov_ledger.hpp"

namespace fanorr {

enum class Source { paper, derived, inferred };

inline const char* to_string(Source s) {
  switch (s) {
    case Source::paper: return "paper";
    case Source::derived: return "derived";
    case Source::inferred: return "inferred";
  }
  return "?";
}

struct Provenance {
  Source source = Source::derived;
  std::string citation;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct FamilyEntry {
  Family family;
  std::optional<std::string> numerics;  // id of a numerics entry

  friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

struct LinkEndRef {
  std::string numerics;
  std::string extraction;

  friend bool operator==(const LinkEndRef&, const LinkEndRef&) = default;
};

struct LinkEntry {
  std::string label;
  LinkEndRef left;
  LinkEndRef right;
  std::string midpoint;                         // numerics id
  std::optional<std::string> midpoint_family;   // family id

  friend bool operator==(const LinkEntry&, const LinkEntry&) = default;
};

using Payload = std::variant<FamilyEntry, FanoNumerics, ExtractionData, LinkEntry, ExclusionCase>;

inline const char* payload_kind(const Payload& p) {
  static constexpr const char* names[] = {"family", "numerics", "extraction", "link", "exclusion_case"};
  return names[p.index()];
}

struct CatalogEntry {
  std::string id;
  Payload payload;
  Provenance provenance;
  std::string note;

  std::string kind() const { return payload_kind(payload); }
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// A structural problem in a catalog, naming the entry it concerns.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::string entry_id, const std::string& message)
      : std::runtime_error(entry_id.empty() ? message : "entry '" + entry_id + "': " + message),
        entry_id_(std::move(entry_id)) {}
  const std::string& entry_id() const noexcept { return entry_id_; }

 private:
  std::string entry_id_;
};

inline constexpr int kCatalogSchemaVersion = 1;

struct Catalog {
  int schema_version = kCatalogSchemaVersion;
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find(std::string_view id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  template <class T>
  const T* find_as(std::string_view id) const {
    const auto* e = find(id);
    return e ? std::get_if<T>(&e->payload) : nullptr;
  }

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

namespace detail {

template <class T>
void require_ref(const Catalog& c, const std::string& owner, const std::string& ref, const char* what) {
  const auto* e = c.find(ref);
  if (!e) throw CatalogError(owner, "dangling reference to " + std::string(what) + " '" + ref + "'");
  if (!std::holds_alternative<T>(e->payload))
    throw CatalogError(owner, "reference '" + ref + "' is a " + e->kind() + ", expected " + what);
}

}  // namespace detail

// Unique ids, citations where required, and referential integrity.
inline void validate(const Catalog& c) {
  if (c.schema_version != kCatalogSchemaVersion)
    throw CatalogError("", "unknown schema_version " + std::to_string(c.schema_version));
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    if (e.id.empty()) throw CatalogError("", "entry #" + std::to_string(i) + " has an empty id");
    for (std::size_t j = 0; j < i; ++j)
      if (c.entries[j].id == e.id) throw CatalogError(e.id, "duplicate id");
    if (e.provenance.source != Source::derived && e.provenance.citation.empty())
      throw CatalogError(e.id, std::string("provenance '") + to_string(e.provenance.source) + "' needs a citation");
  }
  for (const auto& e : c.entries) {
    if (const auto* f = std::get_if<FamilyEntry>(&e.payload); f && f->numerics)
      detail::require_ref<FanoNumerics>(c, e.id, *f->numerics, "numerics");
    if (const auto* l = std::get_if<LinkEntry>(&e.payload)) {
      for (const auto* end : {&l->left, &l->right}) {
        detail::require_ref<FanoNumerics>(c, e.id, end->numerics, "numerics");
        detail::require_ref<ExtractionData>(c, e.id, end->extraction, "extraction");
      }
      detail::require_ref<FanoNumerics>(c, e.id, l->midpoint, "numerics");
      if (l->midpoint_family) detail::require_ref<FamilyEntry>(c, e.id, *l->midpoint_family, "family");
    }
  }
}

inline LinkRecord resolve_link(const Catalog& c, const std::string& link_id) {
  const auto* l = c.find_as<LinkEntry>(link_id);
  if (!l) throw CatalogError(link_id, c.find(link_id) ? "not a link" : "no such entry");
  const auto end = [&](const LinkEndRef& r) -> LinkEnd {
    const auto* x = c.find_as<FanoNumerics>(r.numerics);
    const auto* e = c.find_as<ExtractionData>(r.extraction);
    if (!x) throw CatalogError(link_id, "dangling reference to numerics '" + r.numerics + "'");
    if (!e) throw CatalogError(link_id, "dangling reference to extraction '" + r.extraction + "'");
    return {*x, *e};
  };
  const auto* mid = c.find_as<FanoNumerics>(l->midpoint);
  if (!mid) throw CatalogError(link_id, "dangling reference to numerics '" + l->midpoint + "'");
  std::optional<Family> fam;
  if (l->midpoint_family) {
    const auto* f = c.find_as<FamilyEntry>(*l->midpoint_family);
    if (!f) throw CatalogError(link_id, "dangling reference to family '" + *l->midpoint_family + "'");
    fam = f->family;
  }
  return {l->label, end(l->left), end(l->right), *mid, fam};
}

namespace builtin {

inline Basket basket(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<QuotientSingularity> v;
  for (auto [r, a] : pts) v.emplace_back(r, a);
  return Basket(std::move(v));
}

inline QuadraticForm qf(Rational c0, Rational c1, Rational c2) { return {c2, c1, c0}; }

}  // namespace builtin

inline Catalog builtin_catalog() {
  using builtin::basket;
  using builtin::qf;
  Catalog c;
  const auto add = [&](std::string id, Payload p, Source s, std::string cite, std::string note = {}) {
    c.entries.push_back({std::move(id), std::move(p), {s, std::move(cite)}, std::move(note)});
  };
  const Rational half(1, 2);

  // varieties
  struct Var {
    const char* id;
    std::vector<int> w;
    std::vector<int> d;
    int g;
    Basket b;
    Source fam_src;
    const char* fam_cite;
    Source num_src;
    const char* num_cite;
  };
  const std::vector<Var> vars = {
      {"X4", {1, 1, 1, 1, 1}, {4}, 3, {}, Source::paper, "quartic 3-fold with one cA2 point",
       Source::paper, "quartic with A^3 = 4 and h0(O(1)) = 5; cA2 point contributes nothing"},
      {"Z5", {1, 1, 1, 1, 2}, {5}, 2, basket({{2, 1}}), Source::paper, "midpoint of the quartic link",
       Source::paper, "genus 2 with one 1/2(1,1,1) point, B^3 = 5/2"},
      {"Y34", {1, 1, 1, 1, 2, 2}, {3, 4}, 2, basket({{2, 1}, {2, 1}}), Source::paper,
       "codimension 2 end of the quartic link", Source::paper, "genus 2 with 2 x 1/2(1,1,1), A'^3 = 3"},
      {"X7", {1, 1, 1, 2, 3}, {7}, 1, basket({{2, 1}, {3, 1}}), Source::paper, "left end of the X7 link",
       Source::derived, ""},
      {"Z9", {1, 1, 2, 3, 3}, {9}, 0, basket({{2, 1}, {3, 1}, {3, 1}, {3, 1}}), Source::paper,
       "midpoint of the X7 link", Source::derived, ""},
      {"Y67", {1, 1, 2, 3, 3, 4}, {6, 7}, 0, basket({{2, 1}, {3, 1}, {3, 1}, {4, 1}}), Source::paper,
       "right end of the X7 link", Source::derived, ""},
      {"X15", {1, 1, 2, 5, 7}, {15}, 0, basket({{2, 1}, {7, 3}}), Source::paper,
       "left end of the X15 link", Source::derived, ""},
      {"Z20", {1, 2, 5, 6, 7}, {20}, -1, basket({{2, 1}, {2, 1}, {2, 1}, {6, 1}, {7, 3}}), Source::paper,
       "midpoint of the X15 link", Source::derived, ""},
      {"Y1415", {1, 2, 5, 6, 7, 9}, {14, 15}, -1, basket({{2, 1}, {2, 1}, {6, 1}, {9, 4}}), Source::paper,
       "right end of the X15 link", Source::derived, ""},
      {"Z10", {1, 1, 1, 3, 5}, {10}, 1, basket({{3, 1}}), Source::paper,
       "midpoint of the involution centered on a line through the cA2 point", Source::derived, ""},
      {"Z12", {1, 1, 1, 4, 6}, {12}, 1, basket({{2, 1}}), Source::paper,
       "midpoint of the involution centered on a line with one node", Source::derived, ""},
      {"Z8", {1, 1, 1, 2, 4}, {8}, 1, basket({{2, 1}, {2, 1}}), Source::paper,
       "midpoint of the involution centered on a line with two nodes", Source::derived, ""},
  };
  for (const auto& v : vars) {
    const std::string nid = std::string(v.id) + ".rr";
    add(v.id, FamilyEntry{Family(WeightSystem(v.w), v.d), nid}, v.fam_src, v.fam_cite);
    add(nid, FanoNumerics::from_genus(v.g, v.b), v.num_src, v.num_cite,
        v.num_src == Source::derived ? "basket and genus recovered by matching the Hilbert series" : "");
  }

  // extractions
  add("cA2.2111", cA2_blowup({2, 1, 1, 1}), Source::paper, "weighted blowup of xy+z^3+t^3 with E^3 = 3/2");
  add("cA2.1211", cA2_blowup({1, 2, 1, 1}), Source::paper, "the second weighted blowup of the cA2 point");
  add("kawamata.2", kawamata_blowup(QuotientSingularity(2, 1)), Source::paper,
      "contracting the plane with normal bundle O(-2) adds 4/8");
  add("kawamata.4", kawamata_blowup(QuotientSingularity(4, 1)), Source::derived, "",
      "the 1/4 point of Y67 is the one absent from Z9");
  add("X7.P", ExtractionData::inferred("extraction from the singular point of X7", Rational(2, 3)), Source::inferred,
      "solved from 7/6 - 1/2", "extraction geometry unknown; only the drop is recorded");
  add("X15.P", ExtractionData::inferred("extraction from the singular point of X15", Rational(1, 6)), Source::inferred,
      "solved from 3/14 - 1/21");
  add("Y1415.Q", ExtractionData::inferred("extraction on Y1415", Rational(1, 126)), Source::inferred,
      "solved from 1/18 - 1/21");
  add("X4.line", ExtractionData::inferred("extraction of a line through the cA2 point", Rational(10, 3)),
      Source::inferred, "solved from 4 - 2/3");
  add("X4.line.1node", ExtractionData::inferred("extraction of a line with one node", Rational(7, 2)),
      Source::inferred, "solved from 4 - 1/2");
  add("X4.line.2nodes", ExtractionData::inferred("extraction of a line with two nodes", Rational(3)),
      Source::inferred, "solved from 4 - 1");

  // links
  add("X4-Y34", LinkEntry{"X4 - - > Y34 via (2,1,1,1)", {"X4.rr", "cA2.2111"}, {"Y34.rr", "kawamata.2"}, "Z5.rr", "Z5"},
      Source::paper, "quartic link through Z5");
  add("X4-Y34-alt",
      LinkEntry{"X4 - - > Y34 via (1,2,1,1)", {"X4.rr", "cA2.1211"}, {"Y34.rr", "kawamata.2"}, "Z5.rr", "Z5"},
      Source::paper, "the second link to the same Y34");
  add("X7-Y67", LinkEntry{"X7 - - > Y67", {"X7.rr", "X7.P"}, {"Y67.rr", "kawamata.4"}, "Z9.rr", "Z9"}, Source::paper,
      "link from X7 to Y67 through Z9");
  add("X15-Y1415", LinkEntry{"X15 - - > Y1415", {"X15.rr", "X15.P"}, {"Y1415.rr", "Y1415.Q"}, "Z20.rr", "Z20"},
      Source::paper, "link from X15 to Y1415 through Z20");
  add("X4-X4.Z10", LinkEntry{"line involution through Z10", {"X4.rr", "X4.line"}, {"X4.rr", "X4.line"}, "Z10.rr", "Z10"},
      Source::inferred, "involution with midpoint Z10; drops solved from the ledger");
  add("X4-X4.Z12",
      LinkEntry{"line involution through Z12", {"X4.rr", "X4.line.1node"}, {"X4.rr", "X4.line.1node"}, "Z12.rr", "Z12"},
      Source::inferred, "involution with midpoint Z12; drops solved from the ledger");
  add("X4-X4.Z8",
      LinkEntry{"line involution through Z8", {"X4.rr", "X4.line.2nodes"}, {"X4.rr", "X4.line.2nodes"}, "Z8.rr", "Z8"},
      Source::inferred, "involution with midpoint Z8; drops solved from the ledger");

  // curve centers on X4
  const auto fixed = [&](std::string id, std::string label, Rational asq, Rational adotc, Rational csq,
                         AdjunctionDerivation adj, std::vector<Rational> pullback, QuadraticForm expected,
                         std::string cite) {
    add(std::move(id),
        ExclusionCase{label, FixedCurveCase{{label, asq, adotc, csq}, adj, std::move(pullback), expected}},
        Source::paper, std::move(cite));
  };
  add("X4.curve.degree", ExclusionCase{"degree of a curve center on X4", DegreeBoundCase{4, 1, 3, 3}}, Source::paper,
      "4n^2 = H1.H2.S > m^2 deg");
  fixed("X4.curve.space-cubic", "twisted cubic avoiding P", 8, 3, -5, {0, 3, 0}, {}, qf(8, -6, -5),
        "quadric section through the cubic, K_S = O(1)");
  fixed("X4.curve.space-cubic.A2", "twisted cubic through P, A2 section", 8, 3, Rational(-13, 3), {0, 3, Rational(2, 3)},
        {Rational(2, 3), Rational(1, 3), 0, 0, 0}, qf(8, -6, Rational(-13, 3)), "projection formula gives -5 + 2/3");
  fixed("X4.curve.space-cubic.A3", "twisted cubic through P, A3 section", 8, 3, -4, {0, 3, 1}, {half, half, 1, 0, 0},
        qf(8, -6, -4), "projection formula gives -5 + 1");
  fixed("X4.curve.plane.d1", "line avoiding P", 4, 1, -2, {0, 0, 0}, {}, qf(4, -2, -2),
        "plane curve of degree 1, K_S = O(0)");
  fixed("X4.curve.plane.d2", "conic avoiding P", 8, 2, -4, {0, 2, 0}, {}, qf(8, -4, -4),
        "plane curve of degree 2, K_S = O(1)");
  fixed("X4.curve.plane.d3", "plane cubic avoiding P", 12, 3, -6, {1, 6, 0}, {}, qf(12, -6, -6),
        "plane cubic, K_S = O(2)");
  add("X4.curve.cubic-line", ExclusionCase{"cubic plus line through P", ComponentCase{1, 1}}, Source::paper,
      "(1 - g1) = (A - g1 S2).G1 >= (g - g1) G.G1 with G.G1 >= 1");
  add("X4.curve.conic-lines", ExclusionCase{"conic plus two lines through P", ComponentCase{1, 1}}, Source::paper,
      "line component meets the conic at least once");
  add("X4.curve.two-conics", ExclusionCase{"two conics through P", ComponentCase{2, 2}}, Source::paper,
      "conics meet in at least 2 nonsingular points");

  // curve and point centers on Y34
  add("Y34.curve.degree", ExclusionCase{"degree of a curve center on Y34", DegreeBoundCase{3, half, Rational(5, 2), 2}},
      Source::paper, "3n^2 = H1.H2.S >= m^2 d");
  add("Y34.curve.quotient", ExclusionCase{"curve through a 1/2 point", QuotientCenterCase{CenterKind::curve, true}},
      Source::paper, "curve centers lie in the nonsingular locus");
  fixed("Y34.curve.d2", "curve with deg O(1) = 2", 12, 2, -8, {0, 6, 0}, {}, qf(12, -4, -8),
        "quartic section through the curve, K_S = O(3)");
  const std::vector<std::pair<const char*, Rational>> halves = {
      {"Y34.curve.d1.half", half}, {"Y34.curve.d1.one", 1}, {"Y34.curve.d1.three-halves", Rational(3, 2)},
      {"Y34.curve.d1.two", 2}};
  for (const auto& [id, deg] : halves)
    add(id, ExclusionCase{"line section component of degree " + deg.to_string(), ComponentCase{deg, deg}},
        Source::paper, "M.G1 = (1 - g1) deg O(1) >= (g - g1) G.G1 with G.G1 >= deg O(1)");
  add("Y34.point.general", ExclusionCase{"nonsingular point, finite base locus", MobilePointCase{3, {1, 1, 1}}},
      Source::paper, "(1/n^2) H^2.S = 3 < 4");
  add("Y34.point.curve1",
      ExclusionCase{"nonsingular point on a base curve of degree 1",
                    FixedCurvePointCase{3, 1, -1, qf(1, -2, 1), {Rational(1)}}},
      Source::paper, "L^2 = 3 - c^2 - 2c <= 4(1 - c)");
  {
    DiscriminantCase d;
    d.data.a_squared = 6;
    d.data.a_dot = {{"F", 0}, {"B'", half}};
    d.data.pairing = {{{"F", "F"}, -2}, {{"B'", "B'"}, Rational(-7, 4)}, {{"F", "B'"}, 1}};
    d.fixed = {{"beta", "F"}, {"alpha", "B'"}};
    d.threshold = QuadraticPolynomial(16);
    d.threshold.add_linear("beta", -8).add_linear("alpha", -8).add_quadratic("alpha", "beta", 4);
    d.main = "beta";
    d.param = "alpha";
    d.range = Interval::at_least(0);
    d.expected_l2 = QuadraticPolynomial(6);
    d.expected_l2.add_quadratic("beta", "beta", -2)
        .add_quadratic("alpha", "alpha", Rational(-7, 4))
        .add_linear("alpha", -1)
        .add_quadratic("alpha", "beta", 2);
    d.expected_inequality = {qf(2, 0, 0), qf(-8, 2, 0), qf(10, -7, Rational(7, 4))};
    d.expected_alpha_star = Rational(6, 5);
    d.expected_max_quarter = Rational(-2, 5);
    add("Y34.point.curve-half", ExclusionCase{"nonsingular point on a base curve of degree 1/2", d}, Source::paper,
        "blowup of x on D in |I_x^2(2)| with F^2 = -2, B'^2 = -7/4, F.B' = 1",
        "A.F = 0 and A.B' = 1/2 are forced by the L^2 expansion; -(5/2)a^2 + 6a - 4 peaks at -2/5, not -4/5");
  }

  validate(c);
  return c;
}

struct CatalogCheck {
  std::string entry;
  std::string name;
  bool pass;
  std::string detail;
};

struct CatalogReport {
  std::vector<CatalogCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.pass; });
  }
};

inline constexpr int kOracleDepth = 30;
inline constexpr int kIntegralityDepth = 50;

// Oracle equivalence for family/numerics pairs, integrality for numerics,
// the link ledger, and exclusion replays.
inline CatalogReport check_catalog(const Catalog& c) {
  CatalogReport r;
  const auto add = [&](const std::string& id, std::string name, bool pass, std::string detail) {
    r.checks.push_back({id, std::move(name), pass, std::move(detail)});
  };
  for (const auto& e : c.entries) {
    try {
      if (const auto* f = std::get_if<FamilyEntry>(&e.payload)) {
        if (!f->numerics) continue;
        const auto* x = c.find_as<FanoNumerics>(*f->numerics);
        if (!x) throw CatalogError(e.id, "dangling reference to numerics '" + *f->numerics + "'");
        const auto rr = rr_hilbert_sequence(*x, kOracleDepth);
        const auto series = family_hilbert_series(f->family, kOracleDepth);
        std::string detail = "agree to depth " + std::to_string(kOracleDepth);
        bool ok = true;
        for (std::size_t n = 0; n < series.size() && ok; ++n) {
          if (rr.values[n] != Rational(series[n])) {
            ok = false;
            detail = "differ at n=" + std::to_string(n) + ": " + rr.values[n].to_string() + " vs " +
                     std::to_string(series[n]);
          }
        }
        add(e.id, "oracle", ok, detail);
        const Rational cube = family_anticanonical_cube(f->family);
        add(e.id, "cube", cube == x->kcube(), "prod d / prod w = " + cube.to_string());
      } else if (const auto* x = std::get_if<FanoNumerics>(&e.payload)) {
        add(e.id, "rr", x->rr_consistent(),
            "2g-2+basket = " + anticanonical_cube(x->genus(), x->basket()).to_string());
        const auto seq = rr_hilbert_sequence(*x, kIntegralityDepth);
        bool monotone = true;
        for (std::size_t n = 1; n < seq.values.size(); ++n) monotone = monotone && seq.values[n - 1] <= seq.values[n];
        add(e.id, "integrality", seq.valid() && monotone,
            std::string(seq.integral ? "integral" : "non-integral") + ", " +
                (seq.nonnegative ? "nonnegative" : "negative") + ", " + (monotone ? "nondecreasing" : "decreasing") +
                " to depth " + std::to_string(kIntegralityDepth));
      } else if (std::holds_alternative<LinkEntry>(e.payload)) {
        for (const auto& lc : verify_link(resolve_link(c, e.id)).checks) add(e.id, lc.name, lc.pass, lc.detail);
      } else if (const auto* x = std::get_if<ExclusionCase>(&e.payload)) {
        const auto rep = replay(*x);
        for (const auto& rc : rep.checks) add(e.id, rc.name, rc.pass, rc.detail);
        add(e.id, "verdict", rep.excluded, rep.verdict);
      }
    } catch (const std::exception& ex) {
      add(e.id, "error", false, ex.what());
    }
  }
  return r;
}

}  // namespace fanorr
