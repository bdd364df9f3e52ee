#pragma once

// Command-line front end. Every verb parses its inputs, calls the library,
// and prints the result; no arithmetic lives here.
//
// Exit codes: 0 success, 1 a check failed or no exclusion was certified,
// 2 usage or input error.

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fanorr/catalog_io.hpp"

namespace fanorr::cli {

enum Exit : int { ok = 0, failed = 1, usage = 2 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline Rational rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw InputError(flag + ": " + e.what());
  }
}

inline std::vector<int> int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split(text, ',')) {
    const Rational r = rational(flag, t);
    if (!r.is_integer()) throw InputError(flag + ": '" + t + "' is not an integer");
    out.push_back(int(r.num()));
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

// "2,1" per point; several points may be joined with ';'.
inline Basket basket(const std::vector<std::string>& items) {
  std::vector<QuotientSingularity> pts;
  for (const auto& item : items)
    for (const auto& p : split(item, ';')) {
      const auto ra = int_list("--basket", p);
      if (ra.size() != 2) throw InputError("--basket: expected r,a but got '" + p + "'");
      pts.emplace_back(ra[0], ra[1]);
    }
  return Basket(std::move(pts));
}

inline Json basket_json(const Basket& b) { return io::basket_json(b); }

inline Json rationals(const std::vector<Rational>& v) { return io::rats(v); }

class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], visible(r[i]));
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - visible(r[i]) + 2, ' ');
      }
      os << line << "\n";
    }
  }

 private:
  // length without ANSI escapes
  static std::size_t visible(const std::string& s) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '\x1b') {
        while (i < s.size() && s[i] != 'm') ++i;
        continue;
      }
      ++n;
    }
    return n;
  }

  std::vector<std::vector<std::string>> rows_;
};

}  // namespace detail

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
  bool json = false;
  std::string catalog_path;

  Catalog catalog() const { return catalog_path.empty() ? builtin_catalog() : load_catalog(catalog_path); }

  std::string mark(bool pass) const {
    if (!color) return pass ? "PASS" : "FAIL";
    return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
  }

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

// ---- verbs

struct RrArgs {
  std::optional<int> genus;
  std::optional<std::int64_t> h0;
  std::vector<std::string> basket;
  std::optional<std::string> kcube;
  int n = 10;
};

inline int cmd_rr(const Context& cx, const RrArgs& a) {
  if (a.genus.has_value() == a.h0.has_value()) throw InputError("rr: give exactly one of --genus or --h0");
  const int g = a.genus ? *a.genus : genus_from_h0(*a.h0);
  const Basket b = detail::basket(a.basket);
  const Rational from_rr = anticanonical_cube(g, b);
  const Rational k = a.kcube ? detail::rational("--kcube", *a.kcube) : from_rr;
  if (!is_fano_candidate(k)) {
    if (cx.json)
      cx.emit({{"genus", g}, {"basket", detail::basket_json(b)}, {"kcube", io::rat(k)}, {"fano_candidate", false}});
    else
      cx.out << "genus " << g << ", basket " << b.to_string() << ": (-K)^3 = " << k << ", not a Fano candidate\n";
    return failed;
  }
  const FanoNumerics x(g, k, b);
  const auto seq = rr_hilbert_sequence(x, a.n);
  if (cx.json) {
    cx.emit({{"genus", g},
             {"basket", detail::basket_json(b)},
             {"kcube", io::rat(k)},
             {"fano_candidate", true},
             {"rr_consistent", x.rr_consistent()},
             {"h0", detail::rationals(seq.values)},
             {"integral", seq.integral},
             {"nonnegative", seq.nonnegative}});
  } else {
    detail::Table t;
    t.row({"genus", std::to_string(g)});
    t.row({"basket", b.to_string()});
    t.row({"(-K)^3", k.to_string() + (x.rr_consistent() ? "" : "  (Riemann-Roch gives " + from_rr.to_string() + ")")});
    std::string h;
    for (const auto& v : seq.values) h += (h.empty() ? "" : ", ") + v.to_string();
    t.row({"h0(-nK)", "[" + h + "]"});
    t.row({"integral", seq.integral ? "yes" : "no"});
    t.row({"nonnegative", seq.nonnegative ? "yes" : "no"});
    t.print(cx.out);
  }
  return x.rr_consistent() && seq.valid() ? ok : failed;
}

struct SeriesArgs {
  std::string weights;
  std::string degrees;
  int depth = 10;
};

inline int cmd_series(const Context& cx, const SeriesArgs& a) {
  const Family f(WeightSystem(detail::int_list("--weights", a.weights)), detail::int_list("--degrees", a.degrees));
  const auto idx = fano_index(f);
  const auto c = family_hilbert_series(f, a.depth);
  const std::optional<Rational> cube = idx == 1 ? std::optional(family_anticanonical_cube(f)) : std::nullopt;
  if (cx.json) {
    cx.emit({{"family", f.to_string()},
             {"weights", f.weights()},
             {"degrees", f.degrees()},
             {"fano_index", idx},
             {"kcube", cube ? io::rat(*cube) : Json()},
             {"well_formed", is_well_formed(f.ambient())},
             {"coefficients", c}});
  } else {
    detail::Table t;
    t.row({"family", f.to_string()});
    t.row({"Fano index", std::to_string(idx)});
    t.row({"(-K)^3", cube ? cube->to_string() : "-"});
    t.row({"well-formed", is_well_formed(f.ambient()) ? "yes" : "no"});
    std::string h;
    for (auto v : c) h += (h.empty() ? "" : ", ") + std::to_string(v);
    t.row({"series", "[" + h + "]"});
    t.print(cx.out);
  }
  return ok;
}

struct SearchArgs {
  int genus = 0;
  std::vector<std::string> basket;
  int codim = 1;
  int max_weight = 6;
  std::optional<int> depth;
  int index = 1;
  unsigned jobs = 1;
};

inline int cmd_search(const Context& cx, const SearchArgs& a) {
  const FanoNumerics target = FanoNumerics::from_genus(a.genus, detail::basket(a.basket));
  const auto hits = search_candidates(target, a.codim, a.max_weight, {a.depth, a.index, a.jobs});
  if (cx.json) {
    Json hj = Json::array();
    for (const auto& h : hits)
      hj.push_back({{"family", h.family.to_string()},
                    {"weights", h.family.weights()},
                    {"degrees", h.family.degrees()},
                    {"depth", h.depth}});
    cx.emit({{"genus", target.genus()},
             {"basket", detail::basket_json(target.basket())},
             {"kcube", io::rat(target.kcube())},
             {"codim", a.codim},
             {"max_weight", a.max_weight},
             {"fano_index", a.index},
             {"candidates", hj}});
  } else {
    cx.out << "target genus " << target.genus() << ", basket " << target.basket().to_string() << ", (-K)^3 = "
           << target.kcube() << "\n";
    detail::Table t;
    t.row({"family", "matched to depth"});
    for (const auto& h : hits) t.row({h.family.to_string(), std::to_string(h.depth)});
    t.print(cx.out);
    cx.out << hits.size() << " candidate(s)\n";
  }
  return ok;
}

inline int cmd_link_verify(const Context& cx, std::vector<std::string> ids) {
  const Catalog c = cx.catalog();
  if (ids.empty())
    for (const auto& e : c.entries)
      if (std::holds_alternative<LinkEntry>(e.payload)) ids.push_back(e.id);
  bool all = true;
  Json jl = Json::array();
  detail::Table t;
  for (const auto& id : ids) {
    const auto rep = verify_link(resolve_link(c, id));
    all = all && rep.passed();
    Json checks = Json::array();
    for (const auto& ch : rep.checks) {
      checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
      t.row({id, ch.name, cx.mark(ch.pass), ch.detail});
    }
    jl.push_back({{"id", id}, {"passed", rep.passed()}, {"checks", checks}});
  }
  if (cx.json) cx.emit({{"links", jl}, {"passed", all}});
  else t.print(cx.out);
  return all ? ok : failed;
}

// ---- exclusion

inline int report_replay(const Context& cx, const std::string& id, const ExclusionCase& c) {
  const auto rep = replay(c);
  if (cx.json) {
    Json checks = Json::array();
    for (const auto& ch : rep.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    Json j = {{"label", c.label}, {"type", case_kind(c.body)}};
    if (!id.empty()) j["id"] = id;
    j["verdict"] = rep.verdict;
    j["excluded"] = rep.excluded;
    j["checks"] = checks;
    j["passed"] = rep.passed();
    cx.emit(j);
  } else {
    cx.out << (id.empty() ? c.label : id + ": " + c.label) << " [" << case_kind(c.body) << "]\n";
    detail::Table t;
    for (const auto& ch : rep.checks) t.row({"  " + ch.name, cx.mark(ch.pass), ch.detail});
    t.row({"  verdict", cx.mark(rep.excluded), rep.verdict});
    t.print(cx.out);
  }
  return rep.passed() ? ok : failed;
}

inline std::optional<int> replay_source(const Context& cx, const std::string& id, const std::string& case_path) {
  if (!id.empty() && !case_path.empty()) throw InputError("give only one of --id or --case");
  if (!id.empty()) {
    const Catalog c = cx.catalog();
    const auto* e = c.find_as<ExclusionCase>(id);
    if (!e) throw InputError("--id: no exclusion case '" + id + "' in the catalog");
    return report_replay(cx, id, *e);
  }
  if (!case_path.empty()) {
    std::ifstream in(case_path);
    if (!in) throw InputError("--case: cannot read '" + case_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("--case: malformed JSON: ") + e.what());
    }
    try {
      return report_replay(cx, "", io::exclusion_case(j));
    } catch (const io::FieldError& e) {
      throw InputError(std::string("--case: ") + e.what());
    }
  }
  return std::nullopt;
}

struct ExcludeCurveArgs {
  std::string id, case_path;
  std::optional<std::string> asq, adotc, csq;
  std::optional<int> pa;
  std::optional<std::string> ks_dot_c;
  std::optional<std::string> a_cube, step;
  std::optional<std::string> deg_o, gamma1, pairing;
  std::optional<bool> through_quotient;
};

inline int cmd_exclude_curve(const Context& cx, const ExcludeCurveArgs& a) {
  if (auto r = replay_source(cx, a.id, a.case_path)) return *r;
  using detail::rational;

  if (a.asq || a.adotc) {
    if (!a.asq || !a.adotc) throw InputError("exclude curve: --asq and --adotc go together");
    Rational csq;
    if (a.csq) csq = rational("--csq", *a.csq);
    else if (a.pa && a.ks_dot_c) csq = self_intersection_adjunction(*a.pa, rational("--ks-dot-c", *a.ks_dot_c));
    else throw InputError("exclude curve: give --csq, or --pa with --ks-dot-c");
    const auto b = max_fixed_multiplicity({"", rational("--asq", *a.asq), rational("--adotc", *a.adotc), csq});
    if (cx.json) {
      cx.emit({{"csq", io::rat(csq)},
               {"l_squared", io::to_json(b.l_squared)},
               {"gamma_max", b.gamma_max.to_string()},
               {"verdict", to_string(b.verdict)},
               {"excluded", b.excluded()}});
    } else {
      detail::Table t;
      t.row({"Gamma^2", csq.to_string()});
      t.row({"L^2", b.l_squared.to_string("gamma")});
      t.row({"gamma_max", b.gamma_max.to_string()});
      t.row({"verdict", cx.mark(b.excluded()), to_string(b.verdict)});
      t.print(cx.out);
    }
    return b.excluded() ? ok : failed;
  }
  if (a.pa || a.ks_dot_c) {
    if (!a.pa || !a.ks_dot_c) throw InputError("exclude curve: --pa and --ks-dot-c go together");
    const Rational csq = self_intersection_adjunction(*a.pa, rational("--ks-dot-c", *a.ks_dot_c));
    if (cx.json) cx.emit({{"csq", io::rat(csq)}});
    else cx.out << "Gamma^2 = " << csq << "\n";
    return ok;
  }
  if (a.a_cube) {
    const Rational step = a.step ? rational("--step", *a.step) : Rational(1);
    const Rational b = curve_degree_bound(rational("--a-cube", *a.a_cube), step);
    const auto ib = integer_curve_degree_bound(rational("--a-cube", *a.a_cube), step);
    if (cx.json) cx.emit({{"degree_bound", io::rat(b)}, {"integer_degree_bound", ib}});
    else cx.out << "deg Gamma <= " << b << " (integer degrees: <= " << ib << ")\n";
    return ok;
  }
  if (a.deg_o) {
    if (!a.pairing) throw InputError("exclude curve: --deg-o needs --pairing");
    const Rational d = rational("--deg-o", *a.deg_o), p = rational("--pairing", *a.pairing);
    const Rational g1 = a.gamma1 ? rational("--gamma1", *a.gamma1) : Rational(0);
    const Rational b = component_bound(d, g1, p);
    const bool excluded = b <= Rational(1);
    if (cx.json) cx.emit({{"gamma_max", io::rat(b)}, {"excluded", excluded}});
    else cx.out << "gamma <= " << b << "  " << cx.mark(excluded) << "\n";
    return excluded ? ok : failed;
  }
  if (a.through_quotient) {
    const auto v = quotient_center_rule(CenterKind::curve, *a.through_quotient);
    const bool excluded = v == CenterVerdict::excluded;
    if (cx.json) cx.emit({{"verdict", to_string(v)}, {"excluded", excluded}});
    else cx.out << to_string(v) << "\n";
    return excluded ? ok : failed;
  }
  throw InputError("exclude curve: nothing to do; see --help");
}

struct ExcludePointArgs {
  std::string id, case_path;
  std::optional<std::string> h2s, a1, a2, m;
  std::optional<std::string> asq, adotb, bsq;
  std::optional<int> r;
  std::optional<std::string> n, delta, d;
  std::optional<bool> quotient_point;
};

inline int cmd_exclude_point(const Context& cx, const ExcludePointArgs& a) {
  if (auto r = replay_source(cx, a.id, a.case_path)) return *r;
  using detail::rational;

  if (a.h2s) {
    const TwoCurveGerm g{a.a1 ? rational("--a1", *a.a1) : Rational(1), a.a2 ? rational("--a2", *a.a2) : Rational(1),
                         a.m ? rational("--m", *a.m) : Rational(1)};
    const Rational h = rational("--h2s", *a.h2s);
    const Rational t = two_dim_threshold(g);
    const bool excluded = mobile_point_exclusion(h, g);
    if (cx.json) cx.emit({{"h2s", io::rat(h)}, {"threshold", io::rat(t)}, {"excluded", excluded}});
    else cx.out << h << (excluded ? " < " : " >= ") << t << "  " << cx.mark(excluded) << "\n";
    return excluded ? ok : failed;
  }
  if (a.asq) {
    if (!a.adotb || !a.bsq) throw InputError("exclude point: --asq needs --adotb and --bsq");
    const auto r = fixed_curve_point_exclusion(rational("--asq", *a.asq), rational("--adotb", *a.adotb),
                                               rational("--bsq", *a.bsq));
    if (cx.json) {
      cx.emit({{"certificate", io::to_json(r.certificate)},
               {"equality_locus", detail::rationals(r.equality_locus)},
               {"vanishes_identically", r.vanishes_identically},
               {"excluded", r.excluded}});
    } else {
      std::string locus;
      for (const auto& x : r.equality_locus) locus += (locus.empty() ? "" : ", ") + x.to_string();
      detail::Table t;
      t.row({"4(1 - c) - L^2", r.certificate.to_string("c")});
      t.row({"equality at", r.vanishes_identically ? "all c" : "{" + locus + "}"});
      t.row({"verdict", cx.mark(r.excluded)});
      t.print(cx.out);
    }
    return r.excluded ? ok : failed;
  }
  if (a.r) {
    if (!a.n || !a.delta) throw InputError("exclude point: --r needs --n and --delta");
    const bool terminal = quotient_terminal_threshold(*a.r, rational("--n", *a.n), rational("--delta", *a.delta));
    if (cx.json) cx.emit({{"terminal", terminal}});
    else cx.out << (terminal ? "terminal: delta < n/r" : "not terminal: delta >= n/r") << "\n";
    return ok;
  }
  if (a.d) {
    if (!a.n) throw InputError("exclude point: --d needs --n");
    const bool holds = node_multiplicity_bound(rational("--n", *a.n), rational("--d", *a.d));
    if (cx.json) cx.emit({{"d_exceeds_n", holds}});
    else cx.out << (holds ? "d > n" : "d <= n") << "\n";
    return holds ? ok : failed;
  }
  if (a.quotient_point) {
    const auto v = quotient_center_rule(CenterKind::point, *a.quotient_point);
    if (cx.json) cx.emit({{"verdict", to_string(v)}, {"excluded", false}});
    else cx.out << to_string(v) << "\n";
    return failed;
  }
  throw InputError("exclude point: nothing to do; see --help");
}

struct ThresholdArgs {
  std::optional<std::string> a1, a2, m;
  std::vector<std::string> pairs;
  int n = 1;
};

inline int cmd_threshold(const Context& cx, const ThresholdArgs& a) {
  using detail::rational;
  if (!a.pairs.empty()) {
    MobileSystemData data{a.n, {}};
    for (const auto& item : a.pairs)
      for (const auto& p : detail::split(item, ';')) {
        const auto am = detail::split(p, ',');
        if (am.size() != 2) throw InputError("--pair: expected a,m but got '" + p + "'");
        data.pairs.push_back({rational("--pair", am[0]), rational("--pair", am[1])});
      }
    const Rational c = canonical_threshold(data);
    Json weak = Json::array();
    std::string ws;
    for (std::size_t i = 0; i < data.pairs.size(); ++i) {
      weak.push_back(is_weak_maximal(data, i));
      ws += (i ? ", " : "") + std::string(is_weak_maximal(data, i) ? "yes" : "no");
    }
    if (cx.json) cx.emit({{"canonical_threshold", io::rat(c)}, {"weak_maximal", weak}});
    else cx.out << "canonical threshold " << c << "; weak maximal: " << ws << "\n";
    return ok;
  }
  if (!a.a1 || !a.a2) throw InputError("threshold: give --a1 and --a2, or --pair");
  const TwoCurveGerm g{rational("--a1", *a.a1), rational("--a2", *a.a2), a.m ? rational("--m", *a.m) : Rational(1)};
  const Rational t = two_dim_threshold(g);
  const int which = g.a1 <= Rational(1) || g.a2 <= Rational(1) ? 1 : 2;
  if (cx.json) cx.emit({{"threshold", io::rat(t)}, {"case", which}});
  else cx.out << "L^2 > " << t << (which == 1 ? "  (4 a1 a2 m^2)" : "  (4 (a1 + a2 - 1) m^2)") << "\n";
  return ok;
}

inline std::string entry_summary(const CatalogEntry& e) {
  if (const auto* f = std::get_if<FamilyEntry>(&e.payload)) return f->family.to_string();
  if (const auto* x = std::get_if<FanoNumerics>(&e.payload))
    return "g=" + std::to_string(x->genus()) + " " + x->basket().to_string() + " (-K)^3=" + x->kcube().to_string();
  if (const auto* x = std::get_if<ExtractionData>(&e.payload))
    return x->label() + ", drop " + x->degree_drop().to_string();
  if (const auto* l = std::get_if<LinkEntry>(&e.payload)) return l->label;
  return std::get<ExclusionCase>(e.payload).label;
}

inline int cmd_catalog(const Context& cx, const std::string& action, const std::string& id) {
  const Catalog c = cx.catalog();
  if (action == "list") {
    if (cx.json) {
      Json a = Json::array();
      for (const auto& e : c.entries)
        a.push_back({{"id", e.id}, {"kind", e.kind()}, {"source", to_string(e.provenance.source)},
                     {"summary", entry_summary(e)}});
      cx.emit({{"entries", a}});
    } else {
      detail::Table t;
      for (const auto& e : c.entries) t.row({e.id, e.kind(), to_string(e.provenance.source), entry_summary(e)});
      t.print(cx.out);
    }
    return ok;
  }
  if (action == "show") {
    if (id.empty()) throw InputError("catalog show: missing entry id");
    const auto* e = c.find(id);
    if (!e) {
      if (cx.json) cx.emit({{"id", id}, {"found", false}});
      else cx.out << "no entry '" << id << "'\n";
      return failed;
    }
    if (cx.json) {
      cx.emit(to_json(*e));
    } else {
      detail::Table t;
      t.row({"id", e->id});
      t.row({"kind", e->kind()});
      t.row({"summary", entry_summary(*e)});
      t.row({"source", to_string(e->provenance.source)});
      if (!e->provenance.citation.empty()) t.row({"citation", e->provenance.citation});
      if (!e->note.empty()) t.row({"note", e->note});
      if (const auto* f = std::get_if<FamilyEntry>(&e->payload); f && f->numerics) {
        t.row({"numerics", *f->numerics});
        if (const auto* ne = c.find(*f->numerics)) t.row({"", entry_summary(*ne)});
      }
      t.print(cx.out);
    }
    return ok;
  }
  if (action == "check") {
    const auto rep = check_catalog(c);
    if (cx.json) {
      Json a = Json::array();
      for (const auto& ch : rep.checks)
        a.push_back({{"entry", ch.entry}, {"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
      cx.emit({{"checks", a}, {"passed", rep.passed()}});
    } else {
      detail::Table t;
      for (const auto& ch : rep.checks) t.row({ch.entry, ch.name, cx.mark(ch.pass), ch.detail});
      t.print(cx.out);
      const auto bad = std::count_if(rep.checks.begin(), rep.checks.end(), [](const auto& x) { return !x.pass; });
      cx.out << rep.checks.size() << " checks, " << bad << " failed\n";
    }
    return rep.passed() ? ok : failed;
  }
  if (action == "dump") {
    cx.out << dump_catalog(c);
    return ok;
  }
  throw InputError("catalog: unknown action '" + action + "'");
}

// ---- entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false) {
  CLI::App app{"Exact invariants, family search, link ledger and exclusion certificates for Fano 3-folds", "fanorr"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  std::string catalog_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--catalog", catalog_path, "Catalog JSON file (default: built-in)");

  RrArgs rr;
  auto* rr_cmd = app.add_subcommand("rr", "Riemann-Roch invariants and Hilbert function");
  rr_cmd->add_option("--genus", rr.genus, "Genus g");
  rr_cmd->add_option("--h0", rr.h0, "h0(-K), giving g = h0 - 2");
  rr_cmd->add_option("--basket", rr.basket, "Quotient point r,a (repeatable)");
  rr_cmd->add_option("--kcube", rr.kcube, "Recorded (-K)^3, checked against Riemann-Roch");
  rr_cmd->add_option("--n,--depth", rr.n, "Last n for h0(-nK)")->check(CLI::NonNegativeNumber);

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Hilbert series of a weighted complete intersection");
  series_cmd->add_option("--weights", series.weights, "Ambient weights, comma separated")->required();
  series_cmd->add_option("--degrees", series.degrees, "Equation degrees, comma separated")->required();
  series_cmd->add_option("--depth", series.depth, "Last coefficient")->check(CLI::NonNegativeNumber);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Families matching target invariants");
  search_cmd->add_option("--genus", search.genus, "Genus g")->required();
  search_cmd->add_option("--basket", search.basket, "Quotient point r,a (repeatable)");
  search_cmd->add_option("--codim", search.codim, "Codimension 1 or 2");
  search_cmd->add_option("--max-weight", search.max_weight, "Largest ambient weight");
  search_cmd->add_option("--depth", search.depth, "Match depth (default max(10, 2 sum w))");
  search_cmd->add_option("--index", search.index, "Fano index");
  search_cmd->add_option("--jobs", search.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> link_ids;
  auto* link_cmd = app.add_subcommand("link", "Sarkisov link ledger");
  link_cmd->require_subcommand(1);
  auto* verify_cmd = link_cmd->add_subcommand("verify", "Check degree bookkeeping of catalog links");
  verify_cmd->add_option("--id", link_ids, "Link id (repeatable; default all links)");

  auto* exclude_cmd = app.add_subcommand("exclude", "Exclusion inequalities");
  exclude_cmd->require_subcommand(1);
  ExcludeCurveArgs ec;
  auto* curve_cmd = exclude_cmd->add_subcommand("curve", "Curve centers");
  curve_cmd->add_option("--id", ec.id, "Replay a catalog exclusion case");
  curve_cmd->add_option("--case", ec.case_path, "Replay an exclusion case JSON file");
  curve_cmd->add_option("--asq", ec.asq, "A^2 on the test surface");
  curve_cmd->add_option("--adotc", ec.adotc, "A.Gamma");
  curve_cmd->add_option("--csq", ec.csq, "Gamma^2");
  curve_cmd->add_option("--pa", ec.pa, "Arithmetic genus of Gamma");
  curve_cmd->add_option("--ks-dot-c", ec.ks_dot_c, "K_S.Gamma");
  curve_cmd->add_option("--a-cube", ec.a_cube, "A^3 for the degree bound");
  curve_cmd->add_option("--step", ec.step, "Degree quantum for the degree bound");
  curve_cmd->add_option("--deg-o", ec.deg_o, "deg O(1) on the component Gamma1");
  curve_cmd->add_option("--gamma1", ec.gamma1, "Multiplicity coefficient of Gamma1");
  curve_cmd->add_option("--pairing", ec.pairing, "Lower bound for Gamma.Gamma1");
  curve_cmd->add_option("--through-quotient", ec.through_quotient, "Whether the curve meets a quotient point");

  ExcludePointArgs ep;
  auto* point_cmd = exclude_cmd->add_subcommand("point", "Point centers");
  point_cmd->add_option("--id", ep.id, "Replay a catalog exclusion case");
  point_cmd->add_option("--case", ep.case_path, "Replay an exclusion case JSON file");
  point_cmd->add_option("--h2s", ep.h2s, "(1/n^2) H^2.S");
  point_cmd->add_option("--a1", ep.a1, "Germ coefficient a1 (default 1)");
  point_cmd->add_option("--a2", ep.a2, "Germ coefficient a2 (default 1)");
  point_cmd->add_option("--m", ep.m, "Germ multiplicity m (default 1)");
  point_cmd->add_option("--asq", ep.asq, "A^2 with a fixed base curve B");
  point_cmd->add_option("--adotb", ep.adotb, "A.B");
  point_cmd->add_option("--bsq", ep.bsq, "B^2");
  point_cmd->add_option("--r", ep.r, "Index of a quotient point");
  point_cmd->add_option("--n", ep.n, "Degree n of the mobile system");
  point_cmd->add_option("--delta", ep.delta, "Multiplicity along the weighted blowup");
  point_cmd->add_option("--d", ep.d, "Multiplicity on the blowup of a node");
  point_cmd->add_option("--quotient-point", ep.quotient_point, "Whether the point is a quotient point");

  ThresholdArgs th;
  auto* threshold_cmd = app.add_subcommand("threshold", "Local intersection and canonical thresholds");
  threshold_cmd->add_option("--a1", th.a1, "Germ coefficient a1");
  threshold_cmd->add_option("--a2", th.a2, "Germ coefficient a2");
  threshold_cmd->add_option("--m", th.m, "Germ multiplicity m (default 1)");
  threshold_cmd->add_option("--pair", th.pairs, "Discrepancy and multiplicity a,m (repeatable)");
  threshold_cmd->add_option("--n", th.n, "Degree n of the mobile system");

  std::string catalog_action, catalog_id;
  auto* catalog_cmd = app.add_subcommand("catalog", "Fixture catalog");
  catalog_cmd->add_option("action", catalog_action, "list, show, check or dump")
      ->required()
      ->check(CLI::IsMember({"list", "show", "check", "dump"}));
  catalog_cmd->add_option("id", catalog_id, "Entry id for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  const Context cx{out, err, color, format == "json", catalog_path};
  try {
    if (rr_cmd->parsed()) return cmd_rr(cx, rr);
    if (series_cmd->parsed()) return cmd_series(cx, series);
    if (search_cmd->parsed()) return cmd_search(cx, search);
    if (verify_cmd->parsed()) return cmd_link_verify(cx, link_ids);
    if (curve_cmd->parsed()) return cmd_exclude_curve(cx, ec);
    if (point_cmd->parsed()) return cmd_exclude_point(cx, ep);
    if (threshold_cmd->parsed()) return cmd_threshold(cx, th);
    if (catalog_cmd->parsed()) return cmd_catalog(cx, catalog_action, catalog_id);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const CatalogError& e) {
    err << "catalog error: " << e.what() << "\n";
    return usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  err << "error: no command\n";
  return usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false) {
  std::vector<const char*> argv{"fanorr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data(), out, err, color);
}

}  // namespace fanorr::cli
