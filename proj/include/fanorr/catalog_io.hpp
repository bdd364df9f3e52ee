#pragma once

// JSON form of catalogs and exclusion cases.
//
// Rationals are "p/q" strings (plain integers also accepted on input); weights
// and degrees are integer arrays. Any structural problem surfaces as a
// CatalogError naming the entry and the offending field.

#include <fstream>
#include <sstream>
#include <string>

#include "fanorr/catalog.hpp"
#include "json.hpp"

namespace fanorr {

using Json = nlohmann::ordered_json;

namespace io {

// A malformed field; the catalog loader attaches the entry id.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw FieldError("field '" + path + "': expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw FieldError("missing field '" + join(path, key) + "'");
  return *it;
}

inline bool has(const Json& j, const std::string& key) { return j.is_object() && j.contains(key) && !j[key].is_null(); }

inline Json rat(const Rational& r) { return r.to_string(); }

inline Rational rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw FieldError("field '" + path + "': expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FieldError("field '" + path + "': " + e.what());
  }
}
inline Rational rat(const Json& j, const std::string& key, const std::string& path) {
  return rat(field(j, key, path), join(path, key));
}

inline std::string str(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_string()) throw FieldError("field '" + join(path, key) + "': expected a string");
  return v.get<std::string>();
}

inline std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FieldError("field '" + path + "': expected an integer");
  return j.get<std::int64_t>();
}
inline std::int64_t integer(const Json& j, const std::string& key, const std::string& path) {
  return integer(field(j, key, path), join(path, key));
}

inline bool boolean(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_boolean()) throw FieldError("field '" + join(path, key) + "': expected true or false");
  return v.get<bool>();
}

inline const Json& array(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_array()) throw FieldError("field '" + join(path, key) + "': expected an array");
  return v;
}

inline std::vector<int> ints(const Json& j, const std::string& key, const std::string& path) {
  std::vector<int> out;
  const Json& a = array(j, key, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(int(integer(a[i], join(path, key) + "[" + std::to_string(i) + "]")));
  return out;
}

inline std::vector<Rational> rats(const Json& j, const std::string& key, const std::string& path) {
  std::vector<Rational> out;
  const Json& a = array(j, key, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rat(a[i], join(path, key) + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json rats(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rat(r));
  return a;
}

// Domain errors raised by constructors become field errors.
template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw FieldError("field '" + path + "': " + e.what());
  }
}

// ---- arithmetic records

inline Json to_json(const QuadraticForm& q) { return {{"c2", rat(q.c2)}, {"c1", rat(q.c1)}, {"c0", rat(q.c0)}}; }
inline QuadraticForm quadratic_form(const Json& j, const std::string& path) {
  return {rat(j, "c2", path), rat(j, "c1", path), rat(j, "c0", path)};
}

inline Json to_json(const QuadraticPolynomial& p) {
  Json lin = Json::object();
  for (const auto& [x, c] : p.linear_terms()) lin[x] = rat(c);
  Json quad = Json::array();
  for (const auto& [xy, c] : p.quadratic_terms()) quad.push_back({xy.first, xy.second, rat(c)});
  return {{"constant", rat(p.constant())}, {"linear", lin}, {"quadratic", quad}};
}
inline QuadraticPolynomial quadratic_polynomial(const Json& j, const std::string& path) {
  QuadraticPolynomial p(rat(j, "constant", path));
  const Json& lin = field(j, "linear", path);
  if (!lin.is_object()) throw FieldError("field '" + join(path, "linear") + "': expected an object");
  for (const auto& [x, c] : lin.items()) p.add_linear(x, rat(c, join(path, "linear." + x)));
  const Json& quad = array(j, "quadratic", path);
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const std::string at = join(path, "quadratic[" + std::to_string(i) + "]");
    const Json& t = quad[i];
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
      throw FieldError("field '" + at + "': expected [symbol, symbol, coefficient]");
    p.add_quadratic(t[0].get<std::string>(), t[1].get<std::string>(), rat(t[2], at + "[2]"));
  }
  return p;
}

inline Json to_json(const ParamQuadratic& q) {
  return {{"lead", to_json(q.lead)}, {"linear", to_json(q.linear)}, {"constant", to_json(q.constant)}};
}
inline ParamQuadratic param_quadratic(const Json& j, const std::string& path) {
  return {quadratic_form(field(j, "lead", path), join(path, "lead")),
          quadratic_form(field(j, "linear", path), join(path, "linear")),
          quadratic_form(field(j, "constant", path), join(path, "constant"))};
}

inline Json to_json(const Interval& i) {
  return {{"lower", i.lower ? rat(*i.lower) : Json()},
          {"upper", i.upper ? rat(*i.upper) : Json()},
          {"lower_closed", i.lower_closed},
          {"upper_closed", i.upper_closed}};
}
inline Interval interval(const Json& j, const std::string& path) {
  Interval i;
  if (has(j, "lower")) i.lower = rat(j, "lower", path);
  if (has(j, "upper")) i.upper = rat(j, "upper", path);
  i.lower_closed = i.lower && boolean(j, "lower_closed", path);
  i.upper_closed = i.upper && boolean(j, "upper_closed", path);
  return i;
}

inline Json to_json(const IntersectionData& d) {
  Json dots = Json::object();
  for (const auto& [x, v] : d.a_dot) dots[x] = rat(v);
  Json pairs = Json::array();
  for (const auto& [xy, v] : d.pairing) pairs.push_back({xy.first, xy.second, rat(v)});
  return {{"a_squared", rat(d.a_squared)}, {"a_dot", dots}, {"pairing", pairs}};
}
inline IntersectionData intersection_data(const Json& j, const std::string& path) {
  IntersectionData d;
  d.a_squared = rat(j, "a_squared", path);
  const Json& dots = field(j, "a_dot", path);
  if (!dots.is_object()) throw FieldError("field '" + join(path, "a_dot") + "': expected an object");
  for (const auto& [x, v] : dots.items()) d.a_dot[x] = rat(v, join(path, "a_dot." + x));
  const Json& pairs = array(j, "pairing", path);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = join(path, "pairing[" + std::to_string(i) + "]");
    const Json& t = pairs[i];
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
      throw FieldError("field '" + at + "': expected [curve, curve, value]");
    d.pairing[{t[0].get<std::string>(), t[1].get<std::string>()}] = rat(t[2], at + "[2]");
  }
  return d;
}

// ---- exclusion cases

inline Json body_to_json(const FixedCurveCase& c) {
  Json j = {{"asq", rat(c.surface.asq)}, {"adotc", rat(c.surface.adotc)}, {"csq", rat(c.surface.csq)}};
  if (c.adjunction)
    j["adjunction"] = {{"arithmetic_genus", c.adjunction->arithmetic_genus},
                       {"ks_dot_c", rat(c.adjunction->ks_dot_c)},
                       {"correction", rat(c.adjunction->correction)}};
  j["pullback"] = rats(c.pullback);
  j["expected"] = to_json(c.expected);
  return j;
}
inline Json body_to_json(const DegreeBoundCase& c) {
  Json j = {{"a_cube", rat(c.a_cube)}, {"step", rat(c.step)}, {"expected", rat(c.expected)}};
  j["expected_integer"] = c.expected_integer ? Json(*c.expected_integer) : Json();
  return j;
}
inline Json body_to_json(const ComponentCase& c) {
  return {{"deg_o", rat(c.deg_o)}, {"pairing_lower", rat(c.pairing_lower)}};
}
inline Json body_to_json(const QuotientCenterCase& c) {
  return {{"center", c.kind == CenterKind::curve ? "curve" : "point"},
          {"through_quotient_point", c.through_quotient_point}};
}
inline Json body_to_json(const MobilePointCase& c) {
  return {{"h2s", rat(c.h2s)}, {"a1", rat(c.germ.a1)}, {"a2", rat(c.germ.a2)}, {"m", rat(c.germ.m)}};
}
inline Json body_to_json(const FixedCurvePointCase& c) {
  return {{"asq", rat(c.asq)},
          {"adotb", rat(c.adotb)},
          {"bsq", rat(c.bsq)},
          {"expected_certificate", to_json(c.expected_certificate)},
          {"expected_locus", rats(c.expected_locus)}};
}
inline Json body_to_json(const DiscriminantCase& c) {
  Json fixed = Json::array();
  for (const auto& f : c.fixed) fixed.push_back({{"symbol", f.symbol}, {"curve", f.curve}});
  return {{"intersections", to_json(c.data)},
          {"fixed", fixed},
          {"threshold", to_json(c.threshold)},
          {"main", c.main},
          {"param", c.param},
          {"range", to_json(c.range)},
          {"expected_l2", to_json(c.expected_l2)},
          {"expected_inequality", to_json(c.expected_inequality)},
          {"expected_alpha_star", c.expected_alpha_star ? rat(*c.expected_alpha_star) : Json()},
          {"expected_max_quarter", c.expected_max_quarter ? rat(*c.expected_max_quarter) : Json()}};
}

inline Json to_json(const ExclusionCase& c) {
  Json j = {{"label", c.label}, {"type", case_kind(c.body)}};
  const Json body = std::visit([](const auto& b) { return body_to_json(b); }, c.body);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline ExclusionCase exclusion_case(const Json& j, const std::string& path = "") {
  ExclusionCase c;
  c.label = str(j, "label", path);
  const std::string type = str(j, "type", path);
  if (type == "fixed_curve") {
    FixedCurveCase f;
    f.surface = {c.label, rat(j, "asq", path), rat(j, "adotc", path), rat(j, "csq", path)};
    if (has(j, "adjunction")) {
      const Json& a = j["adjunction"];
      const std::string at = join(path, "adjunction");
      f.adjunction = AdjunctionDerivation{int(integer(a, "arithmetic_genus", at)), rat(a, "ks_dot_c", at),
                                          rat(a, "correction", at)};
    }
    if (has(j, "pullback")) f.pullback = rats(j, "pullback", path);
    f.expected = quadratic_form(field(j, "expected", path), join(path, "expected"));
    c.body = f;
  } else if (type == "degree_bound") {
    DegreeBoundCase d{rat(j, "a_cube", path), rat(j, "step", path), rat(j, "expected", path), std::nullopt};
    if (has(j, "expected_integer")) d.expected_integer = integer(j, "expected_integer", path);
    c.body = d;
  } else if (type == "component") {
    c.body = ComponentCase{rat(j, "deg_o", path), rat(j, "pairing_lower", path)};
  } else if (type == "quotient_center") {
    const std::string center = str(j, "center", path);
    if (center != "curve" && center != "point")
      throw FieldError("field '" + join(path, "center") + "': expected \"curve\" or \"point\"");
    c.body = QuotientCenterCase{center == "curve" ? CenterKind::curve : CenterKind::point,
                                boolean(j, "through_quotient_point", path)};
  } else if (type == "mobile_point") {
    c.body = MobilePointCase{rat(j, "h2s", path),
                             {rat(j, "a1", path), rat(j, "a2", path), has(j, "m") ? rat(j, "m", path) : Rational(1)}};
  } else if (type == "fixed_curve_point") {
    c.body = FixedCurvePointCase{rat(j, "asq", path), rat(j, "adotb", path), rat(j, "bsq", path),
                                 quadratic_form(field(j, "expected_certificate", path),
                                                join(path, "expected_certificate")),
                                 has(j, "expected_locus") ? rats(j, "expected_locus", path) : std::vector<Rational>{}};
  } else if (type == "discriminant") {
    DiscriminantCase d;
    d.data = intersection_data(field(j, "intersections", path), join(path, "intersections"));
    const Json& fixed = array(j, "fixed", path);
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      const std::string at = join(path, "fixed[" + std::to_string(i) + "]");
      d.fixed.push_back({str(fixed[i], "symbol", at), str(fixed[i], "curve", at)});
    }
    d.threshold = quadratic_polynomial(field(j, "threshold", path), join(path, "threshold"));
    d.main = str(j, "main", path);
    d.param = str(j, "param", path);
    d.range = interval(field(j, "range", path), join(path, "range"));
    d.expected_l2 = quadratic_polynomial(field(j, "expected_l2", path), join(path, "expected_l2"));
    d.expected_inequality = param_quadratic(field(j, "expected_inequality", path), join(path, "expected_inequality"));
    if (has(j, "expected_alpha_star")) d.expected_alpha_star = rat(j, "expected_alpha_star", path);
    if (has(j, "expected_max_quarter")) d.expected_max_quarter = rat(j, "expected_max_quarter", path);
    c.body = d;
  } else {
    throw FieldError("field '" + join(path, "type") + "': unknown exclusion case type '" + type + "'");
  }
  return c;
}

// ---- catalog entries

inline Json basket_json(const Basket& b) {
  Json a = Json::array();
  for (const auto& q : b) a.push_back({q.index(), q.weight()});
  return a;
}

inline Json payload_json(const Payload& p) {
  if (const auto* f = std::get_if<FamilyEntry>(&p))
    return {{"weights", f->family.weights()},
            {"degrees", f->family.degrees()},
            {"numerics", f->numerics ? Json(*f->numerics) : Json()}};
  if (const auto* x = std::get_if<FanoNumerics>(&p))
    return {{"genus", x->genus()}, {"kcube", rat(x->kcube())}, {"basket", basket_json(x->basket())}};
  if (const auto* e = std::get_if<ExtractionData>(&p)) {
    if (e->is_inferred()) return {{"label", e->label()}, {"drop", rat(*e->inferred_drop())}};
    return {{"label", e->label()},
            {"discrepancy", rat(*e->discrepancy())},
            {"exc_cube", rat(*e->exc_cube())},
            {"weights", e->weights()}};
  }
  if (const auto* l = std::get_if<LinkEntry>(&p))
    return {{"label", l->label},
            {"left", {{"numerics", l->left.numerics}, {"extraction", l->left.extraction}}},
            {"right", {{"numerics", l->right.numerics}, {"extraction", l->right.extraction}}},
            {"midpoint", l->midpoint},
            {"midpoint_family", l->midpoint_family ? Json(*l->midpoint_family) : Json()}};
  return to_json(std::get<ExclusionCase>(p));
}

inline Basket basket(const Json& j, const std::string& key, const std::string& path) {
  std::vector<QuotientSingularity> pts;
  const Json& a = array(j, key, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string at = join(path, key) + "[" + std::to_string(i) + "]";
    if (!a[i].is_array() || a[i].size() != 2) throw FieldError("field '" + at + "': expected [r, a]");
    const int r = int(integer(a[i][0], at + "[0]"));
    const int w = int(integer(a[i][1], at + "[1]"));
    pts.push_back(guarded(at, [&] { return QuotientSingularity(r, w); }));
  }
  return Basket(std::move(pts));
}

inline Payload payload(const std::string& kind, const Json& j) {
  const std::string path = "payload";
  if (kind == "family") {
    FamilyEntry f{guarded(path, [&] {
                    return Family(WeightSystem(ints(j, "weights", path)), ints(j, "degrees", path));
                  }),
                  std::nullopt};
    if (has(j, "numerics")) f.numerics = str(j, "numerics", path);
    return f;
  }
  if (kind == "numerics") {
    const int g = int(integer(j, "genus", path));
    const Rational k = rat(j, "kcube", path);
    Basket b = basket(j, "basket", path);
    return guarded(path, [&] { return FanoNumerics(g, k, b); });
  }
  if (kind == "extraction") {
    const std::string label = str(j, "label", path);
    if (has(j, "drop")) {
      const Rational d = rat(j, "drop", path);
      return guarded(path, [&] { return ExtractionData::inferred(label, d); });
    }
    const Rational a = rat(j, "discrepancy", path);
    const Rational e3 = rat(j, "exc_cube", path);
    const std::vector<int> w = has(j, "weights") ? ints(j, "weights", path) : std::vector<int>{};
    return guarded(path, [&] { return ExtractionData::geometric(label, a, e3, w); });
  }
  if (kind == "link") {
    const auto end = [&](const std::string& side) {
      const std::string at = join(path, side);
      const Json& e = field(j, side, path);
      return LinkEndRef{str(e, "numerics", at), str(e, "extraction", at)};
    };
    LinkEntry l{str(j, "label", path), end("left"), end("right"), str(j, "midpoint", path), std::nullopt};
    if (has(j, "midpoint_family")) l.midpoint_family = str(j, "midpoint_family", path);
    return l;
  }
  if (kind == "exclusion_case") return guarded(path, [&] { return exclusion_case(j, path); });
  throw FieldError("field 'kind': unknown kind '" + kind + "'");
}

}  // namespace io

inline Json to_json(const CatalogEntry& e) {
  Json j = {{"id", e.id},
            {"kind", e.kind()},
            {"provenance", {{"source", to_string(e.provenance.source)}, {"citation", e.provenance.citation}}}};
  if (!e.note.empty()) j["note"] = e.note;
  j["payload"] = io::payload_json(e.payload);
  return j;
}

inline Json to_json(const Catalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) entries.push_back(to_json(e));
  return {{"schema_version", c.schema_version}, {"entries", entries}};
}

inline Catalog catalog_from_json(const Json& j) {
  if (!j.is_object()) throw CatalogError("", "catalog must be a JSON object");
  Catalog c;
  try {
    c.schema_version = int(io::integer(j, "schema_version", ""));
  } catch (const io::FieldError& e) {
    throw CatalogError("", e.what());
  }
  if (c.schema_version != kCatalogSchemaVersion)
    throw CatalogError("", "unknown schema_version " + std::to_string(c.schema_version));
  const auto it = j.find("entries");
  if (it == j.end() || !it->is_array()) throw CatalogError("", "field 'entries': expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const Json& ej = (*it)[i];
    std::string id;
    try {
      id = io::str(ej, "id", "");
      const std::string kind = io::str(ej, "kind", "");
      Provenance prov;
      const Json& pj = io::field(ej, "provenance", "");
      const std::string src = io::str(pj, "source", "provenance");
      if (src == "paper") prov.source = Source::paper;
      else if (src == "derived") prov.source = Source::derived;
      else if (src == "inferred") prov.source = Source::inferred;
      else throw io::FieldError("field 'provenance.source': unknown source '" + src + "'");
      prov.citation = io::has(pj, "citation") ? io::str(pj, "citation", "provenance") : "";
      const std::string note = io::has(ej, "note") ? io::str(ej, "note", "") : "";
      c.entries.push_back({id, io::payload(kind, io::field(ej, "payload", "")), std::move(prov), note});
    } catch (const io::FieldError& e) {
      throw CatalogError(id.empty() ? "#" + std::to_string(i) : id, e.what());
    }
  }
  validate(c);
  return c;
}

inline Catalog parse_catalog(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CatalogError("", std::string("malformed JSON: ") + e.what());
  }
  return catalog_from_json(j);
}

inline std::string dump_catalog(const Catalog& c) { return to_json(c).dump(2) + "\n"; }

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("", "cannot read catalog file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

inline void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CatalogError("", "cannot write catalog file '" + path + "'");
  out << dump_catalog(c);
  if (!out) throw CatalogError("", "write to '" + path + "' failed");
}

}  // namespace fanorr
