#include "grext/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "grext/error.hpp"

namespace grext {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kInvalidInput, field + ": " + what);
}

std::string name_of(const Json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  field_error(field, "expected a name (string or integer)");
}

const Json& array_field(const Json& doc, const std::string& key, bool required) {
  static const Json empty = Json::array();
  if (!doc.contains(key)) {
    if (required) field_error(key, "missing");
    return empty;
  }
  const Json& j = doc.at(key);
  if (!j.is_array()) field_error(key, "expected an array");
  return j;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
}

CircleScalar parse_angle(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return CircleScalar(Angle::parse(j.get<std::string>()));
    if (j.is_number()) {
      const double t = j.get<double>();
      if (t < 0.0 || t >= 1.0) field_error(field, "float angle outside [0,1)");
      return CircleScalar::from_turns(t);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidInput && std::string(e.what()).rfind(field, 0) == 0) throw;
    field_error(field, e.what());
  }
  field_error(field, "expected \"p/q\" or a float in [0,1)");
}

std::int64_t integer_field(const Json& params, const char* key) {
  const Json& j = params.at(key);
  if (!j.is_number_integer()) field_error(std::string("params.") + key, "expected an integer");
  return j.get<std::int64_t>();
}

RunParams parse_params(const Json& doc) {
  RunParams p;
  if (!doc.contains("params")) return p;
  const Json& j = doc.at("params");
  if (!j.is_object()) field_error("params", "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "modes") {
      if (!value.is_string()) field_error("params.modes", "expected \"a..b\"");
      try {
        p.modes = parse_window(value.get<std::string>());
      } catch (const Error& e) {
        field_error("params.modes", e.what());
      }
    } else if (key == "k") {
      p.k = integer_field(j, "k");
    } else if (key == "power") {
      p.power = integer_field(j, "power");
    } else if (key == "samples") {
      const auto s = integer_field(j, "samples");
      if (s < 0) field_error("params.samples", "must be nonnegative");
      p.samples = static_cast<std::size_t>(s);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) field_error("params.seed", "expected an unsigned integer");
      p.seed = value.get<std::uint64_t>();
    } else {
      field_error("params." + key, "unknown parameter");
    }
  }
  return p;
}

std::string pair_key(const FiniteGroupoid& g, ArrowId a) { return g.arrow_name(a); }

}  // namespace

TwoCocycle SpecDocument::cocycle_or_trivial() const {
  if (cocycle) return *cocycle;
  return TwoCocycle::trivial(groupoid);
}

SpecDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kInvalidInput,
                "line " + std::to_string(line_of(text, e.byte)) + ": malformed document (" + e.what() + ")");
  }
  if (!doc.is_object()) field_error("document", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "units" && key != "arrows" && key != "identities" && key != "compose" && key != "inverse" &&
        key != "cocycle" && key != "params")
      field_error(key, "unknown field");

  GroupoidTables t;
  std::map<std::string, UnitId> unit_ids;
  std::map<std::string, ArrowId> arrow_ids;
  const Json& units = array_field(doc, "units", true);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::string field = "units[" + std::to_string(i) + "]";
    const std::string name = name_of(units[i], field);
    if (!unit_ids.emplace(name, static_cast<UnitId>(i)).second) field_error(field, "duplicate unit '" + name + "'");
    t.unit_names.push_back(name);
  }
  auto unit_ref = [&](const Json& j, const std::string& field) {
    const std::string name = name_of(j, field);
    auto it = unit_ids.find(name);
    if (it == unit_ids.end()) field_error(field, "unknown unit '" + name + "'");
    return it->second;
  };
  auto arrow_ref = [&](const Json& j, const std::string& field) {
    const std::string name = name_of(j, field);
    auto it = arrow_ids.find(name);
    if (it == arrow_ids.end()) field_error(field, "unknown arrow '" + name + "'");
    return it->second;
  };

  const Json& arrows = array_field(doc, "arrows", true);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string field = "arrows[" + std::to_string(i) + "]";
    const Json& a = arrows[i];
    if (!a.is_object() || !a.contains("id") || !a.contains("range") || !a.contains("source"))
      field_error(field, "expected {id, range, source}");
    const std::string name = name_of(a.at("id"), field + ".id");
    if (!arrow_ids.emplace(name, static_cast<ArrowId>(i)).second) field_error(field + ".id", "duplicate arrow '" + name + "'");
    t.arrow_names.push_back(name);
    t.range.push_back(unit_ref(a.at("range"), field + ".range"));
    t.source.push_back(unit_ref(a.at("source"), field + ".source"));
  }

  const Json& compose = array_field(doc, "compose", false);
  std::map<ComposablePair, std::size_t> seen;
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string field = "compose[" + std::to_string(i) + "]";
    if (!compose[i].is_array() || compose[i].size() != 3) field_error(field, "expected [a, b, c]");
    const ArrowId a = arrow_ref(compose[i][0], field + "[0]");
    const ArrowId b = arrow_ref(compose[i][1], field + "[1]");
    const ArrowId c = arrow_ref(compose[i][2], field + "[2]");
    if (!seen.emplace(ComposablePair{a, b}, i).second)
      field_error(field, "duplicate entry for (" + t.arrow_names[a] + ", " + t.arrow_names[b] + ")");
    t.compose.emplace_back(a, b, c);
  }

  t.inverse.assign(t.arrow_names.size(), kNoArrow);
  const Json& inverse = array_field(doc, "inverse", true);
  for (std::size_t i = 0; i < inverse.size(); ++i) {
    const std::string field = "inverse[" + std::to_string(i) + "]";
    if (!inverse[i].is_array() || inverse[i].size() != 2) field_error(field, "expected [a, b]");
    const ArrowId a = arrow_ref(inverse[i][0], field + "[0]");
    const ArrowId b = arrow_ref(inverse[i][1], field + "[1]");
    if (t.inverse[a] != kNoArrow) field_error(field, "inverse of '" + t.arrow_names[a] + "' listed twice");
    t.inverse[a] = b;
  }
  // [a, b] alone also fixes the inverse of b.
  for (ArrowId a = 0; a < t.inverse.size(); ++a)
    if (t.inverse[a] != kNoArrow && t.inverse[t.inverse[a]] == kNoArrow) t.inverse[t.inverse[a]] = a;
  for (ArrowId a = 0; a < t.inverse.size(); ++a)
    if (t.inverse[a] == kNoArrow) field_error("inverse", "no inverse listed for arrow '" + t.arrow_names[a] + "'");

  t.unit_arrow.assign(t.unit_names.size(), kNoArrow);
  if (doc.contains("identities")) {
    const Json& ids = array_field(doc, "identities", false);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::string field = "identities[" + std::to_string(i) + "]";
      if (!ids[i].is_array() || ids[i].size() != 2) field_error(field, "expected [unit, arrow]");
      const UnitId u = unit_ref(ids[i][0], field + "[0]");
      if (t.unit_arrow[u] != kNoArrow) field_error(field, "identity of unit '" + t.unit_names[u] + "' listed twice");
      t.unit_arrow[u] = arrow_ref(ids[i][1], field + "[1]");
    }
  } else {
    // The identity at u is the idempotent loop at u.
    std::map<ComposablePair, ArrowId> table;
    for (const auto& [a, b, c] : t.compose) table[{a, b}] = c;
    for (ArrowId a = 0; a < t.arrow_names.size(); ++a) {
      if (t.range[a] != t.source[a] || t.unit_arrow[t.range[a]] != kNoArrow) continue;
      auto it = table.find({a, a});
      if (it != table.end() && it->second == a) t.unit_arrow[t.range[a]] = a;
    }
  }
  for (UnitId u = 0; u < t.unit_arrow.size(); ++u)
    if (t.unit_arrow[u] == kNoArrow) field_error("identities", "no identity arrow for unit '" + t.unit_names[u] + "'");

  SpecDocument out;
  try {
    out.groupoid = std::make_shared<const FiniteGroupoid>(std::move(t));
  } catch (const Error& e) {
    field_error("groupoid", e.what());
  }
  out.validation = validate(*out.groupoid);
  out.params = parse_params(doc);

  if (doc.contains("cocycle")) {
    out.has_cocycle_field = true;
    const Json& entries = array_field(doc, "cocycle", false);
    std::map<ComposablePair, CircleScalar> values;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string field = "cocycle[" + std::to_string(i) + "]";
      const Json& e = entries[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2)
        field_error(field, "expected [[a, b], angle]");
      const ArrowId a = arrow_ref(e[0][0], field + "[0][0]");
      const ArrowId b = arrow_ref(e[0][1], field + "[0][1]");
      if (!out.groupoid->composable(a, b))
        field_error(field, "pair (" + out.groupoid->arrow_name(a) + ", " + out.groupoid->arrow_name(b) +
                               ") is not composable");
      if (!values.emplace(ComposablePair{a, b}, parse_angle(e[1], field + "[1]")).second)
        field_error(field, "duplicate pair");
    }
    if (out.validation.ok()) out.cocycle = TwoCocycle(out.groupoid, std::move(values));
  }
  return out;
}

SpecDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.filename().string() + ": " + e.what());
  }
}

std::string angle_text(const CircleScalar& z) { return z.is_exact() ? z.angle().to_string() : std::to_string(z.turns()); }

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json j = Json::object();
  j["units"] = Json::array();
  for (UnitId u = 0; u < g.unit_count(); ++u) j["units"].push_back(g.unit_name(u));
  j["arrows"] = Json::array();
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    j["arrows"].push_back({{"id", g.arrow_name(a)}, {"range", g.unit_name(g.range(a))}, {"source", g.unit_name(g.source(a))}});
  j["identities"] = Json::array();
  for (UnitId u = 0; u < g.unit_count(); ++u) j["identities"].push_back({g.unit_name(u), g.arrow_name(g.unit_arrow(u))});
  j["compose"] = Json::array();
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    for (ArrowId b = 0; b < g.arrow_count(); ++b)
      if (auto c = g.compose(a, b)) j["compose"].push_back({g.arrow_name(a), g.arrow_name(b), g.arrow_name(*c)});
  j["inverse"] = Json::array();
  for (ArrowId a = 0; a < g.arrow_count(); ++a) j["inverse"].push_back({g.arrow_name(a), g.arrow_name(g.inverse(a))});
  return j;
}

Json cocycle_to_json(const TwoCocycle& w) {
  Json j = Json::array();
  const auto& g = w.base();
  for (const auto& [p, v] : w.entries()) {
    Json angle = v.is_exact() ? Json(v.angle().to_string()) : Json(v.turns());
    j.push_back({{pair_key(g, p.first), pair_key(g, p.second)}, angle});
  }
  return j;
}

Json cochain_to_json(const FiniteGroupoid& g, const OneCochain& b) {
  Json j = Json::object();
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    j[g.arrow_name(a)] = b(a).is_exact() ? Json(b(a).angle().to_string()) : Json(b(a).turns());
  return j;
}

Json params_to_json(const RunParams& p) {
  Json j = Json::object();
  if (p.modes) j["modes"] = std::to_string(p.modes->first) + ".." + std::to_string(p.modes->last);
  if (p.k) j["k"] = *p.k;
  if (p.power) j["power"] = *p.power;
  if (p.samples) j["samples"] = *p.samples;
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

namespace {

// One top-level field per line, one entry per line inside arrays.
std::string dump_document(const Json& j) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    out += first ? "" : ",\n";
    first = false;
    out += "  " + Json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && key != "units") {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

}  // namespace

std::string serialize_document(const FiniteGroupoid& g, const TwoCocycle* w, const RunParams* params) {
  Json j = groupoid_to_json(g);
  if (w) j["cocycle"] = cocycle_to_json(*w);
  if (params) {
    Json p = params_to_json(*params);
    if (!p.empty()) j["params"] = std::move(p);
  }
  return dump_document(j);
}

std::string serialize_document(const SpecDocument& doc) {
  std::optional<TwoCocycle> w = doc.cocycle;
  return serialize_document(*doc.groupoid, w ? &*w : nullptr, &doc.params);
}

ModeWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::kInvalidInput, "mode window must look like a..b");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const long long first = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const long long last = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (last < first) throw Error(ErrorKind::kInvalidInput, "mode window is empty");
    return {first, last};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::kInvalidInput, "mode window must look like a..b");
  }
}

Json tag_to_json(const AlgebraTag& tag) {
  std::ostringstream g, w;
  g << std::hex << tag.groupoid;
  w << std::hex << tag.cocycle;
  return {{"groupoid", g.str()}, {"cocycle", w.str()}, {"power", tag.power}};
}

namespace {

Json coefficient_map(const FiniteGroupoid& g, const std::vector<Complex>& c) {
  Json j = Json::object();
  for (ArrowId a = 0; a < c.size(); ++a)
    if (c[a] != 0.0) j[g.arrow_name(a)] = {c[a].real(), c[a].imag()};
  return j;
}

std::vector<Complex> coefficients_from(const FiniteGroupoid& g, const Json& j, const std::string& field) {
  if (!j.is_object()) field_error(field, "expected {arrow: [re, im]}");
  std::vector<Complex> c(g.arrow_count(), 0.0);
  for (const auto& [name, value] : j.items()) {
    const auto a = g.find_arrow(name);
    if (!a) field_error(field, "unknown arrow '" + name + "'");
    if (value.is_number()) {
      c[*a] = value.get<double>();
    } else if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
      c[*a] = Complex(value[0].get<double>(), value[1].get<double>());
    } else {
      field_error(field + "." + name, "expected [re, im]");
    }
  }
  return c;
}

}  // namespace

Json element_to_json(const FiniteGroupoid& g, const AlgebraElement& f) {
  return {{"tag", tag_to_json(f.tag)}, {"coefficients", coefficient_map(g, f.coeff)}};
}

AlgebraElement element_from_json(const TwistedAlgebra& algebra, const Json& j) {
  if (j.contains("tag") && j.at("tag") != tag_to_json(algebra.tag()))
    throw Error(ErrorKind::kTagMismatch, "element tag " + j.at("tag").dump() + " does not match " + tag_to_json(algebra.tag()).dump());
  const Json& c = j.contains("coefficients") ? j.at("coefficients") : j;
  return algebra.element(coefficients_from(algebra.groupoid(), c, "element"));
}

Json laurent_to_json(const FiniteGroupoid& g, const LaurentElement& f) {
  Json modes = Json::object();
  for (const auto& [n, fn] : f.modes) modes[std::to_string(n)] = coefficient_map(g, fn.coeff);
  return {{"modes", modes}};
}

LaurentElement laurent_from_json(const ExtensionModel& model, const Json& j) {
  if (!j.is_object() || !j.contains("modes") || !j.at("modes").is_object())
    field_error("laurent", "expected {\"modes\": {n: coefficients}}");
  LaurentElement out = model.zero();
  for (const auto& [key, value] : j.at("modes").items()) {
    std::int64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      field_error("laurent.modes", "mode '" + key + "' is not an integer");
    }
    out.modes.emplace(n, model.mode_algebra(n).element(coefficients_from(model.groupoid(), value, "laurent.modes." + key)));
  }
  return out;
}

}  // namespace grext
