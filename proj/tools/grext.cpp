// Command-line front end: document validation, cocycle normalization and
// trivialization, twisted algebra reports, mode decompositions, the cyclic
// oracle, imprimitivity checks and the full acceptance suite.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "grext/algebra.hpp"
#include "grext/cyclic.hpp"
#include "grext/error.hpp"
#include "grext/ext_reference.hpp"
#include "grext/extension.hpp"
#include "grext/fixtures.hpp"
#include "grext/io.hpp"
#include "grext/morita.hpp"
#include "grext/random.hpp"
#include "grext/report.hpp"
#include "grext/verify.hpp"

namespace fs = std::filesystem;
using namespace grext;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string path;
  std::string fixture;
  std::string format = "human";
  std::string output;
  std::string document;
  std::string element;
  std::string modes;
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // 0: command default
  std::int64_t k = 0;
  std::optional<std::int64_t> power;
};

class Report {
 public:
  explicit Report(std::string name) { root_["report"] = std::move(name); }

  Json& root() { return root_; }
  void check(const std::string& name, bool ok, Json diagnostics = Json::object()) {
    Json c = {{"name", name}, {"status", status_text(ok)}};
    for (auto& [key, value] : diagnostics.items()) c[key] = value;
    checks_.push_back(std::move(c));
    all_ = all_ && ok;
  }
  bool passed() const { return all_; }

  Json finish() {
    root_["checks"] = checks_;
    root_["status"] = status_text(all_);
    return root_;
  }

 private:
  Json root_ = Json::object();
  Json checks_ = Json::array();
  bool all_ = true;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_human(std::ostream& os, const Json& report) {
  os << report.value("report", "") << ": " << report.value("status", "") << "\n";
  for (const auto& [key, value] : report.items())
    if (key != "report" && key != "status" && key != "checks" && key != "criteria" && !value.is_structured())
      os << "  " << key << " = " << scalar_text(value) << "\n";
  auto row = [&os](const Json& c, const std::string& label) {
    os << (c.value("status", "") == "pass" ? "  PASS  " : "  FAIL  ") << label;
    for (const auto& [key, value] : c.items())
      if (key != "name" && key != "status" && key != "id" && !value.is_structured())
        os << "  " << key << "=" << scalar_text(value);
    os << "\n";
  };
  if (report.contains("checks"))
    for (const auto& c : report.at("checks")) row(c, c.value("name", ""));
  if (report.contains("criteria"))
    for (const auto& c : report.at("criteria")) {
      Json flat = c.at("details");
      flat["status"] = c.at("status");
      row(flat, std::to_string(c.value("id", 0)) + " " + c.value("name", ""));
    }
}

void emit(const Options& o, const Json& report) {
  std::ostringstream os;
  if (o.format == "machine")
    os << report.dump(2) << "\n";
  else
    print_human(os, report);
  if (o.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write '" + o.output + "'");
    out << os.str();
  }
}

SpecDocument load(const Options& o, Json& report_root) {
  if (!o.path.empty()) {
    report_root["input"] = fs::path(o.path).filename().string();
    return load_document(o.path);
  }
  if (!o.fixture.empty()) {
    report_root["input"] = o.fixture;
    return load_fixture(default_fixture_dir(), o.fixture).doc;
  }
  throw Error(ErrorKind::kInvalidInput, "no input: pass a document path or --fixture <name>");
}

TwoCocycle require_cocycle(const SpecDocument& doc) {
  if (!doc.validation.ok()) throw Error(ErrorKind::kInvalidInput, "groupoid tables violate the axioms; run validate");
  const TwoCocycle w = doc.cocycle_or_trivial();
  if (!w.identity_checked()) throw Error(ErrorKind::kPrecondition, "cocycle identity fails; run validate");
  return w;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({magnitude_json(m(i, j).real()), magnitude_json(m(i, j).imag())});
    rows.push_back(row);
  }
  return rows;
}

Json read_json_argument(const std::string& text) {
  std::string body = text;
  if (fs::exists(text)) {
    std::ifstream in(text, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("--element: ") + e.what());
  }
}

ModeWindow window_for(const Options& o, const SpecDocument& doc) {
  if (!o.modes.empty()) return parse_window(o.modes);
  return doc.params.modes.value_or(ModeWindow{-1, 1});
}

std::uint64_t seed_for(const Options& o, const SpecDocument& doc) { return o.seed ? o.seed : doc.params.seed.value_or(0); }
std::size_t samples_for(const Options& o, const SpecDocument& doc, std::size_t fallback) {
  return o.samples ? o.samples : doc.params.samples.value_or(fallback);
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  Report r("validate");
  const SpecDocument doc = load(o, r.root());
  const auto& g = *doc.groupoid;
  Json violations = Json::array();
  for (const auto& v : doc.validation.violations) {
    Json witness = Json::array();
    for (ArrowId a : v.witness) witness.push_back(g.arrow_name(a));
    violations.push_back({{"axiom", to_string(v.kind)}, {"witness", witness}, {"detail", v.detail}});
  }
  r.check("groupoid axioms", doc.validation.ok(),
          {{"units", g.unit_count()}, {"arrows", g.arrow_count()}, {"violations", violations}});
  if (doc.validation.ok()) {
    r.root()["principal"] = is_principal(g);
    r.root()["transitive"] = is_transitive(g);
    r.root()["proper"] = is_proper(g).proper;
    r.root()["orbits"] = orbits(g).orbit_count();
  }
  if (doc.cocycle) {
    const auto report = check_identity(*doc.cocycle);
    Json triples = Json::array();
    for (const auto& v : report.violations)
      triples.push_back({{"triple", {g.arrow_name(v.a), g.arrow_name(v.b), g.arrow_name(v.c)}},
                         {"lhs", angle_text(v.lhs)},
                         {"rhs", angle_text(v.rhs)}});
    r.check("cocycle identity", report.ok(), {{"violations", triples}});
    r.root()["normalized"] = doc.cocycle->normalized();
  } else if (doc.has_cocycle_field) {
    r.root()["cocycle"] = "not checked: groupoid axioms fail";
  }
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_normalize(const Options& o) {
  Report r("normalize");
  const SpecDocument doc = load(o, r.root());
  const TwoCocycle w = require_cocycle(doc);
  const Normalization n = normalize(w);
  r.check("normalized", n.cocycle.normalized());
  r.check("cocycle identity", n.cocycle.identity_checked());
  r.check("idempotent", same_values(normalize(n.cocycle).cocycle, n.cocycle));
  r.root()["cochain"] = cochain_to_json(*doc.groupoid, n.cochain);
  r.root()["cocycle"] = cocycle_to_json(n.cocycle);
  if (!o.document.empty()) {
    std::ofstream out(o.document, std::ios::binary);
    if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write '" + o.document + "'");
    out << serialize_document(*doc.groupoid, &n.cocycle, &doc.params);
  }
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_trivialize(const Options& o) {
  Report r("trivialize");
  const SpecDocument doc = load(o, r.root());
  const TwoCocycle w = require_cocycle(doc);
  const auto& g = *doc.groupoid;
  if (is_principal(g)) {
    if (!w.normalized()) throw Error(ErrorKind::kPrecondition, "trivialization expects a normalized cocycle; run normalize");
    const OneCochain b = trivialize_principal(w);
    r.check("coboundary reproduces cocycle", same_values(coboundary(doc.groupoid, b), w), {{"method", "principal"}});
    r.root()["cochain"] = cochain_to_json(g, b);
  } else {
    const ArrowId loop = *nontrivial_isotropy_arrow(g);
    r.root()["obstruction"] = {{"kind", "isotropy obstruction"}, {"arrow", g.arrow_name(loop)}};
    if (!w.is_exact()) throw Error(ErrorKind::kPrecondition, "exact angles required");
    const auto b = solve_coboundary(w);
    r.check("cocycle is a coboundary", b.has_value(), {{"method", "linear solve over Q/Z"}});
    if (b) r.root()["cochain"] = cochain_to_json(g, *b);
  }
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_algebra(const Options& o) {
  Report r("algebra");
  const SpecDocument doc = load(o, r.root());
  const TwoCocycle w = require_cocycle(doc);
  const std::int64_t n = o.power.value_or(doc.params.power.value_or(1));
  const TwistedAlgebra alg(w, n);
  r.root()["power"] = n;
  r.root()["dimension"] = alg.dimension();
  r.root()["center_dimension"] = alg.center_dimension();
  r.root()["commutative"] = alg.is_commutative();
  const auto cert = alg.full_norm_certificate();
  r.check("faithful regular representations", cert.faithful, {{"rank", cert.rank}, {"argument", cert.argument}});

  const AlgebraElement f = o.element.empty() ? alg.identity_element() : element_from_json(alg, read_json_argument(o.element));
  const NormReport norm = alg.reduced_norm(f);
  Json reps = Json::array();
  for (UnitId u = 0; u < alg.groupoid().unit_count(); ++u) {
    const RegularRep rep = alg.regular_rep(f, u);
    Json basis = Json::array();
    for (ArrowId a : rep.basis) basis.push_back(alg.groupoid().arrow_name(a));
    reps.push_back({{"unit", alg.groupoid().unit_name(u)}, {"basis", basis}, {"matrix", matrix_json(rep.matrix)}});
  }
  r.root()["element"] = element_to_json(alg.groupoid(), f);
  r.root()["reduced_norm"] = magnitude_json(norm.reduced_norm);
  if (norm.attained_at) r.root()["attained_at"] = alg.groupoid().unit_name(*norm.attained_at);
  r.root()["regular_representations"] = reps;

  Rng rng(seed_for(o, doc));
  const std::size_t count = samples_for(o, doc, 20);
  double worst = 0.0, mult = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const AlgebraElement x = alg.element(random_coefficients(rng, alg.dimension()));
    const AlgebraElement y = alg.element(random_coefficients(rng, alg.dimension()));
    const double nx = alg.reduced_norm(x).reduced_norm;
    const double nxx = alg.reduced_norm(alg.convolve(alg.involute(x), x)).reduced_norm;
    if (nx > 0) worst = std::max(worst, std::abs(nxx - nx * nx) / (nx * nx));
    for (UnitId u = 0; u < alg.groupoid().unit_count(); ++u) {
      const Matrix lhs = alg.regular_rep(alg.convolve(x, y), u).matrix;
      const Matrix rhs = alg.regular_rep(x, u).matrix * alg.regular_rep(y, u).matrix;
      mult = std::max(mult, max_abs_entry(lhs - rhs));
      mult = std::max(mult, max_abs_entry(alg.regular_rep(alg.involute(x), u).matrix - alg.regular_rep(x, u).matrix.adjoint()));
    }
  }
  r.check("C*-identity", worst <= 1e-9, {{"samples", count}, {"max_relative_error", residual_json(worst)}});
  r.check("regular representation is a *-homomorphism", mult <= 1e-12, {{"max_residual", residual_json(mult)}});
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_decompose(const Options& o) {
  Report r("decompose");
  const SpecDocument doc = load(o, r.root());
  const ExtensionModel model(require_cocycle(doc));
  const ModeWindow win = window_for(o, doc);
  const auto& g = model.groupoid();
  r.root()["modes"] = std::to_string(win.first) + ".." + std::to_string(win.last);

  Json per_mode = Json::array();
  for (std::int64_t n = win.first; n <= win.last; ++n) {
    const TwistedAlgebra alg = model.mode_algebra(n);
    per_mode.push_back({{"mode", n}, {"dimension", alg.dimension()}, {"center_dimension", alg.center_dimension()},
                        {"faithful", alg.full_norm_certificate().faithful}});
  }
  r.root()["summands"] = per_mode;

  double hom = 0.0;
  for (std::int64_t m = win.first; m <= win.last; ++m)
    for (std::int64_t n = win.first; n <= win.last; ++n)
      for (ArrowId a = 0; a < g.arrow_count(); ++a)
        for (ArrowId b = 0; b < g.arrow_count(); ++b) {
          reference::ModeCoefficients f{{m, std::vector<Complex>(g.arrow_count(), 0.0)}};
          reference::ModeCoefficients h{{n, std::vector<Complex>(g.arrow_count(), 0.0)}};
          f[m][a] = 1.0;
          h[n][b] = 1.0;
          const auto product = reference::convolve(model.cocycle(), f, h);
          for (std::int64_t p = win.first; p <= win.last; ++p) {
            const TwistedAlgebra alg = model.mode_algebra(p);
            const auto it = product.find(p);
            const AlgebraElement lhs = it == product.end() ? alg.zero() : alg.element(it->second);
            const AlgebraElement rhs = alg.convolve(model.upsilon(model.monomial(m, a), p), model.upsilon(model.monomial(n, b), p));
            hom = std::max(hom, max_difference(lhs, rhs));
          }
        }
  r.check("mode maps are homomorphisms on basis products", hom <= 1e-12, {{"max_residual", residual_json(hom)}});

  Rng rng(seed_for(o, doc));
  const std::size_t count = samples_for(o, doc, 20);
  std::vector<LaurentElement> samples;
  double inter = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    samples.push_back(random_laurent(rng, model, win));
    for (UnitId u = 0; u < g.unit_count(); ++u) inter = std::max(inter, intertwine_check(model, samples.back(), u, win).residual);
  }
  r.check("intertwining", inter <= 1e-12, {{"samples", count}, {"max_residual", residual_json(inter)}});
  const auto cert = reduced_decompose_check(model, samples);
  r.check("reduced norm through the decomposition", cert.passed(), {{"max_deviation", residual_json(cert.max_deviation)}});

  if (!o.element.empty()) {
    const LaurentElement f = laurent_from_json(model, read_json_argument(o.element));
    const Decomposition d = model.decompose(f);
    Json norms = Json::object();
    for (const auto& [n, v] : d.norms) norms[std::to_string(n)] = magnitude_json(v);
    r.root()["element"] = laurent_to_json(g, f);
    r.root()["mode_norms"] = norms;
    r.root()["norm"] = magnitude_json(d.norm);
  }
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_cyclic_oracle(const Options& o) {
  Report r("cyclic-oracle");
  const SpecDocument doc = load(o, r.root());
  const TwoCocycle w = require_cocycle(doc);
  const std::int64_t k = o.k ? o.k : doc.params.k.value_or(2);
  const CyclicExtension e = cyclic_extension(w, k);
  r.root()["k"] = k;
  r.root()["extension_arrows"] = e.groupoid.arrow_count();
  r.check("extension groupoid axioms", validate(e.groupoid).ok());
  const CyclicDecomposition d = cyclic_decompose(e);
  Json summands = Json::array();
  for (const auto& s : d.summands)
    summands.push_back({{"mode", s.mode},
                        {"dimension", s.dimension},
                        {"center_dimension", s.center_dimension},
                        {"graded_center_dimension", s.graded_center_dimension},
                        {"structure_exact", s.structure_exact},
                        {"structure_residual", residual_json(s.structure_residual)},
                        {"involution_exact", s.involution_exact}});
  r.root()["summands"] = summands;
  r.check("projections sum to the identity", d.projections_sum_to_identity);
  r.check("projections are orthogonal idempotents", d.projections_orthogonal);
  r.check("cross-mode products vanish", d.cross_products_vanish);
  r.check("faithful regular representations", d.faithful);
  r.check("oracle agreement", d.passed());

  const ExtensionModel model(w);
  const ModeWindow kwin{0, k - 1};
  Rng rng(seed_for(o, doc));
  const std::size_t count = samples_for(o, doc, 20);
  double dev = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const LaurentElement f = random_laurent(rng, model, kwin);
    dev = std::max(dev, std::abs(model.decompose(f).norm - oracle_reduced_norm(e, oracle_lift(e, f))));
  }
  r.check("max-of-modes norm equals oracle norm", dev <= 1e-9, {{"samples", count}, {"max_deviation", residual_json(dev)}});
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_morita(const Options& o) {
  Report r("morita");
  const SpecDocument doc = load(o, r.root());
  const ExtensionModel model(require_cocycle(doc));
  const auto& g = *doc.groupoid;
  const FullnessCertificate full = fullness_check(g);
  r.check("fullness", full.full(), {{"ideal_dimension", full.ideal_dimension},
                                    {"algebra_dimension", full.algebra_dimension},
                                    {"orbit_count", full.orbit_count}});
  r.root()["fixed_point_dimension"] = fixed_point_algebra(g).dimension();

  Rng rng(seed_for(o, doc));
  const std::size_t count = samples_for(o, doc, 20);
  bool homogeneous = true, positive = true;
  double hermitian = 0.0, min_eigen = 0.0;
  const TwistedAlgebra untwisted = model.mode_algebra(0);
  for (std::size_t i = 0; i < count; ++i) {
    const BimoduleElement f = random_coefficients(rng, g.unit_count());
    const BimoduleElement h = random_coefficients(rng, g.unit_count());
    homogeneous = homogeneous && supported_in_mode_zero(lift_left_inner(model, f, h, 2));
    hermitian = std::max(hermitian, max_difference(untwisted.involute(left_inner(untwisted, f, h)), left_inner(untwisted, h, f)));
    const auto p = positivity_check(g, f);
    positive = positive && p.positive;
    min_eigen = std::min(min_eigen, p.min_eigenvalue);
  }
  r.check("mode-zero homogeneity", homogeneous, {{"samples", count}});
  r.check("hermitian symmetry", hermitian <= 1e-12, {{"max_residual", residual_json(hermitian)}});
  r.check("positivity", positive, {{"min_eigenvalue", residual_json(min_eigen)}});
  const NonSaturationReport sat = non_saturation_check(model, 1);
  r.check("inner products generate only mode zero", sat.mode_zero_only(), {{"ideal_dimension", sat.ideal_dimension}});
  emit(o, r.finish());
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_verify_all(const Options& o) {
  const fs::path dir = o.path.empty() ? default_fixture_dir() : fs::path(o.path);
  std::vector<Fixture> fixtures;
  if (!o.fixture.empty())
    fixtures.push_back(load_fixture(dir, o.fixture));
  else
    fixtures = load_fixtures(dir);
  VerifyOptions v;
  v.seed = o.seed;
  v.samples = o.samples ? o.samples : 100;
  const auto results = run_criteria(fixtures, v);
  emit(o, verify_report(fixtures, v, results));
  for (const auto& r : results)
    if (!r.passed) return kExitFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids, twisted convolution algebras and circle-extension decompositions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--samples", o.samples, "Sample count for randomized checks");
  app.add_option("--modes", o.modes, "Mode window a..b");
  app.add_option("--k", o.k, "Order of the cyclic extension")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--fixture", o.fixture, "Bundled fixture name");
  app.add_option("--output", o.output, "Write the report to a file");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"validate", "Check groupoid axioms and the cocycle identity", cmd_validate},
      {"normalize", "Normalize the cocycle by a coboundary", cmd_normalize},
      {"trivialize", "Find a cochain whose coboundary is the cocycle", cmd_trivialize},
      {"algebra", "Report on the twisted algebra C(G, w^n)", cmd_algebra},
      {"decompose", "Mode decomposition of the extension algebra", cmd_decompose},
      {"cyclic-oracle", "Compare against the finite cyclic extension", cmd_cyclic_oracle},
      {"morita", "Imprimitivity inner products and fullness", cmd_morita},
      {"verify-all", "Run the full acceptance suite on the bundled fixtures", cmd_verify_all},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("path", o.path, std::string(c.name) == "verify-all" ? "Fixture directory" : "Document path");
    if (std::string(c.name) == "normalize") sub->add_option("--document", o.document, "Write the normalized document");
    if (std::string(c.name) == "algebra" || std::string(c.name) == "decompose")
      sub->add_option("--element", o.element, "Element as JSON text or file");
    if (std::string(c.name) == "algebra") sub->add_option("--power", o.power, "Cocycle power n");
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return selected(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInternal ? kExitFail : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
