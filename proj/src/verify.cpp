#include "grext/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "grext/algebra.hpp"
#include "grext/cyclic.hpp"
#include "grext/error.hpp"
#include "grext/ext_reference.hpp"
#include "grext/extension.hpp"
#include "grext/morita.hpp"
#include "grext/random.hpp"
#include "grext/report.hpp"

namespace grext {

namespace {

constexpr std::int64_t kCyclicOrders[] = {2, 3, 4, 6};

Rng criterion_rng(const VerifyOptions& o, int id) {
  return Rng(o.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id)));
}

ModeWindow window_of(const Fixture& f) { return f.doc.params.modes.value_or(ModeWindow{-1, 1}); }
std::int64_t k_of(const Fixture& f) { return f.doc.params.k.value_or(2); }

ExtensionModel model_of(const Fixture& f) { return ExtensionModel(f.doc.cocycle_or_trivial()); }

reference::ModeCoefficients coefficients_of(const LaurentElement& f) {
  reference::ModeCoefficients c;
  for (const auto& [n, e] : f.modes) c.emplace(n, e.coeff);
  return c;
}

LaurentElement laurent_of(const ExtensionModel& model, const reference::ModeCoefficients& c) {
  LaurentElement out = model.zero();
  for (const auto& [n, cn] : c) out.modes.emplace(n, model.mode_algebra(n).element(cn));
  return out;
}

CriterionResult start(int id) {
  for (const auto& c : criteria())
    if (c.id == id) return {id, c.name, false, "", Json::object()};
  return {id, "", false, "", Json::object()};
}

// Counts elements g of a one-unit groupoid with σ(g,h) = σ(h,g) for all h:
// the center dimension of a twisted abelian group algebra.
std::size_t regular_element_count(const TwoCocycle& sigma) {
  const auto& g = sigma.base();
  std::size_t count = 0;
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    bool regular = true;
    for (ArrowId b = 0; b < g.arrow_count() && regular; ++b)
      regular = sigma(a, b).equals(sigma(b, a));
    if (regular) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

CriterionResult cyclic_decomposition(const std::vector<Fixture>&, const VerifyOptions& o) {
  CriterionResult r = start(1);
  Rng rng = criterion_rng(o, 1);
  std::size_t exact = 0, validated = 0, passed = 0;
  double float_residual = 0.0;
  Json failures = Json::array();
  std::map<std::int64_t, std::size_t> per_k;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::int64_t k = kCyclicOrders[i % 4];
    const RandomInstance inst = random_instance(rng, k);
    const CyclicExtension e = cyclic_extension(inst.cocycle, k);
    std::vector<UnitId> units(inst.groupoid->unit_count());
    for (UnitId u = 0; u < units.size(); ++u) units[u] = u;
    const bool valid = validate(e.groupoid).ok() &&
                       check_morphism(e.groupoid, *inst.groupoid, units, e.projection()).morphism;
    if (valid) ++validated;
    const CyclicDecomposition d = cyclic_decompose(e);
    bool all_exact = true;
    for (const auto& s : d.summands) {
      all_exact = all_exact && s.structure_exact && s.involution_exact;
      float_residual = std::max(float_residual, s.structure_residual);
    }
    if (all_exact) ++exact;
    ++per_k[k];
    if (valid && d.passed()) {
      ++passed;
    } else if (failures.size() < 5) {
      failures.push_back({{"instance", i}, {"shape", inst.shape}, {"k", k}});
    }
  }
  r.passed = o.samples > 0 && passed == o.samples && float_residual <= 1e-10;
  Json ks = Json::object();
  for (auto [k, n] : per_k) ks[std::to_string(k)] = n;
  r.details = {{"instances", o.samples},    {"per_k", ks},
               {"validated", validated},    {"exact_structure_match", exact},
               {"certified", passed},       {"max_float_residual", residual_json(float_residual)},
               {"failures", failures}};
  r.summary = std::to_string(passed) + "/" + std::to_string(o.samples) + " instances certified, exact match " +
              std::to_string(exact) + "/" + std::to_string(o.samples);
  return r;
}

CriterionResult pauli_summands(const std::vector<Fixture>& fixtures, const VerifyOptions&) {
  CriterionResult r = start(2);
  const auto it = std::find_if(fixtures.begin(), fixtures.end(), [](const Fixture& f) { return f.name == "pauli"; });
  if (it == fixtures.end()) {
    r.summary = "pauli fixture missing";
    return r;
  }
  const TwoCocycle w = it->doc.cocycle_or_trivial();
  const CyclicDecomposition d = cyclic_decompose(cyclic_extension(w, 2));
  Json dims = Json::array(), centers = Json::array(), oracle = Json::array();
  bool ok = d.passed() && d.summands.size() == 2;
  const std::size_t want_dims[] = {4, 4}, want_centers[] = {4, 1};
  for (std::size_t n = 0; n < d.summands.size(); ++n) {
    const auto& s = d.summands[n];
    const std::size_t regular = regular_element_count(power(w, static_cast<std::int64_t>(n)));
    dims.push_back(s.dimension);
    centers.push_back(s.center_dimension);
    oracle.push_back(regular);
    if (n < 2) ok = ok && s.dimension == want_dims[n] && s.center_dimension == want_centers[n] && regular == want_centers[n];
  }
  r.passed = ok;
  r.details = {{"summand_dimensions", dims}, {"center_dimensions", centers}, {"regular_element_counts", oracle},
               {"decomposition_certified", d.passed()}};
  r.summary = "dims " + dims.dump() + ", centers " + centers.dump();
  return r;
}

CriterionResult mode_grading(const std::vector<Fixture>& fixtures, const VerifyOptions&) {
  CriterionResult r = start(3);
  std::size_t checked = 0, mismatches = 0;
  Json per = Json::object();
  for (const auto& fx : fixtures) {
    const ExtensionModel model = model_of(fx);
    const ModeWindow win = window_of(fx);
    const auto& g = model.groupoid();
    std::size_t local = 0, bad = 0;
    for (std::int64_t m = win.first; m <= win.last; ++m)
      for (std::int64_t n = win.first; n <= win.last; ++n) {
        const TwistedAlgebra alg = model.mode_algebra(n);
        for (ArrowId a = 0; a < g.arrow_count(); ++a)
          for (ArrowId b = 0; b < g.arrow_count(); ++b) {
            ++local;
            const auto ref = reference::basis_product(model.cocycle(), m, a, n, b);
            const LaurentElement graded = model.product(model.monomial(m, a), model.monomial(n, b));
            bool ok = true;
            if (m != n) {
              ok = !ref && std::all_of(graded.modes.begin(), graded.modes.end(),
                                       [](const auto& kv) { return kv.second.is_zero(); });
            } else {
              const auto sc = alg.structure_constant(a, b);
              ok = sc.has_value() == ref.has_value();
              if (ok && sc) ok = sc->arrow == ref->arrow && ref->mode == n && sc->phase.is_exact() &&
                                 ref->phase.is_exact() && sc->phase.equals(ref->phase);
              const AlgebraElement got = model.upsilon(graded, n);
              for (ArrowId c = 0; c < g.arrow_count() && ok; ++c) {
                const Complex want = (sc && sc->arrow == c) ? sc->phase.value() : Complex(0.0);
                ok = got.coeff[c] == want;
              }
            }
            if (!ok) ++bad;
          }
      }
    checked += local;
    mismatches += bad;
    per[fx.name] = {{"products", local}, {"mismatches", bad}};
  }
  r.passed = checked > 0 && mismatches == 0;
  r.details = {{"basis_products", checked}, {"mismatches", mismatches}, {"fixtures", per}};
  r.summary = std::to_string(checked) + " basis products, " + std::to_string(mismatches) + " mismatches";
  return r;
}

struct HomomorphismResiduals {
  double product = 0.0;
  double adjoint = 0.0;
  double projection = 0.0;
  double quadrature = 0.0;
  double inverse = 0.0;

  double max() const { return std::max({product, adjoint, projection, quadrature, inverse}); }
};

void homomorphism_residuals(const ExtensionModel& model, const LaurentElement& f, const LaurentElement& g,
                            ModeWindow win, HomomorphismResiduals& out, bool quadrature) {
  const auto& w = model.cocycle();
  const auto fc = coefficients_of(f);
  const LaurentElement fg = laurent_of(model, reference::convolve(w, fc, coefficients_of(g)));
  const LaurentElement fstar = laurent_of(model, reference::adjoint(w, fc));
  for (std::int64_t n = win.first; n <= win.last; ++n) {
    const TwistedAlgebra alg = model.mode_algebra(n);
    out.product = std::max(out.product, max_difference(model.upsilon(fg, n),
                                                       alg.convolve(model.upsilon(f, n), model.upsilon(g, n))));
    out.adjoint = std::max(out.adjoint, max_difference(model.upsilon(fstar, n), alg.involute(model.upsilon(f, n))));
    const LaurentElement cf = model.chi(f, n);
    out.projection = std::max(out.projection, max_difference(model.chi(cf, n), cf));
    out.projection = std::max(out.projection, max_difference(model.chi(fstar, n), model.adjoint(cf)));
    out.projection = std::max(out.projection, max_difference(model.chi(fg, n), model.product(cf, model.chi(g, n))));
    for (std::int64_t m = win.first; m <= win.last; ++m)
      if (m != n) out.projection = std::max(out.projection, max_difference(model.chi(model.chi(f, m), n), model.zero()));
    out.inverse = std::max(out.inverse, max_difference(model.upsilon(model.from_mode(n, model.upsilon(f, n)), n),
                                                       model.upsilon(f, n)));
    out.inverse = std::max(out.inverse, max_difference(model.from_mode(n, model.upsilon(f, n)), cf));
    if (quadrature) {
      const auto cc = coefficients_of(cf);
      const std::size_t points = win.size() + 2;
      for (const Complex t : {Complex(1.0), std::polar(1.0, 0.7), std::polar(1.0, 2.9)})
        for (ArrowId a = 0; a < model.groupoid().arrow_count(); ++a)
          out.quadrature = std::max(out.quadrature, std::abs(reference::fourier_projection(fc, n, t, a, 2 * points) -
                                                             reference::evaluate(cc, t, a)));
    }
  }
  LaurentElement sum = model.zero();
  for (std::int64_t n = win.first; n <= win.last; ++n) sum = model.add(sum, model.chi(f, n));
  out.projection = std::max(out.projection, max_difference(sum, f));
}

CriterionResult mode_homomorphisms(const std::vector<Fixture>& fixtures, const VerifyOptions& o) {
  CriterionResult r = start(4);
  Rng rng = criterion_rng(o, 4);
  HomomorphismResiduals basis, random;
  std::size_t basis_pairs = 0;
  for (const auto& fx : fixtures) {
    const ExtensionModel model = model_of(fx);
    const ModeWindow win = window_of(fx);
    const auto& g = model.groupoid();
    for (std::int64_t m = win.first; m <= win.last; ++m)
      for (std::int64_t n = win.first; n <= win.last; ++n)
        for (ArrowId a = 0; a < g.arrow_count(); ++a)
          for (ArrowId b = 0; b < g.arrow_count(); ++b) {
            homomorphism_residuals(model, model.monomial(m, a), model.monomial(n, b), win, basis, false);
            ++basis_pairs;
          }
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Fixture& fx = fixtures[i % fixtures.size()];
    const ExtensionModel model = model_of(fx);
    const ModeWindow win = window_of(fx);
    homomorphism_residuals(model, random_laurent(rng, model, win), random_laurent(rng, model, win), win, random, true);
  }
  const double worst = std::max(basis.max(), random.max());
  r.passed = basis_pairs > 0 && worst <= 1e-12;
  auto dump = [](const HomomorphismResiduals& h) {
    return Json{{"product", residual_json(h.product)},       {"adjoint", residual_json(h.adjoint)},
                {"projection", residual_json(h.projection)}, {"quadrature", residual_json(h.quadrature)},
                {"inverse", residual_json(h.inverse)}};
  };
  r.details = {{"basis_pairs", basis_pairs}, {"random_pairs", o.samples}, {"basis", dump(basis)}, {"random", dump(random)}};
  r.summary = std::to_string(basis_pairs) + " basis pairs and " + std::to_string(o.samples) + " random pairs";
  return r;
}

CriterionResult intertwining(const std::vector<Fixture>& fixtures, const VerifyOptions& o) {
  CriterionResult r = start(5);
  Rng rng = criterion_rng(o, 5);
  double intertwine = 0.0, gram = 0.0, deviation = 0.0, oracle = 0.0;
  std::size_t intertwined = 0, oracle_samples = 0;
  Json per = Json::object();
  for (const auto& fx : fixtures) {
    const ExtensionModel model = model_of(fx);
    const ModeWindow win = window_of(fx);
    const auto& g = model.groupoid();
    for (UnitId u = 0; u < g.unit_count(); ++u) {
      const Matrix gm = mode_gram_matrix(g, u, win);
      gram = std::max(gram, max_abs_entry(gm - Matrix::Identity(gm.rows(), gm.cols())));
    }
    std::vector<LaurentElement> samples;
    double local = 0.0;
    for (std::size_t i = 0; i < o.samples; ++i) {
      samples.push_back(random_laurent(rng, model, win));
      for (UnitId u = 0; u < g.unit_count(); ++u)
        local = std::max(local, intertwine_check(model, samples.back(), u, win).residual);
      ++intertwined;
    }
    const auto cert = reduced_decompose_check(model, samples);
    intertwine = std::max(intertwine, local);
    deviation = std::max(deviation, cert.max_deviation);

    // Oracle: lift to μ_k ×_ω G with k consecutive modes.
    const std::int64_t k = k_of(fx);
    double local_oracle = 0.0;
    const CyclicExtension e = cyclic_extension(model.cocycle(), k);
    const ModeWindow kwin{win.first, win.first + k - 1};
    for (std::size_t i = 0; i < std::max<std::size_t>(1, o.samples / 5); ++i) {
      const LaurentElement f = random_laurent(rng, model, kwin);
      local_oracle = std::max(local_oracle, std::abs(model.decompose(f).norm - oracle_reduced_norm(e, oracle_lift(e, f))));
      ++oracle_samples;
    }
    oracle = std::max(oracle, local_oracle);
    per[fx.name] = {{"intertwine_residual", residual_json(local)},
                    {"norm_deviation", residual_json(cert.max_deviation)},
                    {"oracle_deviation", residual_json(local_oracle)}};
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::int64_t k = kCyclicOrders[i % 4];
    const RandomInstance inst = random_instance(rng, k);
    const ExtensionModel model(inst.cocycle);
    const CyclicExtension e = cyclic_extension(inst.cocycle, k);
    const LaurentElement f = random_laurent(rng, model, {0, k - 1});
    oracle = std::max(oracle, std::abs(model.decompose(f).norm - oracle_reduced_norm(e, oracle_lift(e, f))));
    ++oracle_samples;
  }
  r.passed = intertwined > 0 && intertwine <= 1e-12 && gram == 0.0 && deviation <= 1e-9 && oracle <= 1e-9;
  r.details = {{"intertwined_elements", intertwined},
               {"max_intertwine_residual", residual_json(intertwine)},
               {"mode_basis_gram_defect", residual_json(gram)},
               {"max_norm_deviation", residual_json(deviation)},
               {"oracle_comparisons", oracle_samples},
               {"max_oracle_deviation", residual_json(oracle)},
               {"fixtures", per}};
  r.summary = std::to_string(intertwined) + " windowed elements, " + std::to_string(oracle_samples) + " oracle norms";
  return r;
}

CriterionResult faithfulness(const std::vector<Fixture>& fixtures, const VerifyOptions& o) {
  CriterionResult r = start(6);
  Rng rng = criterion_rng(o, 6);
  std::size_t algebras = 0, faithful = 0, extensions = 0, faithful_ext = 0;
  auto check = [&](const TwoCocycle& w, std::int64_t k, std::set<std::int64_t> powers) {
    for (std::int64_t n = 0; n < k; ++n) powers.insert(n);
    for (std::int64_t n : powers) {
      ++algebras;
      if (TwistedAlgebra(w, n).full_norm_certificate().faithful) ++faithful;
    }
    const CyclicExtension e = cyclic_extension(w, k);
    ++extensions;
    if (oracle_representation_rank(e) == e.groupoid.arrow_count()) ++faithful_ext;
  };
  for (const auto& fx : fixtures) {
    std::set<std::int64_t> powers;
    for (std::int64_t n = window_of(fx).first; n <= window_of(fx).last; ++n) powers.insert(n);
    check(fx.doc.cocycle_or_trivial(), k_of(fx), powers);
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::int64_t k = kCyclicOrders[i % 4];
    check(random_instance(rng, k).cocycle, k, {});
  }
  r.passed = algebras > 0 && faithful == algebras && faithful_ext == extensions;
  r.details = {{"twisted_algebras", algebras}, {"faithful_algebras", faithful},
               {"cyclic_extensions", extensions}, {"faithful_extensions", faithful_ext}};
  r.summary = std::to_string(faithful) + "/" + std::to_string(algebras) + " algebras, " +
              std::to_string(faithful_ext) + "/" + std::to_string(extensions) + " extensions faithful";
  return r;
}

CriterionResult cstar_identity(const std::vector<Fixture>& fixtures, const VerifyOptions& o) {
  CriterionResult r = start(7);
  Rng rng = criterion_rng(o, 7);
  const std::size_t count = 5 * o.samples;
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Fixture& fx = fixtures[i % fixtures.size()];
    const ModeWindow win = window_of(fx);
    const std::int64_t n = win.first + static_cast<std::int64_t>(rng.below(win.size()));
    const TwistedAlgebra alg(fx.doc.cocycle_or_trivial(), n);
    const AlgebraElement f = alg.element(random_coefficients(rng, alg.dimension(), 0.8));
    const double nf = alg.reduced_norm(f).reduced_norm;
    const double nff = alg.reduced_norm(alg.convolve(alg.involute(f), f)).reduced_norm;
    const double scale = std::max(nf * nf, 1e-300);
    if (nf > 0.0) worst = std::max(worst, std::abs(nff - nf * nf) / scale);
  }
  r.passed = count > 0 && worst <= 1e-9;
  r.details = {{"elements", count}, {"max_relative_error", residual_json(worst)}};
  r.summary = std::to_string(count) + " elements";
  return r;
}

CriterionResult cocycle_calculus(const std::vector<Fixture>& fixtures, const VerifyOptions& o) {
  CriterionResult r = start(8);
  Rng rng = criterion_rng(o, 8);

  std::size_t normalized = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::int64_t k = kCyclicOrders[i % 4];
    const RandomInstance inst = random_instance(rng, k);
    const TwoCocycle w = multiply(inst.cocycle, coboundary(inst.groupoid, random_cochain(rng, *inst.groupoid, k, false)));
    const Normalization nw = normalize(w);
    const Normalization again = normalize(nw.cocycle);
    const TwoCocycle expect = multiply(w, power(coboundary(inst.groupoid, nw.cochain), -1));
    if (nw.cocycle.normalized() && nw.cocycle.identity_checked() && same_values(again.cocycle, nw.cocycle, 0.0) &&
        same_values(expect, nw.cocycle, 0.0))
      ++normalized;
  }

  std::size_t trivialized = 0, solved = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::int64_t k = kCyclicOrders[i % 4];
    const RandomInstance inst = random_principal_instance(rng, k);
    const OneCochain b = trivialize_principal(inst.cocycle);
    if (same_values(coboundary(inst.groupoid, b), inst.cocycle, 0.0)) ++trivialized;
    const auto s = solve_coboundary(inst.cocycle);
    if (s && same_values(coboundary(inst.groupoid, *s), inst.cocycle, 0.0)) ++solved;
  }

  bool pauli_nontrivial = false;
  std::size_t searched = 0, hits = 0;
  const auto it = std::find_if(fixtures.begin(), fixtures.end(), [](const Fixture& f) { return f.name == "pauli"; });
  if (it != fixtures.end()) {
    const TwoCocycle w = it->doc.cocycle_or_trivial();
    pauli_nontrivial = !solve_coboundary(w).has_value();
    const std::size_t n = w.base().arrow_count();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      OneCochain b = OneCochain::constant(n, CircleScalar::one());
      std::size_t c = code;
      for (std::size_t a = 0; a < n; ++a, c /= 4) b.values[a] = CircleScalar::exact(static_cast<std::int64_t>(c % 4), 4);
      ++searched;
      if (same_values(coboundary(w.base_ptr(), b), w, 0.0)) ++hits;
    }
  }
  r.passed = o.samples > 0 && normalized == o.samples && trivialized == o.samples && solved == o.samples &&
             pauli_nontrivial && hits == 0 && searched == 256;
  r.details = {{"normalized", normalized},
               {"trivialized_exactly", trivialized},
               {"solved_exactly", solved},
               {"instances", o.samples},
               {"pauli_solver_none", pauli_nontrivial},
               {"pauli_mu4_cochains_searched", searched},
               {"pauli_mu4_coboundary_hits", hits}};
  r.summary = "normalize " + std::to_string(normalized) + ", trivialize " + std::to_string(trivialized) +
              ", pauli class nontrivial: " + (pauli_nontrivial && hits == 0 ? "yes" : "no");
  return r;
}

CriterionResult isotropy_quotient(const std::vector<Fixture>&, const VerifyOptions& o) {
  CriterionResult r = start(9);
  Rng rng = criterion_rng(o, 9);
  const std::size_t count = std::max<std::size_t>(1, o.samples / 2);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t k = kCyclicOrders[i % 4];
    const RandomInstance inst = random_principal_instance(rng, k);
    const FiniteGroupoid& g = *inst.groupoid;
    const CyclicExtension e = cyclic_extension(inst.cocycle, k);
    const IsotropyQuotient q = quotient_by_isotropy(e.groupoid);
    std::vector<UnitId> units(g.unit_count());
    for (UnitId u = 0; u < units.size(); ++u) units[u] = u;
    std::vector<ArrowId> arrows(q.quotient.arrow_count());
    for (ArrowId a = 0; a < arrows.size(); ++a) arrows[a] = e.base_arrow(q.representative[a]);
    const bool ext_iso = validate(q.quotient).ok() && check_morphism(q.quotient, g, units, arrows).isomorphism();
    const IsotropyQuotient qg = quotient_by_isotropy(g);
    std::vector<ArrowId> base(qg.quotient.arrow_count());
    for (ArrowId a = 0; a < base.size(); ++a) base[a] = qg.representative[a];
    const bool base_iso = check_morphism(qg.quotient, g, units, base).isomorphism();
    if (ext_iso && base_iso) ++ok;
  }
  r.passed = ok == count;
  r.details = {{"instances", count}, {"isomorphisms", ok}};
  r.summary = std::to_string(ok) + "/" + std::to_string(count) + " explicit isomorphisms";
  return r;
}

CriterionResult imprimitivity(const std::vector<Fixture>& fixtures, const VerifyOptions& o) {
  CriterionResult r = start(10);
  Rng rng = criterion_rng(o, 10);
  Json per = Json::object();
  std::vector<const Fixture*> principal;
  bool ok = true;
  for (const auto& fx : fixtures) {
    if (!is_principal(*fx.doc.groupoid)) {
      bool refused = false;
      try {
        fullness_check(*fx.doc.groupoid);
      } catch (const Error& e) {
        refused = e.kind() == ErrorKind::kPrecondition;
      }
      ok = ok && refused;
      per[fx.name] = {{"principal", false}, {"hypotheses_refused", refused}};
      continue;
    }
    principal.push_back(&fx);
    const auto& g = *fx.doc.groupoid;
    const ExtensionModel model = model_of(fx);
    const FullnessCertificate full = fullness_check(g);
    bool homogeneous = true;
    double hermitian = 0.0;
    const TwistedAlgebra untwisted = model.mode_algebra(0);
    for (UnitId u = 0; u < g.unit_count(); ++u)
      for (UnitId v = 0; v < g.unit_count(); ++v) {
        BimoduleElement du(g.unit_count(), 0.0), dv(g.unit_count(), 0.0);
        du[u] = 1.0;
        dv[v] = 1.0;
        const auto lift = lift_left_inner(model, du, dv, 2);
        homogeneous = homogeneous && supported_in_mode_zero(lift);
        hermitian = std::max(hermitian, max_difference(untwisted.involute(left_inner(untwisted, du, dv)),
                                                       left_inner(untwisted, dv, du)));
      }
    const NonSaturationReport sat = non_saturation_check(model, 1);
    const FixedPointAlgebra fp = fixed_point_algebra(g);
    const bool local = full.full() && homogeneous && hermitian <= 1e-12 && sat.mode_zero_only() &&
                       fp.dimension() == full.orbit_count;
    ok = ok && local;
    per[fx.name] = {{"principal", true},
                    {"ideal_dimension", full.ideal_dimension},
                    {"algebra_dimension", full.algebra_dimension},
                    {"orbit_count", full.orbit_count},
                    {"fixed_point_dimension", fp.dimension()},
                    {"mode_zero_homogeneous", homogeneous},
                    {"hermitian_residual", residual_json(hermitian)},
                    {"ideal_leaves_mode_zero", !sat.mode_zero_only()}};
  }
  const std::size_t count = 2 * o.samples;
  std::size_t positive = 0;
  double min_eigen = 0.0;
  for (std::size_t i = 0; i < count && !principal.empty(); ++i) {
    const auto& g = *principal[i % principal.size()]->doc.groupoid;
    const auto rep = positivity_check(g, random_coefficients(rng, g.unit_count()));
    if (rep.positive) ++positive;
    min_eigen = std::min(min_eigen, rep.min_eigenvalue);
  }
  r.passed = ok && !principal.empty() && positive == count;
  r.details = {{"fixtures", per}, {"positivity_samples", count}, {"positive", positive},
               {"min_eigenvalue", residual_json(min_eigen)}};
  r.summary = std::to_string(principal.size()) + " principal fixtures full, " + std::to_string(positive) + "/" +
              std::to_string(count) + " positive";
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "cyclic-extension decomposition", cyclic_decomposition},
      {2, "pauli summands", pauli_summands},
      {3, "mode grading", mode_grading},
      {4, "mode projections and homomorphisms", mode_homomorphisms},
      {5, "intertwining and reduced norms", intertwining},
      {6, "faithful regular representations", faithfulness},
      {7, "C*-identity", cstar_identity},
      {8, "cocycle calculus", cocycle_calculus},
      {9, "isotropy quotient of cyclic extensions", isotropy_quotient},
      {10, "imprimitivity inner products", imprimitivity},
  };
  return list;
}

std::vector<CriterionResult> run_criteria(const std::vector<Fixture>& fixtures, const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    try {
      out.push_back(c.run(fixtures, options));
    } catch (const Error& e) {
      CriterionResult r{c.id, c.name, false, std::string("error: ") + e.what(), Json::object()};
      r.details["error"] = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

Json verify_report(const std::vector<Fixture>& fixtures, const VerifyOptions& options,
                   const std::vector<CriterionResult>& results) {
  Json j = Json::object();
  j["report"] = "verify-all";
  j["tool"] = {{"name", "grext"}, {"version", GREXT_VERSION}};
  j["seed"] = options.seed;
  j["samples"] = options.samples;
  j["fixtures"] = Json::array();
  for (const auto& f : fixtures) j["fixtures"].push_back(f.name);
  j["criteria"] = Json::array();
  bool all = !results.empty();
  for (const auto& r : results) {
    j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"status", status_text(r.passed)}, {"details", r.details}});
    all = all && r.passed;
  }
  j["status"] = status_text(all);
  return j;
}

}  // namespace grext
