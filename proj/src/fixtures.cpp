#include "grext/fixtures.hpp"

#include <cstdlib>

#include "grext/error.hpp"

#ifndef GREXT_DEFAULT_FIXTURE_DIR
#define GREXT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace grext {

namespace {

SpecDocument make(FiniteGroupoid g, const std::function<CircleScalar(ArrowId, ArrowId)>& omega, RunParams params) {
  SpecDocument doc;
  doc.groupoid = std::make_shared<const FiniteGroupoid>(std::move(g));
  doc.validation = validate(*doc.groupoid);
  doc.has_cocycle_field = true;
  doc.cocycle = TwoCocycle::from_function(doc.groupoid, omega);
  doc.params = params;
  return doc;
}

CircleScalar one(ArrowId, ArrowId) { return CircleScalar::one(); }

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"pair2", "pair3_mu4", "z2", "pauli", "z3_heisenberg", "cover3", "disjoint"};
  return names;
}

SpecDocument build_fixture(const std::string& name) {
  if (name == "pair2") return make(pair_groupoid(2), one, {ModeWindow{-1, 1}, 2, 1, {}, {}});
  if (name == "pair3_mu4") {
    // Normalized coboundary of b((i,j)) = ζ₄^{i+2j}, i ≠ j.
    auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(3));
    OneCochain b = OneCochain::constant(9, CircleScalar::one());
    for (ArrowId a = 0; a < 9; ++a)
      if (a / 3 != a % 3) b.values[a] = CircleScalar::exact(static_cast<std::int64_t>(a / 3 + 2 * (a % 3)), 4);
    const TwoCocycle w = coboundary(g, b);
    return make(pair_groupoid(3), [w](ArrowId x, ArrowId y) { return w(x, y); }, {ModeWindow{-1, 2}, 4, 1, {}, {}});
  }
  if (name == "z2") return make(abelian_group({2}), one, {ModeWindow{0, 1}, 2, 1, {}, {}});
  if (name == "pauli") {
    // ω((a,b),(c,d)) = (−1)^{bc}; element (a,b) has id 2a + b.
    return make(abelian_group({2, 2}), [](ArrowId x, ArrowId y) { return CircleScalar::exact((x % 2) * (y / 2), 2); },
                {ModeWindow{-1, 1}, 2, 1, {}, {}});
  }
  if (name == "z3_heisenberg") {
    return make(abelian_group({3, 3}), [](ArrowId x, ArrowId y) { return CircleScalar::exact((x % 3) * (y / 3), 3); },
                {ModeWindow{-1, 1}, 3, 1, {}, {}});
  }
  if (name == "cover3") {
    // λ = δμ with μ₁₂ = ζ₅, so λ₁₂₃(x) = ζ₅.
    const CoverGroupoid c = cover_groupoid({"x"}, {{0}, {0}, {0}});
    auto mu = [](std::size_t i, std::size_t j) { return i == 0 && j == 1 ? CircleScalar::exact(1, 5) : CircleScalar::one(); };
    const TwoCocycle w = cech_cocycle(c, [&](std::size_t i, std::size_t j, std::size_t k, std::size_t) {
      return std::optional<CircleScalar>(mu(i, j) * mu(j, k) * mu(i, k).conj());
    });
    return make(c.groupoid, [w](ArrowId x, ArrowId y) { return w(x, y); }, {ModeWindow{-2, 2}, 5, 1, {}, {}});
  }
  if (name == "disjoint") return make(disjoint_union(pair_groupoid(2), pair_groupoid(1)), one, {ModeWindow{-1, 1}, 2, 1, {}, {}});
  throw Error(ErrorKind::kInvalidInput, "unknown fixture '" + name + "'");
}

Fixture load_fixture(const std::filesystem::path& dir, const std::string& name) {
  return {name, load_document(dir / (name + ".json"))};
}

std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<Fixture> out;
  for (const auto& name : fixture_names()) out.push_back(load_fixture(dir, name));
  return out;
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("GREXT_FIXTURE_DIR"); env && *env) return env;
  return GREXT_DEFAULT_FIXTURE_DIR;
}

}  // namespace grext
