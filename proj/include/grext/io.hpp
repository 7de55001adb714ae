#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "grext/algebra.hpp"
#include "grext/cocycle.hpp"
#include "grext/extension.hpp"
#include "grext/groupoid.hpp"

namespace grext {

using Json = nlohmann::ordered_json;

struct RunParams {
  std::optional<ModeWindow> modes;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> power;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
};

/// A groupoid document with optional cocycle and run parameters.
///
/// The cocycle is only attached when the groupoid tables pass validate();
/// otherwise `validation` carries the violations and `cocycle` stays empty
/// even if the document lists one.
struct SpecDocument {
  std::shared_ptr<const FiniteGroupoid> groupoid;
  ValidationReport validation;
  std::optional<TwoCocycle> cocycle;
  bool has_cocycle_field = false;
  RunParams params;

  /// The listed cocycle, or the trivial one.
  TwoCocycle cocycle_or_trivial() const;
};

/// Parse errors carry "line L" for syntax errors and the offending field
/// path for semantic ones; both are ErrorKind::kInvalidInput.
SpecDocument parse_document(std::string_view text);
SpecDocument load_document(const std::filesystem::path& path);

Json groupoid_to_json(const FiniteGroupoid& g);
Json cocycle_to_json(const TwoCocycle& w);
Json cochain_to_json(const FiniteGroupoid& g, const OneCochain& b);
Json params_to_json(const RunParams& p);
/// Canonical form: declaration order for units and arrows, compose sorted by
/// arrow ids, identities always listed, only non-unit cocycle values.
std::string serialize_document(const SpecDocument& doc);
std::string serialize_document(const FiniteGroupoid& g, const TwoCocycle* w, const RunParams* params);

/// "a..b", inclusive.
ModeWindow parse_window(const std::string& text);
std::string angle_text(const CircleScalar& z);

Json tag_to_json(const AlgebraTag& tag);
/// {"tag": ..., "coefficients": {arrow: [re, im]}} with zero entries omitted.
Json element_to_json(const FiniteGroupoid& g, const AlgebraElement& f);
/// Accepts the full form above or a bare coefficient map.
AlgebraElement element_from_json(const TwistedAlgebra& algebra, const Json& j);
/// {"modes": {"n": coefficient map}}.
Json laurent_to_json(const FiniteGroupoid& g, const LaurentElement& f);
LaurentElement laurent_from_json(const ExtensionModel& model, const Json& j);

}  // namespace grext
