#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grext/fixtures.hpp"
#include "grext/io.hpp"

namespace grext {

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Base sample count; criteria that ask for more or fewer samples scale it.
  std::size_t samples = 100;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  Json details = Json::object();
};

using CriterionFn = CriterionResult (*)(const std::vector<Fixture>&, const VerifyOptions&);

struct Criterion {
  int id;
  const char* name;
  CriterionFn run;
};

/// Criteria 1-10: the checks that run in-process. Each criterion draws from
/// its own generator seeded by (seed, id).
const std::vector<Criterion>& criteria();

std::vector<CriterionResult> run_criteria(const std::vector<Fixture>& fixtures, const VerifyOptions& options);

/// Machine report for verify-all.
Json verify_report(const std::vector<Fixture>& fixtures, const VerifyOptions& options,
                   const std::vector<CriterionResult>& results);

}  // namespace grext
