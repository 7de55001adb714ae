#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "grext/io.hpp"

namespace grext {

/// A named document bundled under fixtures/.
struct Fixture {
  std::string name;
  SpecDocument doc;
};

/// Names of the bundled fixtures, in report order.
const std::vector<std::string>& fixture_names();

/// The document a bundled fixture is generated from.
SpecDocument build_fixture(const std::string& name);

Fixture load_fixture(const std::filesystem::path& dir, const std::string& name);
std::vector<Fixture> load_fixtures(const std::filesystem::path& dir);

/// $GREXT_FIXTURE_DIR, else the directory compiled in.
std::filesystem::path default_fixture_dir();

}  // namespace grext
