#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "grext/cocycle.hpp"
#include "grext/extension.hpp"
#include "grext/groupoid.hpp"
#include "grext/linalg.hpp"

namespace grext {

/// Seeded source with a portable mapping from raw 64-bit draws to integers
/// and doubles, so that generated instances agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  Complex complex() {
    const double re = symmetric();
    return {re, symmetric()};
  }

 private:
  std::mt19937_64 engine_;
};

/// A random finite groupoid (at most `max_arrows` arrows) with a normalized
/// μ_k-valued cocycle. The cocycle is a pulled-back bicharacter (possibly
/// cohomologically nontrivial on isotropy) times the coboundary of a random
/// normalized μ_k cochain.
struct RandomInstance {
  std::string shape;
  std::shared_ptr<const FiniteGroupoid> groupoid;
  TwoCocycle cocycle;
  std::int64_t k = 1;
};

RandomInstance random_instance(Rng& rng, std::int64_t k, std::size_t max_arrows = 12);
/// Principal groupoids only: pair groupoids, their disjoint unions and cover groupoids.
RandomInstance random_principal_instance(Rng& rng, std::int64_t k, std::size_t max_arrows = 12);

/// μ_k-valued cochain; `normalized` pins units to 1.
OneCochain random_cochain(Rng& rng, const FiniteGroupoid& g, std::int64_t k, bool normalized);

std::vector<Complex> random_coefficients(Rng& rng, std::size_t n, double density = 1.0);
LaurentElement random_laurent(Rng& rng, const ExtensionModel& model, ModeWindow window, double density = 0.7);

}  // namespace grext
