#pragma once

#include <memory>
#include <string>
#include <vector>

#include "grext/algebra.hpp"
#include "grext/cocycle.hpp"
#include "grext/error.hpp"
#include "grext/groupoid.hpp"
#include "grext/random.hpp"

namespace grext::test {

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr share(FiniteGroupoid g) { return std::make_shared<const FiniteGroupoid>(std::move(g)); }

inline ArrowId arrow(const FiniteGroupoid& g, const std::string& name) {
  auto a = g.find_arrow(name);
  if (!a) throw std::runtime_error("no arrow " + name);
  return *a;
}

inline UnitId unit(const FiniteGroupoid& g, const std::string& name) {
  auto u = g.find_unit(name);
  if (!u) throw std::runtime_error("no unit " + name);
  return *u;
}

/// Z₂² with ω((a,b),(c,d)) = (−1)^{bc}, written out from the coordinates.
inline TwoCocycle pauli_cocycle() {
  auto g = share(abelian_group({2, 2}));
  return TwoCocycle::from_function(g, [](ArrowId x, ArrowId y) {
    const auto p = abelian_coordinates({2, 2}, x);
    const auto q = abelian_coordinates({2, 2}, y);
    return CircleScalar::exact(static_cast<std::int64_t>(p[1] * q[0]), 2);
  });
}

inline bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

/// The error kind thrown by `fn`, or nothing.
template <class Fn>
std::optional<ErrorKind> thrown_kind(Fn&& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace grext::test
