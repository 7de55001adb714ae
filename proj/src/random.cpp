#include "grext/random.hpp"

#include <numeric>

#include "grext/error.hpp"

namespace grext {

namespace {

// A building block with a bicharacter ω(γ,η) = ζ_k^{t·a₂(γ)·c₁(η)} read off the
// abelian factor of each arrow.
struct Piece {
  std::string shape;
  FiniteGroupoid groupoid;
  std::vector<std::int64_t> first_coord;   // c₁ per arrow
  std::vector<std::int64_t> second_coord;  // a₂ per arrow
  std::int64_t twist = 0;                  // t
};

Piece pair_piece(std::size_t n) {
  Piece p{"pair(" + std::to_string(n) + ")", pair_groupoid(n), {}, {}, 0};
  p.first_coord.assign(p.groupoid.arrow_count(), 0);
  p.second_coord.assign(p.groupoid.arrow_count(), 0);
  return p;
}

Piece abelian_piece(Rng& rng, std::size_t points, const std::vector<std::size_t>& orders, std::int64_t k) {
  const FiniteGroupoid a = abelian_group(orders);
  Piece p;
  std::string name = "Z" + std::to_string(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i) name += "xZ" + std::to_string(orders[i]);
  if (points > 1) {
    p.groupoid = product_groupoid(pair_groupoid(points), a);
    p.shape = "pair(" + std::to_string(points) + ")x" + name;
  } else {
    p.groupoid = a;
    p.shape = name;
  }
  const std::size_t na = a.arrow_count();
  for (ArrowId x = 0; x < p.groupoid.arrow_count(); ++x) {
    const auto c = abelian_coordinates(orders, static_cast<ArrowId>(x % na));
    p.first_coord.push_back(static_cast<std::int64_t>(c[0]));
    p.second_coord.push_back(orders.size() > 1 ? static_cast<std::int64_t>(c[1]) : 0);
  }
  if (orders.size() > 1) {
    // ζ_k^{t a₂ c₁} is well defined when t·m₁ ≡ t·m₂ ≡ 0 (mod k).
    const auto d = std::gcd(std::gcd(static_cast<std::int64_t>(orders[0]), static_cast<std::int64_t>(orders[1])), k);
    p.twist = static_cast<std::int64_t>(rng.below(static_cast<std::size_t>(d))) * (k / d);
  }
  return p;
}

Piece random_piece(Rng& rng, std::int64_t k, std::size_t budget) {
  for (;;) {
    switch (rng.below(5)) {
      case 0: {
        const std::size_t n = 1 + rng.below(3);
        if (n * n <= budget) return pair_piece(n);
        break;
      }
      case 1: {
        static const std::vector<std::vector<std::size_t>> groups = {{2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 6}};
        const auto& o = groups[rng.below(groups.size())];
        if (std::accumulate(o.begin(), o.end(), std::size_t{1}, std::multiplies<>()) <= budget)
          return abelian_piece(rng, 1, o, k);
        break;
      }
      case 2: {
        static const std::vector<std::vector<std::size_t>> groups = {{2}, {3}, {2, 2}};
        const auto& o = groups[rng.below(groups.size())];
        const std::size_t size = 4 * std::accumulate(o.begin(), o.end(), std::size_t{1}, std::multiplies<>());
        if (size <= budget) return abelian_piece(rng, 2, o, k);
        break;
      }
      default: {
        const std::size_t n = 1 + rng.below(3);
        if (n * n <= budget) return pair_piece(n);
        break;
      }
    }
  }
}

Piece join(const Piece& a, const Piece& b) {
  Piece p;
  p.shape = a.shape + "+" + b.shape;
  p.groupoid = disjoint_union(a.groupoid, b.groupoid);
  p.first_coord = a.first_coord;
  p.first_coord.insert(p.first_coord.end(), b.first_coord.begin(), b.first_coord.end());
  p.second_coord = a.second_coord;
  p.second_coord.insert(p.second_coord.end(), b.second_coord.begin(), b.second_coord.end());
  return p;
}

RandomInstance finish(Rng& rng, const Piece& p, std::vector<std::int64_t> twist_of_arrow, std::int64_t k) {
  auto g = std::make_shared<const FiniteGroupoid>(p.groupoid);
  const TwoCocycle bichar = TwoCocycle::from_function(g, [&](ArrowId a, ArrowId b) {
    return CircleScalar::exact(twist_of_arrow[a] * p.second_coord[a] * p.first_coord[b], k);
  });
  const TwoCocycle w = multiply(bichar, coboundary(g, random_cochain(rng, *g, k, true)));
  return {p.shape, g, w, k};
}

}  // namespace

OneCochain random_cochain(Rng& rng, const FiniteGroupoid& g, std::int64_t k, bool normalized) {
  OneCochain b = OneCochain::constant(g.arrow_count(), CircleScalar::one());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::size_t>(k)));
    if (!(normalized && g.is_unit_arrow(a))) b.values[a] = CircleScalar::exact(j, k);
  }
  return b;
}

RandomInstance random_instance(Rng& rng, std::int64_t k, std::size_t max_arrows) {
  if (max_arrows == 0) throw Error(ErrorKind::kInvalidInput, "arrow budget must be positive");
  Piece p = random_piece(rng, k, max_arrows);
  std::vector<std::int64_t> twist(p.groupoid.arrow_count(), p.twist);
  const std::size_t left = max_arrows - p.groupoid.arrow_count();
  if (left >= 1 && rng.below(3) == 0) {
    const Piece q = random_piece(rng, k, left);
    twist.insert(twist.end(), q.groupoid.arrow_count(), q.twist);
    p = join(p, q);
  }
  return finish(rng, p, std::move(twist), k);
}

RandomInstance random_principal_instance(Rng& rng, std::int64_t k, std::size_t max_arrows) {
  Piece p;
  switch (rng.below(3)) {
    case 0:
      p = pair_piece(1 + rng.below(3));
      break;
    case 1: {
      const Piece a = pair_piece(1 + rng.below(3));
      const Piece b = pair_piece(1 + rng.below(2));
      p = join(a, b);
      break;
    }
    default: {
      // Cover of a small point set; each set is nonempty, points uncovered
      // by the random sets land in the last one.
      const std::size_t points = 1 + rng.below(2);
      const std::size_t sets = 2 + rng.below(2);
      std::vector<std::string> names;
      for (std::size_t x = 0; x < points; ++x) names.push_back(std::to_string(x + 1));
      std::vector<std::vector<std::size_t>> cover(sets);
      std::vector<bool> covered(points, false);
      for (std::size_t i = 0; i < sets; ++i)
        for (std::size_t x = 0; x < points; ++x)
          if (rng.below(2) == 0 || (i + 1 == sets && !covered[x]) || (x + 1 == points && cover[i].empty())) {
            cover[i].push_back(x);
            covered[x] = true;
          }
      p.groupoid = cover_groupoid(names, cover).groupoid;
      p.shape = "cover(" + std::to_string(points) + "," + std::to_string(sets) + ")";
      if (p.groupoid.arrow_count() > max_arrows) p = pair_piece(2);
      break;
    }
  }
  p.first_coord.assign(p.groupoid.arrow_count(), 0);
  p.second_coord.assign(p.groupoid.arrow_count(), 0);
  return finish(rng, p, std::vector<std::int64_t>(p.groupoid.arrow_count(), 0), k);
}

std::vector<Complex> random_coefficients(Rng& rng, std::size_t n, double density) {
  std::vector<Complex> c(n, 0.0);
  for (auto& x : c)
    if (rng.uniform() < density) x = rng.complex();
  return c;
}

LaurentElement random_laurent(Rng& rng, const ExtensionModel& model, ModeWindow window, double density) {
  LaurentElement f = model.zero();
  for (std::int64_t n = window.first; n <= window.last; ++n)
    f.modes.emplace(n, model.mode_algebra(n).element(random_coefficients(rng, model.groupoid().arrow_count(), density)));
  return f;
}

}  // namespace grext
