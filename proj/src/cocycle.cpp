#include "grext/cocycle.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "grext/error.hpp"
#include "hash.hpp"

namespace grext {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool stored_value_is_one(const CircleScalar& c) { return c.is_exact() ? c.angle().is_zero() : c.turns() == 0.0; }

std::string pair_name(const FiniteGroupoid& g, ArrowId a, ArrowId b) {
  return "(" + g.arrow_name(a) + ", " + g.arrow_name(b) + ")";
}

}  // namespace

TwoCocycle::TwoCocycle(std::shared_ptr<const FiniteGroupoid> base, std::map<ComposablePair, CircleScalar> values)
    : base_(std::move(base)) {
  if (!base_) throw Error(ErrorKind::kInvalidInput, "cocycle without a base groupoid");
  for (auto& [p, v] : values) {
    if (p.first >= base_->arrow_count() || p.second >= base_->arrow_count() ||
        !base_->composable(p.first, p.second))
      throw Error(ErrorKind::kInvalidInput, "cocycle value on a non-composable pair");
    if (!stored_value_is_one(v)) values_.emplace(p, v);
  }
  identity_holds_ = check_identity(*this).ok();
  normalized_ = is_normalized(*this);

  Fnv1a h;
  h.add(base_->fingerprint());
  for (const auto& [p, v] : values_) {
    h.add(p.first);
    h.add(p.second);
    if (v.is_exact()) {
      h.add(static_cast<std::uint64_t>(v.angle().num()));
      h.add(static_cast<std::uint64_t>(v.angle().den()));
    } else {
      h.add(std::bit_cast<std::uint64_t>(v.turns()));
    }
  }
  fingerprint_ = h.value();
}

TwoCocycle TwoCocycle::trivial(std::shared_ptr<const FiniteGroupoid> base) { return TwoCocycle(std::move(base), {}); }

TwoCocycle TwoCocycle::from_function(std::shared_ptr<const FiniteGroupoid> base,
                                     const std::function<CircleScalar(ArrowId, ArrowId)>& value) {
  std::map<ComposablePair, CircleScalar> values;
  for (const auto& p : base->composable_pairs()) values.emplace(p, value(p.first, p.second));
  return TwoCocycle(std::move(base), std::move(values));
}

CircleScalar TwoCocycle::operator()(ArrowId a, ArrowId b) const {
  if (!base_->composable(a, b))
    throw Error(ErrorKind::kPrecondition, "cocycle evaluated on non-composable pair " + pair_name(*base_, a, b));
  auto it = values_.find({a, b});
  return it == values_.end() ? CircleScalar::one() : it->second;
}

bool TwoCocycle::is_exact() const {
  for (const auto& [p, v] : values_)
    if (!v.is_exact()) return false;
  return true;
}

std::optional<std::int64_t> TwoCocycle::order() const {
  std::int64_t k = 1;
  for (const auto& [p, v] : values_) {
    if (!v.is_exact()) return std::nullopt;
    k = std::lcm(k, v.angle().den());
  }
  return k;
}

CocycleReport check_identity(const TwoCocycle& w, double tol) {
  CocycleReport report;
  const auto& g = w.base();
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    for (ArrowId b : g.range_fiber(g.source(a))) {
      const auto ab = g.compose(a, b);
      if (!ab) continue;
      for (ArrowId c : g.range_fiber(g.source(b))) {
        const auto bc = g.compose(b, c);
        if (!bc) continue;
        const CircleScalar lhs = w(a, b) * w(*ab, c);
        const CircleScalar rhs = w(b, c) * w(a, *bc);
        if (!lhs.equals(rhs, tol)) report.violations.push_back({a, b, c, lhs, rhs});
      }
    }
  return report;
}

bool is_normalized(const TwoCocycle& w, double tol) {
  const auto& g = w.base();
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    if (!w(g.unit_arrow(g.range(a)), a).is_one(tol)) return false;
    if (!w(a, g.unit_arrow(g.source(a))).is_one(tol)) return false;
  }
  return true;
}

TwoCocycle coboundary(std::shared_ptr<const FiniteGroupoid> base, const OneCochain& b) {
  if (b.values.size() != base->arrow_count())
    throw Error(ErrorKind::kInvalidInput, "1-cochain does not match the groupoid");
  const auto& g = *base;
  return TwoCocycle::from_function(base, [&](ArrowId x, ArrowId y) {
    const auto xy = g.compose(x, y);
    if (!xy) throw Error(ErrorKind::kPrecondition, "composition table has a hole at " + pair_name(g, x, y));
    return b(x) * b(y) * b(*xy).conj();
  });
}

Normalization normalize(const TwoCocycle& w) {
  const auto& g = w.base();
  OneCochain b;
  b.values.reserve(g.arrow_count());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) b.values.push_back(w(g.unit_arrow(g.range(a)), a));
  const TwoCocycle db = coboundary(w.base_ptr(), b);
  return {TwoCocycle::from_function(w.base_ptr(), [&](ArrowId x, ArrowId y) { return w(x, y) * db(x, y).conj(); }),
          std::move(b)};
}

TwoCocycle power(const TwoCocycle& w, std::int64_t n) {
  std::map<ComposablePair, CircleScalar> values;
  for (const auto& [p, v] : w.entries()) values.emplace(p, v.pow(n));
  return TwoCocycle(w.base_ptr(), std::move(values));
}

TwoCocycle multiply(const TwoCocycle& a, const TwoCocycle& b) {
  if (a.base().fingerprint() != b.base().fingerprint())
    throw Error(ErrorKind::kTagMismatch, "cocycles live on different groupoids");
  return TwoCocycle::from_function(a.base_ptr(), [&](ArrowId x, ArrowId y) { return a(x, y) * b(x, y); });
}

bool same_values(const TwoCocycle& a, const TwoCocycle& b, double tol) {
  if (a.base().fingerprint() != b.base().fingerprint()) return false;
  for (const auto& p : a.base().composable_pairs())
    if (!a(p.first, p.second).equals(b(p.first, p.second), tol)) return false;
  return true;
}

double max_distance(const TwoCocycle& a, const TwoCocycle& b) {
  double worst = 0.0;
  for (const auto& p : a.base().composable_pairs())
    worst = std::max(worst, a(p.first, p.second).distance(b(p.first, p.second)));
  return worst;
}

TwoCocycle pullback(const TwoCocycle& w, std::shared_ptr<const FiniteGroupoid> g, std::span<const ArrowId> arrow_map) {
  if (arrow_map.size() != g->arrow_count()) throw Error(ErrorKind::kInvalidInput, "arrow map size mismatch");
  return TwoCocycle::from_function(std::move(g), [&](ArrowId x, ArrowId y) { return w(arrow_map[x], arrow_map[y]); });
}

OneCochain trivialize_principal(const TwoCocycle& w) {
  const auto& g = w.base();
  if (auto witness = nontrivial_isotropy_arrow(g))
    throw Error(ErrorKind::kIsotropyObstruction,
                "isotropy obstruction: arrow '" + g.arrow_name(*witness) + "' is a non-unit loop");
  const auto orb = orbits(g);

  // alpha[v]: the unique arrow from the orbit's base unit to v.
  std::vector<ArrowId> alpha(g.unit_count(), kNoArrow);
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    const UnitId base_unit = orb.orbits[orb.orbit_of[g.range(a)]].front();
    if (g.source(a) == base_unit) alpha[g.range(a)] = a;
  }

  OneCochain b;
  b.values.reserve(g.arrow_count());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) b.values.push_back(w(a, alpha[g.source(a)]));

  const TwoCocycle db = coboundary(w.base_ptr(), b);
  if (!same_values(db, w))
    throw Error(ErrorKind::kPrecondition, "trivialization does not reproduce ω; the cocycle identity fails");
  return b;
}

// Over ℚ/ℤ: find β ∈ ℚ^A with Mβ ≡ θ (mod ℤ^P). Integer row reduction
// U·M = H with U unimodular; the zero rows of H give a basis y of the
// integer left kernel, and the system is solvable iff y·θ ∈ ℤ for each. The
// nonzero rows of H are then solved exactly over ℚ.
std::optional<OneCochain> solve_coboundary(const TwoCocycle& w) {
  if (!w.is_exact()) throw Error(ErrorKind::kPrecondition, "exact angles required");
  const auto& g = w.base();
  const auto pairs = g.composable_pairs();
  const std::size_t rows = pairs.size(), cols = g.arrow_count();

  std::vector<std::vector<BigInt>> h(rows, std::vector<BigInt>(cols, 0));
  std::vector<std::vector<BigInt>> u(rows, std::vector<BigInt>(rows, 0));
  std::vector<BigRational> theta(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto [a, b] = pairs[r];
    const auto ab = g.compose(a, b);
    if (!ab) throw Error(ErrorKind::kPrecondition, "composition table has a hole at " + pair_name(g, a, b));
    h[r][a] += 1;
    h[r][b] += 1;
    h[r][*ab] -= 1;
    u[r][r] = 1;
    const Angle ang = w(a, b).angle();
    theta[r] = BigRational(ang.num(), ang.den());
  }

  auto combine = [](std::vector<BigInt>& x, std::vector<BigInt>& y, const BigInt& p, const BigInt& q, const BigInt& r,
                    const BigInt& s) {
    // (x, y) <- (p x + q y, r x + s y)
    for (std::size_t i = 0; i < x.size(); ++i) {
      BigInt nx = p * x[i] + q * y[i];
      BigInt ny = r * x[i] + s * y[i];
      x[i] = std::move(nx);
      y[i] = std::move(ny);
    }
  };

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (h[r][c] == 0) continue;
      // Extended Euclid on (h[rank][c], h[r][c]).
      BigInt a = h[rank][c], b = h[r][c];
      BigInt old_r = a, cur_r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
      while (cur_r != 0) {
        BigInt qt = old_r / cur_r;
        BigInt tmp = old_r - qt * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - qt * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - qt * cur_t;
        old_t = cur_t;
        cur_t = tmp;
      }
      if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
      }
      const BigInt p = old_s, q = old_t, rr = -b / old_r, s = a / old_r;
      combine(h[rank], h[r], p, q, rr, s);
      combine(u[rank], u[r], p, q, rr, s);
    }
    if (h[rank][c] != 0) {
      pivot_col.push_back(c);
      ++rank;
    }
  }

  auto u_theta = [&](std::size_t r) {
    BigRational acc = 0;
    for (std::size_t i = 0; i < rows; ++i)
      if (u[r][i] != 0) acc += BigRational(u[r][i]) * theta[i];
    return acc;
  };
  for (std::size_t r = rank; r < rows; ++r)
    if (boost::multiprecision::denominator(u_theta(r)) != 1) return std::nullopt;

  std::vector<BigRational> beta(cols, 0);
  for (std::size_t r = rank; r-- > 0;) {
    BigRational acc = u_theta(r);
    const std::size_t pc = pivot_col[r];
    for (std::size_t c = pc + 1; c < cols; ++c)
      if (h[r][c] != 0) acc -= BigRational(h[r][c]) * beta[c];
    beta[pc] = acc / BigRational(h[r][pc]);
  }

  OneCochain b;
  b.values.reserve(cols);
  for (const auto& x : beta) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const BigInt reduced = ((num % den) + den) % den;
    b.values.push_back(CircleScalar(Angle(static_cast<std::int64_t>(reduced), static_cast<std::int64_t>(den))));
  }
  if (!same_values(coboundary(w.base_ptr(), b), w))
    throw Error(ErrorKind::kInternal, "coboundary solver produced a cochain that does not verify");
  return b;
}

TwoCocycle cech_cocycle(const CoverGroupoid& cover, const CechFunction& lambda) {
  const auto& g = cover.groupoid;
  std::map<ComposablePair, CircleScalar> values;
  for (const auto& [a, b] : g.composable_pairs()) {
    const std::size_t x = cover.unit_point[g.range(a)];
    const std::size_t i = cover.unit_set[g.range(a)];
    const std::size_t j = cover.unit_set[g.source(a)];
    const std::size_t k = cover.unit_set[g.source(b)];
    auto value = lambda(i, j, k, x);
    if (!value)
      throw Error(ErrorKind::kInvalidInput, "lambda undefined at (i,j,k,x) = (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                                cover.points[x] + ")");
    values.emplace(ComposablePair{a, b}, *value);
  }
  return TwoCocycle(std::make_shared<const FiniteGroupoid>(g), std::move(values));
}

}  // namespace grext
