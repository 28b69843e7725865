#include "oxtoby/ttype.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace oxtoby::ttype {

namespace {

using core::Int;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Least k with a + k*d >= n0.
Int first_index_at_least(Int a, Int d, Int n0) {
  if (a >= n0) return 0;
  return core::floor_div(n0 - a + d - 1, d);
}

void validate_family(const std::vector<Progression>& family) {
  require(!family.empty(), "progression family must be nonempty");
  for (const auto& p : family) {
    require(p.d >= 1, "progression step must be positive");
    require(p.a >= 0, "progression start must be nonnegative");
  }
}

}  // namespace

FiniteMetricSpace mk_finite_metric_space(
    std::vector<std::string> points, std::vector<std::vector<Rational>> dist) {
  const std::size_t n = points.size();
  if (n == 0) throw BadMetric("metric space needs at least one point");
  if (std::set<std::string>(points.begin(), points.end()).size() != n)
    throw BadMetric("point labels must be distinct");
  if (dist.size() != n) throw BadMetric("distance matrix has wrong shape");
  for (const auto& row : dist)
    if (row.size() != n) throw BadMetric("distance matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i][i] != Rational(0)) throw BadMetric("nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) throw BadMetric("asymmetric distances");
      if (i != j && dist[i][j] <= Rational(0))
        throw BadMetric("off-diagonal distances must be positive");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][k] > dist[i][j] + dist[j][k])
          throw BadMetric("triangle inequality fails");
  return FiniteMetricSpace{std::move(points), std::move(dist)};
}

const std::string& EventuallyPeriodicSeq::value(core::Int n) const {
  require(n >= 0, "sequence index must be nonnegative");
  const Int np = prefix_len();
  if (n < np) return prefix[static_cast<std::size_t>(n)];
  return tail[static_cast<std::size_t>(core::mod_floor(n - np, period()))];
}

EventuallyPeriodicSeq mk_seq(std::vector<std::string> prefix,
                             std::vector<std::string> tail) {
  if (tail.empty()) throw BadSeq("tail must be nonempty");
  return EventuallyPeriodicSeq{std::move(prefix), std::move(tail)};
}

bool draws_from(const EventuallyPeriodicSeq& s,
                const FiniteMetricSpace& space) {
  const std::set<std::string> pts(space.points.begin(), space.points.end());
  const auto all_in = [&](const std::vector<std::string>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](const std::string& x) { return pts.count(x) > 0; });
  };
  return all_in(s.prefix) && all_in(s.tail);
}

std::vector<std::string> omega_limit(const EventuallyPeriodicSeq& s) {
  std::vector<std::string> out = s.tail;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_same(const TypeWitness& w) {
  return std::holds_alternative<SameWitness>(w);
}

std::vector<std::string> limit_symbols_along(
    const EventuallyPeriodicSeq& s, const std::vector<Progression>& family) {
  validate_family(family);
  // Beyond the prefix the values along a + k*d repeat with period
  // P / gcd(d, P) in k, so one full cycle past the prefix sees exactly the
  // symbols attained infinitely often.
  std::set<std::string> seen;
  const Int period = s.period();
  for (const auto& pr : family) {
    const Int cycle = period / std::gcd(pr.d, period);
    const Int k0 = first_index_at_least(pr.a, pr.d, s.prefix_len());
    for (Int k = k0; k < k0 + cycle; ++k)
      seen.insert(s.value(pr.a + core::checked_mul(k, pr.d)));
  }
  return std::vector<std::string>(seen.begin(), seen.end());
}

bool eventually_constant_along(const EventuallyPeriodicSeq& s,
                               const std::vector<Progression>& family) {
  return limit_symbols_along(s, family).size() == 1;
}

namespace {

// Tail symbols of s at the common residues: res[r] = s(n0 + r), r in [0, p).
std::vector<std::string> lifted_tail(const EventuallyPeriodicSeq& s, Int n0,
                                     Int p) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(p));
  for (Int r = 0; r < p; ++r) out.push_back(s.value(n0 + r));
  return out;
}

bool partitions_agree(const std::vector<std::string>& t1,
                      const std::vector<std::string>& t2) {
  std::map<std::string, std::string> fwd, bwd;
  for (std::size_t r = 0; r < t1.size(); ++r) {
    const auto [it1, new1] = fwd.emplace(t1[r], t2[r]);
    if (!new1 && it1->second != t2[r]) return false;
    const auto [it2, new2] = bwd.emplace(t2[r], t1[r]);
    if (!new2 && it2->second != t1[r]) return false;
  }
  return true;
}

}  // namespace

TypeWitness same_topological_type(const EventuallyPeriodicSeq& s1,
                                  const EventuallyPeriodicSeq& s2) {
  const Int n0 = std::max(s1.prefix_len(), s2.prefix_len());
  const Int p = std::lcm(s1.period(), s2.period());
  const auto t1 = lifted_tail(s1, n0, p);
  const auto t2 = lifted_tail(s2, n0, p);

  if (partitions_agree(t1, t2)) {
    SameWitness w;
    const auto add_side = [&](int side, const std::vector<std::string>& from,
                              const std::vector<std::string>& to) {
      std::set<std::string> done;
      for (Int r = 0; r < p; ++r) {
        const auto& a = from[static_cast<std::size_t>(r)];
        if (!done.insert(a).second) continue;
        w.containments.push_back(
            {side, a, to[static_cast<std::size_t>(r)], n0});
      }
    };
    add_side(1, t1, t2);
    add_side(2, t2, t1);
    return w;
  }

  // A single progression suffices whenever its tail residue set already
  // separates the partitions; prefer the smallest step, then start.
  for (Int d = 1; d <= p; ++d) {
    for (Int a = 0; a < d; ++a) {
      const std::vector<Progression> fam{{a, d}};
      if (eventually_constant_along(s1, fam) !=
          eventually_constant_along(s2, fam))
        return DifferentWitness{fam};
    }
  }

  // Otherwise join two residues that one partition merges and the other
  // splits; such a pair exists exactly because the partitions disagree.
  for (Int r = 0; r < p; ++r) {
    for (Int rr = r + 1; rr < p; ++rr) {
      const auto& a1 = t1[static_cast<std::size_t>(r)];
      const auto& b1 = t1[static_cast<std::size_t>(rr)];
      const auto& a2 = t2[static_cast<std::size_t>(r)];
      const auto& b2 = t2[static_cast<std::size_t>(rr)];
      if ((a1 == b1) != (a2 == b2))
        return DifferentWitness{{{n0 + r, p}, {n0 + rr, p}}};
    }
  }
  throw std::logic_error("partition mismatch without a separating pair");
}

bool verify_witness(const EventuallyPeriodicSeq& s1,
                    const EventuallyPeriodicSeq& s2, const TypeWitness& w) {
  if (const auto* diff = std::get_if<DifferentWitness>(&w)) {
    if (diff->progressions.empty() || diff->progressions.size() > 2)
      return false;
    return eventually_constant_along(s1, diff->progressions) !=
           eventually_constant_along(s2, diff->progressions);
  }

  const auto& same = std::get<SameWitness>(w);
  const Int n0 = std::max(s1.prefix_len(), s2.prefix_len());
  const Int p = std::lcm(s1.period(), s2.period());
  // Each stated almost-containment must hold pointwise beyond its bound;
  // values are p-periodic past max(bound, n0), so one period decides.
  for (const auto& c : same.containments) {
    if (c.from_side != 1 && c.from_side != 2) return false;
    if (c.exception_bound < 0) return false;
    const auto& from = c.from_side == 1 ? s1 : s2;
    const auto& to = c.from_side == 1 ? s2 : s1;
    const Int stop = std::max(c.exception_bound, n0) + p;
    for (Int n = c.exception_bound; n < stop; ++n)
      if (from.value(n) == c.from_symbol && to.value(n) != c.to_symbol)
        return false;
  }
  // Every symbol attained infinitely often must be covered on its side.
  const auto covered = [&](int side, const std::string& sym) {
    return std::any_of(same.containments.begin(), same.containments.end(),
                       [&](const SameWitness::Containment& c) {
                         return c.from_side == side && c.from_symbol == sym;
                       });
  };
  for (const auto& sym : omega_limit(s1))
    if (!covered(1, sym)) return false;
  for (const auto& sym : omega_limit(s2))
    if (!covered(2, sym)) return false;
  return true;
}

std::vector<std::string> interleave_pointed(
    const std::vector<std::string>& orbit) {
  require(orbit.size() >= 2, "orbit needs the base point and one iterate");
  std::vector<std::string> out;
  out.reserve(2 * (orbit.size() - 1));
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    out.push_back(orbit[0]);
    out.push_back(orbit[k]);
  }
  return out;
}

std::vector<std::string> interleave_dense(const std::vector<std::string>& x,
                                          const std::vector<std::string>& q) {
  if (x.size() != q.size()) throw LengthMismatch();
  std::vector<std::string> out;
  out.reserve(2 * x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    out.push_back(x[k]);
    out.push_back(q[k]);
  }
  return out;
}

std::vector<std::pair<std::string, Rational>> theta(
    const std::vector<std::string>& x) {
  require(!x.empty(), "theta needs a nonempty sequence");
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(x.size() * (x.size() + 1) / 2);
  long long t = 1;
  for (std::size_t n = 0; n < x.size(); ++n)
    for (std::size_t j = 0; j <= n; ++j) out.emplace_back(x[j], Rational(1, t++));
  return out;
}

OxtobySpec oxtoby_spec_from_sequence(std::vector<std::string> symbols,
                                     const core::FastGrowth& fg) {
  if (static_cast<int>(symbols.size()) < fg.depth()) throw TooFewSymbols();
  return OxtobySpec{fg, std::move(symbols)};
}

SymbolWindow render_window(const OxtobySpec& spec, core::Window window) {
  const auto lw = core::oxtoby_window(spec.fg, window);
  SymbolWindow out;
  out.window = lw.window;
  out.levels = lw.levels;
  out.symbols.resize(lw.symbols.size());
  for (std::size_t k = 0; k < lw.symbols.size(); ++k)
    if (lw.symbols[k])
      out.symbols[k] = spec.symbols[static_cast<std::size_t>(*lw.symbols[k] - 1)];
  return out;
}

}  // namespace oxtoby::ttype
