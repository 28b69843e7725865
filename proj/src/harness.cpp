#include "oxtoby/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

namespace oxtoby::harness {

namespace {

using core::FastGrowth;
using core::Int;
using core::OdometerElement;
using nlohmann::json;

constexpr int kInf = 1 << 28;  // stands in for "level beyond depth"

enum class Tri { Holds, Violated, Skip };

Int ceil_div(Int a, Int b) { return -core::floor_div(-a, b); }

int lvl_of(const Engine& e, Int n) {
  const auto v = e.level_at(n);
  return v ? *v : kInf;
}

Int p_of(const FastGrowth& fg, int i) {
  return fg.p.at(static_cast<std::size_t>(i));
}

Int digit(const OdometerElement& g, int i) {  // n_i, 1-based
  return g.digits.at(static_cast<std::size_t>(i - 1));
}

// Least l in [1, depth(g)] with level(n + n_l) <= l; nullopt when the
// position stays unresolved through the digit depth.
std::optional<int> e_point_level(const Engine& e, const OdometerElement& g,
                                 Int n) {
  for (int l = 1; l <= g.depth(); ++l)
    if (lvl_of(e, n + digit(g, l)) <= l) return l;
  return std::nullopt;
}

struct PieceClass {
  enum Kind { Piece, NotPiece, NoUnfilled, Unknown } kind;
  int j = 0;
};

// Attributes the aligned interval [a, a + p_i) relative to the digits: all
// positions not resolved by level i must resolve at one common deeper level
// j. Two distinct deep levels decide NotPiece even when other positions are
// unresolved; otherwise any unresolved position makes the interval Unknown.
PieceClass e_classify(const Engine& e, const OdometerElement& g, int i,
                      Int a) {
  const Int pi = p_of(e.fg(), i);
  bool unknown = false;
  std::set<int> deep;
  for (Int n = a; n < a + pi; ++n) {
    const auto pl = e_point_level(e, g, n);
    if (!pl) {
      unknown = true;
    } else if (*pl > i) {
      deep.insert(*pl);
    }
  }
  if (deep.size() >= 2) return {PieceClass::NotPiece, 0};
  if (unknown) return {PieceClass::Unknown, 0};
  if (deep.empty()) return {PieceClass::NoUnfilled, 0};
  return {PieceClass::Piece, *deep.begin()};
}

struct GrownBlock {
  Int n0 = 0, n1 = 0;
  bool ok = false;  // false when growth exceeded the period cap
};

// Maximal run of positions with level <= m around pos, grown in both
// directions; a run longer than 2 p_m cannot occur for a sound level map
// and is flagged rather than chased further.
GrownBlock grow_block(const Engine& e, int m, Int pos) {
  const Int cap = 2 * p_of(e.fg(), m);
  GrownBlock b{pos, pos, true};
  while (lvl_of(e, b.n0 - 1) <= m) {
    --b.n0;
    if (b.n1 - b.n0 > cap) return {b.n0, b.n1, false};
  }
  while (lvl_of(e, b.n1 + 1) <= m) {
    ++b.n1;
    if (b.n1 - b.n0 > cap) return {b.n0, b.n1, false};
  }
  return b;
}

// Every maximal level-<=m block intersecting [lo, hi), each reported once.
std::vector<GrownBlock> window_blocks(const Engine& e, int m, Int lo, Int hi) {
  std::vector<GrownBlock> out;
  Int n = lo;
  while (n < hi) {
    if (lvl_of(e, n) <= m) {
      const GrownBlock b = grow_block(e, m, n);
      out.push_back(b);
      n = b.n1 + 1;
    } else {
      ++n;
    }
  }
  return out;
}

json digits_json(const OdometerElement& g) {
  return json{{"digits", g.digits}, {"certificate", g.certificate}};
}

OdometerElement digits_from_json(const json& ce) {
  OdometerElement g;
  g.digits = ce.at("digits").get<std::vector<Int>>();
  g.certificate = ce.at("certificate").get<std::vector<Int>>();
  return g;
}

// ---- single-instance predicates -------------------------------------------

// Inside one aligned containment [k p_i, (k+1) p_i) of the j-grid, the
// unresolved-at-j set is empty or equals the unresolved-at-i set.
Tri l3_4_at(const Engine& e, int i, int j, Int k) {
  const Int pi = p_of(e.fg(), i);
  std::vector<Int> u_i, u_j;
  for (Int n = k * pi; n < (k + 1) * pi; ++n) {
    const int l = lvl_of(e, n);
    if (l > i) u_i.push_back(n);
    if (l > j) u_j.push_back(n);
  }
  return (u_j.empty() || u_j == u_i) ? Tri::Holds : Tri::Violated;
}

// Digit monotonicity: both (n_i) and (p_i - n_i) are non-decreasing.
Tri l4_8_mono(const Engine& e, const OdometerElement& g) {
  for (int i = 1; i < g.depth(); ++i) {
    const Int a = digit(g, i), b = digit(g, i + 1);
    if (a > b) return Tri::Violated;
    if (p_of(e.fg(), i) - a > p_of(e.fg(), i + 1) - b) return Tri::Violated;
  }
  return Tri::Holds;
}

// A certified escape position t with -n_i < t < p_i - n_i resolves exactly
// one step past i (or past the whole structure when i is the last level).
Tri l4_8_aper(const Engine& e, const OdometerElement& g, Int t, int i) {
  const Int ni = digit(g, i);
  if (!(-ni < t && t < p_of(e.fg(), i) - ni)) return Tri::Skip;
  const auto got = e.level_at(t + ni);
  if (i == e.fg().depth()) return !got ? Tri::Holds : Tri::Violated;
  return (got && *got == i + 1) ? Tri::Holds : Tri::Violated;
}

// Each aligned interval is attributable to exactly one deeper level.
Tri l5_4_at(const Engine& e, const OdometerElement& g, int i, Int k) {
  const Int a = k * p_of(e.fg(), i) - digit(g, i);
  const PieceClass c = e_classify(e, g, i, a);
  if (c.kind == PieceClass::Unknown) return Tri::Skip;
  return c.kind == PieceClass::Piece ? Tri::Holds : Tri::Violated;
}

// A position resolving exactly at level l sits inside an aligned interval
// wholly attributed to l.
Tri l5_5_at(const Engine& e, const OdometerElement& g, int i, int l, Int n) {
  const bool in_l = lvl_of(e, n + digit(g, l)) <= l;
  const bool in_lm1 = lvl_of(e, n + digit(g, l - 1)) <= l - 1;
  if (!in_l || in_lm1) return Tri::Skip;  // not a level-l position
  const Int pi = p_of(e.fg(), i);
  const Int a = core::floor_div(n + digit(g, i), pi) * pi - digit(g, i);
  const PieceClass c = e_classify(e, g, i, a);
  if (c.kind == PieceClass::Unknown) return Tri::Skip;
  return (c.kind == PieceClass::Piece && c.j == l) ? Tri::Holds
                                                   : Tri::Violated;
}

// Within one period of the (j-1)-grid there is an aligned interval wholly
// attributed to level j.
Tri l5_6_at(const Engine& e, const OdometerElement& g, int i, int j) {
  const Int pi = p_of(e.fg(), i);
  const Int count = p_of(e.fg(), j - 1) / pi;
  bool unknown = false;
  for (Int l = 0; l < count; ++l) {
    const PieceClass c = e_classify(e, g, i, l * pi - digit(g, j));
    if (c.kind == PieceClass::Unknown) unknown = true;
    if (c.kind == PieceClass::Piece && c.j == j) return Tri::Holds;
  }
  return unknown ? Tri::Skip : Tri::Violated;
}

// Attribution to level i+1 happens exactly on the two aligned intervals
// flanking each multiple of p_{i+1} on the digit grid.
Tri l5_8_at(const Engine& e, const OdometerElement& g, int i, Int a) {
  const PieceClass c = e_classify(e, g, i, a);
  if (c.kind == PieceClass::Unknown) return Tri::Skip;
  if (c.kind == PieceClass::NoUnfilled) return Tri::Violated;
  const bool computed = c.kind == PieceClass::Piece && c.j == i + 1;
  const Int pi = p_of(e.fg(), i);
  const Int pj = p_of(e.fg(), i + 1);
  const Int n1 = digit(g, i + 1);
  const bool formula = core::mod_floor(a + n1, pj) == 0 ||
                       core::mod_floor(a + n1 + pi, pj) == 0;
  return computed == formula ? Tri::Holds : Tri::Violated;
}

// Attribution to level i+2 happens exactly on the two bands at distance
// [p_i, p_{i+1} - p_i) on either side of each multiple of p_{i+2}.
Tri l5_9_at(const Engine& e, const OdometerElement& g, int i, Int a) {
  const PieceClass c = e_classify(e, g, i, a);
  if (c.kind == PieceClass::Unknown) return Tri::Skip;
  if (c.kind == PieceClass::NoUnfilled) return Tri::Violated;
  const bool computed = c.kind == PieceClass::Piece && c.j == i + 2;
  const Int pi = p_of(e.fg(), i);
  const Int pi1 = p_of(e.fg(), i + 1);
  const Int pi2 = p_of(e.fg(), i + 2);
  const Int b = core::mod_floor(a + digit(g, i + 2), pi2);
  const bool formula = (b >= pi && b + pi <= pi1 - pi) ||
                       (b >= pi2 - pi1 + pi && b + pi <= pi2 - pi);
  return computed == formula ? Tri::Holds : Tri::Violated;
}

// From any position resolving exactly at level i, stepping by p_{i-1} at
// most p_j / p_{i-1} times reaches a position resolving exactly at level j.
Tri l5_10_at(const Engine& e, const OdometerElement& g, Int n, int j) {
  const auto pl = e_point_level(e, g, n);
  if (!pl) return Tri::Skip;
  const int i = *pl;
  if (j <= i || j > g.depth()) return Tri::Skip;
  const Int step = p_of(e.fg(), i - 1);
  const Int bound = p_of(e.fg(), j) / step;
  bool unknown = false;
  for (Int k = 1; k <= bound; ++k) {
    const auto pl2 = e_point_level(e, g, n + k * step);
    if (!pl2) {
      unknown = true;
    } else if (*pl2 == j) {
      return Tri::Holds;
    }
  }
  return unknown ? Tri::Skip : Tri::Violated;
}

// Block dichotomy: the maximal level-<=m block around a multiple of p_m is
// [k p_m - q_{m-1} - 1, k p_m + q_{m-1}]; any other block is already a
// maximal level-<=(m-1) block, and at m = 1 no other block exists.
Tri l6_2_at(const Engine& e, int m, Int pos) {
  const Int pm = p_of(e.fg(), m);
  if (lvl_of(e, pos) > m)
    return core::mod_floor(pos, pm) == 0 ? Tri::Violated : Tri::Skip;
  const GrownBlock b = grow_block(e, m, pos);
  if (!b.ok) return Tri::Violated;
  const Int k_hi = core::floor_div(b.n1, pm);
  const Int k_lo = ceil_div(b.n0, pm);
  if (k_hi >= k_lo) {  // contains a multiple of p_m
    if (k_hi > k_lo) return Tri::Violated;
    const Int qq = e.q(m - 1);
    const Int kp = k_hi * pm;
    return (b.n0 == kp - qq - 1 && b.n1 == kp + qq) ? Tri::Holds
                                                    : Tri::Violated;
  }
  if (m == 1) return Tri::Violated;
  for (Int n = b.n0; n <= b.n1; ++n)
    if (lvl_of(e, n) > m - 1) return Tri::Violated;
  return Tri::Holds;
}

// Whether the block matches the reference content around 0 at size class i.
bool matches_class(const Engine& e, const GrownBlock& b, int i) {
  if (b.n1 - b.n0 + 1 != 2 * e.q(i) + 2) return false;
  const Int ref0 = -e.q(i) - 1;
  for (Int t = 0; t <= b.n1 - b.n0; ++t)
    if (e.level_at(b.n0 + t) != e.level_at(ref0 + t)) return false;
  return true;
}

std::optional<int> class_of(const Engine& e, const GrownBlock& b, int m) {
  for (int i = 0; i < m; ++i)
    if (matches_class(e, b, i)) return i;
  return std::nullopt;
}

// Every maximal level-<=m block reproduces the reference content around 0
// at some size class i < m.
Tri l6_3_at(const Engine& e, int m, Int pos) {
  if (lvl_of(e, pos) > m) return Tri::Skip;
  const GrownBlock b = grow_block(e, m, pos);
  if (!b.ok) return Tri::Violated;
  return class_of(e, b, m) ? Tri::Holds : Tri::Violated;
}

// A block of content class i is already maximal at level i+1.
Tri l6_4_at(const Engine& e, int m, Int pos) {
  if (lvl_of(e, pos) > m) return Tri::Skip;
  const GrownBlock b = grow_block(e, m, pos);
  if (!b.ok) return Tri::Violated;
  const auto i = class_of(e, b, m);
  if (!i) return Tri::Skip;  // content violation, charged to L6.3
  for (Int n = b.n0; n <= b.n1; ++n)
    if (lvl_of(e, n) > *i + 1) return Tri::Violated;
  if (lvl_of(e, b.n0 - 1) <= *i + 1) return Tri::Violated;
  if (lvl_of(e, b.n1 + 1) <= *i + 1) return Tri::Violated;
  return Tri::Holds;
}

// Anchors of blocks that are maximal at level m+1 but not at level m lie on
// a common p_{m_1+1}-grid: start distances and end distances between two
// such blocks (taken at levels m_1 <= m_2) are divisible by p_{m_1+1}.
Tri l6_5_at(const Engine& e, int m1, int m2, Int pos1, Int pos2) {
  const auto qualify = [&](int m, Int pos) -> std::optional<GrownBlock> {
    if (lvl_of(e, pos) > m + 1) return std::nullopt;
    const GrownBlock b = grow_block(e, m + 1, pos);
    if (!b.ok) return std::nullopt;
    for (Int n = b.n0; n <= b.n1; ++n)
      if (lvl_of(e, n) > m) return b;  // not inside the level-m part
    return std::nullopt;
  };
  const auto b1 = qualify(m1, pos1);
  const auto b2 = qualify(m2, pos2);
  if (!b1 || !b2) return Tri::Skip;
  const Int pm = p_of(e.fg(), m1 + 1);
  return (core::mod_floor(b2->n0 - b1->n0, pm) == 0 &&
          core::mod_floor(b1->n1 - b2->n1, pm) == 0)
             ? Tri::Holds
             : Tri::Violated;
}

// Reversal symmetry of the level map: level(n) = level(-n-1).
Tri t6_1_at(const Engine& e, Int n) {
  return e.level_at(n) == e.level_at(-n - 1) ? Tri::Holds : Tri::Violated;
}

// ---- scan drivers ---------------------------------------------------------

struct Scan {
  CheckResult res;
  explicit Scan(LemmaId id) {
    res.id = id;
    res.status = CheckStatus::Pass;
  }
  // Returns true when the scan should stop (first violation wins).
  bool feed(Tri t, const std::function<json()>& make_ce) {
    switch (t) {
      case Tri::Skip:
        ++res.skipped;
        return false;
      case Tri::Holds:
        ++res.instances;
        return false;
      case Tri::Violated:
        ++res.instances;
        res.status = CheckStatus::Fail;
        res.counterexample = make_ce();
        return true;
    }
    return false;
  }
  CheckResult finish() {
    if (res.status == CheckStatus::Pass && res.instances == 0) {
      res.status = CheckStatus::Error;
      res.error = "bounds too small: no decidable instance in the window";
    }
    return res;
  }
};

json base_ce(LemmaId id) { return json{{"lemma", std::string(lemma_name(id))}}; }

CheckResult run_l3_4(const Engine& e, const CheckParams& p) {
  Scan s(LemmaId::L3_4);
  const int L = e.fg().depth();
  for (int i = 1; i < L; ++i) {
    const Int pi = p_of(e.fg(), i);
    for (int j = i + 1; j <= L; ++j) {
      for (Int k = ceil_div(-p.radius, pi); (k + 1) * pi <= p.radius; ++k) {
        if (s.feed(l3_4_at(e, i, j, k), [&] {
              json ce = base_ce(LemmaId::L3_4);
              ce["i"] = i;
              ce["j"] = j;
              ce["k"] = k;
              return ce;
            }))
          return s.finish();
      }
    }
  }
  return s.finish();
}

CheckResult run_l4_8(const Engine& e, const CheckParams& p,
                     const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L4_8);
  (void)p;
  for (const auto& g : gs) {
    if (s.feed(l4_8_mono(e, g), [&] {
          json ce = base_ce(LemmaId::L4_8);
          ce.update(digits_json(g));
          ce["part"] = "monotone";
          return ce;
        }))
      return s.finish();
    for (const Int t : g.certificate) {
      for (int i = 1; i <= g.depth(); ++i) {
        if (s.feed(l4_8_aper(e, g, t, i), [&] {
              json ce = base_ce(LemmaId::L4_8);
              ce.update(digits_json(g));
              ce["part"] = "aperiodic";
              ce["t"] = t;
              ce["i"] = i;
              return ce;
            }))
          return s.finish();
      }
    }
  }
  return s.finish();
}

// Aligned interval starts a = k p_i - n_i fully inside [-R, R).
template <typename F>
bool for_aligned(const Engine& e, const OdometerElement& g, int i, Int radius,
                 const F& f) {
  const Int pi = p_of(e.fg(), i);
  const Int ni = digit(g, i);
  for (Int k = ceil_div(-radius + ni, pi); (k + 1) * pi - ni <= radius; ++k)
    if (f(k, k * pi - ni)) return true;
  return false;
}

CheckResult run_l5_4(const Engine& e, const CheckParams& p,
                     const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L5_4);
  for (const auto& g : gs) {
    for (int i = 1; i < g.depth(); ++i) {
      if (for_aligned(e, g, i, p.radius, [&](Int k, Int) {
            return s.feed(l5_4_at(e, g, i, k), [&] {
              json ce = base_ce(LemmaId::L5_4);
              ce.update(digits_json(g));
              ce["i"] = i;
              ce["k"] = k;
              return ce;
            });
          }))
        return s.finish();
    }
  }
  return s.finish();
}

CheckResult run_l5_5(const Engine& e, const CheckParams& p,
                     const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L5_5);
  for (const auto& g : gs) {
    for (int i = 1; i < g.depth(); ++i) {
      for (int l = i + 1; l <= g.depth(); ++l) {
        for (Int n = -p.radius; n < p.radius; ++n) {
          // Pre-filter to level-l positions so skips measure depth, not density.
          if (lvl_of(e, n + digit(g, l)) > l) continue;
          if (lvl_of(e, n + digit(g, l - 1)) <= l - 1) continue;
          if (s.feed(l5_5_at(e, g, i, l, n), [&] {
                json ce = base_ce(LemmaId::L5_5);
                ce.update(digits_json(g));
                ce["i"] = i;
                ce["l"] = l;
                ce["n"] = n;
                return ce;
              }))
            return s.finish();
        }
      }
    }
  }
  return s.finish();
}

CheckResult run_l5_6(const Engine& e, const CheckParams& p,
                     const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L5_6);
  (void)p;
  for (const auto& g : gs) {
    for (int i = 1; i < g.depth(); ++i) {
      for (int j = i + 1; j <= g.depth(); ++j) {
        if (s.feed(l5_6_at(e, g, i, j), [&] {
              json ce = base_ce(LemmaId::L5_6);
              ce.update(digits_json(g));
              ce["i"] = i;
              ce["j"] = j;
              return ce;
            }))
          return s.finish();
      }
    }
  }
  return s.finish();
}

CheckResult run_l5_8(const Engine& e, const CheckParams& p,
                     const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L5_8);
  for (const auto& g : gs) {
    for (int i = 1; i + 1 <= g.depth(); ++i) {
      if (for_aligned(e, g, i, p.radius, [&](Int, Int a) {
            return s.feed(l5_8_at(e, g, i, a), [&] {
              json ce = base_ce(LemmaId::L5_8);
              ce.update(digits_json(g));
              ce["i"] = i;
              ce["a"] = a;
              return ce;
            });
          }))
        return s.finish();
    }
  }
  return s.finish();
}

CheckResult run_l5_9(const Engine& e, const CheckParams& p,
                     const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L5_9);
  for (const auto& g : gs) {
    for (int i = 1; i + 2 <= g.depth(); ++i) {
      if (for_aligned(e, g, i, p.radius, [&](Int, Int a) {
            return s.feed(l5_9_at(e, g, i, a), [&] {
              json ce = base_ce(LemmaId::L5_9);
              ce.update(digits_json(g));
              ce["i"] = i;
              ce["a"] = a;
              return ce;
            });
          }))
        return s.finish();
    }
  }
  return s.finish();
}

CheckResult run_l5_10(const Engine& e, const CheckParams& p,
                      const std::vector<OdometerElement>& gs) {
  Scan s(LemmaId::L5_10);
  for (const auto& g : gs) {
    for (Int n = -p.radius; n < p.radius; ++n) {
      const auto pl = e_point_level(e, g, n);
      if (!pl) {
        ++s.res.skipped;
        continue;
      }
      for (int j = *pl + 1; j <= g.depth(); ++j) {
        if (s.feed(l5_10_at(e, g, n, j), [&] {
              json ce = base_ce(LemmaId::L5_10);
              ce.update(digits_json(g));
              ce["n"] = n;
              ce["j"] = j;
              return ce;
            }))
          return s.finish();
      }
    }
  }
  return s.finish();
}

CheckResult run_l6_2(const Engine& e, const CheckParams& p) {
  Scan s(LemmaId::L6_2);
  const int L = e.fg().depth();
  for (int m = 1; m <= L; ++m) {
    const Int pm = p_of(e.fg(), m);
    const auto ce_at = [&](Int pos) {
      return [&, pos] {
        json ce = base_ce(LemmaId::L6_2);
        ce["m"] = m;
        ce["pos"] = pos;
        return ce;
      };
    };
    for (Int k = ceil_div(-p.radius, pm); k * pm < p.radius; ++k)
      if (s.feed(l6_2_at(e, m, k * pm), ce_at(k * pm))) return s.finish();
    for (const auto& b : window_blocks(e, m, -p.radius, p.radius)) {
      if (!b.ok) {
        if (s.feed(Tri::Violated, ce_at(b.n0))) return s.finish();
        continue;
      }
      const Int k_hi = core::floor_div(b.n1, pm);
      const bool counted_above = k_hi * pm >= b.n0 && k_hi * pm >= -p.radius &&
                                 k_hi * pm < p.radius;
      if (counted_above) continue;
      if (s.feed(l6_2_at(e, m, b.n0), ce_at(b.n0))) return s.finish();
    }
  }
  return s.finish();
}

template <typename F>
CheckResult run_block_check(LemmaId id, const Engine& e, const CheckParams& p,
                            const F& at) {
  Scan s(id);
  for (int m = 1; m <= e.fg().depth(); ++m) {
    for (const auto& b : window_blocks(e, m, -p.radius, p.radius)) {
      if (s.feed(at(m, b.n0), [&] {
            json ce = base_ce(id);
            ce["m"] = m;
            ce["pos"] = b.n0;
            return ce;
          }))
        return s.finish();
    }
  }
  return s.finish();
}

CheckResult run_l6_5(const Engine& e, const CheckParams& p) {
  Scan s(LemmaId::L6_5);
  const int L = e.fg().depth();
  std::vector<std::vector<GrownBlock>> fam(static_cast<std::size_t>(L));
  for (int m = 0; m < L; ++m) {
    for (const auto& b : window_blocks(e, m + 1, -p.radius, p.radius)) {
      if (!b.ok) continue;  // runaway blocks are charged to L6.2
      bool deep = false;
      for (Int n = b.n0; n <= b.n1 && !deep; ++n) deep = lvl_of(e, n) > m;
      if (deep) fam[static_cast<std::size_t>(m)].push_back(b);
    }
  }
  for (int m1 = 0; m1 < L; ++m1) {
    for (int m2 = m1; m2 < L; ++m2) {
      for (const auto& b1 : fam[static_cast<std::size_t>(m1)]) {
        for (const auto& b2 : fam[static_cast<std::size_t>(m2)]) {
          if (s.feed(l6_5_at(e, m1, m2, b1.n0, b2.n0), [&] {
                json ce = base_ce(LemmaId::L6_5);
                ce["m1"] = m1;
                ce["m2"] = m2;
                ce["pos1"] = b1.n0;
                ce["pos2"] = b2.n0;
                return ce;
              }))
            return s.finish();
        }
      }
    }
  }
  return s.finish();
}

CheckResult run_t6_1(const Engine& e, const CheckParams& p) {
  Scan s(LemmaId::T6_1fwd);
  for (Int n = -p.radius; n < p.radius; ++n) {
    if (s.feed(t6_1_at(e, n), [&] {
          json ce = base_ce(LemmaId::T6_1fwd);
          ce["n"] = n;
          return ce;
        }))
      return s.finish();
  }
  return s.finish();
}

}  // namespace

std::vector<LemmaId> all_lemmas() {
  return {LemmaId::L3_4, LemmaId::L4_8, LemmaId::L5_4,  LemmaId::L5_5,
          LemmaId::L5_6, LemmaId::L5_8, LemmaId::L5_9,  LemmaId::L5_10,
          LemmaId::L6_2, LemmaId::L6_3, LemmaId::L6_4,  LemmaId::L6_5,
          LemmaId::T6_1fwd};
}

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L3_4: return "L3.4";
    case LemmaId::L4_8: return "L4.8";
    case LemmaId::L5_4: return "L5.4";
    case LemmaId::L5_5: return "L5.5";
    case LemmaId::L5_6: return "L5.6";
    case LemmaId::L5_8: return "L5.8";
    case LemmaId::L5_9: return "L5.9";
    case LemmaId::L5_10: return "L5.10";
    case LemmaId::L6_2: return "L6.2";
    case LemmaId::L6_3: return "L6.3";
    case LemmaId::L6_4: return "L6.4";
    case LemmaId::L6_5: return "L6.5";
    case LemmaId::T6_1fwd: return "T6.1fwd";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma(std::string_view name) {
  for (const LemmaId id : all_lemmas())
    if (lemma_name(id) == name) return id;
  return std::nullopt;
}

CheckResult check_lemma(LemmaId id, const Engine& engine,
                        const CheckParams& params) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    std::vector<OdometerElement> gs;
    switch (id) {
      case LemmaId::L4_8:
      case LemmaId::L5_4:
      case LemmaId::L5_5:
      case LemmaId::L5_6:
      case LemmaId::L5_8:
      case LemmaId::L5_9:
      case LemmaId::L5_10:
        gs = params.digit_vectors.empty()
                 ? standard_digit_vectors(engine.fg(), 0, 0)
                 : params.digit_vectors;
        break;
      default:
        break;
    }
    switch (id) {
      case LemmaId::L3_4: res = run_l3_4(engine, params); break;
      case LemmaId::L4_8: res = run_l4_8(engine, params, gs); break;
      case LemmaId::L5_4: res = run_l5_4(engine, params, gs); break;
      case LemmaId::L5_5: res = run_l5_5(engine, params, gs); break;
      case LemmaId::L5_6: res = run_l5_6(engine, params, gs); break;
      case LemmaId::L5_8: res = run_l5_8(engine, params, gs); break;
      case LemmaId::L5_9: res = run_l5_9(engine, params, gs); break;
      case LemmaId::L5_10: res = run_l5_10(engine, params, gs); break;
      case LemmaId::L6_2: res = run_l6_2(engine, params); break;
      case LemmaId::L6_3:
        res = run_block_check(LemmaId::L6_3, engine, params,
                              [&](int m, Int pos) { return l6_3_at(engine, m, pos); });
        break;
      case LemmaId::L6_4:
        res = run_block_check(LemmaId::L6_4, engine, params,
                              [&](int m, Int pos) { return l6_4_at(engine, m, pos); });
        break;
      case LemmaId::L6_5: res = run_l6_5(engine, params); break;
      case LemmaId::T6_1fwd: res = run_t6_1(engine, params); break;
    }
  } catch (const std::exception& ex) {
    res.id = id;
    res.status = CheckStatus::Error;
    res.error = ex.what();
  }
  res.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return res;
}

CheckResult check_lemma(LemmaId id, const core::FastGrowth& fg,
                        const CheckParams& params) {
  return check_lemma(id, ExactEngine(fg), params);
}

bool replay_counterexample(const Engine& engine, const json& ce) {
  const auto id = parse_lemma(ce.at("lemma").get<std::string>());
  if (!id) return false;
  const auto g = [&] { return digits_from_json(ce); };
  Tri t = Tri::Skip;
  switch (*id) {
    case LemmaId::L3_4:
      t = l3_4_at(engine, ce.at("i"), ce.at("j"), ce.at("k"));
      break;
    case LemmaId::L4_8:
      t = ce.at("part") == "monotone"
              ? l4_8_mono(engine, g())
              : l4_8_aper(engine, g(), ce.at("t"), ce.at("i"));
      break;
    case LemmaId::L5_4: t = l5_4_at(engine, g(), ce.at("i"), ce.at("k")); break;
    case LemmaId::L5_5:
      t = l5_5_at(engine, g(), ce.at("i"), ce.at("l"), ce.at("n"));
      break;
    case LemmaId::L5_6: t = l5_6_at(engine, g(), ce.at("i"), ce.at("j")); break;
    case LemmaId::L5_8: t = l5_8_at(engine, g(), ce.at("i"), ce.at("a")); break;
    case LemmaId::L5_9: t = l5_9_at(engine, g(), ce.at("i"), ce.at("a")); break;
    case LemmaId::L5_10:
      t = l5_10_at(engine, g(), ce.at("n"), ce.at("j"));
      break;
    case LemmaId::L6_2: t = l6_2_at(engine, ce.at("m"), ce.at("pos")); break;
    case LemmaId::L6_3: t = l6_3_at(engine, ce.at("m"), ce.at("pos")); break;
    case LemmaId::L6_4: t = l6_4_at(engine, ce.at("m"), ce.at("pos")); break;
    case LemmaId::L6_5:
      t = l6_5_at(engine, ce.at("m1"), ce.at("m2"), ce.at("pos1"),
                  ce.at("pos2"));
      break;
    case LemmaId::T6_1fwd: t = t6_1_at(engine, ce.at("n")); break;
  }
  return t == Tri::Violated;
}

std::vector<OdometerElement> standard_digit_vectors(const FastGrowth& fg,
                                                    std::uint64_t seed,
                                                    int extra_targets) {
  std::vector<OdometerElement> out;
  out.push_back(core::orbit_element(fg, 0));
  out.push_back(core::orbit_element(fg, 5));
  out.push_back(core::orbit_element(fg, -1));
  for (const Int target : {Int{0}, Int{1}, Int{-2}})
    out.push_back(core::aperiodic_element(fg, target));
  std::mt19937_64 rng(seed);
  const Int half = fg.p.back() / 2;
  std::uniform_int_distribution<long long> dist(-half, half);
  for (int k = 0; k < extra_targets; ++k)
    out.push_back(core::aperiodic_element(fg, dist(rng)));
  return out;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  CampaignReport report;
  const auto record = [&](const std::vector<Int>& ratios, CheckResult r) {
    switch (r.status) {
      case CheckStatus::Pass: ++report.passed; break;
      case CheckStatus::Fail: ++report.failed; break;
      case CheckStatus::Error: ++report.errors; break;
    }
    report.records.push_back({ratios, std::move(r)});
  };
  // Checks whose window must host at least one full top-level period.
  const auto needs_full_period = [](LemmaId id) {
    switch (id) {
      case LemmaId::L4_8:
      case LemmaId::L5_6:
      case LemmaId::T6_1fwd:
        return false;
      default:
        return true;
    }
  };
  for (const auto& ratios : cfg.ratio_profiles) {
    std::optional<core::FastGrowth> fg;
    std::string mk_error;
    try {
      fg = core::mk_fast_growth(ratios);
    } catch (const std::exception& ex) {
      mk_error = ex.what();
    }
    std::vector<OdometerElement> gs;
    if (fg) {
      try {
        gs = standard_digit_vectors(*fg, cfg.seed, cfg.extra_targets);
      } catch (const std::exception& ex) {
        mk_error = ex.what();
        fg.reset();
      }
    }
    for (const LemmaId id : cfg.lemmas) {
      CheckResult r;
      r.id = id;
      if (!fg) {
        r.status = CheckStatus::Error;
        r.error = mk_error;
        record(ratios, std::move(r));
        continue;
      }
      if (needs_full_period(id) && cfg.window_radius < fg->p.back()) {
        r.status = CheckStatus::Error;
        r.error = "bounds too small: window radius below the top period";
        record(ratios, std::move(r));
        continue;
      }
      CheckParams params;
      params.radius = cfg.window_radius;
      params.digit_vectors = gs;
      record(ratios, check_lemma(id, *fg, params));
    }
  }
  return report;
}

}  // namespace oxtoby::harness
