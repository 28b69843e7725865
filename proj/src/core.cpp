#include "oxtoby/core.hpp"

#include <algorithm>
#include <cassert>

namespace oxtoby::core {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in position arithmetic");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in period arithmetic");
  }
  return out;
}

Int floor_div(Int a, Int b) {
  assert(b > 0);
  Int quot = a / b;
  if (a % b != 0 && a < 0) {
    quot -= 1;
  }
  return quot;
}

Int mod_floor(Int a, Int b) {
  assert(b > 0);
  Int rem = a % b;
  if (rem < 0) {
    rem += b;
  }
  return rem;
}

FastGrowth mk_fast_growth(const std::vector<Int>& ratios) {
  if (ratios.empty()) {
    throw std::invalid_argument("ratio list must not be empty");
  }
  for (std::size_t idx = 0; idx < ratios.size(); ++idx) {
    if (ratios[idx] < 3) {
      throw RatioTooSmall(idx + 1);
    }
  }
  FastGrowth fg;
  fg.ratios = ratios;
  fg.p.reserve(ratios.size() + 1);
  fg.q.reserve(ratios.size() + 1);
  fg.p.push_back(1);
  fg.q.push_back(0);
  for (Int r : ratios) {
    fg.p.push_back(checked_mul(fg.p.back(), r));
    fg.q.push_back(checked_add(fg.q.back(), fg.p.back()));
  }
  return fg;
}

Window mk_window(Int lo, Int hi) {
  if (lo >= hi) {
    throw BadWindow("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    ") is empty");
  }
  return Window{lo, hi};
}

std::optional<int> level(Int n, const FastGrowth& fg) {
  for (int i = 1; i <= fg.depth(); ++i) {
    const Int r = fg.ratios[static_cast<std::size_t>(i - 1)];
    const Int k = floor_div(n, fg.p[static_cast<std::size_t>(i - 1)]);
    const Int m = mod_floor(k, r);
    if (m == 0 || m == r - 1) {
      return i;
    }
  }
  return std::nullopt;
}

LeveledWindow oxtoby_window(const FastGrowth& fg, Window window) {
  mk_window(window.lo, window.hi);
  LeveledWindow out;
  out.window = window;
  const std::size_t len = static_cast<std::size_t>(window.hi - window.lo);
  out.levels.reserve(len);
  out.symbols.reserve(len);
  for (Int n = window.lo; n < window.hi; ++n) {
    const std::optional<int> lv = level(n, fg);
    out.levels.push_back(lv);
    out.symbols.push_back(lv);
  }
  return out;
}

std::vector<Int> per_set(const FastGrowth& fg, int i, Window window) {
  mk_window(window.lo, window.hi);
  if (i < 1) {
    throw std::invalid_argument("level index must be >= 1");
  }
  if (i > fg.depth()) {
    throw DepthExceeded("level index " + std::to_string(i) +
                        " exceeds structure depth " + std::to_string(fg.depth()));
  }
  std::vector<Int> out;
  for (Int n = window.lo; n < window.hi; ++n) {
    const std::optional<int> lv = level(n, fg);
    if (lv.has_value() && *lv <= i) {
      out.push_back(n);
    }
  }
  return out;
}

void validate_odometer(const FastGrowth& fg, const OdometerElement& g) {
  if (g.depth() > fg.depth()) {
    throw std::invalid_argument("digit vector deeper than the period structure");
  }
  for (int i = 1; i <= g.depth(); ++i) {
    const Int d = g.digits[static_cast<std::size_t>(i - 1)];
    if (d < 0 || d >= fg.p[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("digit " + std::to_string(i) +
                                  " outside [0, p_" + std::to_string(i) + ")");
    }
    if (i > 1) {
      const Int prev = g.digits[static_cast<std::size_t>(i - 2)];
      if (mod_floor(d, fg.p[static_cast<std::size_t>(i - 1)]) != prev) {
        throw std::invalid_argument("digits " + std::to_string(i - 1) + " and " +
                                    std::to_string(i) + " are incoherent");
      }
    }
  }
  for (Int t : g.certificate) {
    for (int i = 1; i <= g.depth(); ++i) {
      const std::optional<int> lv =
          level(checked_add(t, g.digits[static_cast<std::size_t>(i - 1)]), fg);
      if (lv.has_value() && *lv <= i) {
        throw std::invalid_argument("certificate position " + std::to_string(t) +
                                    " is periodic at depth " + std::to_string(i));
      }
    }
  }
}

OdometerElement shift_digits(const FastGrowth& fg, Int m, int depth) {
  if (depth < 1 || depth > fg.depth()) {
    throw DepthExceeded("requested digit depth outside structure depth");
  }
  OdometerElement g;
  g.digits.reserve(static_cast<std::size_t>(depth));
  for (int i = 1; i <= depth; ++i) {
    g.digits.push_back(mod_floor(m, fg.p[static_cast<std::size_t>(i)]));
  }
  return g;
}

OdometerElement orbit_element(const FastGrowth& fg, Int m) {
  OdometerElement g = shift_digits(fg, m, fg.depth());
  const Int p_top = fg.p.back();
  const Int n_top = g.digits.back();
  for (Int t = 0; t < p_top; ++t) {
    if (!level(checked_add(t, n_top), fg).has_value()) {
      g.certificate = {t};
      return g;
    }
  }
  throw std::logic_error("no unresolved position within one full period");
}

std::optional<int> point_level(const FastGrowth& fg,
                               const std::vector<Int>& digits, Int n) {
  for (int l = 1; l <= static_cast<int>(digits.size()); ++l) {
    const std::optional<int> lv =
        level(checked_add(n, digits[static_cast<std::size_t>(l - 1)]), fg);
    if (lv.has_value() && *lv <= l) {
      // Coherence forces equality at the least qualifying depth.
      assert(*lv == l);
      return l;
    }
  }
  return std::nullopt;
}

namespace {

Int digit_of(const FastGrowth& fg, const SystemPoint& pt, int i) {
  if (const auto* toe = std::get_if<Toeplitz>(&pt)) {
    return mod_floor(toe->shift, fg.p[static_cast<std::size_t>(i)]);
  }
  const auto& g = std::get<NonToeplitz>(pt).g;
  if (i > g.depth()) {
    throw DepthExceeded("level index " + std::to_string(i) +
                        " exceeds the point's digit depth");
  }
  return g.digits[static_cast<std::size_t>(i - 1)];
}

}  // namespace

std::vector<Int> point_per_set(const FastGrowth& fg, const SystemPoint& pt,
                               int i, Window window) {
  mk_window(window.lo, window.hi);
  if (i < 1) {
    throw std::invalid_argument("level index must be >= 1");
  }
  if (i > fg.depth()) {
    throw DepthExceeded("level index exceeds structure depth");
  }
  const Int ni = digit_of(fg, pt, i);
  std::vector<Int> out;
  for (Int n = window.lo; n < window.hi; ++n) {
    const std::optional<int> lv = level(checked_add(n, ni), fg);
    if (lv.has_value() && *lv <= i) {
      out.push_back(n);
    }
  }
  return out;
}

std::optional<int> eval_point(const FastGrowth& fg, const SystemPoint& pt,
                              Int n, int depth_budget) {
  if (const auto* toe = std::get_if<Toeplitz>(&pt)) {
    return level(checked_add(n, toe->shift), fg);
  }
  const auto& np = std::get<NonToeplitz>(pt);
  const int budget = std::min(depth_budget, np.g.depth());
  for (int l = 1; l <= budget; ++l) {
    const std::optional<int> lv =
        level(checked_add(n, np.g.digits[static_cast<std::size_t>(l - 1)]), fg);
    if (lv.has_value() && *lv <= l) {
      return lv;
    }
  }
  const auto& cert = np.g.certificate;
  if (std::find(cert.begin(), cert.end(), n) != cert.end()) {
    return np.filler;
  }
  return std::nullopt;
}

OdometerElement aperiodic_element(const FastGrowth& fg, Int target) {
  OdometerElement g;
  g.digits.reserve(static_cast<std::size_t>(fg.depth()));
  Int prev = 0;
  for (int i = 1; i <= fg.depth(); ++i) {
    // Candidates coherent with the previous digit, smallest first. Only the
    // two sub-blocks with index 0 or -1 mod r_i are filled at step i, so at
    // least one candidate survives.
    const Int step = fg.p[static_cast<std::size_t>(i - 1)];
    const Int r = fg.ratios[static_cast<std::size_t>(i - 1)];
    bool found = false;
    for (Int t = 0; t < r && !found; ++t) {
      const Int cand = checked_add(prev, checked_mul(t, step));
      const std::optional<int> lv = level(checked_add(target, cand), fg);
      if (!lv.has_value() || *lv > i) {
        g.digits.push_back(cand);
        prev = cand;
        found = true;
      }
    }
    if (!found) {
      throw std::logic_error("no aperiodic digit candidate at depth " +
                             std::to_string(i));
    }
  }
  g.certificate.push_back(target);
  return g;
}

FactorResult factor_digits(const std::vector<std::optional<int>>& values,
                           Window window, const FastGrowth& fg, int depth) {
  mk_window(window.lo, window.hi);
  if (depth < 1 || depth > fg.depth()) {
    throw DepthExceeded("factor depth outside structure depth");
  }
  if (values.size() != static_cast<std::size_t>(window.hi - window.lo)) {
    throw BadWindow("value array length does not match the window");
  }
  FactorResult res;
  Int prev = 0;
  for (int i = 1; i <= depth; ++i) {
    const Int step = fg.p[static_cast<std::size_t>(i - 1)];
    const Int r = fg.ratios[static_cast<std::size_t>(i - 1)];
    std::optional<Int> match;
    bool ambiguous = false;
    for (Int t = 0; t < r; ++t) {
      const Int cand = prev + t * step;
      bool ok = true;
      for (Int n = window.lo; n < window.hi && ok; ++n) {
        const std::optional<int> lv = level(checked_add(n, cand), fg);
        const auto& got = values[static_cast<std::size_t>(n - window.lo)];
        if (lv.has_value() && *lv <= i) {
          // cells the candidate claims must agree; unknown cells bind nothing
          if (got.has_value()) ok = *got == *lv;
        } else if (got.has_value() && *got <= i) {
          // an observed shallow value the candidate leaves unclaimed is a
          // contradiction, or else a digit shifted by a multiple of p_i
          // would survive on its unresolved cells
          ok = false;
        }
      }
      if (ok) {
        if (match.has_value()) {
          ambiguous = true;
        } else {
          match = cand;
        }
      }
    }
    if (!match.has_value()) {
      res.status = FactorResult::Status::NoMatch;
      res.level_index = i;
      return res;
    }
    if (ambiguous) {
      res.status = FactorResult::Status::Ambiguous;
      res.level_index = i;
      return res;
    }
    res.digits.push_back(*match);
    prev = *match;
  }
  return res;
}

namespace {

// Unique i with run length 2 q_i + 2, plus pointwise content equality with
// z[-q_i - 1, q_i]. The exact level structure always admits one.
int content_class_of(const FastGrowth& fg, Int n0, Int n1, int m) {
  const Int len = n1 - n0 + 1;
  for (int i = 0; i < m; ++i) {
    if (len != 2 * fg.q[static_cast<std::size_t>(i)] + 2) {
      continue;
    }
    const Int base = -fg.q[static_cast<std::size_t>(i)] - 1;
    bool same = true;
    for (Int t = 0; t < len && same; ++t) {
      same = level(n0 + t, fg) == level(base + t, fg);
    }
    if (same) {
      return i;
    }
  }
  throw std::logic_error("maximal block without a content class");
}

}  // namespace

std::vector<Block> maximal_blocks(const FastGrowth& fg, int m, Window window) {
  mk_window(window.lo, window.hi);
  if (m < 1) {
    throw std::invalid_argument("block level must be >= 1");
  }
  if (m > fg.depth()) {
    throw DepthExceeded("block level exceeds structure depth");
  }
  const auto member = [&](Int n) {
    const std::optional<int> lv = level(n, fg);
    return lv.has_value() && *lv <= m;
  };
  std::vector<Block> out;
  Int n = window.lo;
  while (n < window.hi) {
    if (!member(n)) {
      ++n;
      continue;
    }
    const Int start = n;
    while (n < window.hi && member(n)) {
      ++n;
    }
    const Int end = n - 1;
    // Maximality at both edges is certified globally; the run is kept only
    // when it lies strictly inside the window (the edge positions lo - 1 and
    // hi are probed via level(), which needs no window).
    if (member(start - 1) || member(end + 1) || end == window.hi - 1) {
      continue;
    }
    Block b;
    b.n0 = start;
    b.n1 = end;
    b.m = m;
    b.content_class = content_class_of(fg, start, end, m);
    out.push_back(b);
  }
  return out;
}

PieceResult classify_piece(const FastGrowth& fg, const OdometerElement& digits,
                           int i, Window interval) {
  mk_window(interval.lo, interval.hi);
  if (i < 1 || i >= fg.depth()) {
    throw std::invalid_argument("piece base level must satisfy 1 <= i < depth");
  }
  PieceResult res;
  if (i > digits.depth()) {
    res.status = PieceResult::Status::DepthExceeded;
    return res;
  }
  const Int pi = fg.p[static_cast<std::size_t>(i)];
  const Int ni = digits.digits[static_cast<std::size_t>(i - 1)];
  if (interval.hi - interval.lo != pi ||
      mod_floor(checked_add(interval.lo, ni), pi) != 0) {
    res.status = PieceResult::Status::Misaligned;
    return res;
  }
  std::optional<int> shared_j;
  for (Int n = interval.lo; n < interval.hi; ++n) {
    const std::optional<int> pl = point_level(fg, digits.digits, n);
    if (pl.has_value() && *pl <= i) {
      continue;
    }
    if (!pl.has_value()) {
      res.status = PieceResult::Status::DepthExceeded;
      return res;
    }
    if (!shared_j.has_value()) {
      shared_j = pl;
    }
    assert(*shared_j == *pl);
  }
  if (!shared_j.has_value()) {
    // Unreachable for a correct level structure: every aligned interval
    // keeps at least one position unfilled past step i.
    throw std::logic_error("aligned interval without unfilled positions");
  }
  res.piece = Piece{interval.lo, i, *shared_j};
  return res;
}

bool is_piece_at(const FastGrowth& fg, const OdometerElement& digits, int i,
                 int j, Int a) {
  if (i < 1 || j <= i || j > fg.depth()) {
    throw std::invalid_argument("piece levels must satisfy 1 <= i < j <= depth");
  }
  if (j > digits.depth()) {
    throw DepthExceeded("digit vector shallower than the piece target level");
  }
  const Int pi = fg.p[static_cast<std::size_t>(i)];
  const Int ni = digits.digits[static_cast<std::size_t>(i - 1)];
  const Int nj = digits.digits[static_cast<std::size_t>(j - 1)];
  const Int njm1 = digits.digits[static_cast<std::size_t>(j - 2)];
  if (mod_floor(checked_add(a, ni), pi) != 0) {
    throw BadWindow("piece interval is not on the digit-shifted p_i grid");
  }
  for (Int n = a; n < a + pi; ++n) {
    const std::optional<int> li = level(checked_add(n, ni), fg);
    if (li.has_value() && *li <= i) {
      continue;
    }
    const std::optional<int> lj = level(checked_add(n, nj), fg);
    if (!lj.has_value() || *lj > j) {
      return false;
    }
    const std::optional<int> ljm1 = level(checked_add(n, njm1), fg);
    if (ljm1.has_value() && *ljm1 <= j - 1) {
      return false;
    }
  }
  return true;
}

LeveledWindow reverse_window(const LeveledWindow& w) {
  LeveledWindow out;
  out.window = Window{-w.window.hi + 1, -w.window.lo + 1};
  out.levels.assign(w.levels.rbegin(), w.levels.rend());
  out.symbols.assign(w.symbols.rbegin(), w.symbols.rend());
  return out;
}

}  // namespace oxtoby::core
