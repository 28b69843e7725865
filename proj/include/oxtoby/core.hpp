#pragma once

// Exact machinery for Oxtoby sequences on finite windows of Z: the period
// structure (p_i), fill levels, Per-sets, odometer digits, points of the
// orbit closure, maximal periodic blocks, aligned pieces, and the reverse
// identity. Symbols are opaque indices: symbol i stands for x_i, the value
// placed at fill step i. Everything here is a pure function of its inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace oxtoby::core {

using Int = std::int64_t;

// Checked arithmetic: positions and periods must stay inside Int range.
// Overflow throws std::overflow_error instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// Floor division and mathematical modulus; b > 0, result of mod_floor lies
// in [0, b). floor_div rounds toward minus infinity so negative positions
// follow the same two-sided fill as positive ones.
Int floor_div(Int a, Int b);
Int mod_floor(Int a, Int b);

struct RatioTooSmall : std::runtime_error {
  std::size_t index;  // 1-based index of the offending ratio
  explicit RatioTooSmall(std::size_t idx)
      : std::runtime_error("ratio at index " + std::to_string(idx) +
                           " is below 3; the period structure is not fast growing"),
        index(idx) {}
};

struct DepthExceeded : std::runtime_error {
  explicit DepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BadWindow : std::runtime_error {
  explicit BadWindow(const std::string& what) : std::runtime_error(what) {}
};

// Period structure: p_0 = 1, p_i = p_{i-1} * r_i with every r_i >= 3, and the
// cumulative sums q_0 = 0, q_i = q_{i-1} + p_i. p is strictly increasing and
// p_i divides p_{i+1}.
struct FastGrowth {
  std::vector<Int> ratios;  // r_1..r_L
  std::vector<Int> p;       // p_0..p_L
  std::vector<Int> q;       // q_0..q_L

  int depth() const { return static_cast<int>(ratios.size()); }
};

// Validates ratios (nonempty, all >= 3) and derives p, q with checked
// arithmetic. Throws RatioTooSmall or std::overflow_error.
FastGrowth mk_fast_growth(const std::vector<Int>& ratios);

// Half-open interval [lo, hi) of positions.
struct Window {
  Int lo = 0;
  Int hi = 0;
};

// Throws BadWindow unless lo < hi.
Window mk_window(Int lo, Int hi);

// Fill level of position n: the least i >= 1 with
// floor(n / p_{i-1}) = 0 or -1 (mod r_i), the step at which the inductive
// construction defines z(n). nullopt means the position is filled beyond
// depth L (Overflow).
std::optional<int> level(Int n, const FastGrowth& fg);

// Per-position levels and symbols over a window. For the base sequence z the
// symbol at n is x_{level(n)}, so symbols mirrors levels; for shifted or
// non-Toeplitz points (see eval_point) the two differ. nullopt entries are
// Unknown.
struct LeveledWindow {
  Window window;
  std::vector<std::optional<int>> levels;   // indexed by n - window.lo
  std::vector<std::optional<int>> symbols;  // symbol index at n, 1-based
};

// The base Oxtoby sequence z on a window: levels via level(), symbol = level.
LeveledWindow oxtoby_window(const FastGrowth& fg, Window window);

// Per_{p_i}(z) restricted to the window: positions with level <= i, exact
// (level is global, no window approximation). Sorted ascending.
// Requires 1 <= i <= depth.
std::vector<Int> per_set(const FastGrowth& fg, int i, Window window);

// Coherent digit vector (n_1..n_k), n_i in [0, p_i), n_i = n_j (mod p_j) for
// j < i. certificate lists positions t guaranteed aperiodic to the vector's
// depth: level(t + n_i) > i for every i <= k.
struct OdometerElement {
  std::vector<Int> digits;
  std::vector<Int> certificate;

  int depth() const { return static_cast<int>(digits.size()); }
};

// Throws std::invalid_argument on range or coherence violations, or a broken
// certificate (checked against level()).
void validate_odometer(const FastGrowth& fg, const OdometerElement& g);

// Digit vector of the shift S^m z: n_i = m mod p_i, for i <= depth.
OdometerElement shift_digits(const FastGrowth& fg, Int m, int depth);

// shift_digits at full depth, completed with a certificate: the smallest
// t >= 0 with level(t + n_L) beyond depth L (one such t exists in every
// p_L positions), which certifies every level by coherence.
OdometerElement orbit_element(const FastGrowth& fg, Int m);

// A point of the orbit closure: either the Toeplitz sequence S^m z, or a
// non-Toeplitz point given by a certified digit vector plus the one symbol
// its aperiodic positions carry.
struct Toeplitz {
  Int shift = 0;
};
struct NonToeplitz {
  OdometerElement g;  // certificate must be nonempty
  int filler = 0;     // symbol index at certified aperiodic positions
};
using SystemPoint = std::variant<Toeplitz, NonToeplitz>;

// Point-level of n for the digit vector (n_i): the least l <= depth with
// level(n + n_l) <= l; at that l the value is exact (coherence makes levels
// <= l agree across deeper digits). nullopt when every depth is exceeded.
std::optional<int> point_level(const FastGrowth& fg,
                               const std::vector<Int>& digits, Int n);

// Per_{p_i} of the point restricted to the window: (Per_{p_i}(z) - n_i)
// within [lo, hi), where n_i is the point's digit i. Sorted ascending.
// Throws DepthExceeded if i exceeds the available digits.
std::vector<Int> point_per_set(const FastGrowth& fg, const SystemPoint& pt,
                               int i, Window window);

// Value of the point at position n, resolved through at most depth_budget
// digits. Toeplitz m: x_{level(n+m)}. Non-Toeplitz (g, a): the first digit
// that pins the level, else a at certified positions, else Unknown.
std::optional<int> eval_point(const FastGrowth& fg, const SystemPoint& pt,
                              Int n, int depth_budget);

// A digit vector certified aperiodic at the target position: greedily picks
// the smallest coherent digit n_{i+1} with level(target + n_{i+1}) > i+1.
// Such a digit always exists because only two of the r_{i+1} >= 3 candidate
// sub-blocks are filled at step i+1. certificate = {target}.
OdometerElement aperiodic_element(const FastGrowth& fg, Int target);

// Digit recovery from a window of symbol values (Unknown entries allowed):
// for each i <= depth, the unique residue n_i consistent with the window in
// both directions — where level(n + n_i) <= i the known value must equal it,
// and every known value <= i must sit at such a position. Unknown cells bind
// nothing. NoMatch: no residue fits (not a window of this system).
// Ambiguous: more than one fits (window too narrow; guaranteed unique when
// hi - lo >= 2 * p_depth).
struct FactorResult {
  enum class Status { Ok, NoMatch, Ambiguous };
  Status status = Status::Ok;
  int level_index = 0;      // the i at which NoMatch/Ambiguous arose
  std::vector<Int> digits;  // filled on Ok; coherent
};
FactorResult factor_digits(const std::vector<std::optional<int>>& values,
                           Window window, const FastGrowth& fg, int depth);

// Inclusion-maximal interval [n0, n1] inside Per_{p_m}(z), annotated with the
// unique content class i: the content equals z[-q_i - 1, q_i] (so the length
// is 2 q_i + 2) and the block is also maximal at level i + 1.
struct Block {
  Int n0 = 0;
  Int n1 = 0;
  int m = 0;
  int content_class = 0;
};

// All maximal p_m-periodic blocks of z fully contained in the window, sorted.
// The scan extends one position beyond each candidate edge, so blocks
// touching the window boundary are dropped rather than reported unverified.
// Requires 1 <= m <= depth.
std::vector<Block> maximal_blocks(const FastGrowth& fg, int m, Window window);

// Aligned interval [a, a + p_i) with a = -n_i (mod p_i) whose positions
// outside Per_{p_i} all have point-level exactly j > i.
struct Piece {
  Int a = 0;
  int i = 0;
  int j = 0;
};

// Classifies the aligned interval for the point with the given digits: the
// unique j > i making it a p_j-p_i-piece. Misaligned when the interval is not
// [k p_i - n_i, (k+1) p_i - n_i); DepthExceeded when some position's
// point-level cannot be pinned within the digit depth.
struct PieceResult {
  enum class Status { Ok, Misaligned, DepthExceeded };
  Status status = Status::Ok;
  Piece piece;
};
PieceResult classify_piece(const FastGrowth& fg, const OdometerElement& digits,
                           int i, Window interval);

// Decides whether [a, a + p_i) is a p_j-p_i-piece for one specific j <= depth.
// Total for aligned input: a point-level beyond depth is a definite "not j".
// Throws BadWindow on misalignment.
bool is_piece_at(const FastGrowth& fg, const OdometerElement& digits, int i,
                 int j, Int a);

// Reverse of a window: output(n) = input(-n) on the window [-hi + 1, -lo + 1).
// For z this coincides with S^{-1}z, since z(n) = z(-n - 1).
LeveledWindow reverse_window(const LeveledWindow& w);

}  // namespace oxtoby::core
