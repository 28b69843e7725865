#pragma once

// Topological-type machinery for finitely presented sequences over finite
// symbol sets, where convergence means eventual constancy: omega-limit sets,
// the decidable equivalence same_topological_type with replayable witnesses,
// and the reduction transformers (pointed interleave, dense interleave, the
// triangular theta map, and packaging a symbol sequence as an Oxtoby spec).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "oxtoby/core.hpp"

namespace oxtoby::ttype {

using Rational = boost::rational<long long>;

struct LengthMismatch : std::runtime_error {
  LengthMismatch() : std::runtime_error("sequences must have equal length") {}
};

struct TooFewSymbols : std::runtime_error {
  TooFewSymbols()
      : std::runtime_error("symbol list shorter than the structure depth") {}
};

struct BadMetric : std::runtime_error {
  explicit BadMetric(const std::string& what) : std::runtime_error(what) {}
};

struct BadSeq : std::runtime_error {
  explicit BadSeq(const std::string& what) : std::runtime_error(what) {}
};

// Finite metric space with exact rational distances. Invariants: zero
// diagonal, symmetric, positive off the diagonal, triangle inequality.
struct FiniteMetricSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> dist;
};

// Validates all invariants; throws BadMetric.
FiniteMetricSpace mk_finite_metric_space(
    std::vector<std::string> points, std::vector<std::vector<Rational>> dist);

// s(n) = prefix[n] for n < |prefix|, else tail[(n - |prefix|) mod P] with
// P = |tail| >= 1. Every residue is mapped by construction.
struct EventuallyPeriodicSeq {
  std::vector<std::string> prefix;
  std::vector<std::string> tail;

  core::Int period() const { return static_cast<core::Int>(tail.size()); }
  core::Int prefix_len() const { return static_cast<core::Int>(prefix.size()); }
  const std::string& value(core::Int n) const;
};

// Throws BadSeq when the tail is empty.
EventuallyPeriodicSeq mk_seq(std::vector<std::string> prefix,
                             std::vector<std::string> tail);

// True when every symbol of the sequence names a point of the space.
bool draws_from(const EventuallyPeriodicSeq& s, const FiniteMetricSpace& space);

// Symbols attained infinitely often: exactly the range of the tail, sorted
// and deduplicated. Over a finite space this is the omega-limit set.
std::vector<std::string> omega_limit(const EventuallyPeriodicSeq& s);

// Index subsequence a + k*d, k >= 0, with d >= 1.
struct Progression {
  core::Int a = 0;
  core::Int d = 1;
};

// Same: for each infinite fiber class on one side, the class on the other
// side that almost contains it (violations only below exception_bound).
// Different: a union of at most two progressions along which exactly one
// sequence is eventually constant.
struct SameWitness {
  struct Containment {
    int from_side = 1;  // 1: fiber of s1 inside fiber of s2; 2: the reverse
    std::string from_symbol;
    std::string to_symbol;
    core::Int exception_bound = 0;
  };
  std::vector<Containment> containments;
};

struct DifferentWitness {
  std::vector<Progression> progressions;  // one or two; their sorted union
};

using TypeWitness = std::variant<SameWitness, DifferentWitness>;

bool is_same(const TypeWitness& w);

// Decides whether s1 and s2 have the same topological type: lift both to the
// common tail period P = lcm past both prefixes and compare the partitions
// of the residues of Z_P induced by the two tails. Equal partitions make
// every subsequence converge on one side exactly when it does on the other;
// a partition mismatch is realized by a union of at most two progressions
// (single progressions only reach subgroup cosets of Z_P, which can miss the
// obstruction). Witnesses are replayable via verify_witness.
TypeWitness same_topological_type(const EventuallyPeriodicSeq& s1,
                                  const EventuallyPeriodicSeq& s2);

// True iff the sequence is eventually constant along the sorted union of the
// progressions (its tail hits finitely many residue classes, each carrying
// one symbol).
bool eventually_constant_along(const EventuallyPeriodicSeq& s,
                               const std::vector<Progression>& family);

// Symbols the sequence attains infinitely often along the family's union.
std::vector<std::string> limit_symbols_along(
    const EventuallyPeriodicSeq& s, const std::vector<Progression>& family);

// Replays a witness. Different: exactly one sequence eventually constant
// along the family, the other attaining >= 2 symbols infinitely often.
// Same: every stated almost-containment holds beyond its exception bound.
bool verify_witness(const EventuallyPeriodicSeq& s1,
                    const EventuallyPeriodicSeq& s2, const TypeWitness& w);

// Orbit prefix (x, f(x), ..., f^K(x)), K >= 1, interleaved as
// (x, f(x), x, f^2(x), ..., x, f^K(x)): even positions carry x, position
// 2k + 1 carries f^{k+1}(x). Output length 2K.
std::vector<std::string> interleave_pointed(const std::vector<std::string>& orbit);

// Strict alternation y with y(2k) = x_k, y(2k+1) = q_k; equal lengths only.
std::vector<std::string> interleave_dense(const std::vector<std::string>& x,
                                          const std::vector<std::string>& q);

// Triangular enumeration: block n+1 emits (x_1, 1/(T+1)) ... (x_{n+1}, 1/(T+n+1))
// with T = n(n+1)/2, so the heights run 1, 1/2, 1/3, ... exactly. Output
// length N(N+1)/2 for input length N.
std::vector<std::pair<std::string, Rational>> theta(
    const std::vector<std::string>& x);

// A symbol sequence packaged against a period structure; the level structure
// of the rendered windows depends only on fg, never on the labels.
struct OxtobySpec {
  core::FastGrowth fg;
  std::vector<std::string> symbols;
};

// Requires at least depth symbols; throws TooFewSymbols.
OxtobySpec oxtoby_spec_from_sequence(std::vector<std::string> symbols,
                                     const core::FastGrowth& fg);

// Window of the packaged sequence: level i positions carry symbols[i - 1];
// positions filled beyond the depth stay unset.
struct SymbolWindow {
  core::Window window;
  std::vector<std::optional<int>> levels;
  std::vector<std::optional<std::string>> symbols;
};

SymbolWindow render_window(const OxtobySpec& spec, core::Window window);

}  // namespace oxtoby::ttype
