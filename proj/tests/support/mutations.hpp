#pragma once

// Seeded engine corruptions for fault-injection runs. Each mutant breaks the
// level arithmetic (or the partial sums) in one documented way; the checks
// are required to catch every one of them with a replayable counterexample.

#include <memory>
#include <string>
#include <vector>

#include "oxtoby/harness.hpp"

namespace oxtoby_tests {

class MutantBase : public oxtoby::harness::Engine {
 public:
  explicit MutantBase(oxtoby::core::FastGrowth fg) : fg_(std::move(fg)) {}
  const oxtoby::core::FastGrowth& fg() const override { return fg_; }
  oxtoby::core::Int q(int i) const override {
    return fg_.q.at(static_cast<std::size_t>(i));
  }

 protected:
  oxtoby::core::FastGrowth fg_;
};

// Fill rule loses its second branch: only k = 0 (mod r_i) marks, never
// k = -1. Destroys the left-right symmetry of the construction.
class DropMinusOneBranch final : public MutantBase {
 public:
  using MutantBase::MutantBase;
  std::optional<int> level_at(oxtoby::core::Int n) const override {
    for (int i = 1; i <= fg_.depth(); ++i) {
      const auto r = oxtoby::core::mod_floor(
          oxtoby::core::floor_div(n, fg_.p[static_cast<std::size_t>(i - 1)]),
          fg_.ratios[static_cast<std::size_t>(i - 1)]);
      if (r == 0) return i;
    }
    return std::nullopt;
  }
  std::string name() const override { return "drop-minus-one-branch"; }
};

// Partial sums q_i reported one too large for i >= 1; levels stay exact.
class OffByOneQ final : public MutantBase {
 public:
  using MutantBase::MutantBase;
  std::optional<int> level_at(oxtoby::core::Int n) const override {
    return oxtoby::core::level(n, fg_);
  }
  oxtoby::core::Int q(int i) const override {
    return fg_.q.at(static_cast<std::size_t>(i)) + (i >= 1 ? 1 : 0);
  }
  std::string name() const override { return "off-by-one-q"; }
};

// Single-cell corruption: position 4 reports level 2.
class ForceLevel4Is2 final : public MutantBase {
 public:
  using MutantBase::MutantBase;
  std::optional<int> level_at(oxtoby::core::Int n) const override {
    if (n == 4) return 2;
    return oxtoby::core::level(n, fg_);
  }
  std::string name() const override { return "force-level4-is-2"; }
};

// Truncating division and remainder instead of the floor pair; wrong on
// negative positions.
class TruncatedDivision final : public MutantBase {
 public:
  using MutantBase::MutantBase;
  std::optional<int> level_at(oxtoby::core::Int n) const override {
    for (int i = 1; i <= fg_.depth(); ++i) {
      const auto r = (n / fg_.p[static_cast<std::size_t>(i - 1)]) %
                     fg_.ratios[static_cast<std::size_t>(i - 1)];
      if (r == 0 || r == fg_.ratios[static_cast<std::size_t>(i - 1)] - 1)
        return i;
    }
    return std::nullopt;
  }
  std::string name() const override { return "truncated-division"; }
};

// Residue test against {0, 1} instead of {0, r_i - 1}.
class WrongResidueBranch final : public MutantBase {
 public:
  using MutantBase::MutantBase;
  std::optional<int> level_at(oxtoby::core::Int n) const override {
    for (int i = 1; i <= fg_.depth(); ++i) {
      const auto r = oxtoby::core::mod_floor(
          oxtoby::core::floor_div(n, fg_.p[static_cast<std::size_t>(i - 1)]),
          fg_.ratios[static_cast<std::size_t>(i - 1)]);
      if (r == 0 || r == 1) return i;
    }
    return std::nullopt;
  }
  std::string name() const override { return "wrong-residue-branch"; }
};

// Levels 2 and 3 exchanged everywhere.
class SwapLevels23 final : public MutantBase {
 public:
  using MutantBase::MutantBase;
  std::optional<int> level_at(oxtoby::core::Int n) const override {
    auto l = oxtoby::core::level(n, fg_);
    if (l == 2) return 3;
    if (l == 3) return 2;
    return l;
  }
  std::string name() const override { return "swap-levels-2-3"; }
};

inline std::vector<std::unique_ptr<oxtoby::harness::Engine>> all_mutants(
    const oxtoby::core::FastGrowth& fg) {
  std::vector<std::unique_ptr<oxtoby::harness::Engine>> out;
  out.push_back(std::make_unique<DropMinusOneBranch>(fg));
  out.push_back(std::make_unique<OffByOneQ>(fg));
  out.push_back(std::make_unique<ForceLevel4Is2>(fg));
  out.push_back(std::make_unique<TruncatedDivision>(fg));
  out.push_back(std::make_unique<WrongResidueBranch>(fg));
  out.push_back(std::make_unique<SwapLevels23>(fg));
  return out;
}

}  // namespace oxtoby_tests
