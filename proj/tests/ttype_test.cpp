#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "oxtoby/ttype.hpp"
#include "support/progression_oracle.hpp"

using namespace oxtoby::ttype;
using oxtoby::core::Int;
using oxtoby_tests::oracle_same_type;

namespace {

EventuallyPeriodicSeq periodic(std::vector<std::string> tail) {
  return mk_seq({}, std::move(tail));
}

// All tails of length 1..max_len over the first k letters of {a, b, c}.
std::vector<std::vector<std::string>> all_tails(int k, int max_len) {
  const std::vector<std::string> letters = {"a", "b", "c"};
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (remaining == 0) return;
    for (int i = 0; i < k; ++i) {
      cur.push_back(letters[static_cast<std::size_t>(i)]);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, max_len);
  // rec pushes each proper prefix many times; dedupe
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("metric space validation") {
  const Rational one(1);
  auto ok = mk_finite_metric_space(
      {"a", "b"}, {{Rational(0), one}, {one, Rational(0)}});
  CHECK(ok.points.size() == 2);

  CHECK_THROWS_AS(mk_finite_metric_space({}, {}), BadMetric);
  CHECK_THROWS_AS(mk_finite_metric_space(
                      {"a", "a"}, {{Rational(0), one}, {one, Rational(0)}}),
                  BadMetric);
  CHECK_THROWS_AS(mk_finite_metric_space({"a", "b"}, {{Rational(0), one}}),
                  BadMetric);
  CHECK_THROWS_AS(mk_finite_metric_space(
                      {"a", "b"}, {{Rational(0), one}, {Rational(2), Rational(0)}}),
                  BadMetric);
  CHECK_THROWS_AS(
      mk_finite_metric_space({"a", "b"},
                             {{Rational(0), Rational(0)},
                              {Rational(0), Rational(0)}}),
      BadMetric);
  // d(a, c) = 3 > d(a, b) + d(b, c) = 2
  CHECK_THROWS_AS(mk_finite_metric_space(
                      {"a", "b", "c"},
                      {{Rational(0), one, Rational(3)},
                       {one, Rational(0), one},
                       {Rational(3), one, Rational(0)}}),
                  BadMetric);
}

TEST_CASE("sequence construction and evaluation") {
  CHECK_THROWS_AS(mk_seq({"a"}, {}), BadSeq);
  auto s = mk_seq({"p", "q"}, {"a", "b", "c"});
  CHECK(s.prefix_len() == 2);
  CHECK(s.period() == 3);
  CHECK(s.value(0) == "p");
  CHECK(s.value(1) == "q");
  CHECK(s.value(2) == "a");
  CHECK(s.value(4) == "c");
  CHECK(s.value(5) == "a");
  CHECK_THROWS_AS(s.value(-1), std::invalid_argument);
}

TEST_CASE("membership in a space and limit symbols") {
  const Rational one(1);
  auto space = mk_finite_metric_space(
      {"a", "b"}, {{Rational(0), one}, {one, Rational(0)}});
  CHECK(draws_from(periodic({"a", "b"}), space));
  CHECK_FALSE(draws_from(mk_seq({"z"}, {"a"}), space));

  CHECK(omega_limit(mk_seq({"a", "b"}, {"c"})) ==
        std::vector<std::string>{"c"});
  CHECK(omega_limit(periodic({"b", "a", "b"})) ==
        std::vector<std::string>{"a", "b"});
}

TEST_CASE("constancy along progression families") {
  auto s = periodic({"a", "b"});
  CHECK(eventually_constant_along(s, {{0, 2}}));
  CHECK_FALSE(eventually_constant_along(s, {{0, 1}}));
  CHECK(limit_symbols_along(s, {{0, 2}}) == std::vector<std::string>{"a"});
  CHECK(limit_symbols_along(s, {{0, 2}, {1, 2}}) ==
        std::vector<std::string>{"a", "b"});
  CHECK_FALSE(eventually_constant_along(s, {{0, 2}, {1, 2}}));

  // The prefix never matters for eventual behavior.
  auto t = mk_seq({"b", "b", "b"}, {"a"});
  CHECK(eventually_constant_along(t, {{0, 1}}));
}

TEST_CASE("equal rotations have the same type") {
  auto w = same_topological_type(periodic({"a", "b"}), periodic({"b", "a"}));
  REQUIRE(is_same(w));
  const auto& sw = std::get<SameWitness>(w);
  CHECK(sw.containments.size() == 4);
  for (const auto& c : sw.containments) CHECK(c.exception_bound == 0);
  CHECK(verify_witness(periodic({"a", "b"}), periodic({"b", "a"}), w));
}

TEST_CASE("relabeled sequences have the same type") {
  auto s1 = periodic({"a", "b", "c"});
  auto s2 = periodic({"x", "y", "z"});
  auto w = same_topological_type(s1, s2);
  CHECK(is_same(w));
  CHECK(verify_witness(s1, s2, w));
}

TEST_CASE("a constant against an alternation splits on the full sequence") {
  auto s1 = periodic({"a"});
  auto s2 = periodic({"a", "b"});
  auto w = same_topological_type(s1, s2);
  REQUIRE_FALSE(is_same(w));
  const auto& dw = std::get<DifferentWitness>(w);
  REQUIRE(dw.progressions.size() == 1);
  CHECK(dw.progressions[0].a == 0);
  CHECK(dw.progressions[0].d == 1);
  CHECK(verify_witness(s1, s2, w));
}

TEST_CASE("doubling the period splits along the even subsequence") {
  auto s1 = periodic({"a", "b"});
  auto s2 = periodic({"a", "a", "b", "b"});
  auto w = same_topological_type(s1, s2);
  REQUIRE_FALSE(is_same(w));
  const auto& dw = std::get<DifferentWitness>(w);
  REQUIRE(dw.progressions.size() == 1);
  CHECK(dw.progressions[0].a == 0);
  CHECK(dw.progressions[0].d == 2);
  CHECK(verify_witness(s1, s2, w));
}

TEST_CASE("some splits need a union of two progressions") {
  auto s1 = periodic({"a", "a", "b"});
  auto s2 = periodic({"a", "b", "b"});
  auto w = same_topological_type(s1, s2);
  REQUIRE_FALSE(is_same(w));
  const auto& dw = std::get<DifferentWitness>(w);
  CHECK(dw.progressions.size() == 2);
  CHECK(verify_witness(s1, s2, w));
  // No single progression separates this pair.
  for (Int d = 1; d <= 3; ++d)
    for (Int a = 0; a < d; ++a)
      CHECK(eventually_constant_along(s1, {{a, d}}) ==
            eventually_constant_along(s2, {{a, d}}));
}

TEST_CASE("prefixes shift the alignment but respect the partition") {
  auto s1 = mk_seq({"z"}, {"a", "b"});
  auto s2 = periodic({"a", "b"});
  auto w = same_topological_type(s1, s2);
  CHECK(is_same(w));
  CHECK(verify_witness(s1, s2, w));
}

TEST_CASE("witness verification rejects tampered witnesses") {
  auto s1 = periodic({"a", "b"});
  auto s2 = periodic({"b", "a"});
  // A claimed split along the full sequence: both sides are non-constant.
  TypeWitness fake = DifferentWitness{{{0, 1}}};
  CHECK_FALSE(verify_witness(s1, s2, fake));

  auto w = same_topological_type(s1, s2);
  auto& sw = std::get<SameWitness>(w);
  sw.containments[0].to_symbol = sw.containments[0].from_symbol;
  CHECK_FALSE(verify_witness(s1, s2, w));
}

TEST_CASE("decision agrees with the subsequence oracle on a small grid") {
  auto tails = all_tails(2, 3);
  REQUIRE(tails.size() == 14);
  for (const auto& t1 : tails)
    for (const auto& t2 : tails) {
      auto s1 = periodic(t1);
      auto s2 = periodic(t2);
      auto w = same_topological_type(s1, s2);
      CHECK(is_same(w) == oracle_same_type(s1, s2));
      CHECK(verify_witness(s1, s2, w));
      if (is_same(w))
        CHECK(omega_limit(s1).size() == omega_limit(s2).size());
    }
}

TEST_CASE("decision handles prefixed presentations against the oracle") {
  const std::vector<std::vector<std::string>> prefixes = {
      {}, {"a"}, {"b", "a"}, {"c", "c", "b"}};
  const std::vector<std::vector<std::string>> tails = {
      {"a"}, {"a", "b"}, {"a", "b", "b"}, {"b", "c", "a", "c"}};
  for (const auto& p1 : prefixes)
    for (const auto& t1 : tails)
      for (const auto& p2 : prefixes)
        for (const auto& t2 : tails) {
          auto s1 = mk_seq(p1, t1);
          auto s2 = mk_seq(p2, t2);
          auto w = same_topological_type(s1, s2);
          CHECK(is_same(w) == oracle_same_type(s1, s2));
          CHECK(verify_witness(s1, s2, w));
        }
}

TEST_CASE("pointed interleave alternates the base point with the orbit") {
  CHECK(interleave_pointed({"a", "b", "c", "d"}) ==
        std::vector<std::string>{"a", "b", "a", "c", "a", "d"});
  CHECK(interleave_pointed({"x", "y"}) ==
        std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(interleave_pointed({"x"}), std::invalid_argument);

  auto out = interleave_pointed({"p", "q", "r"});
  for (std::size_t k = 0; k < out.size(); k += 2) CHECK(out[k] == "p");
  // Erasing the even positions recovers the orbit tail.
  std::vector<std::string> odd;
  for (std::size_t k = 1; k < out.size(); k += 2) odd.push_back(out[k]);
  CHECK(odd == std::vector<std::string>{"q", "r"});
}

TEST_CASE("dense interleave strictly alternates two sequences") {
  CHECK(interleave_dense({"a", "b", "c"}, {"u", "v", "w"}) ==
        std::vector<std::string>{"a", "u", "b", "v", "c", "w"});
  CHECK_THROWS_AS(interleave_dense({"a"}, {"u", "v"}), LengthMismatch);
}

TEST_CASE("triangular enumeration with exact heights") {
  auto out = theta({"x1", "x2", "x3"});
  REQUIRE(out.size() == 6);
  const std::vector<std::pair<std::string, Rational>> want = {
      {"x1", Rational(1, 1)}, {"x1", Rational(1, 2)}, {"x2", Rational(1, 3)},
      {"x1", Rational(1, 4)}, {"x2", Rational(1, 5)}, {"x3", Rational(1, 6)}};
  CHECK(out == want);
  CHECK_THROWS_AS(theta({}), std::invalid_argument);

  auto big = theta({"a", "b", "c", "d"});
  REQUIRE(big.size() == 10);
  for (std::size_t k = 1; k < big.size(); ++k) {
    CHECK(big[k].second < big[k - 1].second);
    CHECK(big[k].second > Rational(0));
  }
  // Block n+1 repeats the first n+1 symbols in order.
  std::size_t at = 0;
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t j = 0; j <= n; ++j) {
      CHECK(big[at].first == std::vector<std::string>{"a", "b", "c", "d"}[j]);
      ++at;
    }
}

TEST_CASE("packaging symbols against a period structure") {
  auto fg = oxtoby::core::mk_fast_growth({3, 3, 3, 3});
  CHECK_THROWS_AS(oxtoby_spec_from_sequence({"a", "b"}, fg), TooFewSymbols);

  auto spec = oxtoby_spec_from_sequence({"a", "b", "c", "d"}, fg);
  auto w = render_window(spec, oxtoby::core::mk_window(-6, 7));
  std::vector<std::string> got;
  for (const auto& cell : w.symbols) {
    REQUIRE(cell.has_value());
    got.push_back(*cell);
  }
  CHECK(got == std::vector<std::string>{"a", "c", "a", "a", "b", "a", "a",
                                        "b", "a", "a", "c", "a", "a"});

  auto flat = oxtoby_spec_from_sequence({"a", "a", "a", "a"}, fg);
  auto fw = render_window(flat, oxtoby::core::mk_window(-6, 7));
  for (const auto& cell : fw.symbols) CHECK(cell == std::optional<std::string>("a"));
}

TEST_CASE("rendering leaves deep positions unresolved") {
  auto fg = oxtoby::core::mk_fast_growth({3, 4, 3});
  auto spec = oxtoby_spec_from_sequence({"a", "b", "c"}, fg);
  auto w = render_window(spec, oxtoby::core::mk_window(14, 21));
  // positions 16 and 19 are filled beyond depth 3
  CHECK_FALSE(w.symbols[2].has_value());
  CHECK_FALSE(w.symbols[5].has_value());
  CHECK(w.symbols[0] == std::optional<std::string>("a"));
  CHECK(w.levels[2] == std::nullopt);
}
