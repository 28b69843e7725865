#pragma once

// Brute-force arbiter for topological type over eventually periodic
// sequences: two presentations are equivalent when no subsequence family
// separates them. Every separating subsequence reduces to one on a union of
// at most two residue classes mod the common period P (a set on which one
// side is constant and the other attains two symbols contains a separating
// two-element subset, and singletons are progressions), so enumerating all
// coset masks of Z_P plus all unions of two of them is complete. The oracle
// touches the sequences only through value().

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oxtoby/ttype.hpp"

namespace oxtoby_tests {

inline bool oracle_same_type(const oxtoby::ttype::EventuallyPeriodicSeq& s1,
                             const oxtoby::ttype::EventuallyPeriodicSeq& s2) {
  using oxtoby::core::Int;
  const Int P = std::lcm(s1.period(), s2.period());
  const Int n0 = std::max(s1.prefix_len(), s2.prefix_len());

  // Symbol carried by each residue class beyond both prefixes.
  std::vector<std::string> v1, v2;
  for (Int r = 0; r < P; ++r) {
    Int n = r;
    while (n < n0) n += P;
    v1.push_back(s1.value(n));
    v2.push_back(s2.value(n));
  }

  // Residue sets visited infinitely often by single progressions a + k*d.
  std::set<unsigned> mask_set;
  for (Int d = 1; d <= P; ++d)
    for (Int a = 0; a < d; ++a) {
      unsigned m = 0;
      for (Int k = 0; k < P; ++k)
        m |= 1u << static_cast<unsigned>((a + k * d) % P);
      mask_set.insert(m);
    }
  const std::vector<unsigned> fams(mask_set.begin(), mask_set.end());

  auto constant_on = [&](const std::vector<std::string>& v, unsigned m) {
    const std::string* first = nullptr;
    for (Int r = 0; r < P; ++r) {
      if (!((m >> r) & 1u)) continue;
      if (first == nullptr)
        first = &v[static_cast<std::size_t>(r)];
      else if (*first != v[static_cast<std::size_t>(r)])
        return false;
    }
    return true;
  };

  for (unsigned m : fams)
    if (constant_on(v1, m) != constant_on(v2, m)) return false;
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i + 1; j < fams.size(); ++j) {
      const unsigned u = fams[i] | fams[j];
      if (constant_on(v1, u) != constant_on(v2, u)) return false;
    }
  return true;
}

}  // namespace oxtoby_tests
