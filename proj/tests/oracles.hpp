// Test-only oracles, kept independent of the implementation paths they check.
#ifndef UPSEM_TESTS_ORACLES_HPP_
#define UPSEM_TESTS_ORACLES_HPP_

#include <set>
#include <vector>

#include "upsem/cayley.hpp"
#include "upsem/upfamily.hpp"

namespace upsem::oracles {

// The product straight from its definition: every member of a (not just the
// minimal ones), every tuple of members of b, no reductions. Only feasible
// for carriers of order <= 3.
inline UpFamily literal_product(const UpFamily& a, const UpFamily& b,
                                const CayleyTable& t) {
  const std::vector<SubsetMask> mem_a = members(a);
  const std::vector<SubsetMask> mem_b = members(b);
  std::vector<SubsetMask> unions;
  for (const SubsetMask A : mem_a) {
    const std::vector<int> xs = mask_elements(A);
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
      SubsetMask u = 0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (int y : mask_elements(mem_b[pick[i]]))
          u |= SubsetMask{1} << t.at(xs[i], y);
      unions.push_back(u);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == mem_b.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return up_closure(t.order, std::move(unions));
}

// Counts nonempty upward-closed families of nonempty subsets by sheer brute
// force over all 2^(2^n - 1) candidate families (n <= 4).
inline long brute_force_upfamily_count(int n) {
  const int subsets = (1 << n) - 1;  // nonempty subsets, ids 1..2^n-1
  long count = 0;
  for (std::uint32_t fam = 1; fam < (std::uint32_t{1} << subsets); ++fam) {
    bool closed = true;
    for (SubsetMask s = 1; s <= static_cast<SubsetMask>(subsets) && closed;
         ++s) {
      if (!(fam >> (s - 1) & 1)) continue;
      for (SubsetMask sup = s; sup <= static_cast<SubsetMask>(subsets);
           ++sup) {
        if (mask_subset(s, sup) && !(fam >> (sup - 1) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

// All associative tables on n elements (n <= 2 feasible as 16 tables, n = 3
// as 19683), canonicalized and deduplicated.
inline std::set<std::vector<std::uint8_t>> brute_force_semigroups(int n) {
  std::set<std::vector<std::uint8_t>> out;
  const int cells = n * n;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    CayleyTable t(n);
    long rest = code;
    for (int i = 0; i < cells; ++i) {
      t.cells[i] = static_cast<std::uint8_t>(rest % n);
      rest /= n;
    }
    if (validate_semigroup(t).ok) out.insert(canonical_form(t).cells);
  }
  return out;
}

}  // namespace upsem::oracles

#endif  // UPSEM_TESTS_ORACLES_HPP_
