#include "upsem/order.hpp"

#include <algorithm>

#include "upsem/errors.hpp"

namespace upsem {

SemilatticePoset order_structure(const CayleyTable& t) {
  require_semigroup(t);
  const StructureFlags f = classify(t);
  if (!f.semilattice)
    throw input_error("order structure is defined for semilattices only");
  const int n = t.order;
  SemilatticePoset p;
  p.order = n;
  p.up.assign(n, 0);
  p.down.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (t.at(x, y) == x) p.up[x] |= SubsetMask{1} << y;
      if (t.at(x, y) == y) p.down[x] |= SubsetMask{1} << y;
    }
  for (int z = 0; z < n; ++z)
    if (p.up[z] == full_mask(n)) p.min_element = z;
  return p;
}

std::vector<SubsetMask> maximal_chains(const CayleyTable& t) {
  const SemilatticePoset p = order_structure(t);
  const int n = p.order;
  // covers[x] = elements immediately above x
  std::vector<SubsetMask> covers(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.leq(x, y)) continue;
      const SubsetMask between =
          p.up[x] & p.down[y] & ~(SubsetMask{1} << x) & ~(SubsetMask{1} << y);
      if (between == 0) covers[x] |= SubsetMask{1} << y;
    }
  std::vector<SubsetMask> out;
  std::vector<std::pair<int, SubsetMask>> stack;
  stack.emplace_back(p.min_element, SubsetMask{1} << p.min_element);
  while (!stack.empty()) {
    auto [x, chain] = stack.back();
    stack.pop_back();
    if (covers[x] == 0) {
      out.push_back(chain);
      continue;
    }
    for (int y = n - 1; y >= 0; --y)
      if (covers[x] >> y & 1)
        stack.emplace_back(y, chain | SubsetMask{1} << y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bush_via_chains(const CayleyTable& t) {
  const SemilatticePoset p = order_structure(t);
  const SubsetMask min_bit = SubsetMask{1} << p.min_element;
  const std::vector<SubsetMask> chains = maximal_chains(t);
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      SubsetMask product = 0;
      for (int a : mask_elements(chains[i]))
        for (int b : mask_elements(chains[j]))
          product |= SubsetMask{1} << t.at(a, b);
      if (product != min_bit) return false;
    }
  return true;
}

bool is_bush_pointwise(const CayleyTable& t) {
  const SemilatticePoset p = order_structure(t);
  const int n = p.order;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      if (t.at(x, y) != p.min_element) return false;
      if ((p.up[x] & p.up[y]) != 0) return false;
    }
  return true;
}

bool is_bush(const CayleyTable& t) {
  const bool a = is_bush_via_chains(t);
  const bool b = is_bush_pointwise(t);
  if (a != b)
    throw internal_error("is_bush routes disagree on a semilattice of order " +
                         std::to_string(t.order));
  return a;
}

bool is_tree(const CayleyTable& t) {
  const SemilatticePoset p = order_structure(t);
  for (int z = 0; z < p.order; ++z) {
    const std::vector<int> below = mask_elements(p.down[z]);
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = i + 1; j < below.size(); ++j)
        if (!p.comparable(below[i], below[j])) return false;
  }
  return true;
}

}  // namespace upsem
