#ifndef UPSEM_ORDER_HPP_
#define UPSEM_ORDER_HPP_

#include <vector>

#include "upsem/cayley.hpp"
#include "upsem/subset.hpp"

namespace upsem {

// Order structure of a semilattice: x <= y iff xy = x. Construction refuses
// non-semilattice tables.
struct SemilatticePoset {
  int order = 0;
  int min_element = 0;
  std::vector<SubsetMask> up;    // up[x]   = {y : xy = x} = {y : x <= y}
  std::vector<SubsetMask> down;  // down[x] = {y : xy = y} = {y : y <= x}

  bool leq(int x, int y) const { return up[x] >> y & 1; }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
};

SemilatticePoset order_structure(const CayleyTable& t);

// All maximal linearly ordered subsets, as element masks, sorted ascending.
std::vector<SubsetMask> maximal_chains(const CayleyTable& t);

// Route (a): every pair of distinct maximal chains multiplies to {min}.
bool is_bush_via_chains(const CayleyTable& t);

// Route (b): pointwise. xy lands in {x, y, min} for every pair, and no two
// incomparable elements share an upper bound (which rules out chains that
// reconverge above the root).
bool is_bush_pointwise(const CayleyTable& t);

// Runs both routes; they must agree (internal_error otherwise).
bool is_bush(const CayleyTable& t);

// Every down-set is a chain.
bool is_tree(const CayleyTable& t);

}  // namespace upsem

#endif  // UPSEM_ORDER_HPP_
