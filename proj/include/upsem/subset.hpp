#ifndef UPSEM_SUBSET_HPP_
#define UPSEM_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace upsem {

// A subset of the carrier {0, ..., n-1}, bit i = element i. Carriers are
// capped at 8 elements, so masks always fit in the low byte.
using SubsetMask = std::uint32_t;

constexpr int kMaxOrder = 8;

constexpr SubsetMask full_mask(int n) {
  return (SubsetMask{1} << n) - 1;
}

constexpr bool mask_subset(SubsetMask a, SubsetMask b) {
  return (a & ~b) == 0;
}

inline int mask_size(SubsetMask a) {
  return std::popcount(a);
}

inline std::vector<int> mask_elements(SubsetMask a) {
  std::vector<int> out;
  for (int i = 0; a >> i; ++i) {
    if (a >> i & 1) out.push_back(i);
  }
  return out;
}

}  // namespace upsem

#endif  // UPSEM_SUBSET_HPP_
