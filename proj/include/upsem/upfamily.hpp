#ifndef UPSEM_UPFAMILY_HPP_
#define UPSEM_UPFAMILY_HPP_

#include <compare>
#include <cstdint>
#include <vector>

#include "upsem/subset.hpp"

namespace upsem {

// An upfamily over {0..order-1} in canonical form: the antichain of its
// minimal members, ascending by mask value. A set S is a member iff some
// minimal member is contained in S.
struct UpFamily {
  int order = 0;
  std::vector<SubsetMask> minimal;

  friend auto operator<=>(const UpFamily&, const UpFamily&) = default;
};

// Canonicalizes a nonempty list of nonempty generators; throws input_error
// on an empty list, an empty generator, or a generator outside the carrier.
UpFamily up_closure(int order, std::vector<SubsetMask> generators);

UpFamily principal(int order, SubsetMask s);  // <S>
UpFamily point_family(int order, int x);      // <{x}>

bool member(const UpFamily& f, SubsetMask s);

// All members, ascending by mask value.
std::vector<SubsetMask> members(const UpFamily& f);

struct FamilyFlags {
  bool filter = false;
  bool ultrafilter = false;
  bool linked = false;
  bool maximal_linked = false;
};

// Each flag is computed by two independent routes that must agree
// (internal_error otherwise): filter by intersection-closure vs a single
// minimal member; maximal linked by absence of a proper linked extension vs
// self-duality.
FamilyFlags classify_upfamily(const UpFamily& f);

// Dense membership table over all 2^order subsets (bit S = membership of S);
// only available for order <= 6.
using FamilyTable = std::uint64_t;

FamilyTable family_table(const UpFamily& f);
UpFamily family_from_table(int order, FamilyTable table);
bool table_self_dual(int order, FamilyTable table);

// Upward closure of {m} as a table, for incremental family construction.
FamilyTable upset_table(int order, SubsetMask m);

}  // namespace upsem

#endif  // UPSEM_UPFAMILY_HPP_
