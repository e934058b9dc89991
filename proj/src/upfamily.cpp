#include "upsem/upfamily.hpp"

#include <algorithm>

#include "upsem/errors.hpp"

namespace upsem {

UpFamily up_closure(int order, std::vector<SubsetMask> generators) {
  if (order < 1 || order > kMaxOrder)
    throw input_error("carrier order must be between 1 and 8");
  if (generators.empty())
    throw input_error("an upfamily needs at least one generator");
  for (SubsetMask g : generators) {
    if (g == 0) throw input_error("upfamily members must be nonempty");
    if (!mask_subset(g, full_mask(order)))
      throw input_error("generator does not fit the carrier");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  UpFamily f;
  f.order = order;
  for (SubsetMask g : generators) {
    bool minimal = true;
    for (SubsetMask h : generators)
      if (h != g && mask_subset(h, g)) {
        minimal = false;
        break;
      }
    if (minimal) f.minimal.push_back(g);
  }
  return f;
}

UpFamily principal(int order, SubsetMask s) { return up_closure(order, {s}); }

UpFamily point_family(int order, int x) {
  return principal(order, SubsetMask{1} << x);
}

bool member(const UpFamily& f, SubsetMask s) {
  for (SubsetMask m : f.minimal)
    if (mask_subset(m, s)) return true;
  return false;
}

std::vector<SubsetMask> members(const UpFamily& f) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 1; s <= full_mask(f.order); ++s)
    if (member(f, s)) out.push_back(s);
  return out;
}

FamilyFlags classify_upfamily(const UpFamily& f) {
  const SubsetMask full = full_mask(f.order);
  FamilyFlags flags;

  // Filter: closed under pairwise intersection vs a single minimal member.
  bool closed = true;
  const std::vector<SubsetMask> mem = members(f);
  for (std::size_t i = 0; i < mem.size() && closed; ++i)
    for (std::size_t j = i; j < mem.size(); ++j)
      if (!member(f, mem[i] & mem[j])) {
        closed = false;
        break;
      }
  const bool single = f.minimal.size() == 1;
  if (closed != single)
    throw internal_error("filter checks disagree");
  flags.filter = closed;
  flags.ultrafilter = single && mask_size(f.minimal[0]) == 1;

  flags.linked = true;
  for (std::size_t i = 0; i < f.minimal.size() && flags.linked; ++i)
    for (std::size_t j = i + 1; j < f.minimal.size(); ++j)
      if ((f.minimal[i] & f.minimal[j]) == 0) {
        flags.linked = false;
        break;
      }

  // Maximal linked, route 1: no nonmember intersects every minimal member
  // (adding such a set would be a proper linked extension).
  bool maximal_ext = flags.linked;
  if (flags.linked) {
    for (SubsetMask s = 1; s <= full; ++s) {
      if (member(f, s)) continue;
      bool meets_all = true;
      for (SubsetMask m : f.minimal)
        if ((s & m) == 0) {
          meets_all = false;
          break;
        }
      if (meets_all) {
        maximal_ext = false;
        break;
      }
    }
  }
  // Route 2: self-duality. Exactly one of S, X\S is a member for every
  // proper nonempty S (the full carrier is always a member, the empty set
  // never is).
  bool self_dual = true;
  for (SubsetMask s = 1; s < full; ++s)
    if (member(f, s) == member(f, full & ~s)) {
      self_dual = false;
      break;
    }
  if (maximal_ext != self_dual)
    throw internal_error("maximal-linked checks disagree");
  flags.maximal_linked = maximal_ext;
  return flags;
}

namespace {

void require_table_order(int order) {
  if (order < 1 || order > 6)
    throw internal_error("membership tables are limited to carriers of order <= 6");
}

}  // namespace

FamilyTable upset_table(int order, SubsetMask m) {
  require_table_order(order);
  const SubsetMask rest = full_mask(order) & ~m;
  FamilyTable t = 0;
  SubsetMask extra = 0;
  while (true) {
    t |= FamilyTable{1} << (m | extra);
    if (extra == rest) break;
    extra = (extra - rest) & rest;  // next subset of rest
  }
  return t;
}

FamilyTable family_table(const UpFamily& f) {
  require_table_order(f.order);
  FamilyTable t = 0;
  for (SubsetMask m : f.minimal) t |= upset_table(f.order, m);
  return t;
}

UpFamily family_from_table(int order, FamilyTable table) {
  require_table_order(order);
  UpFamily f;
  f.order = order;
  for (SubsetMask s = 1; s <= full_mask(order); ++s) {
    if (!(table >> s & 1)) continue;
    bool minimal = true;
    for (int x = 0; x < order; ++x)
      if ((s >> x & 1) && (table >> (s & ~(SubsetMask{1} << x)) & 1)) {
        minimal = false;
        break;
      }
    if (minimal) f.minimal.push_back(s);
  }
  return f;
}

bool table_self_dual(int order, FamilyTable table) {
  require_table_order(order);
  const SubsetMask full = full_mask(order);
  for (SubsetMask s = 0; s <= full; ++s)
    if ((table >> s & 1) == (table >> (full & ~s) & 1)) return false;
  return true;
}

}  // namespace upsem
