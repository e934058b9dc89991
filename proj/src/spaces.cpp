#include "upsem/spaces.hpp"

#include <algorithm>
#include <bit>

#include "upsem/errors.hpp"

namespace upsem {

SpaceKind parse_space(const std::string& s) {
  if (s == "upsilon") return SpaceKind::upsilon;
  if (s == "phi") return SpaceKind::phi;
  if (s == "beta") return SpaceKind::beta;
  if (s == "n2") return SpaceKind::n2;
  if (s == "lambda") return SpaceKind::lambda;
  throw input_error("unknown space '" + s +
                    "' (expected upsilon, phi, beta, n2 or lambda)");
}

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::upsilon: return "upsilon";
    case SpaceKind::phi: return "phi";
    case SpaceKind::beta: return "beta";
    case SpaceKind::n2: return "n2";
    case SpaceKind::lambda: return "lambda";
  }
  return "?";
}

bool in_space(const UpFamily& f, SpaceKind k) {
  switch (k) {
    case SpaceKind::upsilon:
      return true;
    case SpaceKind::phi:
      return f.minimal.size() == 1;
    case SpaceKind::beta:
      return f.minimal.size() == 1 && mask_size(f.minimal[0]) == 1;
    case SpaceKind::n2:
    case SpaceKind::lambda: {
      for (std::size_t i = 0; i < f.minimal.size(); ++i)
        for (std::size_t j = i + 1; j < f.minimal.size(); ++j)
          if ((f.minimal[i] & f.minimal[j]) == 0) return false;
      if (k == SpaceKind::n2) return true;
      const SubsetMask full = full_mask(f.order);
      for (SubsetMask s = 1; s < full; ++s)
        if (member(f, s) == member(f, full & ~s)) return false;
      return true;
    }
  }
  return false;
}

namespace {

// DFS over antichains of nonempty subsets, candidates ascending by mask, so
// families come out in lexicographic order on their sorted minimal lists.
void enumerate_antichains(SpaceKind kind, int n, std::vector<UpFamily>& out) {
  const SubsetMask full = full_mask(n);
  const bool need_linked = kind == SpaceKind::n2 || kind == SpaceKind::lambda;
  const bool need_self_dual = kind == SpaceKind::lambda;
  const int half = 1 << (n - 1);

  std::vector<FamilyTable> upsets;
  if (need_self_dual) {
    upsets.resize(full + 1);
    for (SubsetMask m = 1; m <= full; ++m) upsets[m] = upset_table(n, m);
  }

  std::vector<SubsetMask> chosen;
  auto dfs = [&](auto&& self, SubsetMask next, FamilyTable table) -> void {
    for (SubsetMask c = next; c <= full; ++c) {
      bool ok = true;
      for (SubsetMask m : chosen) {
        if (mask_subset(m, c) || mask_subset(c, m) ||
            (need_linked && (m & c) == 0)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(c);
      const FamilyTable with = need_self_dual ? (table | upsets[c]) : 0;
      if (!need_self_dual || std::popcount(with) == half)
        out.push_back(UpFamily{n, chosen});
      self(self, c + 1, with);
      chosen.pop_back();
    }
  };
  dfs(dfs, 1, 0);
}

}  // namespace

std::vector<UpFamily> enumerate_space(SpaceKind k, int n, const Caps& caps) {
  if (n < 1)
    throw input_error("carrier order must be at least 1");
  const int cap = caps.space_cap(k);
  if (n > cap)
    throw cap_error("enumerating " + to_string(k) + "(" + std::to_string(n) +
                    ") is above the cap of " + std::to_string(cap));
  std::vector<UpFamily> out;
  switch (k) {
    case SpaceKind::beta:
      for (int x = 0; x < n; ++x) out.push_back(point_family(n, x));
      break;
    case SpaceKind::phi:
      for (SubsetMask s = 1; s <= full_mask(n); ++s)
        out.push_back(principal(n, s));
      break;
    default:
      enumerate_antichains(k, n, out);
      break;
  }
  return out;
}

std::vector<std::pair<std::string, UpFamily>> named_lambda4_elements() {
  std::vector<std::pair<std::string, UpFamily>> out;
  for (int k = 0; k < 4; ++k)
    out.emplace_back("⟨" + std::to_string(k) + "⟩", point_family(4, k));
  for (int k = 0; k < 4; ++k) {
    std::vector<SubsetMask> gens;
    for (SubsetMask s = 1; s <= full_mask(4); ++s)
      if (mask_size(s) == 2 && !(s >> k & 1)) gens.push_back(s);
    out.emplace_back("Δ_" + std::to_string(k), up_closure(4, gens));
  }
  for (int k = 0; k < 4; ++k) {
    std::vector<SubsetMask> gens{full_mask(4) & ~(SubsetMask{1} << k)};
    for (SubsetMask s = 1; s <= full_mask(4); ++s)
      if (mask_size(s) == 2 && (s >> k & 1)) gens.push_back(s);
    out.emplace_back("□_" + std::to_string(k), up_closure(4, gens));
  }
  return out;
}

namespace {

std::string family_json_text(const UpFamily& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.minimal.size(); ++i) {
    if (i) s += ",";
    s += "[";
    const std::vector<int> elems = mask_elements(f.minimal[i]);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(elems[j]);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

std::string family_display_name(const UpFamily& f, SpaceKind k) {
  if (f.minimal.size() == 1 && mask_size(f.minimal[0]) == 1)
    return "⟨" + std::to_string(mask_elements(f.minimal[0])[0]) + "⟩";
  if (k == SpaceKind::lambda && f.order == 3 &&
      f.minimal == std::vector<SubsetMask>{3, 5, 6})
    return "Δ";
  if (k == SpaceKind::lambda && f.order == 4) {
    for (const auto& [name, g] : named_lambda4_elements())
      if (g == f) return name;
  }
  return family_json_text(f);
}

}  // namespace upsem
