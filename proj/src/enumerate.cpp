#include "upsem/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "upsem/errors.hpp"
#include "upsem/order.hpp"
#include "upsem/subset.hpp"

namespace upsem {

SemigroupClass parse_class(const std::string& s) {
  if (s == "all") return SemigroupClass::all;
  if (s == "band") return SemigroupClass::band;
  if (s == "commutative") return SemigroupClass::commutative;
  if (s == "semilattice") return SemigroupClass::semilattice;
  if (s == "linear") return SemigroupClass::linear;
  if (s == "lattice") return SemigroupClass::lattice;
  throw input_error("unknown class '" + s + "'");
}

std::string to_string(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::all: return "all";
    case SemigroupClass::band: return "band";
    case SemigroupClass::commutative: return "commutative";
    case SemigroupClass::semilattice: return "semilattice";
    case SemigroupClass::linear: return "linear";
    case SemigroupClass::lattice: return "lattice";
  }
  return "?";
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;

struct Backtracker {
  int n;
  SemigroupClass cls;
  CayleyTable t;
  std::vector<std::pair<int, int>> cells;  // fill order
  std::vector<int> trail;                  // linear indices of set cells
  std::set<std::vector<std::uint8_t>> found;

  bool commutative_fill() const {
    return cls == SemigroupClass::commutative ||
           cls == SemigroupClass::semilattice ||
           cls == SemigroupClass::lattice;
  }

  bool idempotent_class() const {
    return cls == SemigroupClass::band || cls == SemigroupClass::linear ||
           cls == SemigroupClass::semilattice || cls == SemigroupClass::lattice;
  }

  bool known(int x, int y) const { return t.cells[x * n + y] != kUnset; }

  // All triples whose four lookups are determined must associate.
  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!known(a, b)) continue;
        const int ab = t.at(a, b);
        for (int c = 0; c < n; ++c) {
          if (!known(b, c) || !known(ab, c)) continue;
          const int bc = t.at(b, c);
          if (!known(a, bc)) continue;
          if (t.at(ab, c) != t.at(a, bc)) return false;
        }
      }
    return true;
  }

  bool set_cell(int x, int y, int v) {
    std::uint8_t& c = t.cells[x * n + y];
    if (c != kUnset) return c == v;
    c = static_cast<std::uint8_t>(v);
    trail.push_back(x * n + y);
    return true;
  }

  // In a band, (xy)y = xy and x(xy) = xy, so those cells are forced.
  bool assign(int x, int y, int v) {
    if (!set_cell(x, y, v)) return false;
    if (commutative_fill() && !set_cell(y, x, v)) return false;
    if (idempotent_class()) {
      if (!set_cell(v, y, v) || !set_cell(x, v, v)) return false;
      if (commutative_fill() && (!set_cell(y, v, v) || !set_cell(v, x, v)))
        return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      t.cells[trail.back()] = kUnset;
      trail.pop_back();
    }
  }

  void run(std::size_t i) {
    while (i < cells.size() && known(cells[i].first, cells[i].second)) ++i;
    if (i == cells.size()) {
      found.insert(canonical_form(t).cells);
      return;
    }
    const auto [x, y] = cells[i];
    for (int v = 0; v < n; ++v) {
      if (cls == SemigroupClass::linear && v != x && v != y) continue;
      const std::size_t mark = trail.size();
      if (assign(x, y, v) && consistent()) run(i + 1);
      undo(mark);
    }
  }
};

bool has_top(const CayleyTable& t) {
  for (int z = 0; z < t.order; ++z) {
    bool top = true;
    for (int x = 0; x < t.order; ++x)
      if (t.at(x, z) != x) {
        top = false;
        break;
      }
    if (top) return true;
  }
  return false;
}

}  // namespace

std::vector<CayleyTable> enumerate_semigroups(int n, SemigroupClass c,
                                              const Caps& caps) {
  if (n < 1) throw input_error("carrier order must be at least 1");
  const int cap = caps.class_cap(c);
  if (n > cap)
    throw cap_error("enumerating class '" + to_string(c) + "' at order " +
                    std::to_string(n) + " is above the cap of " +
                    std::to_string(cap));

  Backtracker bt;
  bt.n = n;
  bt.cls = c;
  bt.t = CayleyTable(n);
  std::fill(bt.t.cells.begin(), bt.t.cells.end(), kUnset);

  const bool idempotent = c == SemigroupClass::band ||
                          c == SemigroupClass::semilattice ||
                          c == SemigroupClass::linear ||
                          c == SemigroupClass::lattice;
  if (idempotent)
    for (int x = 0; x < n; ++x) bt.t.set(x, x, x);

  // A semilattice has a unique absorbing minimum, so element 0 can play that
  // role in some labeling of every class; same for the top of a lattice.
  // Shrinks the labeled search without losing isomorphism classes.
  if (c == SemigroupClass::semilattice || c == SemigroupClass::lattice)
    for (int x = 0; x < n; ++x) {
      bt.t.set(0, x, 0);
      bt.t.set(x, 0, 0);
    }
  if (c == SemigroupClass::lattice)
    for (int x = 0; x < n; ++x) {
      bt.t.set(x, n - 1, x);
      bt.t.set(n - 1, x, x);
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (bt.known(x, y)) continue;
      if (bt.commutative_fill() && y < x) continue;
      bt.cells.emplace_back(x, y);
    }

  bt.run(0);

  std::vector<CayleyTable> out;
  for (const auto& cells : bt.found) {
    CayleyTable t(n);
    t.cells = cells;
    if (c == SemigroupClass::lattice && !has_top(t)) continue;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Labeled posets on {0..n-1}, built by inserting elements in index order;
// below[x] = strictly-smaller elements among 0..n-1.
void gen_labeled_posets(int n, std::vector<SubsetMask>& below,
                        std::vector<SubsetMask>& above, int k,
                        const std::function<void()>& emit) {
  if (k == n) {
    emit();
    return;
  }
  const SubsetMask prior = full_mask(k);
  for (SubsetMask d = 0;; d = (d - prior) & prior) {
    // d must be down-closed among the existing elements
    bool ok = true;
    for (int x = 0; x < k && ok; ++x)
      if ((d >> x & 1) && (below[x] & ~d)) ok = false;
    if (ok) {
      const SubsetMask rest = prior & ~d;
      for (SubsetMask u = 0;; u = (u - rest) & rest) {
        bool good = true;
        for (int x = 0; x < k && good; ++x)
          if ((u >> x & 1) && (above[x] & ~u)) good = false;
        // transitivity through the new element must already hold
        for (int a = 0; a < k && good; ++a)
          if (d >> a & 1)
            for (int b = 0; b < k; ++b)
              if ((u >> b & 1) && !(below[b] >> a & 1)) {
                good = false;
                break;
              }
        if (good) {
          below[k] = d;
          above[k] = u;
          for (int x = 0; x < k; ++x) {
            if (u >> x & 1) below[x] |= SubsetMask{1} << k;
            if (d >> x & 1) above[x] |= SubsetMask{1} << k;
          }
          gen_labeled_posets(n, below, above, k + 1, emit);
          for (int x = 0; x < k; ++x) {
            below[x] &= ~(SubsetMask{1} << k);
            above[x] &= ~(SubsetMask{1} << k);
          }
        }
        if (u == rest) break;
      }
    }
    if (d == prior) break;
  }
}

// Greatest lower bound in the poset, or -1.
int poset_meet(int n, const std::vector<SubsetMask>& below, int x, int y) {
  const SubsetMask dx = below[x] | SubsetMask{1} << x;
  const SubsetMask dy = below[y] | SubsetMask{1} << y;
  const SubsetMask lower = dx & dy;
  for (int z = 0; z < n; ++z)
    if ((lower >> z & 1) && mask_subset(lower, below[z] | SubsetMask{1} << z))
      return z;
  return -1;
}

std::vector<CayleyTable> posets_with_all_meets(int n, bool need_joins) {
  std::set<std::vector<std::uint8_t>> found;
  std::vector<SubsetMask> below(n, 0), above(n, 0);
  gen_labeled_posets(n, below, above, 0, [&] {
    CayleyTable t(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int m = poset_meet(n, below, x, y);
        if (m < 0) return;
        t.set(x, y, m);
      }
    if (need_joins) {
      // joins are meets of the reversed order
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (poset_meet(n, above, x, y) < 0) return;
    }
    found.insert(canonical_form(t).cells);
  });
  std::vector<CayleyTable> out;
  for (const auto& cells : found) {
    CayleyTable t(n);
    t.cells = cells;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<CayleyTable> enumerate_semilattices_via_posets(int n) {
  if (n < 1 || n > kMaxOrder) throw input_error("order out of range");
  return posets_with_all_meets(n, false);
}

std::vector<CayleyTable> enumerate_lattices_via_posets(int n) {
  if (n < 1 || n > kMaxOrder) throw input_error("order out of range");
  return posets_with_all_meets(n, true);
}

std::optional<CayleyTable> join_table_of(const CayleyTable& meet) {
  const SemilatticePoset p = order_structure(meet);
  const int n = p.order;
  CayleyTable j(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const SubsetMask upper = p.up[x] & p.up[y];
      int lub = -1;
      for (int z = 0; z < n; ++z)
        if ((upper >> z & 1) && mask_subset(upper, p.up[z])) lub = z;
      if (lub < 0) return std::nullopt;
      j.set(x, y, lub);
    }
  return j;
}

std::vector<LatticePair> enumerate_lattice_pairs(int n, const Caps& caps) {
  std::vector<LatticePair> out;
  for (const CayleyTable& meet :
       enumerate_semigroups(n, SemigroupClass::lattice, caps)) {
    std::optional<CayleyTable> join = join_table_of(meet);
    if (!join)
      throw internal_error("semilattice with a top is missing a join");
    out.push_back({meet, *join});
  }
  return out;
}

}  // namespace upsem
