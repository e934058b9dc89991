#include "upsem/extension.hpp"

#include <algorithm>
#include <chrono>

#include "upsem/errors.hpp"

namespace upsem {

namespace {

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Gadgets for every family of the carrier: g[i][C] decides products with
// right factor i by a single shift of the left factor's table.
std::vector<std::vector<std::uint8_t>> all_gadgets(const ProductContext& ctx,
                                                   const SpaceCarrier& sc) {
  std::vector<std::vector<std::uint8_t>> g(sc.size());
  for (int i = 0; i < sc.size(); ++i) g[i] = product_gadget(sc.tables[i], ctx);
  return g;
}

void require_scannable(const CayleyTable& base, const SpaceCarrier& sc) {
  if (base.order != sc.order)
    throw input_error("the base order does not match the enumerated space");
  if (sc.kind != SpaceKind::beta && sc.order > 6)
    throw internal_error("pairwise scans need membership tables (order <= 6)");
}

}  // namespace

int SpaceCarrier::index_of_table(FamilyTable t) const {
  auto it = table_index.find(t);
  return it == table_index.end() ? -1 : it->second;
}

int SpaceCarrier::index_of(const UpFamily& f) const {
  auto it = std::lower_bound(families.begin(), families.end(), f);
  if (it == families.end() || !(*it == f)) return -1;
  return static_cast<int>(it - families.begin());
}

SpaceCarrier make_carrier(SpaceKind k, int n, const Caps& caps) {
  SpaceCarrier sc;
  sc.kind = k;
  sc.order = n;
  sc.families = enumerate_space(k, n, caps);
  if (n <= 6) {
    sc.tables.reserve(sc.families.size());
    for (const UpFamily& f : sc.families) sc.tables.push_back(family_table(f));
    for (int i = 0; i < sc.size(); ++i) sc.table_index.emplace(sc.tables[i], i);
  }
  return sc;
}

const SpaceCarrier& SpaceCache::get(SpaceKind k, int n) {
  auto key = std::make_pair(k, n);
  auto it = carriers_.find(key);
  if (it == carriers_.end())
    it = carriers_.emplace(key, make_carrier(k, n, caps_)).first;
  return it->second;
}

std::optional<NonBandWitness> find_band_violation(const CayleyTable& base,
                                                  const SpaceCarrier& sc) {
  require_scannable(base, sc);
  if (sc.kind == SpaceKind::beta) {
    for (int x = 0; x < base.order; ++x)
      if (base.at(x, x) != x)
        return NonBandWitness{point_family(base.order, x),
                              point_family(base.order, base.at(x, x))};
    return std::nullopt;
  }
  const ProductContext ctx(base);
  for (int i = 0; i < sc.size(); ++i) {
    const FamilyTable sq = product_table(sc.tables[i], sc.tables[i], ctx);
    if (sq != sc.tables[i])
      return NonBandWitness{sc.families[i], family_from_table(sc.order, sq)};
  }
  return std::nullopt;
}

std::optional<NonCommutativeWitness> find_commutativity_violation(
    const CayleyTable& base, const SpaceCarrier& sc) {
  require_scannable(base, sc);
  if (sc.kind == SpaceKind::beta) {
    for (int x = 0; x < base.order; ++x)
      for (int y = x + 1; y < base.order; ++y)
        if (base.at(x, y) != base.at(y, x))
          return NonCommutativeWitness{
              point_family(base.order, x), point_family(base.order, y),
              point_family(base.order, base.at(x, y)),
              point_family(base.order, base.at(y, x))};
    return std::nullopt;
  }
  const ProductContext ctx(base);
  const auto g = all_gadgets(ctx, sc);
  const int size = ctx.size;
  for (int i = 0; i < sc.size(); ++i) {
    const FamilyTable ti = sc.tables[i];
    for (int j = i + 1; j < sc.size(); ++j) {
      const FamilyTable tj = sc.tables[j];
      const std::uint8_t* gi = g[i].data();
      const std::uint8_t* gj = g[j].data();
      for (int c = 0; c < size; ++c) {
        if (((ti >> gj[c] ^ tj >> gi[c]) & 1) != 0) {
          const FamilyTable ab = product_with_gadget(ti, gj, size);
          const FamilyTable ba = product_with_gadget(tj, gi, size);
          return NonCommutativeWitness{sc.families[i], sc.families[j],
                                       family_from_table(sc.order, ab),
                                       family_from_table(sc.order, ba)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<NonLinearWitness> find_linearity_violation(
    const CayleyTable& base, const SpaceCarrier& sc) {
  require_scannable(base, sc);
  if (sc.kind == SpaceKind::beta) {
    for (int x = 0; x < base.order; ++x)
      for (int y = 0; y < base.order; ++y) {
        const int p = base.at(x, y);
        if (p != x && p != y)
          return NonLinearWitness{point_family(base.order, x),
                                  point_family(base.order, y),
                                  point_family(base.order, p)};
      }
    return std::nullopt;
  }
  const ProductContext ctx(base);
  const auto g = all_gadgets(ctx, sc);
  for (int i = 0; i < sc.size(); ++i)
    for (int j = 0; j < sc.size(); ++j) {
      const FamilyTable p =
          product_with_gadget(sc.tables[i], g[j].data(), ctx.size);
      if (p != sc.tables[i] && p != sc.tables[j])
        return NonLinearWitness{sc.families[i], sc.families[j],
                                family_from_table(sc.order, p)};
    }
  return std::nullopt;
}

int count_idempotents(const CayleyTable& base, const SpaceCarrier& sc) {
  require_scannable(base, sc);
  if (sc.kind == SpaceKind::beta) {
    int count = 0;
    for (int x = 0; x < base.order; ++x)
      if (base.at(x, x) == x) ++count;
    return count;
  }
  const ProductContext ctx(base);
  int count = 0;
  for (int i = 0; i < sc.size(); ++i)
    if (product_table(sc.tables[i], sc.tables[i], ctx) == sc.tables[i]) ++count;
  return count;
}

int ExtensionSemigroup::index_of(const UpFamily& f) const {
  return carrier.index_of(f);
}

int ExtensionSemigroup::product_index(int i, int j) const {
  const int n = size();
  std::atomic<std::int32_t>& cell = memo[i * n + j];
  const std::int32_t cached = cell.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  int k;
  if (!carrier.tables.empty()) {
    const FamilyTable p = product_table(carrier.tables[i], carrier.tables[j], ctx);
    k = carrier.index_of_table(p);
  } else {
    k = carrier.index_of(product(at(i), at(j), base, ctx));
  }
  if (k < 0)
    throw internal_error(
        "product escaped the space " + to_string(carrier.kind) +
        "; this contradicts its closedness and indicates a bug");
  cell.store(k, std::memory_order_relaxed);
  return k;
}

ExtensionSemigroup build_extension(const CayleyTable& t, SpaceKind k,
                                   const Caps& caps) {
  require_semigroup(t);
  const int cap = caps.scan_cap(k);
  if (t.order > cap)
    throw cap_error("products over " + to_string(k) + "(" +
                    std::to_string(t.order) + ") are above the cap of " +
                    std::to_string(cap));
  ExtensionSemigroup e;
  e.base = t;
  e.ctx = ProductContext(t);
  e.carrier = make_carrier(k, t.order, caps);
  const int n = e.size();
  if (n > 3000)
    throw cap_error("the memoized extension is limited to 3000 families; "
                    "property scans handle the larger spaces");
  e.memo.reset(new std::atomic<std::int32_t>[static_cast<std::size_t>(n) * n]);
  for (int i = 0; i < n * n; ++i)
    e.memo[i].store(-1, std::memory_order_relaxed);

  // The principal embedding must be a homomorphism onto the point families.
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y) {
      const int ix = e.index_of(point_family(t.order, x));
      const int iy = e.index_of(point_family(t.order, y));
      const int ixy = e.index_of(point_family(t.order, t.at(x, y)));
      if (ix < 0 || iy < 0 || ixy < 0 || e.product_index(ix, iy) != ixy)
        throw internal_error("principal embedding is not a homomorphism");
    }
  if (n <= 20) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          if (e.product_index(e.product_index(i, j), l) !=
              e.product_index(i, e.product_index(j, l)))
            throw internal_error("extension product is not associative");
  }
  return e;
}

AnalysisReport analyze_space(const CayleyTable& base, const SpaceCarrier& sc) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.band_witness = find_band_violation(base, sc);
  r.band = !r.band_witness.has_value();
  r.commutative_witness = find_commutativity_violation(base, sc);
  r.commutative = !r.commutative_witness.has_value();
  r.linear_witness = find_linearity_violation(base, sc);
  r.linear = !r.linear_witness.has_value();
  r.semilattice = r.band && r.commutative;
  r.idempotent_count = count_idempotents(base, sc);
  r.millis = since(start);
  return r;
}

AnalysisReport analyze_extension(const ExtensionSemigroup& e) {
  return analyze_space(e.base, e.carrier);
}

bool is_regular_in_upsilon(const UpFamily& f, const CayleyTable& t,
                           SpaceCache& cache) {
  if (f.order != t.order)
    throw input_error("upfamily width does not match the carrier order");
  const int cap = cache.caps().scan_cap(SpaceKind::upsilon);
  if (t.order > cap)
    throw cap_error("regularity search in upsilon(" + std::to_string(t.order) +
                    ") is above the cap of " + std::to_string(cap));
  const SpaceCarrier& sc = cache.get(SpaceKind::upsilon, t.order);
  const ProductContext ctx(t);
  const FamilyTable ft = family_table(f);
  for (const FamilyTable g : sc.tables) {
    const FamilyTable fg = product_table(ft, g, ctx);
    if (product_table(fg, ft, ctx) == ft) return true;
  }
  return false;
}

std::optional<UpFamily> find_nm_clifford_violation(const CayleyTable& base,
                                                   const SpaceCarrier& sc,
                                                   int n, int m) {
  if (n < 1 || m < 1) throw input_error("Clifford exponents must be >= 1");
  require_scannable(base, sc);
  if (sc.kind == SpaceKind::beta) {
    const CliffordResult r = is_nm_clifford(base, n, m);
    if (r.holds) return std::nullopt;
    return point_family(base.order, r.witness);
  }
  const ProductContext ctx(base);
  const int top = std::max(n, m) + 1;
  for (int i = 0; i < sc.size(); ++i) {
    std::vector<FamilyTable> pow(top + 1);
    pow[1] = sc.tables[i];
    for (int k = 2; k <= top; ++k)
      pow[k] = product_table(pow[k - 1], sc.tables[i], ctx);
    if (pow[n + 1] == pow[m + 1] && pow[n] != pow[m]) return sc.families[i];
  }
  return std::nullopt;
}

LatticeAnalysis analyze_lattice_extension(const CayleyTable& meet,
                                          const CayleyTable& join, SpaceKind k,
                                          const Caps& caps) {
  const auto start = std::chrono::steady_clock::now();
  require_semigroup(meet);
  require_semigroup(join);
  if (meet.order != join.order)
    throw input_error("meet and join tables must share the carrier");
  if (!classify(meet).semilattice || !classify(join).semilattice)
    throw input_error("base is not a lattice: operations must be semilattices");
  for (int x = 0; x < meet.order; ++x)
    for (int y = 0; y < meet.order; ++y)
      if (join.at(meet.at(x, y), y) != y || meet.at(join.at(x, y), y) != y)
        throw input_error("base is not a lattice: absorption fails");
  const int cap = caps.scan_cap(k);
  if (meet.order > cap)
    throw cap_error("lattice analysis over " + to_string(k) + "(" +
                    std::to_string(meet.order) + ") is above the cap of " +
                    std::to_string(cap));

  LatticeAnalysis out;
  if (k == SpaceKind::beta) {
    // Point families reproduce the base lattice.
    out.is_lattice = true;
    out.millis = since(start);
    return out;
  }
  const SpaceCarrier sc = make_carrier(k, meet.order, caps);
  require_scannable(meet, sc);

  if (auto w = find_band_violation(meet, sc)) {
    out.detail = "extended meet is not idempotent";
    out.witness = AbsorptionWitness{w->f, w->ff, out.detail};
    out.millis = since(start);
    return out;
  }
  if (auto w = find_band_violation(join, sc)) {
    out.detail = "extended join is not idempotent";
    out.witness = AbsorptionWitness{w->f, w->ff, out.detail};
    out.millis = since(start);
    return out;
  }

  const ProductContext ctxm(meet), ctxj(join);
  const auto gm = all_gadgets(ctxm, sc);
  const auto gj = all_gadgets(ctxj, sc);
  const int size = ctxm.size;
  for (int i = 0; i < sc.size(); ++i)
    for (int j = 0; j < sc.size(); ++j) {
      const FamilyTable mt =
          product_with_gadget(sc.tables[i], gm[j].data(), size);
      if (product_with_gadget(mt, gj[j].data(), size) != sc.tables[j]) {
        out.detail = "(a meet b) join b = b fails";
        out.witness = AbsorptionWitness{sc.families[i], sc.families[j], out.detail};
        out.millis = since(start);
        return out;
      }
      const FamilyTable jt =
          product_with_gadget(sc.tables[i], gj[j].data(), size);
      if (product_with_gadget(jt, gm[j].data(), size) != sc.tables[j]) {
        out.detail = "(a join b) meet b = b fails";
        out.witness = AbsorptionWitness{sc.families[i], sc.families[j], out.detail};
        out.millis = since(start);
        return out;
      }
    }

  if (auto w = find_commutativity_violation(meet, sc)) {
    out.detail = "extended meet is not commutative";
    out.witness = AbsorptionWitness{w->a, w->b, out.detail};
    out.millis = since(start);
    return out;
  }
  if (auto w = find_commutativity_violation(join, sc)) {
    out.detail = "extended join is not commutative";
    out.witness = AbsorptionWitness{w->a, w->b, out.detail};
    out.millis = since(start);
    return out;
  }
  out.is_lattice = true;
  out.millis = since(start);
  return out;
}

}  // namespace upsem
