#include "upsem/product.hpp"

#include <algorithm>
#include <bit>

#include "upsem/errors.hpp"

namespace upsem {

ProductContext::ProductContext(const CayleyTable& t)
    : order(t.order), size(1 << t.order) {
  row_image.assign(order * size, 0);
  preimage.assign(order * size, 0);
  for (int x = 0; x < order; ++x) {
    for (SubsetMask b = 1; b < static_cast<SubsetMask>(size); ++b) {
      const int y = std::countr_zero(b);
      row_image[x * size + b] =
          row_image[x * size + (b & (b - 1))] | SubsetMask{1} << t.at(x, y);
    }
    for (SubsetMask c = 0; c < static_cast<SubsetMask>(size); ++c) {
      SubsetMask pre = 0;
      for (int y = 0; y < order; ++y)
        if (c >> t.at(x, y) & 1) pre |= SubsetMask{1} << y;
      preimage[x * size + c] = static_cast<std::uint8_t>(pre);
    }
  }
}

namespace {

void check_widths(const UpFamily& a, const UpFamily& b, const CayleyTable& t) {
  if (a.order != t.order || b.order != t.order)
    throw input_error("upfamily width does not match the carrier order");
}

// Insert u into an antichain of minimal sets, absorbing supersets.
void absorb_insert(std::vector<SubsetMask>& acc, SubsetMask u) {
  for (SubsetMask m : acc)
    if (mask_subset(m, u)) return;
  acc.erase(std::remove_if(acc.begin(), acc.end(),
                           [&](SubsetMask m) { return mask_subset(u, m); }),
            acc.end());
  acc.push_back(u);
}

bool absorbed(const std::vector<SubsetMask>& acc, SubsetMask u) {
  for (SubsetMask m : acc)
    if (mask_subset(m, u)) return true;
  return false;
}

}  // namespace

UpFamily product(const UpFamily& a, const UpFamily& b, const CayleyTable& t) {
  return product(a, b, t, ProductContext(t));
}

UpFamily product(const UpFamily& a, const UpFamily& b, const CayleyTable& t,
                 const ProductContext& ctx) {
  check_widths(a, b, t);
  // Distinct images x*B over minimal members B of b, per element x.
  std::vector<std::vector<SubsetMask>> images(t.order);
  for (int x = 0; x < t.order; ++x) {
    for (SubsetMask m : b.minimal) images[x].push_back(ctx.image(x, m));
    std::sort(images[x].begin(), images[x].end());
    images[x].erase(std::unique(images[x].begin(), images[x].end()),
                    images[x].end());
  }

  std::vector<SubsetMask> acc;
  std::vector<int> xs;
  auto dfs = [&](auto&& self, std::size_t i, SubsetMask partial) -> void {
    if (absorbed(acc, partial)) return;  // any completion only grows
    if (i == xs.size()) {
      absorb_insert(acc, partial);
      return;
    }
    for (SubsetMask img : images[xs[i]]) self(self, i + 1, partial | img);
  };
  for (SubsetMask m : a.minimal) {
    xs = mask_elements(m);
    dfs(dfs, 0, 0);
  }
  std::sort(acc.begin(), acc.end());
  return UpFamily{t.order, acc};
}

UpFamily tensor_product(const UpFamily& a, const UpFamily& b,
                        const CayleyTable& t) {
  return tensor_product(a, b, t, ProductContext(t));
}

UpFamily tensor_product(const UpFamily& a, const UpFamily& b,
                        const CayleyTable& t, const ProductContext& ctx) {
  check_widths(a, b, t);
  std::vector<SubsetMask> gens;
  for (SubsetMask ma : a.minimal)
    for (SubsetMask mb : b.minimal) {
      SubsetMask prod = 0;
      for (int x : mask_elements(ma)) prod |= ctx.image(x, mb);
      gens.push_back(prod);
    }
  return up_closure(t.order, std::move(gens));
}

namespace {

void require_dense(const ProductContext& ctx) {
  if (ctx.order > 6)
    throw internal_error("dense products are limited to carriers of order <= 6");
}

}  // namespace

FamilyTable product_table(FamilyTable a, FamilyTable b,
                          const ProductContext& ctx) {
  require_dense(ctx);
  FamilyTable out = 0;
  for (int c = 0; c < ctx.size; ++c) {
    SubsetMask amask = 0;
    for (int x = 0; x < ctx.order; ++x)
      amask |= static_cast<SubsetMask>(b >> ctx.preimage[x * ctx.size + c] & 1)
               << x;
    out |= (a >> amask & 1) << c;
  }
  return out;
}

std::vector<std::uint8_t> product_gadget(FamilyTable b,
                                         const ProductContext& ctx) {
  require_dense(ctx);
  std::vector<std::uint8_t> g(ctx.size);
  for (int c = 0; c < ctx.size; ++c) {
    SubsetMask amask = 0;
    for (int x = 0; x < ctx.order; ++x)
      amask |= static_cast<SubsetMask>(b >> ctx.preimage[x * ctx.size + c] & 1)
               << x;
    g[c] = static_cast<std::uint8_t>(amask);
  }
  return g;
}

FamilyTable product_with_gadget(FamilyTable a, const std::uint8_t* gb,
                                int size) {
  FamilyTable out = 0;
  for (int c = 0; c < size; ++c) out |= (a >> gb[c] & 1) << c;
  return out;
}

}  // namespace upsem
