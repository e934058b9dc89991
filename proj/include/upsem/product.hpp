#ifndef UPSEM_PRODUCT_HPP_
#define UPSEM_PRODUCT_HPP_

#include <cstdint>
#include <vector>

#include "upsem/cayley.hpp"
#include "upsem/upfamily.hpp"

namespace upsem {

// Precomputed row images and preimages of a base table, shared by the
// product routines.
struct ProductContext {
  int order = 0;
  int size = 0;                        // 2^order
  std::vector<SubsetMask> row_image;   // [x*size + B] = x*B
  std::vector<std::uint8_t> preimage;  // [x*size + C] = {y : x*y in C}

  ProductContext() = default;
  explicit ProductContext(const CayleyTable& t);

  SubsetMask image(int x, SubsetMask b) const { return row_image[x * size + b]; }
  SubsetMask preim(int x, SubsetMask c) const { return preimage[x * size + c]; }
};

// The extension product: the upfamily generated by the unions U_{x in A} x*B_x
// over minimal members A of a and tuples (B_x) of minimal members of b.
// Reducing to minimal members is sound by monotonicity; tests pin it against
// the member-literal route on small carriers.
UpFamily product(const UpFamily& a, const UpFamily& b, const CayleyTable& t);
UpFamily product(const UpFamily& a, const UpFamily& b, const CayleyTable& t,
                 const ProductContext& ctx);

// The tensor product: the up-closure of the elementwise set products A*B.
UpFamily tensor_product(const UpFamily& a, const UpFamily& b,
                        const CayleyTable& t);
UpFamily tensor_product(const UpFamily& a, const UpFamily& b,
                        const CayleyTable& t, const ProductContext& ctx);

// Dense route over membership tables (order <= 6): C is a member of a*b iff
// {x : {y : x*y in C} in b} in a, which restates the product through upward
// closure. Used by the bulk scans; tests pin it against the antichain route.
FamilyTable product_table(FamilyTable a, FamilyTable b,
                          const ProductContext& ctx);

// Per-right-factor gadget: g_b[C] = {x : {y : x*y in C} in b}, so a product
// table is assembled as bit C = a >> g_b[C].
std::vector<std::uint8_t> product_gadget(FamilyTable b,
                                         const ProductContext& ctx);

FamilyTable product_with_gadget(FamilyTable a, const std::uint8_t* gb,
                                int size);

}  // namespace upsem

#endif  // UPSEM_PRODUCT_HPP_
