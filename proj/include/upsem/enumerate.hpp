#ifndef UPSEM_ENUMERATE_HPP_
#define UPSEM_ENUMERATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "upsem/caps.hpp"
#include "upsem/cayley.hpp"

namespace upsem {

enum class SemigroupClass : int {
  all,
  band,
  commutative,
  semilattice,
  linear,
  lattice,  // semilattices with a top; the "lattice-pair" class
};

SemigroupClass parse_class(const std::string& s);
std::string to_string(SemigroupClass c);

// One canonical representative per isomorphism class, ascending by flattened
// table, via backtracking over table cells with associativity pruning.
// Throws cap_error above the per-class cap. For class lattice the meet
// tables are returned; join tables follow from join_table_of.
std::vector<CayleyTable> enumerate_semigroups(int n, SemigroupClass c,
                                              const Caps& caps = Caps::defaults());

// Independent oracle: enumerate labeled posets, keep those where every pair
// has a greatest lower bound, convert meets to tables, canonicalize.
std::vector<CayleyTable> enumerate_semilattices_via_posets(int n);

// Poset-route lattice oracle: posets where every pair has both a greatest
// lower and a least upper bound.
std::vector<CayleyTable> enumerate_lattices_via_posets(int n);

// The join table of a semilattice whose order has all least upper bounds;
// empty if some pair has none.
std::optional<CayleyTable> join_table_of(const CayleyTable& meet);

struct LatticePair {
  CayleyTable meet;
  CayleyTable join;
};

std::vector<LatticePair> enumerate_lattice_pairs(int n,
                                                 const Caps& caps = Caps::defaults());

}  // namespace upsem

#endif  // UPSEM_ENUMERATE_HPP_
