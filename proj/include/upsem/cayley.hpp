#ifndef UPSEM_CAYLEY_HPP_
#define UPSEM_CAYLEY_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upsem/subset.hpp"

namespace upsem {

// A finite magma/semigroup as an n x n multiplication table over element
// indices 0..n-1; cell (x, y) holds x*y.
struct CayleyTable {
  int order = 0;
  std::vector<std::uint8_t> cells;  // row-major, size order*order

  CayleyTable() = default;
  explicit CayleyTable(int n) : order(n), cells(n * n, 0) {}

  int at(int x, int y) const { return cells[x * order + y]; }
  void set(int x, int y, int v) {
    cells[x * order + y] = static_cast<std::uint8_t>(v);
  }

  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;
};

struct AssociativityWitness {
  int x = 0, y = 0, z = 0;  // (x*y)*z != x*(y*z)
};

struct ValidationResult {
  bool ok = false;
  std::optional<AssociativityWitness> witness;
  std::string message;
};

// Checks shape, closure and associativity. A failed associativity check
// carries the first violating triple in lexicographic (x, y, z) order.
ValidationResult validate_semigroup(const CayleyTable& t);

// Throws input_error unless t is a valid semigroup.
void require_semigroup(const CayleyTable& t);

struct StructureFlags {
  bool commutative = false;
  bool band = false;
  bool linear = false;  // xy in {x, y} for all x, y
  bool semilattice = false;
  bool left_zero = false;
  bool right_zero = false;
};

StructureFlags classify(const CayleyTable& t);

// x^k for k >= 1.
int power_of(const CayleyTable& t, int x, int k);

// {a : a*s*a = a for some s}.
std::vector<int> regular_elements(const CayleyTable& t);

struct CliffordResult {
  bool holds = true;
  int witness = -1;  // element with x^{n+1} = x^{m+1} but x^n != x^m
};

CliffordResult is_nm_clifford(const CayleyTable& t, int n, int m);

struct AntichainResult {
  SubsetMask best = 0;  // a maximum-size subset with ab not in {a,b}
  int size = 0;
};

// Exact search over all subsets; ties resolved toward the smallest mask.
AntichainResult maximum_antichain(const CayleyTable& t);

// Lexicographically least flattened table over all simultaneous relabelings
// of the carrier, by brute force over the n! permutations.
CayleyTable canonical_form(const CayleyTable& t);

bool are_isomorphic(const CayleyTable& a, const CayleyTable& b);

// Simultaneous relabeling of a (meet, join) pair by a single permutation.
bool are_isomorphic_pairs(const CayleyTable& m1, const CayleyTable& j1,
                          const CayleyTable& m2, const CayleyTable& j2);

// Named carriers.
CayleyTable chain_table(int n);       // x*y = min(x, y)
CayleyTable left_zero_table(int n);   // x*y = x
CayleyTable right_zero_table(int n);  // x*y = y
CayleyTable vee_table();              // 3-element semilattice, 1*2 = 0 = min
CayleyTable bush_table(const std::vector<int>& branch_lengths);

// Parses "chain:4", "leftzero:3", "rightzero:3", "vee", "bush:2,1,1".
CayleyTable parse_carrier(const std::string& spec);

// Grammar lines for the catalog command.
std::vector<std::string> carrier_catalog();

}  // namespace upsem

#endif  // UPSEM_CAYLEY_HPP_
