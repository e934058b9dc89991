#ifndef UPSEM_EXTENSION_HPP_
#define UPSEM_EXTENSION_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "upsem/caps.hpp"
#include "upsem/cayley.hpp"
#include "upsem/product.hpp"
#include "upsem/spaces.hpp"
#include "upsem/upfamily.hpp"

namespace upsem {

// An enumerated extension space with its membership tables, ready for
// pairwise scanning over a base semigroup.
struct SpaceCarrier {
  SpaceKind kind = SpaceKind::upsilon;
  int order = 0;
  std::vector<UpFamily> families;   // enumeration order
  std::vector<FamilyTable> tables;  // parallel to families (order <= 6)
  std::unordered_map<FamilyTable, int> table_index;

  int size() const { return static_cast<int>(families.size()); }
  int index_of_table(FamilyTable t) const;  // -1 when absent
  int index_of(const UpFamily& f) const;    // binary search, -1 when absent
};

SpaceCarrier make_carrier(SpaceKind k, int n, const Caps& caps = Caps::defaults());

// Reuses carriers across scans; enumeration depends only on (kind, order).
class SpaceCache {
 public:
  explicit SpaceCache(const Caps& caps = Caps::defaults()) : caps_(caps) {}
  const SpaceCarrier& get(SpaceKind k, int n);
  const Caps& caps() const { return caps_; }

 private:
  Caps caps_;
  std::map<std::pair<SpaceKind, int>, SpaceCarrier> carriers_;
};

// Witnesses carry the offending families together with the products.
struct NonBandWitness {
  UpFamily f, ff;
};
struct NonCommutativeWitness {
  UpFamily a, b, ab, ba;
};
struct NonLinearWitness {
  UpFamily a, b, ab;
};
struct AbsorptionWitness {
  UpFamily a, b;
  std::string identity;  // which law failed
};

// Streaming scans (early exit, first witness in enumeration order, no
// product table materialized). Carrier order must be <= 6.
std::optional<NonBandWitness> find_band_violation(const CayleyTable& base,
                                                  const SpaceCarrier& sc);
std::optional<NonCommutativeWitness> find_commutativity_violation(
    const CayleyTable& base, const SpaceCarrier& sc);
std::optional<NonLinearWitness> find_linearity_violation(
    const CayleyTable& base, const SpaceCarrier& sc);

int count_idempotents(const CayleyTable& base, const SpaceCarrier& sc);

// The extension semigroup over an enumerated space, with a lazily filled,
// concurrently fillable product table indexed by carrier positions.
struct ExtensionSemigroup {
  CayleyTable base;
  ProductContext ctx;
  SpaceCarrier carrier;
  mutable std::unique_ptr<std::atomic<std::int32_t>[]> memo;

  int size() const { return carrier.size(); }
  const UpFamily& at(int i) const { return carrier.families[i]; }
  int index_of(const UpFamily& f) const;  // -1 when absent

  // Fails loudly (internal_error) if the product escapes the carrier, which
  // would contradict the closedness of the space.
  int product_index(int i, int j) const;
};

// Builds the extension; carrier size is limited so the memoized table stays
// small (the big spaces go through the streaming scans instead). Associativity
// is spot-checked exhaustively for carriers of at most 20 elements.
ExtensionSemigroup build_extension(const CayleyTable& t, SpaceKind k,
                                   const Caps& caps = Caps::defaults());

struct AnalysisReport {
  bool band = false;
  bool commutative = false;
  bool linear = false;
  bool semilattice = false;
  int idempotent_count = 0;
  std::optional<NonBandWitness> band_witness;
  std::optional<NonCommutativeWitness> commutative_witness;
  std::optional<NonLinearWitness> linear_witness;
  double millis = 0;
};

AnalysisReport analyze_extension(const ExtensionSemigroup& e);
AnalysisReport analyze_space(const CayleyTable& base, const SpaceCarrier& sc);

// Exhaustive search for g in upsilon(X) with f*g*f = f.
bool is_regular_in_upsilon(const UpFamily& f, const CayleyTable& t,
                           SpaceCache& cache);

// First element violating x^{n+1} = x^{m+1} => x^n = x^m, if any.
std::optional<UpFamily> find_nm_clifford_violation(const CayleyTable& base,
                                                   const SpaceCarrier& sc,
                                                   int n, int m);

struct LatticeAnalysis {
  bool is_lattice = false;
  std::string detail;  // what failed, when something did
  std::optional<AbsorptionWitness> witness;
  double millis = 0;
};

// Builds both extended operations on the space and checks that they are
// semilattice operations satisfying both absorption identities.
LatticeAnalysis analyze_lattice_extension(const CayleyTable& meet,
                                          const CayleyTable& join, SpaceKind k,
                                          const Caps& caps = Caps::defaults());

}  // namespace upsem

#endif  // UPSEM_EXTENSION_HPP_
