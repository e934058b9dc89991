#ifndef UPSEM_CAPS_HPP_
#define UPSEM_CAPS_HPP_

namespace upsem {

enum class SpaceKind : int;
enum class SemigroupClass : int;

// Central enumeration and product caps. Defaults keep every exhaustive scan
// at desk scale; the UPSEM_MAX_ORDER environment variable clamps all of them.
struct Caps {
  // Space enumeration caps per carrier order.
  int upsilon = 5;
  int n2 = 5;
  int lambda = 6;
  int phi = 7;
  int beta = 8;

  // Pairwise product scans over a space. Enumerating phi(7) or beta(8) is
  // fine, but products over them are not.
  int scan_upsilon = 5;
  int scan_n2 = 5;
  int scan_lambda = 6;
  int scan_phi = 6;
  int scan_beta = 8;

  // Semigroup enumeration caps per class.
  int sg_all = 3;
  int sg_band = 5;
  int sg_commutative = 4;
  int sg_semilattice = 7;
  int sg_linear = 5;
  int sg_lattice = 5;

  int space_cap(SpaceKind k) const;
  int scan_cap(SpaceKind k) const;
  int class_cap(SemigroupClass c) const;

  // Lowers every cap to at most k.
  Caps clamped(int k) const;

  // Defaults with the UPSEM_MAX_ORDER clamp applied.
  static Caps defaults();
};

}  // namespace upsem

#endif  // UPSEM_CAPS_HPP_
