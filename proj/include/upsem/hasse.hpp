#ifndef UPSEM_HASSE_HPP_
#define UPSEM_HASSE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "upsem/extension.hpp"

namespace upsem {

// Cover relation of the idempotent order f <= g iff f*g = f on a semilattice
// extension, with nodes in enumeration order.
struct HasseDiagram {
  SpaceKind space = SpaceKind::upsilon;
  int base_order = 0;
  std::vector<UpFamily> nodes;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;  // (lower, upper), sorted
};

// Throws not_semilattice_error when the extension is not a semilattice.
HasseDiagram hasse_diagram(const ExtensionSemigroup& e);

std::string to_dot(const HasseDiagram& d);

}  // namespace upsem

#endif  // UPSEM_HASSE_HPP_
