#ifndef UPSEM_SPACES_HPP_
#define UPSEM_SPACES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "upsem/caps.hpp"
#include "upsem/upfamily.hpp"

namespace upsem {

// The extension spaces: all upfamilies, filters, ultrafilters, linked and
// maximal linked upfamilies. beta c phi c N2 c upsilon and beta c lambda c N2.
enum class SpaceKind : int { upsilon, phi, beta, n2, lambda };

SpaceKind parse_space(const std::string& s);
std::string to_string(SpaceKind k);

bool in_space(const UpFamily& f, SpaceKind k);

// Every member of the space exactly once, ascending in the canonical family
// order (lexicographic on the sorted minimal lists). Throws cap_error above
// the per-space cap.
std::vector<UpFamily> enumerate_space(SpaceKind k, int n,
                                      const Caps& caps = Caps::defaults());

// The 12 elements of lambda(4): point families <k>, the triangle families
// D_k generated by the 2-sets avoiding k, and the families B_k generated by
// 4\{k} together with the 2-sets containing k.
std::vector<std::pair<std::string, UpFamily>> named_lambda4_elements();

// Reconstructs the named forms for display: <k> for point families, the
// lambda(3) triangle and the lambda(4) names; JSON text otherwise.
std::string family_display_name(const UpFamily& f, SpaceKind k);

}  // namespace upsem

#endif  // UPSEM_SPACES_HPP_
