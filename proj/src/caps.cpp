#include "upsem/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "upsem/enumerate.hpp"
#include "upsem/errors.hpp"
#include "upsem/spaces.hpp"

namespace upsem {

int Caps::space_cap(SpaceKind k) const {
  switch (k) {
    case SpaceKind::upsilon: return upsilon;
    case SpaceKind::phi: return phi;
    case SpaceKind::beta: return beta;
    case SpaceKind::n2: return n2;
    case SpaceKind::lambda: return lambda;
  }
  return 0;
}

int Caps::scan_cap(SpaceKind k) const {
  switch (k) {
    case SpaceKind::upsilon: return scan_upsilon;
    case SpaceKind::phi: return scan_phi;
    case SpaceKind::beta: return scan_beta;
    case SpaceKind::n2: return scan_n2;
    case SpaceKind::lambda: return scan_lambda;
  }
  return 0;
}

int Caps::class_cap(SemigroupClass c) const {
  switch (c) {
    case SemigroupClass::all: return sg_all;
    case SemigroupClass::band: return sg_band;
    case SemigroupClass::commutative: return sg_commutative;
    case SemigroupClass::semilattice: return sg_semilattice;
    case SemigroupClass::linear: return sg_linear;
    case SemigroupClass::lattice: return sg_lattice;
  }
  return 0;
}

Caps Caps::clamped(int k) const {
  Caps c = *this;
  for (int* field :
       {&c.upsilon, &c.n2, &c.lambda, &c.phi, &c.beta, &c.scan_upsilon,
        &c.scan_n2, &c.scan_lambda, &c.scan_phi, &c.scan_beta, &c.sg_all,
        &c.sg_band, &c.sg_commutative, &c.sg_semilattice, &c.sg_linear,
        &c.sg_lattice})
    *field = std::min(*field, k);
  return c;
}

Caps Caps::defaults() {
  Caps c;
  if (const char* env = std::getenv("UPSEM_MAX_ORDER")) {
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("UPSEM_MAX_ORDER must be a small positive integer");
    c = c.clamped(std::stoi(s));
  }
  return c;
}

}  // namespace upsem
