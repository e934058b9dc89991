#ifndef UPSEM_ERRORS_HPP_
#define UPSEM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace upsem {

// Malformed input: bad table shape, width mismatch, unparsable carrier, ...
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A request outside the configured enumeration/product caps.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency failure (e.g. a product escaping a space that is
// supposed to be closed). Never repaired silently.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Raised when a Hasse diagram is requested for an extension that is not a
// semilattice; mapped to its own exit code by the CLI.
struct not_semilattice_error : std::runtime_error {
  explicit not_semilattice_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace upsem

#endif  // UPSEM_ERRORS_HPP_
