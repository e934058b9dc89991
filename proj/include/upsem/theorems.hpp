#ifndef UPSEM_THEOREMS_HPP_
#define UPSEM_THEOREMS_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "upsem/caps.hpp"
#include "upsem/cayley.hpp"

namespace upsem {

// Per-theorem verification: every listed condition is evaluated on every
// enumerated instance; the theorem is verified when the truth vector is
// constant on each instance.
struct InstanceWitness {
  CayleyTable instance;
  std::string instance_class;
  std::vector<std::string> condition_names;
  std::vector<bool> truth;
};

struct TheoremReport {
  std::string id;
  std::string title;
  long long instances = 0;
  bool verified = false;
  std::optional<InstanceWitness> counterexample;
  std::vector<std::string> notes;
  double millis = 0;
};

// Test hooks. Negating a named condition or injecting an out-of-class
// instance must surface as a counterexample; used to prove the harness can
// fail.
struct VerifyHooks {
  std::set<std::string> negated_conditions;
  bool corrupt_enumeration = false;
};

std::vector<std::string> theorem_ids();

TheoremReport verify_theorem(const std::string& id,
                             const Caps& caps = Caps::defaults(),
                             const VerifyHooks& hooks = {});

struct AggregateReport {
  std::vector<TheoremReport> reports;
  std::vector<std::string> out_of_scope;
  bool all_verified = false;
};

AggregateReport verify_all(const Caps& caps = Caps::defaults(),
                           const VerifyHooks& hooks = {});

}  // namespace upsem

#endif  // UPSEM_THEOREMS_HPP_
