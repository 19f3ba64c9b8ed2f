#pragma once

#include <map>
#include <string>
#include <vector>

#include "kleitman/bigint.hpp"

namespace kleitman {

struct Precondition {
  std::string text;
  bool ok = true;
};

// An upper-bound claim with its applicability conditions spelled out.
// valid = all preconditions hold; invalid certificates still carry the value
// the formula produces, but consumers must ignore them when minimizing.
struct BoundCertificate {
  std::string name;        // short slug, e.g. "frankl_wilson"
  BigInt value = 0;
  bool valid = false;
  std::vector<Precondition> preconditions;
  std::string provenance;  // the classical result backing the number
  std::map<std::string, std::string> details;
};

}  // namespace kleitman
