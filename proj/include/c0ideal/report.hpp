#pragma once

#include <string>
#include <vector>

namespace c0ideal {

/// One named identity and whether it held.
struct IdentityCheck {
  std::string identity;
  bool passed = false;
};

inline bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const IdentityCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace c0ideal
