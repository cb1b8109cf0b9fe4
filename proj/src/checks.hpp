#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigrade.hpp"

namespace rrps {

// Outcome of one named verification.  On failure `where` holds the first
// offending bidegree (when the check sweeps bidegrees) and `detail` enough
// exact data to reproduce the comparison by hand.
struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::optional<Bidegree> where;
  std::string detail;

  static CheckOutcome ok(std::string name) { return {std::move(name), true, {}, {}}; }
  static CheckOutcome fail(std::string name, std::optional<Bidegree> where,
                           std::string detail) {
    return {std::move(name), false, where, std::move(detail)};
  }
};

inline bool all_pass(const std::vector<CheckOutcome> &v) {
  for (const auto &c : v)
    if (!c.pass) return false;
  return true;
}

}  // namespace rrps
