#pragma once

#include <vector>

namespace rrps {

// Partitions of `weight` into exactly `parts` parts, each >= min_part, as
// descending lists.  Deterministic order: first part decreasing, then
// recursively.  partitions_exact(6,2,1) = {5,1},{4,2},{3,3}.
// parts = 0 yields the empty partition exactly when weight = 0.
std::vector<std::vector<int>> partitions_exact(int weight, int parts, int min_part);

// All partitions of d (any number of parts >= 1).  partitions_of(0) = { {} }.
std::vector<std::vector<int>> partitions_of(int d);

// Number of partitions of `weight` into exactly `parts` parts with minimal
// part >= min_part and successive differences >= 2, counted by exhaustive
// enumeration.  This is the combinatorial reference the dimension checks
// compare against, so it stays a plain search with no generating-function
// shortcut.
long diff2_count(int weight, int parts, int min_part);

}  // namespace rrps
