#include "partitions.hpp"

namespace rrps {

namespace {

void gen_exact(int weight, int parts, int min_part, int max_part,
               std::vector<int> &acc, std::vector<std::vector<int>> &out) {
  if (parts == 0) {
    if (weight == 0) out.push_back(acc);
    return;
  }
  // remaining parts need at least min_part each
  int hi = weight - min_part * (parts - 1);
  if (hi > max_part) hi = max_part;
  // first (largest) part must carry at least its fair share
  int lo = (weight + parts - 1) / parts;
  if (lo < min_part) lo = min_part;
  for (int a = hi; a >= lo; --a) {
    acc.push_back(a);
    gen_exact(weight - a, parts - 1, min_part, a, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_exact(int weight, int parts, int min_part) {
  std::vector<std::vector<int>> out;
  if (weight < 0 || parts < 0) return out;
  if (parts == 0) {
    if (weight == 0) out.push_back({});
    return out;
  }
  std::vector<int> acc;
  gen_exact(weight, parts, min_part, weight, acc, out);
  return out;
}

std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  for (int parts = 0; parts <= d; ++parts) {
    auto p = partitions_exact(d, parts, 1);
    out.insert(out.end(), p.begin(), p.end());
  }
  if (d == 0) return {{}};
  return out;
}

namespace {

// enumerate ascending: current part a, next part >= a + 2
long count_diff2(int weight, int parts, int min_allowed) {
  if (parts == 0) return weight == 0 ? 1 : 0;
  long n = 0;
  for (int a = min_allowed; a <= weight; ++a)
    n += count_diff2(weight - a, parts - 1, a + 2);
  return n;
}

}  // namespace

long diff2_count(int weight, int parts, int min_part) {
  if (weight < 0 || parts < 0) return 0;
  return count_diff2(weight, parts, min_part);
}

}  // namespace rrps
