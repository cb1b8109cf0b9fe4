#pragma once

#include <compare>
#include <string>

namespace rrps {

// A bidegree on the quarter-integer grid, stored in integer units:
//   charge2 = twice the x-charge, weight4 = four times the q-weight.
// Vacuum-module states sit at even charge2 and weight4 divisible by 4;
// charged-module states at odd charge2 and weight4 = 1 mod 4.  Series terms
// may sit anywhere on the grid.
struct Bidegree {
  int charge2 = 0;
  int weight4 = 0;

  friend bool operator==(const Bidegree &, const Bidegree &) = default;
  // canonical order: by weight, then by charge
  friend std::strong_ordering operator<=>(const Bidegree &a, const Bidegree &b) {
    if (auto c = a.weight4 <=> b.weight4; c != 0) return c;
    return a.charge2 <=> b.charge2;
  }
};

inline std::string to_string(const Bidegree &b) {
  return "(" + std::to_string(b.charge2) + "/2, " + std::to_string(b.weight4) + "/4)";
}

}  // namespace rrps
