#pragma once

// Hand-transcribed drawings used as fixed expectations across the suites.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcoi/tree.hpp"

namespace tcoi::testing {

// Builds a tree from named edges; names are numbered in order of first use.
inline Tree named_tree(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, Vertex> id;
  auto get = [&](const std::string& name) {
    auto [it, inserted] = id.try_emplace(name, static_cast<Vertex>(id.size()));
    return it->second;
  };
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) {
    Vertex x = get(a);
    Vertex y = get(b);
    out.emplace_back(x, y);
  }
  return Tree(id.size(), out);
}

// P_4 with a pendant P_4 (joined at one of its ends) on each inner vertex.
inline Tree twin_arm_tree() {
  return named_tree({{"s1", "s2"}, {"s2", "s3"}, {"s3", "s4"},
                     {"s2", "s21"}, {"s21", "s22"}, {"s22", "s23"}, {"s23", "s24"},
                     {"s3", "s31"}, {"s31", "s32"}, {"s32", "s33"}, {"s33", "s34"}});
}

// Twelve vertices; centre s1 with branches s2 (carrying s3), s4-s5-s6 and
// s11 (carrying s111).
inline Tree three_branch_tree() {
  return named_tree({{"s1", "s2"}, {"s2", "s3"}, {"s1", "s4"}, {"s4", "s5"}, {"s5", "s6"},
                     {"s2", "s21"}, {"s3", "s31"},
                     {"s1", "s11"}, {"s11", "s12"}, {"s11", "s111"}, {"s111", "s1111"}});
}

// P_5 with one pendant leaf on its middle vertex.
inline Tree p5_with_middle_leaf() {
  return named_tree({{"s1", "s2"}, {"s2", "s3"}, {"s3", "s4"}, {"s4", "s5"}, {"s3", "s31"}});
}

// Q_5 as drawn: spine s s1..s5, pendant on each, v hanging from s.
inline Tree q5_drawing() {
  return named_tree({{"s", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"},
                     {"s", "s1"}, {"s", "v"},
                     {"a1", "a11"}, {"a2", "a21"}, {"a3", "a31"}, {"a4", "a41"}, {"a5", "a51"}});
}

// T_{2,3} over the path u1 u2 v1 v2 v3, as drawn.
inline Tree t23_drawing() {
  return named_tree({
      {"u1", "u2"}, {"u2", "v1"}, {"v1", "v2"}, {"v2", "v3"},
      {"s1", "u1"}, {"u1", "s3"}, {"s4", "u2"}, {"u2", "s6"}, {"s7", "v1"}, {"v1", "s9"},
      {"s10", "v2"}, {"v2", "s12"}, {"s13", "v3"}, {"v3", "s15"},
      {"ss1", "ss2"}, {"ss2", "ss3"}, {"ss4", "ss5"}, {"ss5", "ss6"}, {"ss7", "ss8"}, {"ss8", "ss9"},
      {"ss10", "ss11"}, {"ss11", "ss12"}, {"ss13", "ss14"}, {"ss14", "ss15"},
      {"u1", "s2"}, {"s2", "ss2"}, {"u2", "s5"}, {"s5", "ss5"},
      {"v1", "s8"}, {"s8", "r1"}, {"r1", "ss8"},
      {"v2", "s11"}, {"s11", "r2"}, {"r2", "ss11"},
      {"v3", "s14"}, {"s14", "r3"}, {"r3", "ss14"},
  });
}

}  // namespace tcoi::testing
