#include "tcoi/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tcoi {
namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 30) {
    throw TooLarge("brute force limited to " + std::to_string(std::min<std::size_t>(cap, 30)) + " vertices, got " +
                   std::to_string(n));
  }
}

bool maximising(Invariant which) { return which == Invariant::beta; }

}  // namespace

MaskGraph MaskGraph::from_tree(const Tree& t) {
  if (t.order() > 64) throw TooLarge("mask graphs hold at most 64 vertices");
  MaskGraph g;
  g.adjacency.assign(t.order(), 0);
  for (auto [u, v] : t.edges()) {
    g.adjacency[u] |= std::uint64_t{1} << v;
    g.adjacency[v] |= std::uint64_t{1} << u;
  }
  return g;
}

bool mask_is_independent(const MaskGraph& g, std::uint64_t s) {
  for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
    if (g.adjacency[static_cast<std::size_t>(std::countr_zero(rest))] & s) return false;
  }
  return true;
}

bool mask_is_total_dominating(const MaskGraph& g, std::uint64_t d) {
  for (std::uint64_t nb : g.adjacency) {
    if ((nb & d) == 0) return false;
  }
  return true;
}

bool mask_is_tcoi_set(const MaskGraph& g, std::uint64_t d) {
  const std::uint64_t complement = g.all() & ~d;
  return complement != 0 && mask_is_independent(g, complement) && mask_is_total_dominating(g, d);
}

bool mask_satisfies(const MaskGraph& g, Invariant which, std::uint64_t s) {
  switch (which) {
    case Invariant::beta: return mask_is_independent(g, s);
    case Invariant::gamma_t: return mask_is_total_dominating(g, s);
    case Invariant::tcoi: return mask_is_tcoi_set(g, s);
  }
  return false;
}

void for_each_feasible_set(const MaskGraph& g, Invariant which, const std::function<void(std::uint64_t)>& visit,
                           std::size_t cap) {
  check_cap(g.order(), cap);
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (mask_satisfies(g, which, s)) visit(s);
  }
}

Solution brute_force(const MaskGraph& g, Invariant which, std::size_t cap) {
  check_cap(g.order(), cap);
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  bool found = false;
  int best = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t s = 0; s < limit; ++s) {
    int size = std::popcount(s);
    if (found && (maximising(which) ? size <= best : size >= best)) continue;
    if (!mask_satisfies(g, which, s)) continue;
    found = true;
    best = size;
    best_mask = s;
  }
  if (!found) throw Undefined(to_string(which) + ": no feasible set");
  return {static_cast<std::size_t>(best), VertexSet::from_mask(best_mask)};
}

Solution brute_force(const Tree& t, Invariant which, std::size_t cap) {
  check_cap(t.order(), cap);
  return brute_force(MaskGraph::from_tree(t), which, cap);
}

std::vector<std::uint64_t> all_optimal_sets(const Tree& t, Invariant which, std::size_t cap) {
  auto g = MaskGraph::from_tree(t);
  auto best = brute_force(g, which, cap).value;
  std::vector<std::uint64_t> out;
  for_each_feasible_set(
      g, which,
      [&](std::uint64_t s) {
        if (static_cast<std::size_t>(std::popcount(s)) == best) out.push_back(s);
      },
      cap);
  return out;
}

}  // namespace tcoi
