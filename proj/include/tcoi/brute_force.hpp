#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "tcoi/solvers.hpp"

namespace tcoi {

inline constexpr std::size_t kDefaultBruteForceCap = 20;

/// Small simple graph as one neighbour bitmask per vertex. Accepts any graph
/// (not only trees) so the predicates can be cross-checked off-tree too.
struct MaskGraph {
  std::vector<std::uint64_t> adjacency;

  static MaskGraph from_tree(const Tree& t);
  std::size_t order() const { return adjacency.size(); }
  std::uint64_t all() const { return order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order()) - 1; }
};

bool mask_is_independent(const MaskGraph& g, std::uint64_t s);
bool mask_is_total_dominating(const MaskGraph& g, std::uint64_t d);
bool mask_is_tcoi_set(const MaskGraph& g, std::uint64_t d);
/// The defining predicate of `which` (independent / total dominating / tcoi).
bool mask_satisfies(const MaskGraph& g, Invariant which, std::uint64_t s);

/// Exact optimum by enumerating all 2^n subsets. The witness is the first
/// optimal mask in increasing numeric order.
/// Throws TooLarge above `cap` vertices, Undefined when no set qualifies
/// (gamma_t on n = 1, tcoi on n <= 2).
Solution brute_force(const Tree& t, Invariant which, std::size_t cap = kDefaultBruteForceCap);
Solution brute_force(const MaskGraph& g, Invariant which, std::size_t cap = kDefaultBruteForceCap);

/// Calls `visit` with every subset mask satisfying the predicate of `which`.
void for_each_feasible_set(const MaskGraph& g, Invariant which, const std::function<void(std::uint64_t)>& visit,
                           std::size_t cap = kDefaultBruteForceCap);

/// Every optimal set (as masks) for `which`.
std::vector<std::uint64_t> all_optimal_sets(const Tree& t, Invariant which, std::size_t cap = kDefaultBruteForceCap);

}  // namespace tcoi
