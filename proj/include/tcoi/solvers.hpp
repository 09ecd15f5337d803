#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcoi/tree.hpp"

namespace tcoi {

enum class Invariant { beta, gamma_t, tcoi };

std::string to_string(Invariant which);

/// Per-vertex restriction used by the forced-vertex solvers.
enum class Constraint : std::uint8_t { free, in, out };

struct Solution {
  std::size_t value = 0;
  VertexSet witness;
};

/// Optimum of `which` over sets respecting `constraints` (one entry per
/// vertex, or empty for no constraints). Returns nullopt when no feasible set
/// exists. beta is maximised, gamma_t and tcoi are minimised.
///
/// Tree DP rooted at vertex 0, linear in n.
std::optional<std::size_t> constrained_optimum(const Tree& t, Invariant which,
                                               std::span<const Constraint> constraints = {});

/// beta(T) with the lexicographically smallest maximum independent set.
Solution independence_number(const Tree& t);
/// gamma_t(T); throws Undefined for n = 1.
Solution total_domination_number(const Tree& t);
/// gamma_t,coi(T); throws Undefined for n <= 2.
Solution tcoi_number(const Tree& t);

Solution solve(const Tree& t, Invariant which);

/// True iff some optimal set for `which` contains v.
bool in_some_optimal_set(const Tree& t, Vertex v, Invariant which);

bool is_independent(const Tree& t, const VertexSet& s);
bool is_total_dominating(const Tree& t, const VertexSet& d);
/// D totally dominates, V \ D is independent and non-empty.
bool is_tcoi_set(const Tree& t, const VertexSet& d);

/// Minimality via the per-vertex conditions: every v in D has a vertex whose
/// only D-neighbour is v, or has a neighbour outside D.
/// Throws NotATcoiSet when D is not a total co-independent dominating set.
bool is_minimal_tcoi_set(const Tree& t, const VertexSet& d);

/// Minimality by definition: no D \ {v} is still a total co-independent
/// dominating set.
bool is_minimal_tcoi_set_by_removal(const Tree& t, const VertexSet& d);

struct InvariantReport {
  std::size_t n = 0;
  std::size_t beta = 0;
  std::optional<std::size_t> gamma_t;
  std::optional<std::size_t> tcoi;
  VertexSet beta_witness;
  std::optional<VertexSet> gamma_t_witness;
  std::optional<VertexSet> tcoi_witness;
};

InvariantReport compute_invariants(const Tree& t);
std::string to_json(const InvariantReport& report, int indent = 2);
std::string to_text(const InvariantReport& report);

}  // namespace tcoi
