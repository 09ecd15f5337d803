#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "tcoi/errors.hpp"

namespace tcoi {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet from_mask(std::uint64_t mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  // Requires every member < 64.
  std::uint64_t to_mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple tree on vertices 0..n-1.
///
/// Adjacency is stored in compressed form with every neighbor list sorted.
/// Construction validates the tree property (n - 1 edges, connected, no loops
/// or repeated edges) and throws NotATree otherwise.
class Tree {
 public:
  /// The single-vertex tree.
  Tree();
  Tree(std::size_t n, std::span<const Edge> edges);
  Tree(std::size_t n, std::initializer_list<Edge> edges)
      : Tree(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Parent pointers and a preorder from a chosen root. parent[root] == root.
struct RootedView {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<Vertex> preorder;
};

RootedView root_at(const Tree& t, Vertex root);

/// Induced subtree on `keep` (must induce a connected subgraph). The i-th
/// vertex of the result corresponds to keep[i] after sorting.
std::pair<Tree, std::vector<Vertex>> induced_subtree(const Tree& t, const VertexSet& keep);

/// Tree with the labels permuted: vertex v becomes perm[v].
Tree relabel(const Tree& t, std::span<const Vertex> perm);

struct StructureReport {
  VertexSet leaves;
  VertexSet supports;
  VertexSet semi_supports;
  VertexSet isolated_supports;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t diameter = 0;
};

/// Leaves, supports, semi-supports (non-leaf, non-support vertices adjacent to
/// a support), isolated supports, degree extremes and diameter. A degree-0
/// vertex (n = 1) is classified as a leaf.
StructureReport structure(const Tree& t);

std::vector<std::size_t> distances_from(const Tree& t, Vertex source);
std::size_t distance(const Tree& t, Vertex u, Vertex v);
std::size_t diameter(const Tree& t);

/// Vertices on the unique u-v path, in order from u to v.
std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v);

/// One or two central vertices, found by stripping leaves.
std::vector<Vertex> centers(const Tree& t);

}  // namespace tcoi
