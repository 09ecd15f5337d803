#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcoi/tree.hpp"

namespace tcoi {

// Named trees. Labelings:
//   path(n)            0-1-...-(n-1)
//   star(n)            centre 0, leaves 1..n-1
//   double_star(a, b)  centres 0 and 1; a leaves on 0, then b leaves on 1
//   comb(k)            spine 0..k-1, leaf k+i hanging from spine vertex i
//   spider(legs)       centre 0, each leg labelled outward consecutively
Tree path(std::size_t n);
Tree star(std::size_t n);
Tree double_star(std::size_t a, std::size_t b);
Tree comb(std::size_t k);
Tree spider(const std::vector<std::size_t>& leg_lengths);

/// Spine v s s_1 ... s_r labelled 0, 1, 2, ..., r+1, with one pendant leaf on
/// every spine vertex except v (pendant of spine vertex i is r+1+i).
/// Order 2r + 3. Requires r >= 2.
Tree q_tree(std::size_t r);

/// A base tree whose vertices are split into b "u" vertices and d "v" vertices.
struct FamilyFSpec {
  Tree base;
  VertexSet u_vertices;
  VertexSet v_vertices;
};

/// T_{b,d}: base tree with two pendant leaves on every vertex, a 4-vertex
/// star hung from each u vertex through one of its leaves, and a star with
/// one subdivided edge hung from each v vertex through the end of the
/// subdivided edge. Base labels are kept; order 3n + 4b + 5d.
Tree family_f(const FamilyFSpec& spec);

/// Uniform labelled tree from a seeded random Prufer sequence.
Tree random_tree(std::size_t n, std::uint64_t seed);

/// Labelled tree for a Prufer sequence over 0..n-1 (n = seq.size() + 2).
Tree prufer_decode(const std::vector<Vertex>& sequence);

enum class OpKind { O1 = 1, O2 = 2, O3 = 3, O4 = 4 };

std::string to_string(OpKind kind);
OpKind parse_op_kind(std::string_view text);
/// Vertices added by one application: 1, 2, 4, 4.
std::size_t added_vertices(OpKind kind);

/// One constructive step. New vertices are always n, n+1, ... of the tree the
/// step is applied to, listed in path order:
///   O1 [u]               edge v-u
///   O2 [u1, u2]          edges v-u1, u1-u2
///   O3 [h1, u1, u2, h2]  path h1-u1-u2-h2, edge v-h1 (joined at a leaf)
///   O4 [h1, u1, u2, h2]  path h1-u1-u2-h2, edge v-u1 (joined at a support)
struct OperationStep {
  OpKind kind = OpKind::O1;
  Vertex attach = 0;
  std::vector<Vertex> new_vertices;

  friend bool operator==(const OperationStep&, const OperationStep&) = default;
};

/// Step with the canonical new labels for a tree of order n.
OperationStep make_step(OpKind kind, Vertex attach, std::size_t n);

/// Whether `attach` lies in some minimum tcoi-set (O1-O3) or some maximum
/// independent set (O4) of t.
bool operation_precondition(const Tree& t, OpKind kind, Vertex attach);

/// Grows the tree by one operation without checking the precondition.
Tree attach_unchecked(const Tree& t, OpKind kind, Vertex attach);

/// Checked application. Throws PreconditionViolated, VertexOutOfRange, or
/// BadParameter when new_vertices differs from the canonical labels.
Tree apply_operation(const Tree& t, const OperationStep& step);

}  // namespace tcoi
