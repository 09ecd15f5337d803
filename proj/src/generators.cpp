#include "tcoi/generators.hpp"

#include <functional>
#include <queue>
#include <random>

#include "tcoi/solvers.hpp"

namespace tcoi {

Tree path(std::size_t n) {
  if (n == 0) throw BadParameter("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Tree(n, edges);
}

Tree star(std::size_t n) {
  if (n == 0) throw BadParameter("star needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree(n, edges);
}

Tree double_star(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw BadParameter("double star needs at least one leaf on each centre");
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < a; ++i) edges.emplace_back(0, next++);
  for (std::size_t i = 0; i < b; ++i) edges.emplace_back(1, next++);
  return Tree(next, edges);
}

Tree comb(std::size_t k) {
  if (k == 0) throw BadParameter("comb needs at least one spine vertex");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.emplace_back(i - 1, i);
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, static_cast<Vertex>(k + i));
  return Tree(2 * k, edges);
}

Tree spider(const std::vector<std::size_t>& leg_lengths) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : leg_lengths) {
    if (len == 0) throw BadParameter("spider legs must have positive length");
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, edges);
}

Tree q_tree(std::size_t r) {
  if (r < 2) throw BadParameter("Q_r is defined for r >= 2");
  const std::size_t spine = r + 2;
  std::vector<Edge> edges;
  for (Vertex i = 1; i < spine; ++i) edges.emplace_back(i - 1, i);
  for (Vertex i = 1; i < spine; ++i) edges.emplace_back(i, static_cast<Vertex>(spine + i - 1));
  return Tree(2 * r + 3, edges);
}

Tree family_f(const FamilyFSpec& spec) {
  const std::size_t n = spec.base.order();
  const std::size_t b = spec.u_vertices.size();
  const std::size_t d = spec.v_vertices.size();
  if (b == 0 || d == 0) throw BadParameter("family F needs b >= 1 and d >= 1");
  if (b + d != n) throw BadParameter("u and v vertices must partition the base tree");
  for (Vertex x : spec.u_vertices) {
    if (x >= n || spec.v_vertices.contains(x)) throw BadParameter("u and v vertices must partition the base tree");
  }
  for (Vertex x : spec.v_vertices) {
    if (x >= n) throw BadParameter("u and v vertices must partition the base tree");
  }

  std::vector<Edge> edges = spec.base.edges();
  Vertex next = static_cast<Vertex>(n);
  for (Vertex x = 0; x < n; ++x) {
    edges.emplace_back(x, next++);
    edges.emplace_back(x, next++);
  }
  for (Vertex u : spec.u_vertices) {
    const Vertex a = next, c = next + 1;
    edges.insert(edges.end(), {{u, a}, {a, c}, {c, c + 1}, {c, c + 2}});
    next += 4;
  }
  for (Vertex v : spec.v_vertices) {
    const Vertex s = next, m = next + 1, c = next + 2;
    edges.insert(edges.end(), {{v, s}, {s, m}, {m, c}, {c, c + 1}, {c, c + 2}});
    next += 5;
  }
  return Tree(next, edges);
}

Tree prufer_decode(const std::vector<Vertex>& sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : sequence) {
    if (x >= n) throw BadParameter("Prufer entry out of range");
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex x : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(n, edges);
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw BadParameter("random tree needs at least one vertex");
  if (n == 1) return Tree();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> sequence(n - 2);
  for (auto& x : sequence) x = pick(rng);
  return prufer_decode(sequence);
}

std::string to_string(OpKind kind) { return "O" + std::to_string(static_cast<int>(kind)); }

OpKind parse_op_kind(std::string_view text) {
  if (text == "O1") return OpKind::O1;
  if (text == "O2") return OpKind::O2;
  if (text == "O3") return OpKind::O3;
  if (text == "O4") return OpKind::O4;
  throw ParseError("unknown operation '" + std::string(text) + "'");
}

std::size_t added_vertices(OpKind kind) {
  switch (kind) {
    case OpKind::O1: return 1;
    case OpKind::O2: return 2;
    case OpKind::O3:
    case OpKind::O4: return 4;
  }
  return 0;
}

OperationStep make_step(OpKind kind, Vertex attach, std::size_t n) {
  OperationStep step{kind, attach, {}};
  for (std::size_t i = 0; i < added_vertices(kind); ++i) step.new_vertices.push_back(static_cast<Vertex>(n + i));
  return step;
}

bool operation_precondition(const Tree& t, OpKind kind, Vertex attach) {
  return in_some_optimal_set(t, attach, kind == OpKind::O4 ? Invariant::beta : Invariant::tcoi);
}

Tree attach_unchecked(const Tree& t, OpKind kind, Vertex attach) {
  t.check_vertex(attach);
  const auto n = static_cast<Vertex>(t.order());
  std::vector<Edge> edges = t.edges();
  switch (kind) {
    case OpKind::O1: edges.emplace_back(attach, n); break;
    case OpKind::O2: edges.insert(edges.end(), {{attach, n}, {n, n + 1}}); break;
    case OpKind::O3: edges.insert(edges.end(), {{n, n + 1}, {n + 1, n + 2}, {n + 2, n + 3}, {attach, n}}); break;
    case OpKind::O4: edges.insert(edges.end(), {{n, n + 1}, {n + 1, n + 2}, {n + 2, n + 3}, {attach, n + 1}}); break;
  }
  return Tree(n + added_vertices(kind), edges);
}

Tree apply_operation(const Tree& t, const OperationStep& step) {
  t.check_vertex(step.attach);
  if (step.new_vertices != make_step(step.kind, step.attach, t.order()).new_vertices) {
    throw BadParameter(to_string(step.kind) + ": new vertices must be the next unused labels starting at " +
                       std::to_string(t.order()));
  }
  if (!operation_precondition(t, step.kind, step.attach)) {
    throw PreconditionViolated(to_string(step.kind) + " at vertex " + std::to_string(step.attach) + ": vertex is in no " +
                               (step.kind == OpKind::O4 ? "maximum independent set" : "minimum tcoi-set"));
  }
  return attach_unchecked(t, step.kind, step.attach);
}

}  // namespace tcoi
