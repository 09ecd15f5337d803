#include "tcoi/tree.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace tcoi {

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::to_mask() const {
  std::uint64_t mask = 0;
  for (Vertex v : members_) mask |= std::uint64_t{1} << v;
  return mask;
}

Tree::Tree() : offsets_{0, 0} {}

Tree::Tree(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw NotATree("tree must have at least one vertex");
  if (edges.size() != n - 1) {
    throw NotATree("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  }
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw NotATree("edge endpoint out of range");
    if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw NotATree("duplicate edge at vertex " + std::to_string(v));
    }
  }
  // n - 1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw NotATree("graph is disconnected");
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(order() - 1);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Tree::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " not in tree of order " + std::to_string(order()));
  }
}

RootedView root_at(const Tree& t, Vertex root) {
  t.check_vertex(root);
  RootedView view;
  view.root = root;
  view.parent.assign(t.order(), root);
  view.preorder.reserve(t.order());
  std::vector<Vertex> stack{root};
  std::vector<char> seen(t.order(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    view.preorder.push_back(v);
    auto nb = t.neighbors(v);
    // Push in reverse so children are visited in increasing id order.
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        view.parent[*it] = v;
        stack.push_back(*it);
      }
    }
  }
  return view;
}

std::pair<Tree, std::vector<Vertex>> induced_subtree(const Tree& t, const VertexSet& keep) {
  std::vector<Vertex> index(t.order(), static_cast<Vertex>(-1));
  const auto& members = keep.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    t.check_vertex(members[i]);
    index[members[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) {
    if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1)) {
      edges.emplace_back(index[u], index[v]);
    }
  }
  return {Tree(members.size(), edges), members};
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  if (perm.size() != t.order()) throw BadParameter("permutation size does not match tree order");
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
  return Tree(t.order(), edges);
}

std::vector<std::size_t> distances_from(const Tree& t, Vertex source) {
  t.check_vertex(source);
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(t.order(), kUnset);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] == kUnset) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const Tree& t, Vertex u, Vertex v) {
  t.check_vertex(v);
  return distances_from(t, u)[v];
}

std::size_t diameter(const Tree& t) {
  auto from_zero = distances_from(t, 0);
  auto far = static_cast<Vertex>(std::max_element(from_zero.begin(), from_zero.end()) - from_zero.begin());
  auto from_far = distances_from(t, far);
  return *std::max_element(from_far.begin(), from_far.end());
}

std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
  t.check_vertex(v);
  auto view = root_at(t, u);
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(view.parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

StructureReport structure(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<char> is_leaf(n), is_support(n);
  std::vector<Vertex> leaves, supports, semi, isolated;
  StructureReport report;
  report.min_degree = n;
  for (Vertex v = 0; v < n; ++v) {
    is_leaf[v] = t.degree(v) <= 1;
    report.min_degree = std::min(report.min_degree, t.degree(v));
    report.max_degree = std::max(report.max_degree, t.degree(v));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_leaf[v]) {
      leaves.push_back(v);
      continue;
    }
    is_support[v] = std::any_of(t.neighbors(v).begin(), t.neighbors(v).end(), [&](Vertex w) { return is_leaf[w]; });
    if (is_support[v]) supports.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    bool near_support = std::any_of(t.neighbors(v).begin(), t.neighbors(v).end(), [&](Vertex w) { return is_support[w]; });
    if (!is_leaf[v] && !is_support[v] && near_support) semi.push_back(v);
    if (is_support[v] && !near_support) isolated.push_back(v);
  }
  report.leaves = VertexSet(std::move(leaves));
  report.supports = VertexSet(std::move(supports));
  report.semi_supports = VertexSet(std::move(semi));
  report.isolated_supports = VertexSet(std::move(isolated));
  report.diameter = diameter(t);
  return report;
}

}  // namespace tcoi
