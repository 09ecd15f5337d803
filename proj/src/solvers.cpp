#include "tcoi/solvers.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tcoi {
namespace {

// Large enough to never be a real set size, small enough that sums of a few
// of them cannot overflow.
constexpr long long kInf = std::numeric_limits<long long>::max() / 8;

bool allows_in(std::span<const Constraint> c, Vertex v) { return c.empty() || c[v] != Constraint::out; }
bool allows_out(std::span<const Constraint> c, Vertex v) { return c.empty() || c[v] != Constraint::in; }

long long add(long long a, long long b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

// Children lists of the orientation rooted at 0, plus a post-order.
struct Rooted {
  std::vector<Vertex> postorder;
  std::vector<std::vector<Vertex>> children;
};

Rooted orient(const Tree& t) {
  auto view = root_at(t, 0);
  Rooted r;
  r.children.resize(t.order());
  for (Vertex v : view.preorder) {
    if (v != view.root) r.children[view.parent[v]].push_back(v);
  }
  r.postorder.assign(view.preorder.rbegin(), view.preorder.rend());
  return r;
}

// Maximum independent set. Infeasible states carry -kInf.
std::optional<std::size_t> beta_dp(const Tree& t, std::span<const Constraint> c) {
  auto r = orient(t);
  std::vector<long long> in(t.order()), out(t.order());
  for (Vertex v : r.postorder) {
    long long take = 1, skip = 0;
    for (Vertex ch : r.children[v]) {
      take = std::max(take + out[ch], -kInf);
      skip = std::max(skip + std::max(in[ch], out[ch]), -kInf);
    }
    in[v] = allows_in(c, v) ? take : -kInf;
    out[v] = allows_out(c, v) ? skip : -kInf;
  }
  long long best = std::max(in[0], out[0]);
  if (best < 0) return std::nullopt;
  return static_cast<std::size_t>(best);
}

// Total domination. Per vertex:
//   in_dom   in D with a child in D
//   in_open  in D, no child in D (its parent must be in D)
//   out_dom  outside D with a child in D
//   out_open outside D, no child in D (its parent must be in D)
std::optional<std::size_t> gamma_t_dp(const Tree& t, std::span<const Constraint> c) {
  if (t.order() < 2) return std::nullopt;
  auto r = orient(t);
  const std::size_t n = t.order();
  std::vector<long long> in_dom(n), in_open(n), out_dom(n), out_open(n);
  for (Vertex v : r.postorder) {
    // v in D: any child state is acceptable since v dominates its children.
    long long f0 = 1, f1 = kInf;
    // v out of D: children must already be dominated inside their subtrees.
    long long g0 = 0, g1 = kInf;
    for (Vertex ch : r.children[v]) {
      long long child_in = std::min(in_dom[ch], in_open[ch]);
      long long child_out = std::min(out_dom[ch], out_open[ch]);
      long long nf0 = add(f0, child_out);
      long long nf1 = std::min(add(f1, std::min(child_in, child_out)), add(f0, child_in));
      long long ng0 = add(g0, out_dom[ch]);
      long long ng1 = std::min(add(g1, std::min(in_dom[ch], out_dom[ch])), add(g0, in_dom[ch]));
      f0 = nf0, f1 = nf1, g0 = ng0, g1 = ng1;
    }
    in_dom[v] = allows_in(c, v) ? f1 : kInf;
    in_open[v] = allows_in(c, v) ? f0 : kInf;
    out_dom[v] = allows_out(c, v) ? g1 : kInf;
    out_open[v] = allows_out(c, v) ? g0 : kInf;
  }
  long long best = std::min(in_dom[0], out_dom[0]);
  if (best >= kInf) return std::nullopt;
  return static_cast<std::size_t>(best);
}

// Total co-independent domination. Each state is indexed by whether the
// subtree already holds a vertex outside D.
//   in_dom[x]   in D with a child in D
//   in_open[x]  in D, no child in D (parent must be in D)
//   out         outside D; every child is in D and dominated below, parent
//               must be in D. Always x = 1.
std::optional<std::size_t> tcoi_dp(const Tree& t, std::span<const Constraint> c) {
  if (t.order() < 3) return std::nullopt;
  auto r = orient(t);
  const std::size_t n = t.order();
  std::vector<std::array<long long, 2>> in_dom(n), in_open(n);
  std::vector<long long> out(n);
  for (Vertex v : r.postorder) {
    // acc[has_d_child][has_out]
    std::array<std::array<long long, 2>, 2> acc{{{1, kInf}, {kInf, kInf}}};
    long long out_cost = 0;
    for (Vertex ch : r.children[v]) {
      std::array<std::array<long long, 2>, 2> next{{{kInf, kInf}, {kInf, kInf}}};
      for (int d = 0; d < 2; ++d) {
        for (int x = 0; x < 2; ++x) {
          if (acc[d][x] >= kInf) continue;
          for (int cx = 0; cx < 2; ++cx) {
            long long child_in = std::min(in_dom[ch][cx], in_open[ch][cx]);
            auto& slot = next[1][x | cx];
            slot = std::min(slot, add(acc[d][x], child_in));
          }
          auto& slot = next[d][1];
          slot = std::min(slot, add(acc[d][x], out[ch]));
        }
      }
      acc = next;
      out_cost = add(out_cost, std::min(in_dom[ch][0], in_dom[ch][1]));
    }
    for (int x = 0; x < 2; ++x) {
      in_dom[v][x] = allows_in(c, v) ? acc[1][x] : kInf;
      in_open[v][x] = allows_in(c, v) ? acc[0][x] : kInf;
    }
    out[v] = allows_out(c, v) ? out_cost : kInf;
  }
  // The root has no parent: it must be dominated by a child in either role.
  long long root_out = r.children[0].empty() ? kInf : out[0];
  long long best = std::min(in_dom[0][1], root_out);
  if (best >= kInf) return std::nullopt;
  return static_cast<std::size_t>(best);
}

// Greedy over vertices in id order: keep v in the set whenever that still
// allows an optimal completion. Yields the lexicographically smallest optimum.
VertexSet lexicographic_witness(const Tree& t, Invariant which, std::size_t target) {
  std::vector<Constraint> c(t.order(), Constraint::free);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < t.order(); ++v) {
    c[v] = Constraint::in;
    auto value = constrained_optimum(t, which, c);
    if (value && *value == target) {
      members.push_back(v);
    } else {
      c[v] = Constraint::out;
    }
  }
  return VertexSet(std::move(members));
}

}  // namespace

std::string to_string(Invariant which) {
  switch (which) {
    case Invariant::beta: return "beta";
    case Invariant::gamma_t: return "gamma_t";
    case Invariant::tcoi: return "tcoi";
  }
  return "?";
}

std::optional<std::size_t> constrained_optimum(const Tree& t, Invariant which, std::span<const Constraint> constraints) {
  if (!constraints.empty() && constraints.size() != t.order()) {
    throw BadParameter("constraint vector size does not match tree order");
  }
  switch (which) {
    case Invariant::beta: return beta_dp(t, constraints);
    case Invariant::gamma_t: return gamma_t_dp(t, constraints);
    case Invariant::tcoi: return tcoi_dp(t, constraints);
  }
  return std::nullopt;
}

Solution solve(const Tree& t, Invariant which) {
  if (which == Invariant::gamma_t && t.order() < 2) {
    throw Undefined("total domination number is undefined for a single vertex");
  }
  if (which == Invariant::tcoi && t.order() < 3) {
    throw Undefined("total co-independent domination number is undefined for n <= 2");
  }
  auto value = constrained_optimum(t, which);
  if (!value) throw Undefined(to_string(which) + " has no feasible set");
  return {*value, lexicographic_witness(t, which, *value)};
}

Solution independence_number(const Tree& t) { return solve(t, Invariant::beta); }
Solution total_domination_number(const Tree& t) { return solve(t, Invariant::gamma_t); }
Solution tcoi_number(const Tree& t) { return solve(t, Invariant::tcoi); }

bool in_some_optimal_set(const Tree& t, Vertex v, Invariant which) {
  t.check_vertex(v);
  auto best = constrained_optimum(t, which);
  if (!best) throw Undefined(to_string(which) + " is undefined for this tree");
  std::vector<Constraint> c(t.order(), Constraint::free);
  c[v] = Constraint::in;
  auto forced = constrained_optimum(t, which, c);
  return forced && *forced == *best;
}

bool is_independent(const Tree& t, const VertexSet& s) {
  for (Vertex v : s) {
    t.check_vertex(v);
    for (Vertex w : t.neighbors(v)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

bool is_total_dominating(const Tree& t, const VertexSet& d) {
  for (Vertex v : d) t.check_vertex(v);
  for (Vertex v = 0; v < t.order(); ++v) {
    auto nb = t.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return d.contains(w); })) return false;
  }
  return true;
}

bool is_tcoi_set(const Tree& t, const VertexSet& d) {
  if (!is_total_dominating(t, d)) return false;
  if (d.size() >= t.order()) return false;
  for (auto [u, v] : t.edges()) {
    if (!d.contains(u) && !d.contains(v)) return false;
  }
  return true;
}

bool is_minimal_tcoi_set(const Tree& t, const VertexSet& d) {
  if (!is_tcoi_set(t, d)) throw NotATcoiSet("set is not a total co-independent dominating set");
  for (Vertex v : d) {
    bool private_neighbor = false;
    for (Vertex u = 0; u < t.order() && !private_neighbor; ++u) {
      std::size_t hits = 0;
      bool hits_v = false;
      for (Vertex w : t.neighbors(u)) {
        if (d.contains(w)) {
          ++hits;
          hits_v |= (w == v);
        }
      }
      private_neighbor = hits == 1 && hits_v;
    }
    auto nb = t.neighbors(v);
    bool outside_neighbor = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return !d.contains(w); });
    if (!private_neighbor && !outside_neighbor) return false;
  }
  return true;
}

bool is_minimal_tcoi_set_by_removal(const Tree& t, const VertexSet& d) {
  if (!is_tcoi_set(t, d)) throw NotATcoiSet("set is not a total co-independent dominating set");
  for (Vertex v : d) {
    std::vector<Vertex> rest;
    for (Vertex w : d) {
      if (w != v) rest.push_back(w);
    }
    if (is_tcoi_set(t, VertexSet(std::move(rest)))) return false;
  }
  return true;
}

InvariantReport compute_invariants(const Tree& t) {
  InvariantReport report;
  report.n = t.order();
  auto beta = independence_number(t);
  report.beta = beta.value;
  report.beta_witness = std::move(beta.witness);
  if (t.order() >= 2) {
    auto gt = total_domination_number(t);
    report.gamma_t = gt.value;
    report.gamma_t_witness = std::move(gt.witness);
  }
  if (t.order() >= 3) {
    auto tc = tcoi_number(t);
    report.tcoi = tc.value;
    report.tcoi_witness = std::move(tc.witness);
  }
  return report;
}

std::string to_json(const InvariantReport& report, int indent) {
  using nlohmann::json;
  auto optional_set = [](const std::optional<VertexSet>& s) -> json {
    return s ? json(s->members()) : json(nullptr);
  };
  auto optional_int = [](const std::optional<std::size_t>& v) -> json { return v ? json(*v) : json(nullptr); };
  json doc = {
      {"n", report.n},
      {"beta", report.beta},
      {"gamma_t", optional_int(report.gamma_t)},
      {"tcoi", optional_int(report.tcoi)},
      {"beta_witness", report.beta_witness.members()},
      {"gamma_t_witness", optional_set(report.gamma_t_witness)},
      {"tcoi_witness", optional_set(report.tcoi_witness)},
  };
  return doc.dump(indent);
}

std::string to_text(const InvariantReport& report) {
  auto set_text = [](const VertexSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
      if (it != s.begin()) out += ",";
      out += std::to_string(*it);
    }
    return out + "}";
  };
  std::ostringstream out;
  out << "n        " << report.n << '\n';
  out << "beta     " << report.beta << "  " << set_text(report.beta_witness) << '\n';
  if (report.gamma_t) {
    out << "gamma_t  " << *report.gamma_t << "  " << set_text(*report.gamma_t_witness) << '\n';
  } else {
    out << "gamma_t  undefined\n";
  }
  if (report.tcoi) {
    out << "tcoi     " << *report.tcoi << "  " << set_text(*report.tcoi_witness) << '\n';
  } else {
    out << "tcoi     undefined\n";
  }
  return out.str();
}

}  // namespace tcoi
