#include "tcoi/characterize.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "tcoi/solvers.hpp"

namespace tcoi {
namespace {

void require_diameter_three(const Tree& t) {
  if (t.order() < 4 || diameter(t) < 3) {
    throw Undefined("family membership is only defined for trees of diameter at least 3");
  }
}

// Membership test on value-only DPs; callers guarantee diam >= 3.
bool tbeta_value(const Tree& t) {
  auto tcoi = constrained_optimum(t, Invariant::tcoi);
  auto beta = constrained_optimum(t, Invariant::beta);
  return tcoi && beta && *tcoi + *beta == t.order();
}

bool is_p4(const Tree& t) { return t.order() == 4 && diameter(t) == 3; }

// A reverse operation in the labels of the tree being reduced. `removed`
// lists the vertices the forward step adds, in forward label order.
struct Reduction {
  OpKind kind;
  Vertex attach;
  std::vector<Vertex> removed;
};

bool neighbours_are(const Tree& t, Vertex x, std::initializer_list<Vertex> expected) {
  if (t.degree(x) != expected.size()) return false;
  return std::all_of(expected.begin(), expected.end(), [&](Vertex y) { return t.adjacent(x, y); });
}

// The removed vertices must form exactly the pendant piece the forward
// operation would have added, hanging from `attach` alone.
bool has_operation_shape(const Tree& t, const Reduction& r) {
  if (r.removed.size() != added_vertices(r.kind) || t.degree(r.attach) < 2) return false;
  const auto& x = r.removed;
  switch (r.kind) {
    case OpKind::O1: return neighbours_are(t, x[0], {r.attach});
    case OpKind::O2: return neighbours_are(t, x[0], {r.attach, x[1]}) && neighbours_are(t, x[1], {x[0]});
    case OpKind::O3:
      return neighbours_are(t, x[0], {r.attach, x[1]}) && neighbours_are(t, x[1], {x[0], x[2]}) &&
             neighbours_are(t, x[2], {x[1], x[3]}) && neighbours_are(t, x[3], {x[2]});
    case OpKind::O4:
      return neighbours_are(t, x[0], {x[1]}) && neighbours_are(t, x[1], {x[0], x[2], r.attach}) &&
             neighbours_are(t, x[2], {x[1], x[3]}) && neighbours_are(t, x[3], {x[2]});
  }
  return false;
}

// Accept a reduction when the smaller tree is a T_beta member of diameter >= 3
// and the forward step is legal on it.
bool is_valid_reduction(const Tree& t, const Reduction& r) {
  if (!has_operation_shape(t, r)) return false;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (std::find(r.removed.begin(), r.removed.end(), v) == r.removed.end()) keep.push_back(v);
  }
  auto [smaller, labels] = induced_subtree(t, VertexSet(std::move(keep)));
  if (smaller.order() < 4 || diameter(smaller) < 3 || !tbeta_value(smaller)) return false;
  auto attach = static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), r.attach) - labels.begin());
  return operation_precondition(smaller, r.kind, attach);
}

Vertex only_leaf_of(const Tree& t, const StructureReport& st, Vertex support) {
  for (Vertex w : t.neighbors(support)) {
    if (st.leaves.contains(w)) return w;
  }
  return support;
}

std::vector<Vertex> support_neighbours(const Tree& t, const StructureReport& st, Vertex x, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex w : t.neighbors(x)) {
    if (w != skip && st.supports.contains(w)) out.push_back(w);
  }
  return out;
}

// Q_r configuration hanging from `anchor` through the support `s` whose leaf
// is `h`: walk the chain of supports s, s_1, ..., s_r and peel the last
// support with its leaf (reverse O2). When the chain has a single extra
// support (r = 1) the whole P_4 h s s_1 h_1 may instead come off via O4.
void chain_reductions(const Tree& t, const StructureReport& st, Vertex anchor, Vertex s, Vertex h,
                      std::vector<Reduction>& out) {
  auto first = support_neighbours(t, st, s, anchor);
  if (first.empty()) return;
  Vertex prev = s, cur = first.front();
  std::size_t r = 1;
  for (;;) {
    auto next = support_neighbours(t, st, cur, prev);
    if (next.empty()) break;
    prev = cur;
    cur = next.front();
    ++r;
  }
  out.push_back({OpKind::O2, prev, {cur, only_leaf_of(t, st, cur)}});
  if (r == 1 && first.size() == 1) {
    out.push_back({OpKind::O4, anchor, {h, s, cur, only_leaf_of(t, st, cur)}});
  }
}

// Reductions suggested by the induction argument, most specific first.
std::vector<Reduction> proof_reductions(const Tree& t) {
  const auto st = structure(t);
  std::vector<Reduction> out;

  // Excess leaves: some support carries at least two, drop one (reverse O1).
  if (st.supports.size() < st.leaves.size()) {
    for (Vertex s : st.supports) {
      std::vector<Vertex> leaves;
      for (Vertex w : t.neighbors(s)) {
        if (st.leaves.contains(w)) leaves.push_back(w);
      }
      if (leaves.size() >= 2) out.push_back({OpKind::O1, s, {leaves.front()}});
    }
    return out;
  }

  // Every vertex is a leaf or a support: peel a support with one support
  // neighbour together with its leaf (reverse O2).
  if (st.semi_supports.empty()) {
    for (Vertex s : st.supports) {
      auto sup = support_neighbours(t, st, s, s);
      if (sup.size() == 1) out.push_back({OpKind::O2, sup.front(), {s, only_leaf_of(t, st, s)}});
    }
    return out;
  }

  // Semi-supports exist. Take leaves h, h' as far apart as possible such that
  // the path between them meets a semi-support two steps from h.
  std::vector<std::tuple<std::size_t, Vertex, Vertex>> pairs;
  std::map<Vertex, std::vector<std::size_t>> dist;
  for (Vertex a : st.leaves) dist[a] = distances_from(t, a);
  for (Vertex a : st.leaves) {
    for (Vertex b : st.leaves) {
      if (a != b) pairs.emplace_back(dist[a][b], a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::get<0>(x) != std::get<0>(y) ? std::get<0>(x) > std::get<0>(y) : x < y;
  });
  std::vector<Vertex> p;
  for (auto [d, a, b] : pairs) {
    if (d < 3) break;
    auto candidate = path_between(t, a, b);
    if (st.semi_supports.contains(candidate[2])) {
      p = std::move(candidate);
      break;
    }
  }
  if (p.empty()) return out;

  const Vertex h = p[0], s = p[1], v = p[2];
  if (!support_neighbours(t, st, s, s).empty()) {
    chain_reductions(t, st, v, s, h, out);
    return out;
  }

  // s has degree two; look past v along the path.
  const Vertex u1 = p[3];
  if (support_neighbours(t, st, v, s).size() >= 1) {
    out.push_back({OpKind::O2, v, {s, h}});
    return out;
  }
  if (t.degree(u1) == 2 && p.size() > 4) {
    out.push_back({OpKind::O3, p[4], {u1, v, s, h}});
    return out;
  }
  for (Vertex w : t.neighbors(u1)) {
    if (w == v || (p.size() > 4 && w == p[4]) || !st.supports.contains(w)) continue;
    chain_reductions(t, st, u1, w, only_leaf_of(t, st, w), out);
  }
  return out;
}

// Every reverse operation available in t, in a fixed order.
std::vector<Reduction> all_reductions(const Tree& t) {
  std::vector<Reduction> out;
  auto other = [&](Vertex x, Vertex not_this) {
    for (Vertex w : t.neighbors(x)) {
      if (w != not_this) return w;
    }
    return x;
  };
  for (Vertex leaf = 0; leaf < t.order(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    const Vertex a = t.neighbors(leaf)[0];
    out.push_back({OpKind::O1, a, {leaf}});
    if (t.degree(a) == 2) {
      const Vertex b = other(a, leaf);
      out.push_back({OpKind::O2, b, {a, leaf}});
      if (t.degree(b) == 2) {
        const Vertex c = other(b, a);
        if (t.degree(c) == 2) out.push_back({OpKind::O3, other(c, b), {c, b, a, leaf}});
      }
      if (t.degree(b) == 3) {
        for (Vertex h1 : t.neighbors(b)) {
          if (h1 == a || t.degree(h1) != 1) continue;
          for (Vertex x : t.neighbors(b)) {
            if (x != a && x != h1) out.push_back({OpKind::O4, x, {h1, b, a, leaf}});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

bool in_family_T_beta(const Tree& t) {
  require_diameter_three(t);
  return tcoi_number(t).value + independence_number(t).value == t.order();
}

bool in_family_T_L(const Tree& t) {
  require_diameter_three(t);
  return tcoi_number(t).value + structure(t).leaves.size() == t.order();
}

bool structural_TL_check(const Tree& t) {
  require_diameter_three(t);
  const auto st = structure(t);
  for (Vertex v = 0; v < t.order(); ++v) {
    if (!st.leaves.contains(v) && !st.supports.contains(v) && !st.semi_supports.contains(v)) return false;
  }
  for (Vertex v : st.semi_supports) {
    auto nb = t.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return st.isolated_supports.contains(w); })) return false;
  }
  return true;
}

bool strict_structural_TL_check(const Tree& t) {
  require_diameter_three(t);
  const auto st = structure(t);
  for (Vertex v = 0; v < t.order(); ++v) {
    if (!st.leaves.contains(v) && !st.supports.contains(v) && !st.semi_supports.contains(v)) return false;
  }
  auto private_support = [&](Vertex v, Vertex u) {
    if (!st.isolated_supports.contains(u)) return false;
    for (Vertex w : t.neighbors(u)) {
      if (w != v && !st.leaves.contains(w)) return false;
    }
    return true;
  };
  for (Vertex v : st.semi_supports) {
    auto nb = t.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return private_support(v, u); })) return false;
  }
  return true;
}

Decomposition decompose(const Tree& t) {
  require_diameter_three(t);
  Decomposition result;
  if (!tbeta_value(t)) return result;

  std::vector<char> alive(t.order(), 1);
  // Reductions in original labels, outermost first.
  std::vector<Reduction> peeled;
  for (;;) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (alive[v]) keep.push_back(v);
    }
    auto [current, labels] = induced_subtree(t, VertexSet(std::move(keep)));
    if (is_p4(current)) break;
    if (current.order() <= 4) {
      result.stuck = true;
      return result;
    }

    std::optional<Reduction> chosen;
    for (auto& r : proof_reductions(current)) {
      if (is_valid_reduction(current, r)) {
        chosen = std::move(r);
        break;
      }
    }
    if (!chosen) {
      for (auto& r : all_reductions(current)) {
        if (is_valid_reduction(current, r)) {
          chosen = std::move(r);
          ++result.fallback_steps;
          break;
        }
      }
    }
    if (!chosen) {
      result.stuck = true;
      return result;
    }
    chosen->attach = labels[chosen->attach];
    for (auto& x : chosen->removed) {
      x = labels[x];
      alive[x] = 0;
    }
    peeled.push_back(std::move(*chosen));
  }

  // Label the remaining P_4 0-1-2-3 from its smaller-labelled end, then
  // replay the reductions innermost first.
  constexpr auto kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> forward(t.order(), kUnset);
  std::vector<Vertex> base;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (alive[v]) base.push_back(v);
  }
  auto [p4, p4_labels] = induced_subtree(t, VertexSet(base));
  Vertex end = 0;
  while (p4.degree(end) != 1) ++end;
  Vertex prev = end, cur = end;
  for (Vertex i = 0; i < 4; ++i) {
    forward[p4_labels[cur]] = i;
    result.labels.push_back(p4_labels[cur]);
    for (Vertex w : p4.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
  }

  Certificate cert;
  std::size_t order = 4;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    auto step = make_step(it->kind, forward[it->attach], order);
    for (std::size_t i = 0; i < it->removed.size(); ++i) {
      forward[it->removed[i]] = step.new_vertices[i];
      result.labels.push_back(it->removed[i]);
    }
    order += it->removed.size();
    cert.steps.push_back(std::move(step));
  }
  cert.final_code = canonical_code(t);
  result.certificate = std::move(cert);
  return result;
}

std::optional<Certificate> decompose_to_P4(const Tree& t) { return decompose(t).certificate; }

Tree replay(const Certificate& cert, std::vector<Tree>* trace) {
  Tree current = path(4);
  if (trace) trace->push_back(current);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    try {
      current = apply_operation(current, cert.steps[i]);
    } catch (const Error& e) {
      throw InvalidStep(i, e.what());
    }
    if (trace) trace->push_back(current);
  }
  return current;
}

bool verify_certificate(const Certificate& cert, const Tree& target) {
  Tree built = replay(cert);
  auto code = canonical_code(built);
  if (code != canonical_code(target)) throw Mismatch("certificate does not build the target tree");
  if (!cert.final_code.bytes().empty() && cert.final_code != code) {
    throw Mismatch("certificate's recorded canonical code does not match its replay");
  }
  return true;
}

std::set<std::vector<OpKind>> exhaustive_sequence_search(const Tree& t, std::size_t max_len) {
  require_diameter_three(t);
  const auto target = canonical_code(t);
  struct State {
    Tree tree;
    std::set<std::vector<OpKind>> sequences;
  };
  std::map<CanonicalCode, State> level;
  level.emplace(canonical_code(path(4)), State{path(4), {{}}});
  std::set<std::vector<OpKind>> found;

  for (std::size_t len = 0;; ++len) {
    if (auto it = level.find(target); it != level.end()) found.insert(it->second.sequences.begin(), it->second.sequences.end());
    if (len == max_len) break;

    std::map<CanonicalCode, State> next;
    for (const auto& [code, state] : level) {
      const Tree& tree = state.tree;
      for (OpKind kind : {OpKind::O1, OpKind::O2, OpKind::O3, OpKind::O4}) {
        if (tree.order() + added_vertices(kind) > t.order()) continue;
        for (Vertex v = 0; v < tree.order(); ++v) {
          if (!operation_precondition(tree, kind, v)) continue;
          Tree grown = attach_unchecked(tree, kind, v);
          auto grown_code = canonical_code(grown);
          auto [slot, inserted] = next.try_emplace(grown_code, State{grown, {}});
          for (auto seq : state.sequences) {
            seq.push_back(kind);
            slot->second.sequences.insert(std::move(seq));
          }
        }
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return found;
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "base=P4\n";
  for (const auto& step : cert.steps) {
    out << to_string(step.kind) << " attach=" << step.attach << " new=";
    for (std::size_t i = 0; i < step.new_vertices.size(); ++i) out << (i ? "," : "") << step.new_vertices[i];
    out << '\n';
  }
  out << "canon=" << cert.final_code.to_hex() << '\n';
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_base = false, saw_canon = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Certificate {
    throw ParseError("certificate line " + std::to_string(line_no) + ": " + why);
  };
  auto number = [&](std::string_view s) {
    Vertex value = 0;
    if (s.empty()) fail("expected a vertex id");
    for (char c : s) {
      if (c < '0' || c > '9') fail("expected a vertex id");
      value = value * 10 + static_cast<Vertex>(c - '0');
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (saw_canon) fail("content after canon= trailer");
    if (!saw_base) {
      if (line != "base=P4") fail("expected header 'base=P4'");
      saw_base = true;
      continue;
    }
    if (line.starts_with("canon=")) {
      cert.final_code = CanonicalCode::from_hex(std::string_view(line).substr(6));
      saw_canon = true;
      continue;
    }
    std::istringstream fields(line);
    std::string kind, attach, added;
    if (!(fields >> kind >> attach >> added) || !attach.starts_with("attach=") || !added.starts_with("new=")) {
      fail("expected 'O<k> attach=<v> new=<v1,...>'");
    }
    OperationStep step;
    step.kind = parse_op_kind(kind);
    step.attach = number(std::string_view(attach).substr(7));
    std::string_view list = std::string_view(added).substr(4);
    while (!list.empty()) {
      auto comma = list.find(',');
      step.new_vertices.push_back(number(list.substr(0, comma)));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    cert.steps.push_back(std::move(step));
  }
  if (!saw_base) fail("missing header 'base=P4'");
  if (!saw_canon) fail("missing trailer 'canon=<hex>'");
  return cert;
}

}  // namespace tcoi
