#include "tcoi/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

#include <json.hpp>

#include "tcoi/brute_force.hpp"
#include "tcoi/characterize.hpp"
#include "tcoi/io.hpp"
#include "tcoi/solvers.hpp"

namespace tcoi {
namespace {

// Level sequence -> tree; the parent of position i is the last earlier
// position one level up.
Tree tree_from_levels(const std::vector<std::size_t>& level) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at(level.size() + 1, 0);
  for (Vertex i = 1; i < level.size(); ++i) {
    edges.emplace_back(last_at[level[i] - 1], i);
    last_at[level[i]] = i;
  }
  return Tree(level.size(), edges);
}

// Keep a rooted tree only when its root is the centre that yields the
// canonical rooting, so each free tree survives exactly once.
bool is_canonical_rooting(const std::vector<std::size_t>& level) {
  const std::size_t n = level.size();
  if (n <= 2) return true;
  std::size_t deepest = 0, second = 0;
  std::size_t deepest_start = 0;
  for (std::size_t i = 1; i < n;) {
    std::size_t start = i, depth = level[i];
    for (++i; i < n && level[i] > 1; ++i) depth = std::max(depth, level[i]);
    if (depth > deepest) {
      second = deepest;
      deepest = depth;
      deepest_start = start;
    } else {
      second = std::max(second, depth);
    }
  }
  if (deepest == second) return true;
  if (deepest != second + 1) return false;
  // Bicentral: the other centre is the root's child in the deepest branch.
  Tree t = tree_from_levels(level);
  return rooted_code(t, 0) <= rooted_code(t, static_cast<Vertex>(deepest_start));
}

std::string set_text(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : VertexSet::from_mask(mask)) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

struct Evaluation {
  CensusRecord record;
  std::size_t fallbacks = 0;
  // Indexed like the report counters.
  std::array<std::optional<std::string>, 6> failures;
};

enum Check { kTheorem1, kLower, kUpper, kDistB, kMinimality, kOracle };
constexpr std::array<const char*, 6> kCheckNames = {"theorem1", "teo_lower", "teo_upper",
                                                    "dist_b",   "minimality", "oracle"};

CensusRecord base_record(const Tree& t) {
  CensusRecord rec;
  const auto st = structure(t);
  rec.canon = canonical_code(t);
  rec.n = t.order();
  rec.diameter = st.diameter;
  rec.num_leaves = st.leaves.size();
  rec.beta = *constrained_optimum(t, Invariant::beta);
  rec.gamma_t = constrained_optimum(t, Invariant::gamma_t);
  rec.tcoi = constrained_optimum(t, Invariant::tcoi);
  if (rec.diameter >= 3) {
    rec.in_T_beta = *rec.tcoi + rec.beta == rec.n;
    rec.in_T_L = *rec.tcoi + rec.num_leaves == rec.n;
    rec.structural_TL = structural_TL_check(t);
  }
  return rec;
}

// Decomposes and, on success, checks the certificate end to end: replay
// under precondition checks, exact relabelled reconstruction, and T_beta
// membership of every intermediate tree.
std::optional<std::string> lower_check(const Tree& t, bool member, bool& certified, std::size_t& fallbacks) {
  auto dec = decompose(t);
  fallbacks = dec.fallback_steps;
  certified = false;
  if (!dec.certificate) {
    if (member) return dec.stuck ? "decomposition got stuck on a T_beta member" : "no certificate for a T_beta member";
    return std::nullopt;
  }
  if (!member) return "certificate produced for a non-member";
  try {
    verify_certificate(*dec.certificate, t);
  } catch (const Error& e) {
    return std::string("certificate failed verification: ") + e.what();
  }
  std::vector<Tree> trace;
  Tree built = replay(*dec.certificate, &trace);
  if (relabel(built, dec.labels) != t) {
    return "certificate replay differs from the tree under its labelling";
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!in_family_T_beta(trace[i])) return "intermediate tree " + std::to_string(i) + " is not in T_beta";
  }
  certified = true;
  return std::nullopt;
}

Evaluation evaluate(const Tree& t, const CensusOptions& options) {
  Evaluation ev;
  ev.record = base_record(t);
  const auto n = t.order();
  ev.failures[kTheorem1] = check_theorem1(t);
  if (ev.record.diameter >= 3) {
    bool certified = false;
    ev.failures[kLower] = lower_check(t, *ev.record.in_T_beta, certified, ev.fallbacks);
    ev.record.certificate_found = certified;
    ev.failures[kUpper] = check_characterization_upper(t);
  }
  if (n <= options.dist_b_max_n) ev.failures[kDistB] = check_dist_b(t);
  if (n <= options.minimality_max_n) ev.failures[kMinimality] = check_minimality(t);
  if (n <= options.oracle_max_n) ev.failures[kOracle] = check_oracle(t);
  return ev;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t cap) {
  if (n == 0) throw BadParameter("trees need at least one vertex");
  if (n > cap) throw TooLarge("enumeration capped at " + std::to_string(cap) + " vertices");
  std::vector<Tree> out;
  std::vector<std::size_t> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = i;
  for (;;) {
    if (is_canonical_rooting(level)) out.push_back(tree_from_levels(level));
    // Successor in the Beyer-Hedetniemi order.
    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - p + q];
  }
  return out;
}

std::size_t known_free_tree_count(std::size_t n) {
  static constexpr std::array<std::size_t, 19> kCounts = {1,  1,   1,   1,   2,    3,    6,    11,    23,    47,
                                                          106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867};
  if (n >= kCounts.size()) throw TooLarge("free tree counts tabulated up to n = 18");
  return kCounts[n];
}

CensusRecord classify(const Tree& t) {
  auto rec = base_record(t);
  if (rec.diameter >= 3) rec.certificate_found = decompose_to_P4(t).has_value();
  return rec;
}

std::optional<std::string> check_theorem1(const Tree& t) {
  if (diameter(t) < 3) return std::nullopt;
  const std::size_t n = t.order();
  const std::size_t beta = *constrained_optimum(t, Invariant::beta);
  const std::size_t tcoi = *constrained_optimum(t, Invariant::tcoi);
  const std::size_t leaves = structure(t).leaves.size();
  if (n - beta <= tcoi && tcoi <= n - leaves) return std::nullopt;
  return "n - beta = " + std::to_string(n - beta) + ", tcoi = " + std::to_string(tcoi) +
         ", n - |L| = " + std::to_string(n - leaves);
}

std::optional<std::string> check_oracle(const Tree& t) {
  for (Invariant which : {Invariant::beta, Invariant::gamma_t, Invariant::tcoi}) {
    std::optional<Solution> dp, brute;
    try {
      dp = solve(t, which);
    } catch (const Undefined&) {
    }
    try {
      brute = brute_force(t, which);
    } catch (const Undefined&) {
    }
    if (dp.has_value() != brute.has_value()) return to_string(which) + ": definedness differs between DP and brute force";
    if (!dp) continue;
    if (dp->value != brute->value) {
      return to_string(which) + ": DP " + std::to_string(dp->value) + " vs brute force " + std::to_string(brute->value);
    }
    bool witness_ok = dp->witness.size() == dp->value;
    switch (which) {
      case Invariant::beta: witness_ok = witness_ok && is_independent(t, dp->witness); break;
      case Invariant::gamma_t: witness_ok = witness_ok && is_total_dominating(t, dp->witness); break;
      case Invariant::tcoi: witness_ok = witness_ok && is_tcoi_set(t, dp->witness); break;
    }
    if (!witness_ok) return to_string(which) + ": DP witness fails the defining predicate";
  }
  return std::nullopt;
}

std::optional<std::string> check_characterization_lower(const Tree& t, std::size_t* fallbacks) {
  if (diameter(t) < 3) return std::nullopt;
  bool certified = false;
  std::size_t used = 0;
  auto failure = lower_check(t, in_family_T_beta(t), certified, used);
  if (fallbacks) *fallbacks = used;
  return failure;
}

std::optional<std::string> check_characterization_upper(const Tree& t) {
  if (diameter(t) < 3) return std::nullopt;
  const bool member = in_family_T_L(t);
  if (structural_TL_check(t) != member) {
    return std::string("structural check says ") + (member ? "no" : "yes") + " but tcoi says " + (member ? "yes" : "no");
  }
  if (member) {
    const auto st = structure(t);
    auto touches_isolated = [&](Vertex v) {
      auto nb = t.neighbors(v);
      return std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return st.isolated_supports.contains(w); });
    };
    if (!st.isolated_supports.empty() && !std::all_of(st.semi_supports.begin(), st.semi_supports.end(), touches_isolated)) {
      return "T_L member with S* nonempty has a semi-support outside N(S*)";
    }
    if (st.isolated_supports.empty() && st.leaves.size() + st.supports.size() != t.order()) {
      return "T_L member with S* empty has a vertex outside L u S";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_dist_b(const Tree& t) {
  // A lone maximum independent vertex (n <= 2) has no partner to be near.
  if (t.order() < 3) return std::nullopt;
  const std::size_t n = t.order();
  std::vector<std::uint64_t> near(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto dist = distances_from(t, v);
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && dist[u] <= 3) near[v] |= std::uint64_t{1} << u;
    }
  }
  for (std::uint64_t b : all_optimal_sets(t, Invariant::beta)) {
    for (Vertex v : VertexSet::from_mask(b)) {
      if ((near[v] & b) == 0) return "vertex " + std::to_string(v) + " of beta-set " + set_text(b) + " is isolated";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_minimality(const Tree& t) {
  if (t.order() < 3) return std::nullopt;
  std::optional<std::string> failure;
  for_each_feasible_set(MaskGraph::from_tree(t), Invariant::tcoi, [&](std::uint64_t d) {
    if (failure) return;
    auto set = VertexSet::from_mask(d);
    if (is_minimal_tcoi_set(t, set) != is_minimal_tcoi_set_by_removal(t, set)) {
      failure = "minimality conditions disagree with removal on " + set_text(d);
    }
  });
  return failure;
}

CensusResult run_census(const CensusOptions& options,
                        const std::function<void(std::size_t, std::size_t)>& progress) {
  if (options.max_n > kDefaultCensusCap) throw TooLarge("census capped at " + std::to_string(kDefaultCensusCap));
  CensusResult result;
  auto& report = result.report;
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  for (std::size_t n = std::max<std::size_t>(options.min_n, 1); n <= options.max_n; ++n) {
    auto trees = enumerate_trees(n);
    std::vector<Evaluation> evals(trees.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < trees.size(); i = next++) evals[i] = evaluate(trees[i], options);
    };
    {
      std::vector<std::jthread> pool;
      for (std::size_t k = 1; k < std::min(threads, trees.size()); ++k) pool.emplace_back(worker);
      worker();
    }

    for (std::size_t i = 0; i < trees.size(); ++i) {
      auto& ev = evals[i];
      std::array<std::size_t*, 6> counters = {&report.theorem1_violations, &report.teo_lower_mismatches,
                                              &report.teo_upper_mismatches, &report.dist_b_violations,
                                              &report.minimality_mismatches, &report.oracle_mismatches};
      for (std::size_t c = 0; c < counters.size(); ++c) {
        if (!ev.failures[c]) continue;
        ++*counters[c];
        if (!report.first_counterexample) {
          report.first_counterexample = Counterexample{kCheckNames[c], serialize_graph6(trees[i]), *ev.failures[c]};
        }
      }
      report.decomposition_fallbacks += ev.fallbacks;
      result.records.push_back(std::move(ev.record));
    }
    report.trees += trees.size();
    if (progress) progress(n, trees.size());
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  auto opt = [](const auto& v) -> std::string {
    if (!v) return "";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, bool>) {
      return *v ? "1" : "0";
    } else {
      return std::to_string(*v);
    }
  };
  out << kCensusCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.canon.to_hex() << ',' << r.n << ',' << r.diameter << ',' << r.num_leaves << ',' << r.beta << ','
        << opt(r.gamma_t) << ',' << opt(r.tcoi) << ',' << opt(r.in_T_beta) << ',' << opt(r.in_T_L) << ','
        << opt(r.structural_TL) << ',' << opt(r.certificate_found) << '\n';
  }
}

std::string to_json(const VerificationReport& report, int indent) {
  using nlohmann::json;
  json doc = {
      {"trees", report.trees},
      {"theorem1_violations", report.theorem1_violations},
      {"teo_lower_mismatches", report.teo_lower_mismatches},
      {"teo_upper_mismatches", report.teo_upper_mismatches},
      {"dist_b_violations", report.dist_b_violations},
      {"minimality_mismatches", report.minimality_mismatches},
      {"oracle_mismatches", report.oracle_mismatches},
      {"decomposition_fallbacks", report.decomposition_fallbacks},
      {"all_hold", report.all_hold()},
  };
  if (report.first_counterexample) {
    const auto& c = *report.first_counterexample;
    doc["first_counterexample"] = {{"check", c.check}, {"graph6", c.graph6}, {"detail", c.detail}};
  } else {
    doc["first_counterexample"] = nullptr;
  }
  return doc.dump(indent);
}

}  // namespace tcoi
