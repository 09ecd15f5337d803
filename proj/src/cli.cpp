#include "tcoi/cli.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "tcoi/census.hpp"
#include "tcoi/characterize.hpp"
#include "tcoi/generators.hpp"
#include "tcoi/io.hpp"
#include "tcoi/solvers.hpp"

namespace tcoi {
namespace {

// Raised for results that contradict a proven statement (exit status 3).
class InternalViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  std::string path;
  std::string format = "auto";
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IOError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

bool looks_like_graph6(const std::string& path, const std::string& text) {
  if (path.ends_with(".g6") || path.ends_with(".graph6")) return true;
  if (path != "-") return false;
  // Standard input: a single token with no spaces on its first data line.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1).find_first_of(" \t") == std::string::npos;
  }
  return false;
}

Tree load_tree(const InputSpec& spec, std::istream& in) {
  const std::string text = read_all(spec.path, in);
  bool graph6 = spec.format == "graph6" || (spec.format == "auto" && looks_like_graph6(spec.path, text));
  return graph6 ? parse_graph6(text) : parse_edge_list(text);
}

void emit_tree(std::ostream& out, const Tree& t, const std::string& format) {
  if (format == "graph6") {
    out << serialize_graph6(t) << '\n';
  } else {
    out << serialize_edge_list(t);
  }
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw BadParameter("expected a comma-separated list of non-negative integers, got '" + text + "'");
    }
  }
  return values;
}

void add_input(CLI::App* cmd, InputSpec& spec) {
  cmd->add_option("input", spec.path, "Tree file, or - for standard input")->required();
  cmd->add_option("--format", spec.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total co-independent domination on trees"};
  app.require_subcommand(1);

  // compute
  InputSpec compute_in;
  std::string compute_output = "text";
  auto* compute = app.add_subcommand("compute", "Print beta, gamma_t and gamma_t,coi with witnesses");
  add_input(compute, compute_in);
  compute->add_option("--output", compute_output)->check(CLI::IsMember({"text", "json"}));

  // check
  InputSpec check_in;
  std::string check_family;
  auto* check = app.add_subcommand("check", "Test membership in T_beta, T_L, or the structural T_L condition");
  check->add_option("family", check_family)->required()->check(CLI::IsMember({"tbeta", "tl", "structural"}));
  add_input(check, check_in);

  // certify
  InputSpec certify_in;
  std::string certify_verify;
  auto* certify = app.add_subcommand("certify", "Build a P4 operation certificate, or report NOT_MEMBER");
  add_input(certify, certify_in);
  certify->add_option("--verify", certify_verify, "Instead of building, verify this certificate file against the tree");

  // generate
  std::string gen_kind, gen_output = "edgelist", gen_base, gen_u, gen_legs;
  std::size_t gen_n = 4, gen_a = 1, gen_b = 1, gen_k = 3, gen_r = 2, gen_base_n = 0;
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "Emit a named tree");
  generate->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"path", "star", "doublestar", "comb", "spider", "qr", "familyf", "random"}));
  generate->add_option("--n", gen_n, "Order for path, star, random");
  generate->add_option("--a", gen_a, "Leaves on the first double-star centre");
  generate->add_option("--b", gen_b, "Leaves on the second double-star centre");
  generate->add_option("--k", gen_k, "Comb spine length");
  generate->add_option("--r", gen_r, "Q_r parameter");
  generate->add_option("--legs", gen_legs, "Spider leg lengths, comma separated");
  generate->add_option("--base", gen_base, "familyf: base tree file (edge list or graph6)");
  generate->add_option("--base-path", gen_base_n, "familyf: use the path on this many vertices as base");
  generate->add_option("--u", gen_u, "familyf: comma-separated u vertices; the rest are v vertices");
  generate->add_option("--seed", gen_seed, "random: seed");
  generate->add_option("--output", gen_output)->check(CLI::IsMember({"edgelist", "graph6"}));

  // census / verify
  CensusOptions census_opts;
  std::string census_out = "-", census_report;
  auto* census = app.add_subcommand("census", "Classify all trees up to an order and write CSV");
  census->add_option("--max-n", census_opts.max_n)->required();
  census->add_option("--min-n", census_opts.min_n);
  census->add_option("--out", census_out, "CSV destination, - for standard output");
  census->add_option("--report", census_report, "Also write the JSON verification report here");
  census->add_option("--threads", census_opts.threads);
  census->add_option("--oracle-max-n", census_opts.oracle_max_n);

  CensusOptions verify_opts;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Check every theorem on all trees up to an order");
  verify->add_option("--max-n", verify_opts.max_n)->required();
  verify->add_option("--threads", verify_opts.threads);
  verify->add_option("--oracle-max-n", verify_opts.oracle_max_n);
  verify->add_flag("--json", verify_json, "Print the full JSON report");

  std::vector<std::string> argv_store{"tcoi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      auto report = compute_invariants(load_tree(compute_in, in));
      out << (compute_output == "json" ? to_json(report) + "\n" : to_text(report));
      return kExitOk;
    }
    if (check->parsed()) {
      Tree t = load_tree(check_in, in);
      bool result = check_family == "tbeta" ? in_family_T_beta(t)
                    : check_family == "tl"  ? in_family_T_L(t)
                                            : structural_TL_check(t);
      out << (result ? "true" : "false") << '\n';
      return result ? kExitOk : kExitNegative;
    }
    if (certify->parsed()) {
      Tree t = load_tree(certify_in, in);
      if (!certify_verify.empty()) {
        auto cert = parse_certificate(read_all(certify_verify, in));
        try {
          verify_certificate(cert, t);
        } catch (const InvalidStep& e) {
          out << "INVALID " << e.what() << '\n';
          return kExitNegative;
        } catch (const Mismatch& e) {
          out << "INVALID " << e.what() << '\n';
          return kExitNegative;
        }
        out << "VALID\n";
        return kExitOk;
      }
      auto dec = decompose(t);
      if (dec.stuck) throw InternalViolation("tree is in T_beta but no reduction applies");
      if (!dec.certificate) {
        out << "NOT_MEMBER\n";
        return kExitNegative;
      }
      out << serialize_certificate(*dec.certificate);
      return kExitOk;
    }
    if (generate->parsed()) {
      Tree t;
      if (gen_kind == "path") t = path(gen_n);
      else if (gen_kind == "star") t = star(gen_n);
      else if (gen_kind == "doublestar") t = double_star(gen_a, gen_b);
      else if (gen_kind == "comb") t = comb(gen_k);
      else if (gen_kind == "spider") t = spider(parse_list(gen_legs));
      else if (gen_kind == "qr") t = q_tree(gen_r);
      else if (gen_kind == "random") t = random_tree(gen_n, gen_seed);
      else {
        FamilyFSpec spec;
        if (!gen_base.empty()) spec.base = load_tree({gen_base, "auto"}, in);
        else if (gen_base_n > 0) spec.base = path(gen_base_n);
        else throw BadParameter("familyf needs --base FILE or --base-path N");
        std::vector<Vertex> u, v;
        for (auto x : parse_list(gen_u)) u.push_back(static_cast<Vertex>(x));
        spec.u_vertices = VertexSet(u);
        for (Vertex x = 0; x < spec.base.order(); ++x) {
          if (!spec.u_vertices.contains(x)) v.push_back(x);
        }
        spec.v_vertices = VertexSet(v);
        if (spec.u_vertices.size() != u.size()) throw BadParameter("repeated u vertex");
        t = family_f(spec);
      }
      emit_tree(out, t, gen_output);
      return kExitOk;
    }
    if (census->parsed()) {
      auto result = run_census(census_opts);
      if (census_out == "-") {
        write_csv(out, result.records);
      } else {
        std::ofstream file(census_out, std::ios::binary);
        if (!file) throw IOError("cannot write '" + census_out + "'");
        write_csv(file, result.records);
      }
      if (!census_report.empty()) {
        std::ofstream file(census_report, std::ios::binary);
        if (!file) throw IOError("cannot write '" + census_report + "'");
        file << to_json(result.report) << '\n';
      }
      err << "census: " << result.records.size() << " trees, "
          << (result.report.all_hold() ? "all theorems hold" : "VIOLATIONS FOUND") << '\n';
      return result.report.all_hold() ? kExitOk : kExitNegative;
    }
    if (verify->parsed()) {
      auto result = run_census(verify_opts);
      if (verify_json) out << to_json(result.report) << '\n';
      if (result.report.all_hold()) {
        out << "all theorems hold (" << result.report.trees << " trees, n <= " << verify_opts.max_n << ")\n";
        return kExitOk;
      }
      const auto& c = *result.report.first_counterexample;
      out << "violation: " << c.check << " on " << c.graph6 << ": " << c.detail << '\n';
      return kExitNegative;
    }
  } catch (const InternalViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tcoi
