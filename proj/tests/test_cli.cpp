#include <doctest.h>

#include <filesystem>
#include <limits>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tcoi/canonical.hpp"
#include "tcoi/census.hpp"
#include "tcoi/cli.hpp"
#include "tcoi/generators.hpp"
#include "tcoi/io.hpp"

using namespace tcoi;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("tcoi_cli_" + std::to_string(counter_++))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

// "name value  witness" lines of the text report.
std::map<std::string, std::string> text_values(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream lines(text);
  std::string key, value;
  while (lines >> key >> value) {
    values[key] = value;
    lines.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
  }
  return values;
}

}  // namespace

TEST_CASE("compute") {
  auto r = run({"compute", "-"}, "0 1\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("tcoi     undefined") != std::string::npos);

  r = run({"compute", "-", "--output", "json"}, "0 1\n1 2\n2 3\n");
  CHECK(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["tcoi"] == 2);

  r = run({"compute", "-"}, "Ch\n");
  CHECK(r.code == kExitOk);
  CHECK(text_values(r.out)["n"] == "4");

  r = run({"compute", "-", "--format", "graph6"}, "Cs");
  CHECK(text_values(r.out)["beta"] == "3");
}

TEST_CASE("compute reads files and infers the format from the extension") {
  TempDir dir;
  auto g6 = dir.write("p4.g6", "Ch\n");
  auto el = dir.write("p4.txt", "0 1\n1 2\n2 3\n");
  CHECK(run({"compute", g6}).out == run({"compute", el}).out);
  auto r = run({"compute", dir.write("missing_dir_marker", "") + ".nope"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("errors map to exit status 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"compute", "-"}, "0 1\n2 3\n").code == kExitUsage);
  CHECK(run({"compute", "-"}, "").code == kExitUsage);
  CHECK(run({"compute", "-", "--output", "xml"}, "0 1\n").code == kExitUsage);
  CHECK(run({"generate", "qr", "--r", "1"}).code == kExitUsage);
  CHECK(run({"check", "tbeta", "-"}, "0 1\n0 2\n").code == kExitUsage);  // diameter 2
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("check") {
  auto r = run({"check", "tbeta", "-"}, "0 1\n1 2\n2 3\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "true\n");
  r = run({"check", "tbeta", "-"}, serialize_edge_list(path(6)));
  CHECK(r.code == kExitNegative);
  CHECK(r.out == "false\n");
  CHECK(run({"check", "tl", "-"}, serialize_edge_list(path(6))).code == kExitOk);
  CHECK(run({"check", "structural", "-"}, serialize_edge_list(path(6))).code == kExitOk);
}

TEST_CASE("certify and verify certificates") {
  TempDir dir;
  auto tree = dir.write("ds.txt", serialize_edge_list(double_star(3, 3)));
  auto r = run({"certify", tree});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("base=P4\n", 0) == 0);
  auto cert = dir.write("ds.cert", r.out);

  r = run({"certify", tree, "--verify", cert});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "VALID\n");

  auto other = dir.write("p6.txt", serialize_edge_list(path(6)));
  r = run({"certify", other, "--verify", cert});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.rfind("INVALID", 0) == 0);

  r = run({"certify", other});
  CHECK(r.code == kExitNegative);
  CHECK(r.out == "NOT_MEMBER\n");

  auto bad = dir.write("bad.cert", "base=P4\nO1 attach=0 new=4\ncanon=" + canonical_code(path(5)).to_hex() + "\n");
  r = run({"certify", dir.write("p5.txt", serialize_edge_list(path(5))), "--verify", bad});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("INVALID") == 0);

  auto truncated = dir.write("truncated.cert", "base=P4\nO1 attach=1 new=4\n");
  CHECK(run({"certify", tree, "--verify", truncated}).code == kExitUsage);
}

TEST_CASE("generate") {
  auto r = run({"generate", "qr", "--r", "5"});
  CHECK(r.code == kExitOk);
  auto computed = run({"compute", "-"}, r.out);
  CHECK(computed.code == kExitOk);
  CHECK(text_values(computed.out)["n"] == "13");

  CHECK(run({"generate", "path", "--n", "4", "--output", "graph6"}).out == "Ch\n");
  CHECK(parse_edge_list(run({"generate", "doublestar", "--a", "2", "--b", "3"}).out) == double_star(2, 3));
  CHECK(parse_edge_list(run({"generate", "comb", "--k", "4"}).out) == comb(4));
  CHECK(parse_edge_list(run({"generate", "spider", "--legs", "1,2,3"}).out) == spider({1, 2, 3}));
  CHECK(parse_edge_list(run({"generate", "star", "--n", "6"}).out) == star(6));
  CHECK(run({"generate", "random", "--n", "9", "--seed", "3"}).out ==
        run({"generate", "random", "--n", "9", "--seed", "3"}).out);
  CHECK(parse_edge_list(run({"generate", "random", "--n", "9", "--seed", "3"}).out) == random_tree(9, 3));

  auto f = run({"generate", "familyf", "--base-path", "5", "--u", "0,1"});
  CHECK(f.code == kExitOk);
  CHECK(parse_edge_list(f.out) == family_f({path(5), VertexSet{0, 1}, VertexSet{2, 3, 4}}));
  CHECK(run({"generate", "familyf", "--u", "0"}).code == kExitUsage);
  CHECK(run({"generate", "spider", "--legs", "1,x"}).code == kExitUsage);
}

TEST_CASE("JSON and text reports agree on random trees") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::string tree = serialize_edge_list(random_tree(2 + seed % 30, seed));
    auto text = run({"compute", "-"}, tree);
    auto json = run({"compute", "-", "--output", "json"}, tree);
    REQUIRE(text.code == kExitOk);
    REQUIRE(json.code == kExitOk);
    auto doc = nlohmann::json::parse(json.out);
    auto values = text_values(text.out);
    CHECK(values["n"] == doc["n"].dump());
    CHECK(values["beta"] == doc["beta"].dump());
    for (const char* key : {"gamma_t", "tcoi"}) {
      CHECK(values[key] == (doc[key].is_null() ? "undefined" : doc[key].dump()));
    }
  }
}

TEST_CASE("census writes CSV and a report") {
  TempDir dir;
  auto csv = dir.write("census.csv", "");
  auto report = dir.write("report.json", "");
  auto r = run({"census", "--max-n", "7", "--out", csv, "--report", report, "--threads", "2"});
  CHECK(r.code == kExitOk);
  std::ifstream file(csv);
  std::string header;
  std::getline(file, header);
  CHECK(header == kCensusCsvHeader);
  std::size_t rows = 0;
  for (std::string line; std::getline(file, line);) ++rows;
  CHECK(rows == 1 + 2 + 3 + 6 + 11);
  std::ifstream report_file(report);
  auto doc = nlohmann::json::parse(report_file);
  CHECK(doc["all_hold"] == true);
  CHECK(doc["trees"] == rows);

  r = run({"census", "--max-n", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind(kCensusCsvHeader, 0) == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("all theorems hold", 0) == 0);

  r = run({"verify", "--max-n", "8", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"all_hold\": true") != std::string::npos);

  // From n = 9 on, the structural T_L test accepts trees outside T_L.
  r = run({"verify", "--max-n", "12"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.rfind("violation: teo_upper", 0) == 0);

  CHECK(run({"verify", "--max-n", "30"}).code == kExitUsage);
}
