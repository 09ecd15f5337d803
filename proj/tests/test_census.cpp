#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "tcoi/canonical.hpp"
#include "tcoi/census.hpp"
#include "tcoi/errors.hpp"
#include "tcoi/generators.hpp"
#include "tcoi/io.hpp"

using namespace tcoi;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(4).size() == 2);
  CHECK(enumerate_trees(7).size() == 11);
  for (std::size_t n = 1; n <= 14; ++n) CHECK(enumerate_trees(n).size() == known_free_tree_count(n));
  CHECK(is_isomorphic(enumerate_trees(5).back(), star(5)));
  CHECK_THROWS_AS(enumerate_trees(0), BadParameter);
  CHECK_THROWS_AS(enumerate_trees(19), TooLarge);
  CHECK_THROWS_AS(enumerate_trees(10, 9), TooLarge);
}

TEST_CASE("classification records") {
  auto p4 = classify(path(4));
  CHECK(p4.in_T_beta == true);
  CHECK(p4.in_T_L == true);
  CHECK(p4.certificate_found == true);
  CHECK(p4.structural_TL == true);

  auto p6 = classify(path(6));
  CHECK(p6.in_T_beta == false);
  CHECK(p6.in_T_L == true);
  CHECK(p6.certificate_found == false);

  auto s6 = classify(star(6));
  CHECK(s6.tcoi == 2);
  CHECK(s6.diameter == 2);
  CHECK_FALSE(s6.in_T_beta.has_value());
  CHECK_FALSE(s6.in_T_L.has_value());
  CHECK_FALSE(s6.structural_TL.has_value());
  CHECK_FALSE(s6.certificate_found.has_value());

  auto p2 = classify(path(2));
  CHECK_FALSE(p2.tcoi.has_value());
  CHECK(p2.gamma_t == 2);
}

TEST_CASE("census up to n = 8 reports no violations") {
  CensusOptions opts;
  opts.max_n = 8;
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  auto result = run_census(opts, [&](std::size_t n, std::size_t count) { seen.emplace_back(n, count); });
  CHECK(result.report.all_hold());
  CHECK(result.report.trees == 1 + 2 + 3 + 6 + 11 + 23);
  CHECK(result.records.size() == result.report.trees);
  CHECK(result.report.decomposition_fallbacks == 0);
  CHECK_FALSE(result.report.first_counterexample.has_value());
  CHECK(seen.front() == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(seen.back() == std::pair<std::size_t, std::size_t>{8, 23});
  for (const auto& r : result.records) {
    if (r.diameter < 3) continue;
    CHECK(r.in_T_beta == r.certificate_found);
    CHECK(r.n - r.beta <= *r.tcoi);
    CHECK(*r.tcoi <= r.n - r.num_leaves);
  }
}

TEST_CASE("census of tiny orders has empty family columns") {
  CensusOptions opts;
  opts.min_n = 1;
  opts.max_n = 2;
  auto result = run_census(opts);
  CHECK(result.records.size() == 2);
  CHECK(result.report.all_hold());
  std::ostringstream csv;
  write_csv(csv, result.records);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == kCensusCsvHeader);
  while (std::getline(lines, line)) CHECK(line.ends_with(",,,,"));
}

TEST_CASE("census CSV is deterministic across thread counts") {
  CensusOptions one;
  one.max_n = 10;
  one.threads = 1;
  CensusOptions many = one;
  many.threads = 8;
  std::ostringstream a, b;
  write_csv(a, run_census(one).records);
  write_csv(b, run_census(many).records);
  CHECK(a.str() == b.str());
}

TEST_CASE("census up to n = 12 finds the structural T_L gap") {
  CensusOptions opts;
  opts.max_n = 12;
  auto result = run_census(opts);
  const auto& rep = result.report;
  CHECK(rep.trees == 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551);
  CHECK(rep.theorem1_violations == 0);
  CHECK(rep.teo_lower_mismatches == 0);
  CHECK(rep.oracle_mismatches == 0);
  CHECK(rep.dist_b_violations == 0);
  CHECK(rep.minimality_mismatches == 0);
  CHECK(rep.decomposition_fallbacks == 0);
  CHECK(rep.teo_upper_mismatches == 1 + 5 + 16 + 47);
  CHECK_FALSE(rep.all_hold());
  REQUIRE(rep.first_counterexample.has_value());
  CHECK(rep.first_counterexample->check == "teo_upper");
  Tree first = parse_graph6(rep.first_counterexample->graph6);
  CHECK(first.order() == 9);

  auto doc = nlohmann::json::parse(to_json(rep));
  CHECK(doc["teo_upper_mismatches"] == 69);
  CHECK(doc["all_hold"] == false);
  CHECK(doc["first_counterexample"]["check"] == "teo_upper");
}

TEST_CASE("individual checks") {
  CHECK_FALSE(check_dist_b(path(2)).has_value());
  CHECK_FALSE(check_dist_b(path(7)).has_value());
  CHECK_FALSE(check_theorem1(star(5)).has_value());
  CHECK_FALSE(check_oracle(Tree()).has_value());
  CHECK_FALSE(check_minimality(path(2)).has_value());
  CHECK_FALSE(check_characterization_lower(path(6)).has_value());
  CHECK_FALSE(check_characterization_upper(path(6)).has_value());
}

TEST_CASE("report JSON without a counterexample") {
  VerificationReport rep;
  rep.trees = 3;
  auto doc = nlohmann::json::parse(to_json(rep));
  CHECK(doc["trees"] == 3);
  CHECK(doc["all_hold"] == true);
  CHECK(doc["first_counterexample"].is_null());
}

TEST_CASE("census rejects orders above the cap") {
  CensusOptions opts;
  opts.max_n = 19;
  CHECK_THROWS_AS(run_census(opts), TooLarge);
}
