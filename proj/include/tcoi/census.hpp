#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tcoi/canonical.hpp"
#include "tcoi/tree.hpp"

namespace tcoi {

inline constexpr std::size_t kDefaultCensusCap = 18;

/// One representative per isomorphism class of trees on n vertices, in the
/// order their centre-rooted level sequences are generated (star last).
/// Throws TooLarge above `cap`, BadParameter for n = 0.
std::vector<Tree> enumerate_trees(std::size_t n, std::size_t cap = kDefaultCensusCap);

/// Number of free trees on n vertices for n <= 18 (OEIS A000055).
std::size_t known_free_tree_count(std::size_t n);

struct CensusRecord {
  CanonicalCode canon;
  std::size_t n = 0;
  std::size_t diameter = 0;
  std::size_t num_leaves = 0;
  std::size_t beta = 0;
  std::optional<std::size_t> gamma_t;
  std::optional<std::size_t> tcoi;
  // Present only for diam >= 3.
  std::optional<bool> in_T_beta;
  std::optional<bool> in_T_L;
  std::optional<bool> structural_TL;
  std::optional<bool> certificate_found;
};

CensusRecord classify(const Tree& t);

/// Which exhaustive checks run, and up to which order.
struct CensusOptions {
  std::size_t max_n = 14;
  std::size_t min_n = 3;
  std::size_t oracle_max_n = 14;
  std::size_t dist_b_max_n = 12;
  std::size_t minimality_max_n = 10;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct Counterexample {
  std::string check;
  std::string graph6;
  std::string detail;
};

struct VerificationReport {
  std::size_t trees = 0;
  std::size_t theorem1_violations = 0;
  std::size_t teo_lower_mismatches = 0;
  std::size_t teo_upper_mismatches = 0;
  std::size_t dist_b_violations = 0;
  std::size_t minimality_mismatches = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t decomposition_fallbacks = 0;
  std::optional<Counterexample> first_counterexample;

  bool all_hold() const {
    return theorem1_violations == 0 && teo_lower_mismatches == 0 && teo_upper_mismatches == 0 &&
           dist_b_violations == 0 && minimality_mismatches == 0 && oracle_mismatches == 0;
  }
};

struct CensusResult {
  std::vector<CensusRecord> records;
  VerificationReport report;
};

/// Classifies every tree with min_n <= n <= max_n and runs all checks.
/// `progress`, when set, is called once per finished order.
CensusResult run_census(const CensusOptions& options,
                        const std::function<void(std::size_t n, std::size_t count)>& progress = {});

inline constexpr const char* kCensusCsvHeader = "canon,n,diam,leaves,beta,gamma_t,tcoi,t_beta,t_l,structural_tl,certified";

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records);
std::string to_json(const VerificationReport& report, int indent = 2);

// Individual checks, exposed for tests. Each returns a description of the
// first failure, or nullopt.
std::optional<std::string> check_theorem1(const Tree& t);
std::optional<std::string> check_oracle(const Tree& t);
std::optional<std::string> check_characterization_lower(const Tree& t, std::size_t* fallbacks = nullptr);
std::optional<std::string> check_characterization_upper(const Tree& t);
std::optional<std::string> check_dist_b(const Tree& t);
std::optional<std::string> check_minimality(const Tree& t);

}  // namespace tcoi
