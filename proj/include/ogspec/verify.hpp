#pragma once

#include "ogspec/orbit.hpp"

#include <string>
#include <vector>

namespace ogspec {

struct CheckItem {
  std::string id;
  bool pass;
  std::string detail;
};

struct CriterionResult {
  int number;
  std::string title;
  std::vector<CheckItem> items;
  bool pass() const;
};

struct VerifyOptions {
  int oracle_depth = 40;
  unsigned seed = 0x5eed0901;
  int only_criterion = 0;  // 0 = all
};

// The full verification suite over the reference constants and structure
// results. Deterministic for a fixed seed. The b7 graph must come from
// find_b7().
std::vector<CriterionResult> run_verification(const OrbitGraph& b7,
                                              const VerifyOptions& opt = {});

}  // namespace ogspec
