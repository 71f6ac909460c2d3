// Acceptance suite: one line per criterion, itemized detail for failures.
// Exit code 0 when every requested criterion passes.

#include "ogspec/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  ogspec::VerifyOptions opt;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--criterion") && k + 1 < argc) {
      opt.only_criterion = std::atoi(argv[++k]);
    } else if (!std::strcmp(argv[k], "--oracle-depth") && k + 1 < argc) {
      opt.oracle_depth = std::atoi(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--oracle-depth D]\n";
      return 1;
    }
  }
  ogspec::OrbitGraph b7 = ogspec::find_b7();
  bool all = true;
  for (const ogspec::CriterionResult& c : ogspec::run_verification(b7, opt)) {
    bool pass = c.pass();
    all = all && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
              << c.title << "\n";
    for (const ogspec::CheckItem& it : c.items) {
      if (pass) continue;
      std::cout << "    " << (it.pass ? "[ok]  " : "[FAIL]") << " " << it.id;
      if (!it.detail.empty()) std::cout << "  (" << it.detail << ")";
      std::cout << "\n";
    }
  }
  return all ? 0 : 2;
}
