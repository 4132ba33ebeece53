#pragma once

#include <string>
#include <vector>

namespace spinsq {

// Propagator convention used by the selfcheck amplitude-lock suite.  `naive`
// swaps in squeeze_propagator_naive and exists to prove the suite can fail.
enum class Convention { locked, naive };

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the oracle suites: two-atom amplitude lock, closed-form variance
// agreement, Lambda identities, eigen-vs-expm equivalence, propagator
// unitarity.  max_j bounds the largest 2j exercised (two_j = 2*max_j).
std::vector<SuiteResult> run_selfcheck(int max_j, Convention conv = Convention::locked);

}  // namespace spinsq
