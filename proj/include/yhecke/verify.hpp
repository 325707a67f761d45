#ifndef YHECKE_VERIFY_HPP
#define YHECKE_VERIFY_HPP

// Self-checks run by `yhecke verify`. Each suite returns one result per check
// id; a failed check carries a counterexample description.

#include <string>
#include <vector>

namespace yhecke {

struct CheckResult {
  std::string id;
  bool ok = true;
  std::string counterexample;
};

struct VerifyLimits {
  int max_d = 4;
  int max_n = 5;
  long long max_basis = 30000;  // d^n * n!
};

/// Throws std::invalid_argument for an unknown suite or (d, n) outside the limits.
std::vector<CheckResult> run_suite(const std::string& suite, int d, int n, unsigned seed = 1,
                                   const VerifyLimits& limits = {});

const std::vector<std::string>& suite_names();

}  // namespace yhecke

#endif  // YHECKE_VERIFY_HPP
