#pragma once

// Seeded verification suites. Every case records the inequality's bound,
// the exactly measured value, and the signed margin (positive = holds).

#include <cstdint>
#include <string>
#include <vector>

namespace noisebound::oracle {

struct CaseResult {
  std::uint64_t seed = 0;
  int n = 0;
  int depth = 0;
  double p = 0.0;
  double bound = 0.0;
  double measured = 0.0;
  double margin = 0.0;
};

struct SuiteOptions {
  int n_min = 2;
  int n_max = 6;
  int cases = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  double eps = 0.1;    // mirror
  double gamma = 0.2;  // contraction
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double min_margin = 0.0;
  double tolerance = 0.0;  // passes when min_margin >= -tolerance
  bool passed = false;
};

// lemma1:           D(Phi(rho) || I/2^n) <= (1-p)^{2D} n for random noisy circuits from |0...0>.
// mirror:           per-step entropy drop minus eps^2/4, n = n_max, for rho a Gibbs state of a
//                   perturbed H at beta ||H'|| in [2, 6]; a case that misses the stop condition
//                   within its step limit gets margin -1.
// variational:      tr(Phi(rho) H) minus the variational bound at the exact budget.
// contraction:      layered data-processing check against sigma_gamma^{(x) n}.
// lindblad:         schedule bound minus exact D(rho(T) || sigma), n <= 3.
// detailed-balance: 1e-12 minus the largest relative violation over single-site moves, n <= 4.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

std::string to_json(const SuiteReport& report);

}  // namespace noisebound::oracle
