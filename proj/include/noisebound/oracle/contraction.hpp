#pragma once

#include <vector>

#include "noisebound/oracle/circuit.hpp"
#include "noisebound/oracle/density.hpp"

namespace noisebound::oracle {

struct ContractionLayer {
  double bound = 0.0;       // bits
  double measured = 0.0;    // D(rho_t || sigma), bits
  double correction = 0.0;  // D_inf(U_t sigma U_t^dag || sigma), bits
};

struct ContractionReport {
  std::vector<ContractionLayer> layers;
  double alpha = 0.0;
  double min_margin = 0.0;  // min over layers of bound - measured
};

// Layer-by-layer check of
//   D(rho_t || sigma) <= (1 - alpha) (bound_{t-1} + D_inf(U_t sigma U_t^dag || sigma)),
// starting from bound_0 = D(rho_0 || sigma). The noise after each unitary
// layer is local depolarizing (alpha = 1 - (1-p)^2) when sigma is maximally
// mixed, and the replacement channel rho -> (1-p) rho + p sigma (alpha = p)
// otherwise.
ContractionReport verify_contraction(const DensityMatrix& initial, const CircuitSpec& circuit, double p,
                                     const DensityMatrix& sigma);

}  // namespace noisebound::oracle
