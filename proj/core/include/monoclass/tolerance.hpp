#pragma once

#include <stdexcept>

namespace monoclass {

/// Numeric thresholds governing every PSD / rank / membership decision.
///
/// Decisions compare against tolerances scaled by max(1, ‖M‖_max) so that
/// matrices of tiny norm (e.g. symmetric parts that are zero up to rounding)
/// are treated as zero rather than as full-rank noise.
struct Tolerance {
  double abs = 1e-9;         // absolute residual / membership tolerance
  double eig_rel = 1e-9;     // eigenvalue cutoff, relative to max(1, ‖M‖_max)
  double bisect_rel = 1e-10; // relative interval width ending a bisection
  int max_iter = 200;        // iteration cap for bisection / doubling
  int sample_budget = 100000;

  void validate() const {
    if (abs <= 0 || eig_rel <= 0 || bisect_rel <= 0)
      throw std::invalid_argument("Tolerance: thresholds must be positive");
    if (max_iter < 1 || sample_budget < 1)
      throw std::invalid_argument("Tolerance: iteration budgets must be >= 1");
  }
};

/// Threshold below which an eigenvalue or residual of `scale`-sized data
/// counts as zero.
inline double zero_threshold(const Tolerance& tol, double scale) {
  return tol.eig_rel * (scale > 1.0 ? scale : 1.0);
}

}  // namespace monoclass
