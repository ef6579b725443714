#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoclass/subspace.hpp"

namespace monoclass {

/// Membership in the five monotone classes, rendered in the fixed order
/// PM, SM, 3CM, MM, 3* as a 5-character 0/1 string (e.g. "10111").
struct ClassCode {
  bool pm = false;     // paramonotone
  bool sm = false;     // strictly monotone
  bool cm3 = false;    // 3-cyclic monotone
  bool mm = false;     // maximal monotone
  bool star3 = false;  // 3*-monotone

  std::string str() const;
  static ClassCode parse(const std::string& bits);

  bool operator==(const ClassCode&) const = default;
};

/// An n-cycle violating the cyclic-monotonicity inequality.  For operators
/// the points are the x_i; for relations they are graph points (y_i, y_i*).
struct CycleWitness {
  std::vector<Vec> points;
  double cycle_sum = 0.0;
};

/// Largest alpha with <x, Ax> >= alpha·‖Ax‖².  Unbounded only for the zero
/// operator, whose inequality holds for every alpha.
struct AlphaStar {
  bool unbounded = false;
  double value = 0.0;
};

struct ClassificationReport {
  ClassCode code;
  bool monotone = false;
  int dim = 0;
  double lambda_min_sym = 0.0;           // min eigenvalue of the monotone form
  Subspace ker_sym{1};                   // kernel of the symmetric part / form
  Subspace ker_full{1};                  // kernel of the operator / relation
  std::optional<AlphaStar> alpha_star;   // operators only
  std::optional<CycleWitness> cycle_witness;  // present whenever 3CM fails
  std::vector<std::string> notes;
};

}  // namespace monoclass
