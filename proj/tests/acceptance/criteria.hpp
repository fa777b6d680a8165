#pragma once

#include <string>

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit_seconds = 0;  // 0: no runtime bound
};

Outcome criterion_small_sets();
Outcome criterion_collinearity();
Outcome criterion_line_synthesis();
Outcome criterion_line_conic_synthesis();
Outcome criterion_classifier();
Outcome criterion_witnesses();
Outcome criterion_lagrange();
Outcome criterion_lattice();
Outcome criterion_cli();

}  // namespace acceptance
