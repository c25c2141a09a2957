#pragma once

#include "latwidth/io.hpp"
#include "latwidth/oracle.hpp"
#include "latwidth/parallel.hpp"
#include "latwidth/polytope.hpp"

namespace latwidth {

struct PipelineOptions {
  bool run_oracle = false;
  Eigen::Index successive_k = 0;  // 0 disables the successive-approximation section
  bool timings = false;           // off by default so reports are byte-stable
  EnumerationBudget budget;
};

struct PipelineOutcome {
  json report;
  // 0 ok, 1 a certified inequality failed under a satisfied hypothesis
  int exit_code = 0;
};

// reformulate -> extract -> decompose -> certify -> widths -> optional oracle
PipelineOutcome run_pipeline(const KnapsackInstance& inst,
                             const PipelineOptions& opts = {});

}  // namespace latwidth
