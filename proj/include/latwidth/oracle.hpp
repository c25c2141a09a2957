#pragma once

#include <vector>

#include "latwidth/polytope.hpp"

namespace latwidth {

// Enumeration budgets; exceeding one is a clean error, never silent truncation.
struct EnumerationBudget {
  Int max_points = Int(10000000);      // 10^7
  Int max_active_sets = Int(1000000);  // 10^6
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Brute-force LP oracle: enumerates every n-subset of active bounds, solves
// the square systems exactly and keeps the feasible extreme value. Requires
// a polytope with box rows (every vertex is an intersection of n rows).
LpResult vertex_enum_optimize(const RatVec& c, const Polytope& p, bool maximize,
                              const EnumerationBudget& budget = {});

// every integral x with 0 <= x <= v and beta1 <= a.x <= beta2
std::vector<IntVec> enumerate_feasible(const KnapsackInstance& inst,
                                       const EnumerationBudget& budget = {});

// exhaustive two-way integer-point correspondence between (KP) and a reform
bool bijection_check(const KnapsackInstance& inst, const RangespaceReform& reform,
                     const EnumerationBudget& budget = {});
bool bijection_check(const KnapsackInstance& inst, const NullspaceReform& reform,
                     const EnumerationBudget& budget = {});

// iwidth(p, LP(inst)) computed entirely through vertex_enum_optimize,
// independent of the simplex path
Int node_count(const KnapsackInstance& inst, const IntVec& p,
               const EnumerationBudget& budget = {});

}  // namespace latwidth
