#pragma once

#include <optional>
#include <vector>

#include "latwidth/knapsack.hpp"
#include "latwidth/parallel.hpp"
#include "latwidth/types.hpp"

namespace latwidth {

// Two-sided rational system lower <= M x <= upper, kept in the paper's form
// (rows are not split at the interface). Missing bounds are open.
struct Polytope {
  RatMat M;
  std::vector<std::optional<Rat>> lower, upper;

  Eigen::Index rows() const { return M.rows(); }
  Eigen::Index dim() const { return M.cols(); }
  void validate() const;
};

// LP relaxations of (KP), (KP-R) and (KP-N)
Polytope knapsack_polytope(const KnapsackInstance& inst);
Polytope rangespace_polytope(const RangespaceReform& reform);
Polytope nullspace_polytope(const NullspaceReform& reform);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec vertex;
};

// exact rational simplex (Bland's rule for anti-cycling); two-sided rows are
// split into <= pairs internally
LpResult lp_optimize(const RatVec& c, const Polytope& p, bool maximize);

struct WidthReport {
  bool feasible = false;
  Rat cmax, cmin;
  Rat width;   // cmax - cmin
  Int iwidth;  // floor(cmax) - ceil(cmin) + 1, clamped at 0; 0 when infeasible
};

WidthReport width_report(const IntVec& c, const Polytope& p);
Int iwidth(const IntVec& c, const Polytope& p);

// max { w.x : p.x <= l, 0 <= x <= v } and min { w.x : p.x >= l, 0 <= x <= v }
Rat cond_max(const RatVec& w, const Int& l, const IntVec& p, const IntVec& v);
Rat cond_min(const RatVec& w, const Int& l, const IntVec& p, const IntVec& v);

// floor(||r|| ||v|| / lambda + (beta2 - beta1) / lambda) + 1; requires p >= 0
Int branch_bound(const Decomposition& dec, const IntVec& v,
                 const Int& beta1, const Int& beta2);

// Theorem-1 bounds, exact floors via floor_radical
Int thm1_bound_range(const IntVec& a, const IntVec& v,
                     const Int& beta1, const Int& beta2);
Int thm1_bound_null(const IntVec& a, const IntVec& v);

// p.U = +-e_n and iwidth(p, Q) = iwidth(e_n, Q~); nullspace analogue with
// p.V = +-e_{n-1}
bool transference_check_range(const RangespaceReform& reform, const IntVec& p);
bool transference_check_null(const NullspaceReform& reform, const IntVec& p);

}  // namespace latwidth
