#include "latwidth/oracle.hpp"

#include <set>

namespace latwidth {

namespace {

struct ActiveBound {
  Eigen::Index row;
  Rat value;
};

Eigen::Index rat_rank(RatMat a) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = rank; i < a.rows(); ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank) a.row(rank).swap(a.row(piv));
    for (Eigen::Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / a(rank, col);
      a.row(i) -= f * a.row(rank);
    }
    ++rank;
  }
  return rank;
}

bool point_feasible(const RatVec& x, const Polytope& p) {
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Rat mx = p.M.row(i).dot(x);
    if (p.lower[i] && mx < *p.lower[i]) return false;
    if (p.upper[i] && mx > *p.upper[i]) return false;
  }
  return true;
}

}  // namespace

LpResult vertex_enum_optimize(const RatVec& c, const Polytope& p, bool maximize,
                              const EnumerationBudget& budget) {
  p.validate();
  const Eigen::Index n = p.dim();
  if (budget.max_active_sets <= 0 || budget.max_points <= 0)
    throw std::invalid_argument("vertex_enum_optimize: budget must be positive");
  std::vector<ActiveBound> cands;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    if (p.lower[i]) cands.push_back({i, *p.lower[i]});
    if (p.upper[i] && !(p.lower[i] && *p.lower[i] == *p.upper[i]))
      cands.push_back({i, *p.upper[i]});
  }
  LpResult best;
  best.status = LpStatus::Infeasible;
  Int tried(0);
  std::vector<Eigen::Index> pick(n);
  // enumerate n-subsets with pairwise distinct rows (two bounds of one row
  // are either the same hyperplane or inconsistent)
  auto recurse = [&](auto&& self, Eigen::Index depth, Eigen::Index start) -> void {
    if (depth == n) {
      if (++tried > budget.max_active_sets)
        throw BudgetExceeded("vertex_enum_optimize: active-set budget exceeded");
      RatMat a(n, n);
      RatVec b(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        a.row(i) = p.M.row(cands[pick[i]].row);
        b(i) = cands[pick[i]].value;
      }
      if (rat_rank(a) < n) return;  // skip rank-deficient active sets
      auto x = solve_rational(a, b);
      if (!x) return;
      if (!point_feasible(*x, p)) return;
      Rat val = c.dot(*x);
      if (best.status == LpStatus::Infeasible ||
          (maximize ? val > best.value : val < best.value)) {
        best.status = LpStatus::Optimal;
        best.value = val;
        best.vertex = *x;
      }
      return;
    }
    for (Eigen::Index j = start;
         j <= static_cast<Eigen::Index>(cands.size()) - (n - depth); ++j) {
      if (depth > 0 && cands[pick[depth - 1]].row == cands[j].row) continue;
      pick[depth] = j;
      self(self, depth + 1, j + 1);
    }
  };
  if (static_cast<Eigen::Index>(cands.size()) >= n) recurse(recurse, 0, 0);
  return best;
}

std::vector<IntVec> enumerate_feasible(const KnapsackInstance& inst,
                                       const EnumerationBudget& budget) {
  const Eigen::Index n = inst.n();
  Int points(1);
  for (Eigen::Index i = 0; i < n; ++i) points *= inst.v(i) + 1;
  if (points > budget.max_points)
    throw BudgetExceeded("enumerate_feasible: point budget exceeded");
  std::vector<IntVec> out;
  IntVec x = IntVec::Zero(n);
  for (;;) {
    Int ax = inst.a.dot(x);
    if (inst.beta1 <= ax && ax <= inst.beta2) out.push_back(x);
    Eigen::Index i = 0;
    while (i < n && x(i) == inst.v(i)) { x(i) = 0; ++i; }
    if (i == n) break;
    x(i) += 1;
  }
  return out;
}

namespace {

struct VecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (a(i) > b(i)) return false;
    }
    return false;
  }
};

// enumerate all integral points of a box given per-coordinate [lo, hi]
template <typename Fn>
void for_each_box_point(const IntVec& lo, const IntVec& hi, const Int& max_points,
                        Fn&& fn) {
  const Eigen::Index n = lo.size();
  Int points(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (hi(i) < lo(i)) return;
    points *= hi(i) - lo(i) + 1;
  }
  if (points > max_points)
    throw BudgetExceeded("bijection_check: reverse-enumeration budget exceeded");
  IntVec x = lo;
  for (;;) {
    fn(x);
    Eigen::Index i = 0;
    while (i < n && x(i) == hi(i)) { x(i) = lo(i); ++i; }
    if (i == n) break;
    x(i) += 1;
  }
}

}  // namespace

bool bijection_check(const KnapsackInstance& inst, const RangespaceReform& reform,
                     const EnumerationBudget& budget) {
  const Eigen::Index n = inst.n();
  auto feas = enumerate_feasible(inst, budget);
  std::set<IntVec, VecLess> xs(feas.begin(), feas.end());
  std::set<IntVec, VecLess> ys;
  for (const auto& x : feas) {
    IntVec y = reform.U_inv * x;  // integral by construction
    if (IntVec(reform.U * y) != x) return false;
    Int au_y = reform.aU.dot(y);
    if (!(inst.beta1 <= au_y && au_y <= inst.beta2)) return false;
    IntVec uy = reform.U * y;
    for (Eigen::Index i = 0; i < n; ++i)
      if (uy(i) < 0 || uy(i) > inst.v(i)) return false;
    ys.insert(y);
  }
  if (ys.size() != xs.size()) return false;
  // reverse direction: enumerate y over an interval hull of U^{-1}[0, v]
  IntVec ylo = IntVec::Zero(n), yhi = IntVec::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      Int e = reform.U_inv(j, i) * inst.v(i);
      if (e > 0) yhi(j) += e; else ylo(j) += e;
    }
  Int count(0);
  bool ok = true;
  for_each_box_point(ylo, yhi, budget.max_points, [&](const IntVec& y) {
    IntVec x = reform.U * y;
    for (Eigen::Index i = 0; i < n; ++i)
      if (x(i) < 0 || x(i) > inst.v(i)) return;
    Int au_y = reform.aU.dot(y);
    if (!(inst.beta1 <= au_y && au_y <= inst.beta2)) return;
    ++count;
    if (xs.find(x) == xs.end()) ok = false;
  });
  return ok && count == Int(static_cast<long>(xs.size()));
}

bool bijection_check(const KnapsackInstance& inst, const NullspaceReform& reform,
                     const EnumerationBudget& budget) {
  const Eigen::Index n = inst.n();
  auto feas = enumerate_feasible(inst, budget);
  std::set<IntVec, VecLess> xs(feas.begin(), feas.end());
  for (const auto& x : feas) {
    auto lam = solve_rational(to_rat(reform.V), to_rat(x) - to_rat(reform.x_beta));
    if (!lam) return false;
    for (Eigen::Index i = 0; i < n - 1; ++i)
      if (denominator((*lam)(i)) != 1) return false;
    if (to_rat(reform.V) * *lam != to_rat(x) - to_rat(reform.x_beta)) return false;
  }
  // reverse: interval hull of lambda = R (x - x_beta) over the box, where R
  // is the top block of (V, b)^{-1}
  IntMat vb(n, n);
  vb.leftCols(n - 1) = reform.V;
  vb.col(n - 1) = reform.b;
  RatMat inv = inverse_rational(vb);
  IntVec llo = IntVec::Zero(n - 1), lhi = IntVec::Zero(n - 1);
  for (Eigen::Index j = 0; j < n - 1; ++j) {
    Rat lo(0), hi(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      Rat w = inv(j, i);
      Rat at0 = -w * Rat(reform.x_beta(i));
      Rat atv = w * Rat(inst.v(i) - reform.x_beta(i));
      lo += at0 < atv ? at0 : atv;
      hi += at0 < atv ? atv : at0;
    }
    llo(j) = ceil_rat(lo);
    lhi(j) = floor_rat(hi);
  }
  Int count(0);
  bool ok = true;
  for_each_box_point(llo, lhi, budget.max_points, [&](const IntVec& lam) {
    IntVec x = reform.x_beta + reform.V * lam;
    for (Eigen::Index i = 0; i < n; ++i)
      if (x(i) < 0 || x(i) > inst.v(i)) return;
    ++count;
    if (xs.find(x) == xs.end()) ok = false;
  });
  return ok && count == Int(static_cast<long>(xs.size()));
}

Int node_count(const KnapsackInstance& inst, const IntVec& p,
               const EnumerationBudget& budget) {
  Polytope q = knapsack_polytope(inst);
  RatVec c = to_rat(p);
  LpResult hi = vertex_enum_optimize(c, q, true, budget);
  if (hi.status != LpStatus::Optimal) return 0;
  LpResult lo = vertex_enum_optimize(c, q, false, budget);
  Int w = floor_rat(hi.value) - ceil_rat(lo.value) + 1;
  return w < 0 ? Int(0) : w;
}

}  // namespace latwidth
