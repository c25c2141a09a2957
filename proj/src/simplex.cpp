#include "latwidth/polytope.hpp"
#include "latwidth/radical.hpp"

namespace latwidth {

void Polytope::validate() const {
  if (static_cast<Eigen::Index>(lower.size()) != M.rows() ||
      static_cast<Eigen::Index>(upper.size()) != M.rows())
    throw std::invalid_argument("Polytope: bound count != row count");
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    if (lower[i] && upper[i] && *lower[i] > *upper[i])
      throw std::invalid_argument("Polytope: lower bound exceeds upper bound");
}

Polytope knapsack_polytope(const KnapsackInstance& inst) {
  const Eigen::Index n = inst.n();
  Polytope p;
  p.M = RatMat::Zero(n + 1, n);
  p.M.row(0) = to_rat(inst.a).transpose();
  p.M.bottomRows(n) = RatMat::Identity(n, n);
  p.lower.assign(n + 1, Rat(0));
  p.upper.assign(n + 1, Rat(0));
  p.lower[0] = Rat(inst.beta1);
  p.upper[0] = Rat(inst.beta2);
  for (Eigen::Index i = 0; i < n; ++i) {
    p.lower[i + 1] = Rat(0);
    p.upper[i + 1] = Rat(inst.v(i));
  }
  return p;
}

Polytope rangespaced_rows(const IntVec& au, const IntMat& u,
                          const Int& b1, const Int& b2, const IntVec& v) {
  const Eigen::Index n = u.cols();
  Polytope p;
  p.M = RatMat::Zero(n + 1, n);
  p.M.row(0) = to_rat(au).transpose();
  p.M.bottomRows(n) = to_rat(u);
  p.lower.assign(n + 1, Rat(0));
  p.upper.assign(n + 1, Rat(0));
  p.lower[0] = Rat(b1);
  p.upper[0] = Rat(b2);
  for (Eigen::Index i = 0; i < n; ++i) {
    p.lower[i + 1] = Rat(0);
    p.upper[i + 1] = Rat(v(i));
  }
  return p;
}

Polytope rangespace_polytope(const RangespaceReform& reform) {
  return rangespaced_rows(reform.aU, reform.U, reform.inst.beta1,
                          reform.inst.beta2, reform.inst.v);
}

Polytope nullspace_polytope(const NullspaceReform& reform) {
  const Eigen::Index n = reform.inst.n();
  Polytope p;
  p.M = to_rat(reform.V);
  p.lower.assign(n, Rat(0));
  p.upper.assign(n, Rat(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    p.lower[i] = Rat(-reform.x_beta(i));
    p.upper[i] = Rat(reform.inst.v(i) - reform.x_beta(i));
  }
  return p;
}

namespace {

// Dense exact simplex over the split system A z <= b, z >= 0 (z = (u, w),
// x = u - w). Bland's smallest-index rule throughout.
class Simplex {
 public:
  Simplex(const RatMat& a, const RatVec& b) : m_(a.rows()), nvars_(a.cols()) {
    art_ = nvars_ + m_;
    t_ = RatMat::Zero(m_, art_ + 2);
    for (Eigen::Index i = 0; i < m_; ++i) {
      t_.row(i).head(nvars_) = a.row(i);
      t_(i, nvars_ + i) = 1;
      t_(i, art_) = -1;
      t_(i, art_ + 1) = b(i);
      basis_.push_back(nvars_ + i);
    }
  }

  // returns status; fills z with the structural variable values
  LpStatus run(const RatVec& c, RatVec& z) {
    if (!phase1()) return LpStatus::Infeasible;
    // phase 2 objective over the structural + slack columns
    obj_ = RatVec::Zero(art_ + 2);
    obj_.head(nvars_) = c;
    for (Eigen::Index i = 0; i < m_; ++i)
      if (obj_(basis_[i]) != 0) {
        Rat f = obj_(basis_[i]);
        obj_ -= f * t_.row(i).transpose();
      }
    bool bounded = bland(false);
    if (!bounded) return LpStatus::Unbounded;
    z = RatVec::Zero(nvars_);
    for (Eigen::Index i = 0; i < m_; ++i)
      if (basis_[i] < nvars_) z(basis_[i]) = t_(i, art_ + 1);
    return LpStatus::Optimal;
  }

 private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    Rat d = t_(row, col);
    t_.row(row) /= d;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      Rat f = t_(i, col);
      t_.row(i) -= f * t_.row(row);
    }
    if (obj_(col) != 0) {
      Rat f = obj_(col);
      obj_ -= f * t_.row(row).transpose();
    }
    basis_[row] = col;
  }

  // maximize obj_; allow_art admits the artificial column as entering
  bool bland(bool allow_art) {
    for (;;) {
      Eigen::Index enter = -1;
      Eigen::Index limit = allow_art ? art_ + 1 : art_;
      for (Eigen::Index j = 0; j < limit; ++j)
        if (obj_(j) > 0) { enter = j; break; }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rat best;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rat ratio = t_(i, art_ + 1) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  bool phase1() {
    Eigen::Index worst = -1;
    for (Eigen::Index i = 0; i < m_; ++i)
      if (t_(i, art_ + 1) < 0 &&
          (worst < 0 || t_(i, art_ + 1) < t_(worst, art_ + 1)))
        worst = i;
    if (worst < 0) {
      obj_ = RatVec::Zero(art_ + 2);
      return true;
    }
    obj_ = RatVec::Zero(art_ + 2);
    obj_(art_) = -1;
    pivot(worst, art_);  // makes every rhs nonnegative
    bland(true);         // phase 1 cannot be unbounded (-x0 <= 0)
    if (obj_(art_ + 1) != 0) {
      // objective row's value slot is -value for max(-x0); nonzero => x0 > 0
      return false;
    }
    // drive the artificial variable out of the basis if still there
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] != art_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < art_; ++j)
        if (t_(i, j) != 0) { col = j; break; }
      if (col >= 0) {
        pivot(i, col);
      } else {
        // redundant 0 = 0 row; neutralize it
        t_.row(i).setZero();
        basis_[i] = art_;
      }
    }
    return true;
  }

  Eigen::Index m_, nvars_, art_;
  RatMat t_;
  RatVec obj_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpResult lp_optimize(const RatVec& c, const Polytope& p, bool maximize) {
  p.validate();
  const Eigen::Index n = p.dim();
  if (c.size() != n) throw std::invalid_argument("lp_optimize: dimension mismatch");
  // split two-sided rows into <= pairs
  std::vector<RatVec> rows;
  std::vector<Rat> rhs;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    if (p.upper[i]) {
      rows.push_back(p.M.row(i).transpose());
      rhs.push_back(*p.upper[i]);
    }
    if (p.lower[i]) {
      rows.push_back(-p.M.row(i).transpose());
      rhs.push_back(-*p.lower[i]);
    }
  }
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  // free x becomes (u, w) >= 0 with x = u - w
  RatMat a(m, 2 * n);
  RatVec b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    a.row(i).head(n) = rows[i].transpose();
    a.row(i).tail(n) = -rows[i].transpose();
    b(i) = rhs[i];
  }
  RatVec cc(2 * n);
  RatVec cs = maximize ? c : RatVec(-c);
  cc.head(n) = cs;
  cc.tail(n) = -cs;
  Simplex s(a, b);
  RatVec z;
  LpStatus st = s.run(cc, z);
  LpResult res;
  res.status = st;
  if (st != LpStatus::Optimal) return res;
  res.vertex = RatVec(z.head(n) - z.tail(n));
  res.value = c.dot(res.vertex);
  return res;
}

WidthReport width_report(const IntVec& c, const Polytope& p) {
  RatVec cr = to_rat(c);
  LpResult hi = lp_optimize(cr, p, true);
  WidthReport rep;
  rep.iwidth = 0;
  if (hi.status == LpStatus::Infeasible) return rep;
  if (hi.status == LpStatus::Unbounded)
    throw std::domain_error("width_report: polytope unbounded along c");
  LpResult lo = lp_optimize(cr, p, false);
  if (lo.status != LpStatus::Optimal)
    throw std::domain_error("width_report: polytope unbounded along -c");
  rep.feasible = true;
  rep.cmax = hi.value;
  rep.cmin = lo.value;
  rep.width = rep.cmax - rep.cmin;
  Int w = floor_rat(rep.cmax) - ceil_rat(rep.cmin) + 1;
  rep.iwidth = w < 0 ? Int(0) : w;
  return rep;
}

Int iwidth(const IntVec& c, const Polytope& p) { return width_report(c, p).iwidth; }

namespace {

Polytope conditional_polytope(const IntVec& p, const IntVec& v,
                              std::optional<Rat> lo, std::optional<Rat> hi) {
  const Eigen::Index n = p.size();
  Polytope q;
  q.M = RatMat::Zero(n + 1, n);
  q.M.row(0) = to_rat(p).transpose();
  q.M.bottomRows(n) = RatMat::Identity(n, n);
  q.lower.assign(n + 1, std::nullopt);
  q.upper.assign(n + 1, std::nullopt);
  q.lower[0] = lo;
  q.upper[0] = hi;
  for (Eigen::Index i = 0; i < n; ++i) {
    q.lower[i + 1] = Rat(0);
    q.upper[i + 1] = Rat(v(i));
  }
  return q;
}

}  // namespace

Rat cond_max(const RatVec& w, const Int& l, const IntVec& p, const IntVec& v) {
  LpResult r = lp_optimize(w, conditional_polytope(p, v, std::nullopt, Rat(l)), true);
  if (r.status != LpStatus::Optimal)
    throw std::domain_error("cond_max: empty or unbounded feasible region");
  return r.value;
}

Rat cond_min(const RatVec& w, const Int& l, const IntVec& p, const IntVec& v) {
  LpResult r = lp_optimize(w, conditional_polytope(p, v, Rat(l), std::nullopt), false);
  if (r.status != LpStatus::Optimal)
    throw std::domain_error("cond_min: empty or unbounded feasible region");
  return r.value;
}

Int branch_bound(const Decomposition& dec, const IntVec& v,
                 const Int& beta1, const Int& beta2) {
  for (Eigen::Index i = 0; i < dec.p.size(); ++i)
    if (dec.p(i) < 0)
      throw std::domain_error("branch_bound: p must be componentwise nonnegative");
  RadicalExpr e;
  Rat rv2 = dec.r2 * Rat(norm_sq(v));  // (||r|| ||v||)^2
  if (rv2 != 0) e.add_term(Rat(1) / dec.lambda, rv2, 2);
  e.add_rational(Rat(beta2 - beta1) / dec.lambda);
  return floor_radical(e) + 1;
}

Int thm1_bound_range(const IntVec& a, const IntVec& v,
                     const Int& beta1, const Int& beta2) {
  const unsigned long n = static_cast<unsigned long>(a.size());
  Rat a2(norm_sq(a)), v2(norm_sq(v));
  RadicalExpr e;
  // f(a) = 2^{n/4} / ||a||^{1/n}; bound = 2 ||v|| f(a) + (b2-b1) f(a)
  unsigned long l = static_cast<unsigned long>(lcm(Int(4), Int(2 * n)).convert_to<long>());
  if (v2 != 0)
    e.add_term(Rat(2),
               rpow(v2, l / 2) * Rat(pow2(n * l / 4)) / rpow(a2, l / (2 * n)), l);
  if (beta2 != beta1)
    e.add_term(Rat(beta2 - beta1), Rat(pow2(n * l / 4)) / rpow(a2, l / (2 * n)), l);
  return floor_radical(e) + 1;
}

Int thm1_bound_null(const IntVec& a, const IntVec& v) {
  const unsigned long n = static_cast<unsigned long>(a.size());
  if (n < 2) throw std::invalid_argument("thm1_bound_null: need n >= 2");
  Rat a2(norm_sq(a)), v2(norm_sq(v));
  RadicalExpr e;
  // g(a) = 2^{(n-2)/4} / ||a||^{1/(n-1)}; bound = 2 g(a) ||v||
  unsigned long l =
      static_cast<unsigned long>(lcm(Int(4), Int(2 * (n - 1))).convert_to<long>());
  if (v2 != 0)
    e.add_term(Rat(2),
               rpow(v2, l / 2) * Rat(pow2((n - 2) * l / 4)) /
                   rpow(a2, l / (2 * (n - 1))),
               l);
  return floor_radical(e) + 1;
}

bool transference_check_range(const RangespaceReform& reform, const IntVec& p) {
  const Eigen::Index n = reform.inst.n();
  IntVec pu = (p.transpose() * reform.U).transpose();
  IntVec en = IntVec::Zero(n);
  en(n - 1) = 1;
  if (pu != en && pu != IntVec(-en)) return false;
  Int w_orig = iwidth(p, knapsack_polytope(reform.inst));
  Int w_ref = iwidth(en, rangespace_polytope(reform));
  return w_orig == w_ref;
}

bool transference_check_null(const NullspaceReform& reform, const IntVec& p) {
  const Eigen::Index n = reform.inst.n();
  IntVec pv = (p.transpose() * reform.V).transpose();
  IntVec en1 = IntVec::Zero(n - 1);
  en1(n - 2) = 1;
  if (pv != en1 && pv != IntVec(-en1)) return false;
  Int w_orig = iwidth(p, knapsack_polytope(reform.inst));
  Int w_ref = iwidth(en1, nullspace_polytope(reform));
  return w_orig == w_ref;
}

}  // namespace latwidth
