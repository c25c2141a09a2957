#include "latwidth/knapsack.hpp"

namespace latwidth {

KnapsackInstance::KnapsackInstance(IntVec a_, IntVec v_, Int b1, Int b2)
    : a(std::move(a_)), v(std::move(v_)), beta1(std::move(b1)), beta2(std::move(b2)) {
  if (a.size() == 0 || a.size() != v.size())
    throw std::invalid_argument("KnapsackInstance: dimension mismatch");
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < 1) throw std::invalid_argument("KnapsackInstance: weights must be positive");
    if (v(i) < 0) throw std::invalid_argument("KnapsackInstance: bounds must be nonnegative");
  }
  if (gcd_vec(a) != 1)
    throw std::invalid_argument("KnapsackInstance: weights not coprime (use normalize_gcd)");
  if (!(Int(0) <= beta1 && beta1 <= beta2 && beta2 <= a.dot(v)))
    throw std::invalid_argument("KnapsackInstance: need 0 <= beta1 <= beta2 <= a.v");
}

KnapsackInstance normalize_gcd(const IntVec& a, const IntVec& v,
                               const Int& beta1, const Int& beta2) {
  Int g = gcd_vec(a);
  if (g == 0) throw std::invalid_argument("normalize_gcd: zero weight vector");
  // a.x is always a multiple of g, so the feasible betas can be rescaled:
  // beta1 rounds up, beta2 rounds down
  Int b1 = ceil_rat(Rat(beta1, g));
  Int b2 = floor_rat(Rat(beta2, g));
  if (beta1 == beta2 && beta1 % g != 0)
    throw std::domain_error("normalize_gcd: equality target not divisible by gcd");
  IntVec an = a / g;
  return KnapsackInstance(an, v, b1, b2);
}

RangespaceReform build_rangespace(const KnapsackInstance& inst) {
  const Eigen::Index n = inst.n();
  IntMat stacked(n + 1, n);
  stacked.row(0) = inst.a.transpose();
  stacked.bottomRows(n) = IntMat::Identity(n, n);
  ReductionResult r = lll_reduce(stacked);
  IntVec au = (inst.a.transpose() * r.U).transpose();
  return {inst, r.U, r.U_inv, au};
}

NullspaceReform build_nullspace(const KnapsackInstance& inst) {
  if (inst.beta1 != inst.beta2)
    throw std::domain_error("nullspace reformulation requires equality (beta1 == beta2)");
  IntMat v0 = nullspace_basis(inst.a);
  ReductionResult r = lll_reduce(v0);
  IntMat v = r.basis;
  IntVec xb = size_reduce_against(coeff_vector(inst.a, inst.beta1), v);
  IntVec b = size_reduce_against(coeff_vector(inst.a, Int(1)), v);
  return {inst, v, xb, b};
}

bool density_below(const IntVec& a, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("density_below: threshold must be positive");
  Int amax(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < 1) throw std::invalid_argument("density_below: weights must be positive");
    if (a(i) > amax) amax = a(i);
  }
  if (amax == 1) return false;  // log2 ||a||_inf = 0, density undefined/infinite
  // n / log2(amax) < t  <=>  2^n < amax^t  <=>  2^{n q} < amax^p  for t = p/q
  unsigned long n = static_cast<unsigned long>(a.size());
  Int lhs = pow2(n * denominator(t).convert_to<unsigned long>());
  Int rhs = ipow(amax, numerator(t).convert_to<unsigned long>());
  return lhs < rhs;
}

std::string density_approx(const IntVec& a) {
  Int amax(0);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > amax) amax = a(i);
  if (amax <= 1) return "inf";
  using F = boost::multiprecision::number<boost::multiprecision::gmp_float<50>>;
  F l2 = log(F(amax)) / log(F(2));
  F d = F(static_cast<unsigned long>(a.size())) / l2;
  return d.str(6);
}

bool check_hypothesis(const IntVec& a) {
  unsigned long n = static_cast<unsigned long>(a.size());
  return norm_sq(a) >= pow2((n + 2) * n);
}

}  // namespace latwidth
