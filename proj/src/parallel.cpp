#include "latwidth/parallel.hpp"

namespace latwidth {

int cmp_pow_expr(const Rat& x, const Rat& e2, const Rat& eA, const Int& A) {
  if (A <= 0) throw std::domain_error("cmp_pow_expr: A must be positive");
  if (x < 0) return -1;  // rhs is positive
  if (x == 0) return -1;
  Int l = lcm(denominator(e2), denominator(eA));
  long s2 = Rat(e2 * l).convert_to<long>();
  long sA = Rat(eA * l).convert_to<long>();
  // x^l vs 2^{s2} A^{sA}: move negative exponents across
  Rat lhs = rpow(x, l.convert_to<long>());
  Rat rhs(1);
  if (s2 >= 0) rhs *= Rat(pow2(static_cast<unsigned long>(s2)));
  else lhs *= Rat(pow2(static_cast<unsigned long>(-s2)));
  if (sA >= 0) rhs *= Rat(ipow(A, static_cast<unsigned long>(sA)));
  else lhs *= Rat(ipow(A, static_cast<unsigned long>(-sA)));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Decomposition decompose(const IntVec& a, const IntVec& p_in) {
  if (p_in.isZero()) throw std::invalid_argument("decompose: p must be nonzero");
  if (a.size() != p_in.size()) throw std::invalid_argument("decompose: dimension mismatch");
  Int ap = a.dot(p_in);
  if (ap == 0) throw std::domain_error("decompose: orthogonal direction (a.p = 0)");
  IntVec p = ap > 0 ? p_in : IntVec(-p_in);
  Int p2i = norm_sq(p);
  Rat lambda(abs(ap), p2i);
  RatVec r = to_rat(a) - lambda * to_rat(p);
  Rat r2 = norm_sq(r);
  Rat a2(norm_sq(a));
  return {p, lambda, r, r2, Rat(p2i), r2 / a2, r2 / (lambda * lambda)};
}

IntVec extract_range_direction(const RangespaceReform& reform) {
  return reform.U_inv.row(reform.U_inv.rows() - 1).transpose();
}

IntVec extract_null_direction(const NullspaceReform& reform) {
  const Eigen::Index n = reform.inst.n();
  IntMat vb(n, n);
  vb.leftCols(n - 1) = reform.V;
  vb.col(n - 1) = reform.b;
  RatMat inv = inverse_rational(vb);  // (V, b) is unimodular, so this is integral
  IntMat inv_int(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (denominator(inv(i, j)) != 1)
        throw std::logic_error("extract_null_direction: (V, b) not unimodular");
      inv_int(i, j) = numerator(inv(i, j));
    }
  for (Eigen::Index j = 0; j < n; ++j)
    if (inv_int(n - 1, j) != reform.inst.a(j))
      throw std::logic_error("extract_null_direction: last row of (V,b)^{-1} is not a");
  return inv_int.row(n - 2).transpose();
}

Thm3Verdict certify_thm3(const IntVec& a, const Decomposition& dec) {
  const long n = a.size();
  Int a2 = norm_sq(a);
  Thm3Verdict v{};
  v.hyp = check_hypothesis(a);
  // f(a)^2 = 2^{n/2} / ||a||^{2/n}
  // (1) ||p||^2 (1 + ||r||^2) <= ||a||^2 f(a)^2 = 2^{n/2} (||a||^2)^{(n-1)/n}
  v.i1 = cmp_pow_expr(dec.p2 * (1 + dec.r2), Rat(n, 2), Rat(n - 1, n), a2) <= 0;
  // (2) lambda^2 >= 1 / f(a)^2 = 2^{-n/2} (||a||^2)^{1/n}
  v.i2 = cmp_pow_expr(dec.lambda * dec.lambda, Rat(-n, 2), Rat(1, n), a2) >= 0;
  // (3) ||r||^2 / lambda^2 <= 4 f(a)^2 = 2^{n/2 + 2} (||a||^2)^{-1/n}
  v.i3 = dec.r2 == 0 ||
         cmp_pow_expr(dec.ratio2, Rat(n + 4, 2), Rat(-1, n), a2) <= 0;
  return v;
}

Thm4Verdict certify_thm4(const IntVec& a, const Decomposition& dec) {
  const long n = a.size();
  Int a2 = norm_sq(a);
  Thm4Verdict v{};
  v.hyp = check_hypothesis(a);
  // g(a)^2 = 2^{(n-2)/2} / ||a||^{2/(n-1)}
  // (1) ||p||^2 ||r||^2 <= ||a||^2 g(a)^2 = 2^{(n-2)/2} (||a||^2)^{(n-2)/(n-1)}
  v.i1 = dec.r2 == 0 ||
         cmp_pow_expr(dec.p2 * dec.r2, Rat(n - 2, 2), Rat(n - 2, n - 1), a2) <= 0;
  // (2) ||r||^2 / lambda^2 <= 4 g(a)^2 = 2^{(n+2)/2} (||a||^2)^{-1/(n-1)}
  v.i2 = dec.r2 == 0 ||
         cmp_pow_expr(dec.ratio2, Rat(n + 2, 2), Rat(-1, n - 1), a2) <= 0;
  v.r_nonzero = dec.r2 != 0;
  return v;
}

Prop1Verdict check_prop1(const IntVec& a, const IntVec& p) {
  Decomposition dec = decompose(a, p);
  Prop1Verdict v{};
  v.sin_le_ratio = dec.sin2 <= dec.ratio2;
  v.sign_applicable = dec.ratio2 < 1;
  v.rounding_applicable = dec.ratio2 < Rat(1, 4);
  v.sign_agree = true;
  v.rounding = true;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (v.sign_applicable && dec.p(i) != 0 &&
        ((dec.p(i) > 0) != (a(i) > 0)))
      v.sign_agree = false;
    if (v.rounding_applicable &&
        round_half_away(Rat(a(i)) / dec.lambda) != dec.p(i))
      v.rounding = false;
  }
  if (!v.sign_applicable) v.sign_agree = false;
  if (!v.rounding_applicable) v.rounding = false;
  return v;
}

SuccessiveApprox successive(const IntMat& rows_source, const IntVec& a,
                            Eigen::Index k, SuccessiveSource source) {
  const Eigen::Index n = rows_source.rows();
  if (rows_source.cols() != a.size())
    throw std::invalid_argument("successive: dimension mismatch");
  Eigen::Index first;
  if (source == SuccessiveSource::Range) {
    if (k < 1 || k > n) throw std::invalid_argument("successive: bad k");
    first = n - k;  // last k rows of U^{-1}
  } else {
    if (k < 1 || k > n - 1) throw std::invalid_argument("successive: bad k");
    first = n - 1 - k;  // next-to-last k rows of (V, b)^{-1}
  }
  IntMat p = rows_source.middleRows(first, k);
  IntMat g = p * p.transpose();
  Int dg = det_int(g);
  if (dg == 0) throw std::domain_error("successive: dependent rows");
  // a(k) = a P^T (P P^T)^{-1} P, solved exactly
  RatMat ginv = inverse_rational(g);
  RatVec coeffs = ginv * (p * a).cast<Rat>();
  RatVec ak = to_rat(IntMat(p.transpose())) * coeffs;
  RatVec r = to_rat(a) - ak;
  Rat lambda_k2 = norm_sq(ak) / Rat(dg);
  return {p, ak, r, lambda_k2, Rat(dg), k};
}

ThmKVerdict certify_thm5(const IntVec& a, const SuccessiveApprox& s) {
  const long n = a.size();
  const long k = s.k;
  Int a2 = norm_sq(a);
  Rat r2 = norm_sq(s.r);
  ThmKVerdict v{};
  v.hyp = check_hypothesis(a);
  // f(a,k)^2 = 2^{(k(n-k)+1)/2} / ||a||^{2k/n}
  // (1) det(P P^T)(1 + ||r||^2) <= ||a||^2 f(a,k)^2
  v.i1 = cmp_pow_expr(s.gram * (1 + r2), Rat(k * (n - k) + 1, 2),
                      Rat(n - k, n), a2) <= 0;
  // lambda_k^2 >= 1 / f(a,k)^2
  v.lambda_lb = cmp_pow_expr(s.lambda_k2, Rat(-(k * (n - k) + 1), 2),
                             Rat(k, n), a2) >= 0;
  // sin^2(a, a(k)) = ||r||^2 / ||a||^2 <= ||r||^2 / lambda_k^2
  v.sin_le_ratio = r2 == 0 || s.lambda_k2 <= Rat(a2);
  // ||r||^2 / lambda_k^2 <= 4 f(a,k)^2
  v.ratio_ub = r2 == 0 ||
               cmp_pow_expr(r2 / s.lambda_k2, Rat(k * (n - k) + 5, 2),
                            Rat(-k, n), a2) <= 0;
  return v;
}

Thm6Verdict certify_thm6(const IntVec& a, const SuccessiveApprox& s) {
  const long n = a.size();
  const long k = s.k;
  Int a2 = norm_sq(a);
  Rat r2 = norm_sq(s.r);
  Thm6Verdict v{};
  v.hyp = check_hypothesis(a);
  v.r_nonzero = r2 != 0;
  // g(a,k)^2 = 2^{k(n-1-k)/2} / ||a||^{2k/(n-1)}
  // (1) det(P P^T) ||r||^2 <= ||a||^2 g(a,k)^2
  v.i1 = r2 == 0 ||
         cmp_pow_expr(s.gram * r2, Rat(k * (n - 1 - k), 2),
                      Rat(n - 1 - k, n - 1), a2) <= 0;
  v.sin_le_ratio = r2 == 0 || s.lambda_k2 <= Rat(a2);
  // ||r||^2 / lambda_k^2 <= 4 g(a,k)^2
  v.ratio_ub = r2 == 0 ||
               cmp_pow_expr(r2 / s.lambda_k2, Rat(k * (n - 1 - k) + 4, 2),
                            Rat(-k, n - 1), a2) <= 0;
  return v;
}

}  // namespace latwidth
