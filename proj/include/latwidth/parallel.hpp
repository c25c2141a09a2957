#pragma once

#include "latwidth/knapsack.hpp"
#include "latwidth/linalg.hpp"
#include "latwidth/types.hpp"

namespace latwidth {

// a = lambda * p + r with r orthogonal to p and lambda > 0 (p is sign-flipped
// when needed). All pieces exact; norms cached in squared form.
struct Decomposition {
  IntVec p;
  Rat lambda;
  RatVec r;
  Rat r2;      // ||r||^2
  Rat p2;      // ||p||^2
  Rat sin2;    // ||r||^2 / ||a||^2
  Rat ratio2;  // ||r||^2 / lambda^2
};

struct SuccessiveApprox {
  IntMat P;       // k x n, the selected rows
  RatVec a_k;     // projection of a onto rowspace(P)
  RatVec r;       // a - a_k, orthogonal to the rows of P
  Rat lambda_k2;  // ||a_k||^2 / det(P P^T)
  Rat gram;       // det(P P^T), positive
  Eigen::Index k;
};

struct Thm3Verdict {
  bool hyp, i1, i2, i3;
  bool all() const { return i1 && i2 && i3; }
};

struct Thm4Verdict {
  bool hyp, i1, i2, r_nonzero;
  bool all() const { return i1 && i2 && r_nonzero; }
};

struct Prop1Verdict {
  bool sin_le_ratio;
  // tri-state: evaluated only below the respective ratio thresholds
  bool sign_applicable, sign_agree;
  bool rounding_applicable, rounding;
};

struct ThmKVerdict {
  bool hyp, i1, lambda_lb, sin_le_ratio, ratio_ub;
  bool all() const { return i1 && lambda_lb && sin_le_ratio && ratio_ub; }
};

struct Thm6Verdict {
  bool hyp, i1, r_nonzero, sin_le_ratio, ratio_ub;
  bool all() const { return i1 && r_nonzero && sin_le_ratio && ratio_ub; }
};

// throws "orthogonal direction" when a.p = 0 (lambda would vanish)
Decomposition decompose(const IntVec& a, const IntVec& p);

// Theorem 3: last row of U^{-1}
IntVec extract_range_direction(const RangespaceReform& reform);

// Theorem 4: row n-1 of (V, b)^{-1}; also asserts that row n equals a
IntVec extract_null_direction(const NullspaceReform& reform);

// all inequalities certified by exact integer cross-powering, no floats
Thm3Verdict certify_thm3(const IntVec& a, const Decomposition& dec);
Thm4Verdict certify_thm4(const IntVec& a, const Decomposition& dec);
Prop1Verdict check_prop1(const IntVec& a, const IntVec& p);

enum class SuccessiveSource { Range, Null };

// P_k = last k rows of U^{-1} (range) or next-to-last k rows of (V,b)^{-1}
// (null); a(k) solved exactly from the normal equations
SuccessiveApprox successive(const IntMat& rows_source, const IntVec& a,
                            Eigen::Index k, SuccessiveSource source);

ThmKVerdict certify_thm5(const IntVec& a, const SuccessiveApprox& s);
Thm6Verdict certify_thm6(const IntVec& a, const SuccessiveApprox& s);

// exact order of x versus 2^e2 * A^eA for positive rational x, positive
// integer A and rational exponents; shared by every theorem certifier
int cmp_pow_expr(const Rat& x, const Rat& e2, const Rat& eA, const Int& A);

}  // namespace latwidth
