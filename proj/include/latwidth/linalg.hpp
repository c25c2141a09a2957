#pragma once

#include <optional>

#include "latwidth/types.hpp"

namespace latwidth {

// exact determinant by fraction-free (Bareiss) elimination; 0 for singular
Int det_int(const IntMat& m);

// det(P * P^T) for a k x n integral matrix; 0 signals dependent rows
Int gram_det(const IntMat& p);

// exact inverse; throws on singular input. Integral output whenever the
// input is integral with determinant +-1.
RatMat inverse_rational(const RatMat& m);
RatMat inverse_rational(const IntMat& m);

// exact solve A x = b; nullopt when no solution (A may be rectangular)
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

// extended gcd: returns g = gcd(a, b) and s, t with s*a + t*b = g, g >= 0
struct ExtGcd {
  Int g, s, t;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

Int gcd_vec(const IntVec& v);

}  // namespace latwidth
