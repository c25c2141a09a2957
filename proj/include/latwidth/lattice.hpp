#pragma once

#include <string>
#include <vector>

#include "latwidth/linalg.hpp"
#include "latwidth/types.hpp"

namespace latwidth {

// Exact Gram-Schmidt data of a column basis.
struct GSO {
  std::vector<RatVec> bstar;  // pairwise orthogonal, bstar[0] = b_0
  RatMat mu;                  // strictly lower triangular, mu(i,j) for j < i
  std::vector<Rat> norms2;    // ||bstar_i||^2, all positive
};

struct ReductionResult {
  IntMat basis;  // B * U, LLL-reduced
  IntMat U;      // unimodular
  IntMat U_inv;  // exact integral inverse of U
};

struct LllCheck {
  bool reduced = false;
  std::string violation;  // empty when reduced
};

struct Certificate {
  IntMat Z;   // unimodular with Z * V = [I_k; 0] when ok
  bool ok = false;
};

// exact GSO of the columns of B; throws naming the first dependent column
GSO gram_schmidt(const IntMat& b);

// Schrijver's two conditions, checked with exact rationals
LllCheck is_lll_reduced(const IntMat& b);

// LLL reduction with transform tracking. Deterministic: size-reduce
// j = i-1 down to 1, swap at the lowest violating index.
ReductionResult lll_reduce(const IntMat& b);

// columns generate {x integral | a.x = 0}; requires gcd(a) = 1
IntMat nullspace_basis(const IntVec& a);

// integral b with a.b = target; requires gcd(a) | target
IntVec coeff_vector(const IntVec& a, const Int& target);

// one nearest-plane pass of x against the columns of V (shortens x modulo
// the lattice of V without changing a.x when a.V = 0)
IntVec size_reduce_against(const IntVec& x, const IntMat& v);

// Lemma-1 completeness certificate: Z with Z*V = [I_k; 0] when the lattice
// of V is complete, including the det L_perp = det L cross-check
Certificate completeness_certificate(const IntMat& v);

// Theorem-2 inequality det L_l <= 2^{l(n-l)/4} (det L)^{l/n}, verified by
// exact integer cross-powering of the squared determinants
bool sublattice_det_check(const ReductionResult& r, Eigen::Index l);

}  // namespace latwidth
