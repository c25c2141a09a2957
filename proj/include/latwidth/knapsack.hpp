#pragma once

#include <string>

#include "latwidth/lattice.hpp"
#include "latwidth/types.hpp"

namespace latwidth {

// The knapsack feasibility problem beta1 <= a.x <= beta2, 0 <= x <= v.
// Standing assumptions (checked at construction): a_i >= 1, gcd(a) = 1,
// 0 <= beta1 <= beta2 <= a.v.
struct KnapsackInstance {
  IntVec a;  // positive weights, treated as a row vector
  IntVec v;  // nonnegative upper bounds
  Int beta1, beta2;

  KnapsackInstance(IntVec a_, IntVec v_, Int b1, Int b2);

  Eigen::Index n() const { return a.size(); }
  Int av() const { return a.dot(v); }
};

// divides a by its gcd and rescales the betas; throws when the betas are
// not divisible (the equality case would change the feasible set)
KnapsackInstance normalize_gcd(const IntVec& a, const IntVec& v,
                               const Int& beta1, const Int& beta2);

struct RangespaceReform {
  KnapsackInstance inst;
  IntMat U, U_inv;
  IntVec aU;  // row vector a * U
};

struct NullspaceReform {
  KnapsackInstance inst;  // beta1 == beta2 == beta
  IntMat V;               // n x (n-1), LLL-reduced columns spanning N(a)
  IntVec x_beta;          // a . x_beta = beta
  IntVec b;               // a . b = 1
};

// substitute x = U y where U LLL-reduces the columns of [a; I]
RangespaceReform build_rangespace(const KnapsackInstance& inst);

// parametrize {x : a.x = beta} as x_beta + V lambda; requires beta1 == beta2
NullspaceReform build_nullspace(const KnapsackInstance& inst);

// d(a) < t, decided exactly: 2^{n * den(t)} < ||a||_inf^{num(t)}.
// An all-ones weight vector has no finite density and is below nothing.
bool density_below(const IntVec& a, const Rat& t);

// display-only decimal rendering of n / log2 ||a||_inf
std::string density_approx(const IntVec& a);

// ||a||^2 >= 2^{(n+2)n}, the Theorem-1 hypothesis, exactly
bool check_hypothesis(const IntVec& a);

}  // namespace latwidth
