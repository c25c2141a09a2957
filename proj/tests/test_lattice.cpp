#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latwidth/lattice.hpp"

using namespace latwidth;

namespace {

IntMat random_basis(std::mt19937_64& eng, Eigen::Index n, int lim) {
  std::uniform_int_distribution<int> d(-lim, lim);
  for (;;) {
    IntMat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = d(eng);
    if (det_int(m) != 0) return m;
  }
}

bool same_lattice_det(const IntMat& b1, const IntMat& b2) {
  return abs(det_int(b1)) == abs(det_int(b2));
}

}  // namespace

TEST_CASE("gram-schmidt on an orthogonal basis") {
  IntMat b(2, 2);
  b << 2, 0, 0, 3;
  GSO g = gram_schmidt(b);
  CHECK(g.norms2[0] == 4);
  CHECK(g.norms2[1] == 9);
  CHECK(g.mu(1, 0) == 0);
}

TEST_CASE("gram-schmidt rejects dependent columns") {
  IntMat b(2, 2);
  b << 1, 2, 2, 4;
  CHECK_THROWS(gram_schmidt(b));
}

TEST_CASE("lll conditions on known bases") {
  IntMat good(2, 2);
  good << 1, 0, 0, 1;
  CHECK(is_lll_reduced(good).reduced);

  IntMat bad(2, 2);
  bad << 1, 4, 0, 1;  // mu = 4 violates size reduction
  auto chk = is_lll_reduced(bad);
  CHECK(!chk.reduced);
  CHECK(!chk.violation.empty());

  IntMat swap(2, 2);
  swap << 3, 1, 0, 1;  // ||b*_1||^2 = 9 > 2 * ||b*_2||^2
  CHECK(!is_lll_reduced(swap).reduced);
}

TEST_CASE("lll reduction of a textbook basis") {
  IntMat b(2, 2);
  b << 1, 4, 0, 1;
  ReductionResult r = lll_reduce(b);
  CHECK(is_lll_reduced(r.basis).reduced);
  CHECK(b * r.U == r.basis);
  IntMat expected_u(2, 2);
  expected_u << 1, -4, 0, 1;
  CHECK(r.U == expected_u);
}

TEST_CASE("lll postconditions on random bases") {
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Eigen::Index n = 2 + trial % 5;
    IntMat b = random_basis(eng, n, 9);
    ReductionResult r = lll_reduce(b);
    CHECK(is_lll_reduced(r.basis).reduced);
    CHECK(b * r.U == r.basis);
    Int du = det_int(r.U);
    CHECK((du == 1 || du == -1));
    CHECK(to_rat(r.U) * to_rat(r.U_inv) == RatMat::Identity(n, n));
    CHECK(same_lattice_det(b, r.basis));  // lattice invariant
  }
}

TEST_CASE("lll on rectangular stacked bases") {
  IntMat b(3, 2);
  b << 12, 17, 1, 0, 0, 1;
  ReductionResult r = lll_reduce(b);
  CHECK(is_lll_reduced(r.basis).reduced);
  CHECK(b * r.U == r.basis);
  CHECK(gram_det(IntMat(r.basis.transpose())) == gram_det(IntMat(b.transpose())));
}

TEST_CASE("nullspace basis") {
  IntVec a(2);
  a << 2, 3;
  IntMat v = nullspace_basis(a);
  REQUIRE(v.cols() == 1);
  CHECK(a.dot(v.col(0)) == 0);
  CHECK((abs(v(0, 0)) == 3 && abs(v(1, 0)) == 2));

  IntVec ones(3);
  ones << 1, 1, 1;
  IntMat w = nullspace_basis(ones);
  REQUIRE(w.cols() == 2);
  for (Eigen::Index j = 0; j < 2; ++j) CHECK(ones.dot(w.col(j)) == 0);
  // the full nullspace lattice of all-ones weights has squared determinant 3
  CHECK(gram_det(IntMat(w.transpose())) == 3);

  IntVec bad(2);
  bad << 2, 4;
  CHECK_THROWS(nullspace_basis(bad));
}

TEST_CASE("nullspace lattice determinant equals ||a||^2 for coprime a") {
  // N(a) is complete, so det N(a) = det of the orthogonal lattice of a,
  // which equals ||a|| for primitive a
  std::mt19937_64 eng(11);
  std::uniform_int_distribution<int> d(1, 30);
  for (int trial = 0; trial < 40; ++trial) {
    Eigen::Index n = 2 + trial % 4;
    IntVec a(n);
    for (Eigen::Index i = 0; i < n; ++i) a(i) = d(eng);
    if (gcd_vec(a) != 1) continue;
    IntMat v = nullspace_basis(a);
    CHECK(gram_det(IntMat(v.transpose())) == norm_sq(a));
  }
}

TEST_CASE("coefficient vector") {
  IntVec a(3);
  a << 6, 10, 15;
  IntVec b = coeff_vector(a, Int(1));
  CHECK(a.dot(b) == 1);
  IntVec c = coeff_vector(a, Int(37));
  CHECK(a.dot(c) == 37);
}

TEST_CASE("size reduction against a lattice preserves the residue") {
  IntVec a(3);
  a << 3, 5, 7;
  IntMat v = nullspace_basis(a);
  IntVec x(3);
  x << 40, -11, 2;
  IntVec y = size_reduce_against(x, v);
  CHECK(a.dot(y) == a.dot(x));
  CHECK(norm_sq(y) <= norm_sq(x));
}

TEST_CASE("completeness certificate") {
  // N(a) is complete by construction
  IntVec a(3);
  a << 3, 5, 7;
  IntMat v = nullspace_basis(a);
  Certificate cert = completeness_certificate(v);
  CHECK(cert.ok);
  RatMat zv = to_rat(cert.Z) * to_rat(v);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      CHECK(zv(i, j) == (i == j ? Rat(1) : Rat(0)));
  CHECK(zv.row(2) == RatMat::Zero(1, 2));

  // the lattice generated by (2, 0) is not complete: (1, 0) is in lin(L) cap Z^2
  IntMat incomplete(2, 1);
  incomplete << 2, 0;
  CHECK(!completeness_certificate(incomplete).ok);
}

TEST_CASE("sublattice determinant bound on random reduced bases") {
  std::mt19937_64 eng(19);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Index n = 2 + trial % 5;
    IntMat b = random_basis(eng, n, 7);
    ReductionResult r = lll_reduce(b);
    for (Eigen::Index l = 1; l <= n; ++l) CHECK(sublattice_det_check(r, l));
  }
}
