#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latwidth/parallel.hpp"

using namespace latwidth;

TEST_CASE("decomposition of exactly parallel vectors") {
  IntVec a(2), p(2);
  a << 4, 2;
  p << 2, 1;
  Decomposition d = decompose(a, p);
  CHECK(d.lambda == 2);
  CHECK(d.r == RatVec::Zero(2));
  CHECK(d.ratio2 == 0);
  CHECK(d.sin2 == 0);
}

TEST_CASE("decomposition with a residual") {
  IntVec a(2), p(2);
  a << 5, 2;
  p << 2, 1;
  Decomposition d = decompose(a, p);
  CHECK(d.lambda == Rat(12, 5));
  CHECK(d.r(0) == Rat(1, 5));
  CHECK(d.r(1) == Rat(-2, 5));
  CHECK(to_rat(p).dot(d.r) == 0);
  // a = lambda p + r reassembles exactly
  for (Eigen::Index i = 0; i < 2; ++i)
    CHECK(Rat(a(i)) == d.lambda * p(i) + d.r(i));
}

TEST_CASE("decomposition flips the direction sign") {
  IntVec a(2), p(2);
  a << 5, 2;
  p << -2, -1;
  Decomposition d = decompose(a, p);
  CHECK(d.lambda > 0);
  CHECK(d.p(0) == 2);
}

TEST_CASE("orthogonal directions are rejected") {
  IntVec a(2), p(2);
  a << 1, 1;
  p << 1, -1;
  CHECK_THROWS_WITH(decompose(a, p), doctest::Contains("orthogonal"));
}

TEST_CASE("planted near-parallel weights are recovered") {
  // a = 1000 * (3, 5, 7) + (1, 0, -1): the reduced transforms must find a
  // direction whose ratio is tiny
  IntVec base(3), a(3), v(3);
  base << 3, 5, 7;
  a << 3001, 5000, 6999;
  v << 1, 1, 1;
  KnapsackInstance inst(a, v, Int(0), Int(100));
  RangespaceReform rr = build_rangespace(inst);
  IntVec p1 = extract_range_direction(rr);
  Decomposition d1 = decompose(a, p1);
  CHECK(d1.ratio2 < Rat(1, 100));
  Prop1Verdict pr = check_prop1(a, p1);
  CHECK(pr.sin_le_ratio);
  CHECK(pr.rounding_applicable);
  CHECK(pr.rounding);
  // rounding recovers a multiple of the planted direction
  Int scale = round_half_away(Rat(d1.p(0)) / base(0));
  CHECK(d1.p == (base * scale).eval());
}

TEST_CASE("null direction extraction is consistent with the inverse") {
  IntVec a(4), v(4);
  a << 13, 29, 31, 47;
  v << 2, 2, 2, 2;
  KnapsackInstance inst(a, v, Int(50), Int(50));
  NullspaceReform nr = build_nullspace(inst);
  IntVec p2 = extract_null_direction(nr);
  Decomposition d = decompose(a, p2);
  CHECK(d.lambda > 0);
  CHECK(to_rat(d.p).dot(d.r) == 0);
}

TEST_CASE("successive approximation at k = 1 bit-matches the plain path") {
  IntVec a(4), v(4);
  a << 113, 211, 307, 401;
  v << 3, 3, 3, 3;
  KnapsackInstance inst(a, v, Int(0), Int(500));
  RangespaceReform rr = build_rangespace(inst);
  IntVec p1 = extract_range_direction(rr);
  Decomposition d = decompose(a, p1);
  SuccessiveApprox s = successive(rr.U_inv, a, 1, SuccessiveSource::Range);
  CHECK(s.r == d.r);
  CHECK(s.lambda_k2 == d.lambda * d.lambda);
  CHECK(s.gram == d.p2);
}

TEST_CASE("successive residuals are orthogonal to the selected rows") {
  IntVec a(5), v(5);
  a << 3488, 451, 1231, 6415, 2191;
  v << 1, 1, 1, 1, 1;
  KnapsackInstance inst(a, v, Int(100), Int(100));
  RangespaceReform rr = build_rangespace(inst);
  for (Eigen::Index k = 1; k <= 3; ++k) {
    SuccessiveApprox s = successive(rr.U_inv, a, k, SuccessiveSource::Range);
    CHECK(s.P.rows() == k);
    for (Eigen::Index i = 0; i < k; ++i)
      CHECK(s.P.row(i).transpose().cast<Rat>().dot(s.r) == 0);
    // a = a_k + r exactly
    for (Eigen::Index i = 0; i < 5; ++i)
      CHECK(Rat(a(i)) == s.a_k(i) + s.r(i));
    CHECK(s.gram > 0);
  }
}

TEST_CASE("cross-powered comparison oracle") {
  // x vs 2^{e2} A^{eA}
  CHECK(cmp_pow_expr(Rat(8), Rat(3), Rat(0), Int(7)) == 0);       // 8 = 2^3
  CHECK(cmp_pow_expr(Rat(7), Rat(3), Rat(0), Int(7)) == -1);      // 7 < 8
  CHECK(cmp_pow_expr(Rat(50), Rat(0), Rat(2), Int(7)) == 1);      // 50 > 49
  CHECK(cmp_pow_expr(Rat(14), Rat(1), Rat(1), Int(7)) == 0);      // 14 = 2 * 7
  CHECK(cmp_pow_expr(Rat(3), Rat(1, 2), Rat(0), Int(5)) == 1);    // 9 > 2
  CHECK(cmp_pow_expr(Rat(5), Rat(0), Rat(1, 2), Int(26)) == -1);  // 25 < 26
  CHECK(cmp_pow_expr(Rat(2), Rat(-1), Rat(1, 3), Int(64)) == 0);  // 2 = 4/2
}

TEST_CASE("proposition 1 family with exact oracle values") {
  // a = (m^2 + 1, m^2), p = (m + 1, m)
  Rat prev_ratio(-1), prev_sin(2);
  for (long m : {10L, 100L, 1000L}) {
    IntVec a(2), p(2);
    a << m * m + 1, m * m;
    p << m + 1, m;
    Decomposition d = decompose(a, p);
    if (m == 10) CHECK(d.ratio2 == Rat(1790100, 4456321));
    CHECK(d.ratio2 < Rat(1, 2));
    CHECK(d.ratio2 > prev_ratio);     // increases toward 1/2
    CHECK(d.sin2 < prev_sin);         // while the angle vanishes
    CHECK(d.sin2 <= d.ratio2);
    prev_ratio = d.ratio2;
    prev_sin = d.sin2;
  }
}

TEST_CASE("proposition 1 random sweep") {
  std::mt19937_64 eng(31);
  std::uniform_int_distribution<int> da(1, 1000), dp(-20, 20);
  int done = 0;
  while (done < 500) {
    Eigen::Index n = 2 + done % 4;
    IntVec a(n), p(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      a(i) = da(eng);
      p(i) = dp(eng);
    }
    if (a.dot(p) == 0) continue;
    Decomposition d = decompose(a, p);
    Prop1Verdict v = check_prop1(a, d.p);
    CHECK(v.sin_le_ratio);
    if (v.rounding_applicable) CHECK(v.rounding);
    if (v.sign_applicable) CHECK(v.sign_agree);
    ++done;
  }
}
