#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latwidth/io.hpp"
#include "latwidth/knapsack.hpp"

using namespace latwidth;

namespace {

KnapsackInstance small_instance() {
  IntVec a(3), v(3);
  a << 3, 5, 7;
  v << 2, 2, 2;
  return KnapsackInstance(a, v, Int(4), Int(11));
}

}  // namespace

TEST_CASE("instance validation") {
  IntVec a(2), v(2);
  a << 2, 3;
  v << 1, 1;
  CHECK_NOTHROW(KnapsackInstance(a, v, Int(0), Int(5)));
  CHECK_THROWS(KnapsackInstance(a, v, Int(4), Int(2)));   // beta1 > beta2
  CHECK_THROWS(KnapsackInstance(a, v, Int(0), Int(6)));   // beta2 > a.v
  IntVec bad = a;
  bad(0) = 0;
  CHECK_THROWS(KnapsackInstance(bad, v, Int(0), Int(1)));  // weight < 1
  IntVec even(2);
  even << 2, 4;
  CHECK_THROWS(KnapsackInstance(even, v, Int(0), Int(2)));  // gcd > 1
}

TEST_CASE("gcd normalization") {
  IntVec a(2), v(2);
  a << 4, 6;
  v << 3, 3;
  KnapsackInstance inst = normalize_gcd(a, v, Int(2), Int(13));
  CHECK(inst.a(0) == 2);
  CHECK(inst.a(1) == 3);
  CHECK(inst.beta1 == 1);  // ceil(2/2)
  CHECK(inst.beta2 == 6);  // floor(13/2)
  // equality target not divisible by the gcd: feasible set would change
  CHECK_THROWS(normalize_gcd(a, v, Int(5), Int(5)));
}

TEST_CASE("rangespace reform invariants") {
  KnapsackInstance inst = small_instance();
  RangespaceReform r = build_rangespace(inst);
  CHECK(r.aU.transpose() == (r.inst.a.transpose() * r.U).eval());
  Int du = det_int(r.U);
  CHECK((du == 1 || du == -1));
  CHECK(to_rat(r.U) * to_rat(r.U_inv) == RatMat::Identity(3, 3));
  // the stacked basis [a; I] U must be LLL-reduced
  IntMat stacked(4, 3);
  stacked.row(0) = r.aU.transpose();
  stacked.bottomRows(3) = r.U;
  CHECK(is_lll_reduced(stacked).reduced);
}

TEST_CASE("nullspace reform invariants") {
  IntVec a(3), v(3);
  a << 3, 5, 7;
  v << 2, 2, 2;
  KnapsackInstance inst(a, v, Int(10), Int(10));
  NullspaceReform r = build_nullspace(inst);
  CHECK(r.V.cols() == 2);
  for (Eigen::Index j = 0; j < 2; ++j) CHECK(a.dot(r.V.col(j)) == 0);
  CHECK(is_lll_reduced(r.V).reduced);
  CHECK(a.dot(r.x_beta) == 10);
  CHECK(a.dot(r.b) == 1);

  KnapsackInstance range_inst = small_instance();
  CHECK_THROWS_WITH(build_nullspace(range_inst),
                    doctest::Contains("equality"));
}

TEST_CASE("density decisions are exact") {
  IntVec a(2);
  a << 2, 2;
  // d(a) = 2 / log2(2) = 2 exactly; strictly-below test at t = 2 is false
  CHECK(!density_below(a, Rat(2)));
  CHECK(density_below(a, Rat(5, 2)));

  IntVec ones(3);
  ones << 1, 1, 1;
  CHECK(!density_below(ones, Rat(100)));  // no finite density

  // d(a) < c/n  iff  2^{n^2/c} < ||a||_inf, cross-checked on a grid
  for (long amax = 2; amax <= 40; ++amax) {
    IntVec b(3);
    b << amax, 1, 1;
    for (long c = 1; c <= 12; ++c) {
      bool lhs = density_below(b, Rat(c, 3));
      // 2^{9} < amax^{c} exactly
      bool rhs = pow2(9) < ipow(Int(amax), static_cast<unsigned long>(c));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("norm hypothesis") {
  IntVec a(2);
  a << 256, 1;
  // ||a||^2 = 65537 >= 2^{(2+2)*2} = 256
  CHECK(check_hypothesis(a));
  IntVec ex1(5);
  ex1 << 3488, 451, 1231, 6415, 2191;
  CHECK(!check_hypothesis(ex1));  // needs ||a||^2 >= 2^70
}

TEST_CASE("instance documents round-trip byte-stably") {
  KnapsackInstance inst = small_instance();
  json doc = instance_to_json(inst);
  KnapsackInstance back = instance_from_json(doc);
  CHECK(instance_to_json(back).dump() == doc.dump());
  CHECK(back.a == inst.a);
  CHECK(back.beta2 == inst.beta2);
}

TEST_CASE("instance document errors are structured") {
  json doc;
  doc["schema"] = "latwidth-instance/1";
  doc["n"] = 2;
  doc["a"] = {"2", "3"};
  doc["v"] = {"1", "1"};
  doc["beta1"] = "4";
  doc["beta2"] = "2";  // beta1 > beta2
  CHECK_THROWS(instance_from_json(doc));
  doc.erase("v");
  CHECK_THROWS_WITH(instance_from_json(doc), doctest::Contains("missing"));
}

TEST_CASE("generator determinism and gcd normalization") {
  GeneratorParams params;
  params.n = 4;
  params.big_m = 50;
  params.v_max = 3;
  Rng r1(123), r2(123);
  for (int i = 0; i < 20; ++i) {
    KnapsackInstance i1 = generate_instance(params, r1);
    KnapsackInstance i2 = generate_instance(params, r2);
    CHECK(i1.a == i2.a);
    CHECK(i1.v == i2.v);
    CHECK(i1.beta1 == i2.beta1);
    CHECK(i1.beta2 == i2.beta2);
    CHECK(gcd_vec(i1.a) == 1);
    CHECK(i1.beta2 <= i1.av());
  }
}

TEST_CASE("generator with M = 1 yields all-ones weights") {
  GeneratorParams params;
  params.n = 3;
  params.big_m = 1;
  params.v_max = 2;
  Rng rng(9);
  KnapsackInstance inst = generate_instance(params, rng);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(inst.a(i) == 1);
}

TEST_CASE("density-driven M is the exact ceiling") {
  // M = ceil(2^{n/d}); for n=5, d = 2/5 the exponent is 12.5
  Int m = big_m_for_density(5, Rat(2, 5));
  CHECK(ipow(m, 2) >= pow2(25));
  CHECK(ipow(m - 1, 2) < pow2(25));
  CHECK(big_m_for_density(4, Rat(2)) == 4);  // 2^{4/2}
}

TEST_CASE("rng rejection sampling is uniform on small ranges") {
  Rng rng(77);
  long counts[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 5000; ++i)
    counts[rng.below(Int(5)).convert_to<long>()]++;
  for (long c : counts) CHECK(c > 800);
}
