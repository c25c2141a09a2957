#include "latwidth/io.hpp"

namespace latwidth {

Int Rng::below(const Int& n) {
  if (n < 1) throw std::invalid_argument("Rng::below: n must be positive");
  if (n == 1) return 0;
  unsigned long bits = msb(Int(n - 1)) + 1;
  unsigned long words = (bits + 63) / 64;
  for (;;) {
    Int x(0);
    for (unsigned long i = 0; i < words; ++i) x = (x << 64) | Int(word());
    x >>= words * 64 - bits;
    if (x < n) return x;
  }
}

Int big_m_for_density(Eigen::Index n, const Rat& density) {
  if (density <= 0) throw std::invalid_argument("big_m_for_density: density must be positive");
  // smallest M with M >= 2^{n/d}, i.e. M^q >= 2^{n p} for n/d = (n q_d)/p_d
  Rat e = Rat(static_cast<long>(n)) / density;
  unsigned long p = numerator(e).convert_to<unsigned long>();
  unsigned long q = denominator(e).convert_to<unsigned long>();
  Int target = pow2(p);
  Int lo = pow2(p / q);  // lo^q <= target <= (2 lo)^q
  if (ipow(lo, q) >= target) return lo;
  Int hi = 2 * lo;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (ipow(mid, q) >= target) hi = mid; else lo = mid;
  }
  return hi;
}

KnapsackInstance generate_instance(const GeneratorParams& params, Rng& rng,
                                   int* regenerations) {
  if (params.n < 1 || params.big_m < 1 || params.v_max < 1)
    throw std::invalid_argument("generate_instance: invalid parameters");
  const Eigen::Index n = params.n;
  IntVec a(n);
  int regen = 0;
  for (;;) {
    for (Eigen::Index i = 0; i < n; ++i) a(i) = rng.below(params.big_m) + 1;
    if (gcd_vec(a) == 1) break;
    ++regen;
  }
  if (regenerations) *regenerations = regen;
  IntVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.below(params.v_max) + 1;
  Int av = a.dot(v);
  Int b1 = rng.below(av + 1);
  Int b2 = params.equality ? b1 : rng.below(av + 1);
  if (b1 > b2) std::swap(b1, b2);
  return KnapsackInstance(a, v, b1, b2);
}

json int_to_json(const Int& x) { return x.str(); }

json rat_to_json(const Rat& q) {
  json j;
  j["exact"] = q.str();
  j["approx"] = decimal6(q);
  return j;
}

json intvec_to_json(const IntVec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i).str());
  return j;
}

json intmat_to_json(const IntMat& m) {
  json j = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    j.push_back(row);
  }
  return j;
}

json ratvec_to_json(const RatVec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i).str());
  return j;
}

json instance_to_json(const KnapsackInstance& inst, const json& provenance) {
  json j;
  j["schema"] = "latwidth-instance/1";
  j["n"] = inst.n();
  j["a"] = intvec_to_json(inst.a);
  j["v"] = intvec_to_json(inst.v);
  j["beta1"] = inst.beta1.str();
  j["beta2"] = inst.beta2.str();
  if (!provenance.is_null() && !provenance.empty()) j["provenance"] = provenance;
  return j;
}

namespace {

Int parse_int_field(const json& v, const char* what) {
  try {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("instance document: bad integer in ") + what);
}

IntVec parse_intvec_field(const json& v, Eigen::Index n, const char* what) {
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n)
    throw std::invalid_argument(std::string("instance document: bad array ") + what);
  IntVec out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = parse_int_field(v[i], what);
  return out;
}

}  // namespace

KnapsackInstance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("a") ||
      !doc.contains("v") || !doc.contains("beta1") || !doc.contains("beta2"))
    throw std::invalid_argument("instance document: missing required field");
  Eigen::Index n = doc["n"].get<Eigen::Index>();
  if (n < 1) throw std::invalid_argument("instance document: n must be positive");
  IntVec a = parse_intvec_field(doc["a"], n, "a");
  IntVec v = parse_intvec_field(doc["v"], n, "v");
  Int b1 = parse_int_field(doc["beta1"], "beta1");
  Int b2 = parse_int_field(doc["beta2"], "beta2");
  return KnapsackInstance(a, v, b1, b2);
}

}  // namespace latwidth
