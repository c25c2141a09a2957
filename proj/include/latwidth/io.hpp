#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "latwidth/knapsack.hpp"

namespace latwidth {

using json = nlohmann::ordered_json;

// Deterministic generator; all draws go through rejection sampling on raw
// 64-bit words so the stream is reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t word() { return eng_(); }
  // uniform on {0, ..., n-1}, n >= 1
  Int below(const Int& n);

 private:
  std::mt19937_64 eng_;
};

struct GeneratorParams {
  Eigen::Index n = 0;
  Int big_m;        // a_i uniform on {1..M}
  Int v_max;        // v_i uniform on {1..v_max}
  bool equality = false;  // force beta1 == beta2
};

// M = ceil(2^{n/d}) for density mode, exactly
Int big_m_for_density(Eigen::Index n, const Rat& density);

// a_i uniform, gcd normalized to 1 by regeneration (count reported);
// beta bounds sampled within [0, a.v]
KnapsackInstance generate_instance(const GeneratorParams& params, Rng& rng,
                                   int* regenerations = nullptr);

// decimal strings for all arbitrary-precision values, canonical field order
json instance_to_json(const KnapsackInstance& inst, const json& provenance = {});
KnapsackInstance instance_from_json(const json& doc);

// serialization helpers shared by the report builder
json int_to_json(const Int& x);
json rat_to_json(const Rat& q);           // {"exact": "p/q", "approx": "..."}
json intvec_to_json(const IntVec& v);
json intmat_to_json(const IntMat& m);
json ratvec_to_json(const RatVec& v);

}  // namespace latwidth
