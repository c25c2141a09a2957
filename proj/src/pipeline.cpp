#include "latwidth/pipeline.hpp"

#include <chrono>
#include <map>

namespace latwidth {

namespace {

json sqrt_value_json(const Rat& squared) {
  json j;
  j["exact_sq"] = squared.str();
  j["approx"] = decimal6_sqrt(squared);
  return j;
}

json decomposition_json(const Decomposition& dec) {
  json j;
  j["p"] = intvec_to_json(dec.p);
  j["lambda"] = rat_to_json(dec.lambda);
  j["r"] = ratvec_to_json(dec.r);
  j["r_norm"] = sqrt_value_json(dec.r2);
  j["ratio"] = sqrt_value_json(dec.ratio2);  // ||r|| / lambda
  j["sin"] = sqrt_value_json(dec.sin2);
  return j;
}

json prop1_json(const Prop1Verdict& v) {
  json j;
  j["sin_le_ratio"] = v.sin_le_ratio;
  j["sign_agree"] = v.sign_applicable ? json(v.sign_agree) : json(nullptr);
  j["rounding"] = v.rounding_applicable ? json(v.rounding) : json(nullptr);
  return j;
}

class StageTimer {
 public:
  explicit StageTimer(bool enabled) : enabled_(enabled) {}
  void mark(const std::string& stage) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    times_[stage] =
        std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count();
    last_ = now;
  }
  json to_json() const {
    json j;
    for (const auto& [k, v] : times_) j[k] = v;
    return j;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::map<std::string, long long> times_;
};

}  // namespace

PipelineOutcome run_pipeline(const KnapsackInstance& inst,
                             const PipelineOptions& opts) {
  PipelineOutcome out;
  json& rep = out.report;
  StageTimer timer(opts.timings);
  bool failure = false;

  rep["schema"] = "latwidth-report/1";
  rep["instance"] = instance_to_json(inst);
  rep["density"] = density_approx(inst.a);
  bool hyp = check_hypothesis(inst.a);
  rep["hypothesis"] = hyp;

  // rangespace branch
  RangespaceReform rr = build_rangespace(inst);
  IntVec p1 = extract_range_direction(rr);
  Decomposition d1 = decompose(inst.a, p1);
  Thm3Verdict t3 = certify_thm3(inst.a, d1);
  Prop1Verdict pr1 = check_prop1(inst.a, d1.p);
  timer.mark("rangespace");

  json jr;
  jr["aU"] = intvec_to_json(rr.aU);
  jr["U"] = intmat_to_json(rr.U);
  jr["U_inv"] = intmat_to_json(rr.U_inv);
  jr["decomposition"] = decomposition_json(d1);
  jr["thm3"] = {{"hyp", t3.hyp}, {"i1", t3.i1}, {"i2", t3.i2}, {"i3", t3.i3}};
  jr["prop1"] = prop1_json(pr1);
  if (hyp && !t3.all()) failure = true;
  if (!pr1.sin_le_ratio) failure = true;

  IntVec en = IntVec::Zero(inst.n());
  en(inst.n() - 1) = 1;
  Int iw_range = iwidth(en, rangespace_polytope(rr));
  Int bound_range = thm1_bound_range(inst.a, inst.v, inst.beta1, inst.beta2);
  json jw;
  jw["iwidth_en"] = iw_range.str();
  jw["thm1_bound"] = bound_range.str();
  bool p1_nonneg = true;
  for (Eigen::Index i = 0; i < d1.p.size(); ++i)
    if (d1.p(i) < 0) p1_nonneg = false;
  if (p1_nonneg) {
    Int bb = branch_bound(d1, inst.v, inst.beta1, inst.beta2);
    jw["branch_bound"] = bb.str();
    Int iw_p = iwidth(d1.p, knapsack_polytope(inst));
    jw["iwidth_p"] = iw_p.str();
    if (iw_p > bb) failure = true;  // Theorem branch-thm is unconditional
  } else {
    jw["branch_bound"] = nullptr;
    jw["iwidth_p"] = nullptr;
  }
  if (hyp && iw_range > bound_range) failure = true;
  jr["widths"] = jw;
  bool trans_range = transference_check_range(rr, p1);
  jr["transference"] = trans_range;
  if (!trans_range) failure = true;
  rep["rangespace"] = jr;
  timer.mark("rangespace_widths");

  // nullspace branch (equality instances only, as (KP-N) is stated)
  if (inst.beta1 == inst.beta2 && inst.n() >= 2) {
    NullspaceReform nr = build_nullspace(inst);
    IntVec p2 = extract_null_direction(nr);
    Decomposition d2 = decompose(inst.a, p2);
    Thm4Verdict t4 = certify_thm4(inst.a, d2);
    json jn;
    jn["V"] = intmat_to_json(nr.V);
    jn["x_beta"] = intvec_to_json(nr.x_beta);
    jn["b"] = intvec_to_json(nr.b);
    jn["decomposition"] = decomposition_json(d2);
    jn["thm4"] = {{"hyp", t4.hyp},
                  {"i1", t4.i1},
                  {"i2", t4.i2},
                  {"r_nonzero", t4.r_nonzero}};
    jn["prop1"] = prop1_json(check_prop1(inst.a, d2.p));
    if (hyp && !t4.all()) failure = true;
    IntVec en1 = IntVec::Zero(inst.n() - 1);
    en1(inst.n() - 2) = 1;
    Int iw_null = iwidth(en1, nullspace_polytope(nr));
    Int bound_null = thm1_bound_null(inst.a, inst.v);
    jn["widths"] = {{"iwidth_en1", iw_null.str()},
                    {"thm1_bound", bound_null.str()}};
    if (hyp && iw_null > bound_null) failure = true;
    bool trans_null = transference_check_null(nr, p2);
    jn["transference"] = trans_null;
    if (!trans_null) failure = true;
    rep["nullspace"] = jn;

    if (opts.successive_k > 0) {
      IntMat vb(inst.n(), inst.n());
      vb.leftCols(inst.n() - 1) = nr.V;
      vb.col(inst.n() - 1) = nr.b;
      RatMat inv = inverse_rational(vb);
      IntMat vb_inv(inst.n(), inst.n());
      for (Eigen::Index i = 0; i < inst.n(); ++i)
        for (Eigen::Index j = 0; j < inst.n(); ++j)
          vb_inv(i, j) = numerator(inv(i, j));
      json js = json::array();
      for (Eigen::Index k = 1; k <= opts.successive_k && k <= inst.n() - 1; ++k) {
        SuccessiveApprox s =
            successive(vb_inv, inst.a, k, SuccessiveSource::Null);
        Thm6Verdict v6 = certify_thm6(inst.a, s);
        json e;
        e["k"] = k;
        e["lambda_k"] = sqrt_value_json(s.lambda_k2);
        e["r_norm"] = sqrt_value_json(norm_sq(s.r));
        e["thm6"] = {{"i1", v6.i1},
                     {"r_nonzero", v6.r_nonzero},
                     {"sin_le_ratio", v6.sin_le_ratio},
                     {"ratio_ub", v6.ratio_ub}};
        if (hyp && !v6.all()) failure = true;
        js.push_back(e);
      }
      rep["nullspace"]["successive"] = js;
    }
  } else {
    rep["nullspace"] = nullptr;
  }
  timer.mark("nullspace");

  if (opts.successive_k > 0) {
    json js = json::array();
    for (Eigen::Index k = 1; k <= opts.successive_k && k <= inst.n(); ++k) {
      SuccessiveApprox s = successive(rr.U_inv, inst.a, k, SuccessiveSource::Range);
      ThmKVerdict v5 = certify_thm5(inst.a, s);
      json e;
      e["k"] = k;
      e["lambda_k"] = sqrt_value_json(s.lambda_k2);
      e["r_norm"] = sqrt_value_json(norm_sq(s.r));
      e["thm5"] = {{"i1", v5.i1},
                   {"lambda_lb", v5.lambda_lb},
                   {"sin_le_ratio", v5.sin_le_ratio},
                   {"ratio_ub", v5.ratio_ub}};
      if (hyp && !v5.all()) failure = true;
      js.push_back(e);
    }
    rep["successive_range"] = js;
  }
  timer.mark("successive");

  if (opts.run_oracle) {
    json jo;
    Polytope q = knapsack_polytope(inst);
    RatVec c = to_rat(d1.p);
    LpResult s_max = lp_optimize(c, q, true);
    LpResult o_max = vertex_enum_optimize(c, q, true, opts.budget);
    bool lp_agree = s_max.status == o_max.status &&
                    (s_max.status != LpStatus::Optimal || s_max.value == o_max.value);
    Int nodes = node_count(inst, d1.p, opts.budget);
    Int iw_p1 = iwidth(d1.p, q);
    jo["lp_agree"] = lp_agree;
    jo["node_count"] = nodes.str();
    jo["node_count_agree"] = nodes == iw_p1;
    bool bij = bijection_check(inst, rr, opts.budget);
    jo["bijection_range"] = bij;
    if (inst.beta1 == inst.beta2 && inst.n() >= 2) {
      NullspaceReform nr = build_nullspace(inst);
      jo["bijection_null"] = bijection_check(inst, nr, opts.budget);
      if (!jo["bijection_null"].get<bool>()) failure = true;
    } else {
      jo["bijection_null"] = nullptr;
    }
    if (!lp_agree || nodes != iw_p1 || !bij) failure = true;
    rep["oracle"] = jo;
  } else {
    rep["oracle"] = nullptr;
  }
  timer.mark("oracle");

  if (opts.timings) rep["timings"] = timer.to_json();
  out.exit_code = failure ? 1 : 0;
  rep["ok"] = !failure;
  return out;
}

}  // namespace latwidth
