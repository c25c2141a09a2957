#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latwidth/pipeline.hpp"

namespace lw = latwidth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

lw::Rat parse_rat(const std::string& s) {
  // accepts "p/q" and plain decimals like "0.4"
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return lw::Rat(lw::Int(s.substr(0, slash)), lw::Int(s.substr(slash + 1)));
  auto dot = s.find('.');
  if (dot == std::string::npos) return lw::Rat(lw::Int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  bool neg = !digits.empty() && digits[0] == '-';
  std::string mag = neg ? digits.substr(1) : digits;
  // strip leading zeros so the bignum parser cannot mistake them for octal
  auto first = mag.find_first_not_of('0');
  mag = first == std::string::npos ? "0" : mag.substr(first);
  unsigned long frac = s.size() - dot - 1;
  lw::Rat r(lw::Int(mag), lw::ipow(lw::Int(10), frac));
  return neg ? -r : r;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

lw::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  lw::json doc;
  in >> doc;
  return doc;
}

struct ExperimentRow {
  lw::json report;
  Eigen::Index n;
  int index;
};

void write_csv_row(std::ostream& os, const lw::json& r, Eigen::Index n, int idx) {
  auto tri = [](const lw::json& v) -> std::string {
    if (v.is_null()) return "na";
    return v.get<bool>() ? "true" : "false";
  };
  const auto& rr = r["rangespace"];
  os << n << ',' << idx << ',' << r["density"].get<std::string>() << ','
     << (r["hypothesis"].get<bool>() ? "true" : "false") << ','
     << rr["decomposition"]["ratio"]["approx"].get<std::string>() << ','
     << rr["widths"]["iwidth_en"].get<std::string>() << ','
     << rr["widths"]["thm1_bound"].get<std::string>() << ',';
  if (rr["widths"]["branch_bound"].is_null())
    os << "na,";
  else
    os << rr["widths"]["branch_bound"].get<std::string>() << ',';
  if (r["nullspace"].is_null()) {
    os << "na,na,na,";
  } else {
    const auto& nn = r["nullspace"];
    os << nn["decomposition"]["ratio"]["approx"].get<std::string>() << ','
       << nn["widths"]["iwidth_en1"].get<std::string>() << ','
       << nn["widths"]["thm1_bound"].get<std::string>() << ',';
  }
  os << tri(rr["transference"]) << ','
     << (r["ok"].get<bool>() ? "true" : "false") << '\n';
}

int cmd_generate(Eigen::Index n, const std::string& big_m,
                 const std::string& density, long vmax, int count,
                 unsigned long long seed, bool equality, const std::string& out) {
  lw::GeneratorParams params;
  params.n = n;
  params.v_max = lw::Int(vmax);
  params.equality = equality;
  if (!big_m.empty() && !density.empty())
    throw CLI::ValidationError("use exactly one of --bigM / --density");
  if (!big_m.empty())
    params.big_m = lw::Int(big_m);
  else if (!density.empty())
    params.big_m = lw::big_m_for_density(n, parse_rat(density));
  else
    throw CLI::ValidationError("one of --bigM / --density is required");
  if (params.big_m < 1) throw CLI::ValidationError("M must be >= 1");

  lw::Rng rng(seed);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  for (int i = 0; i < count; ++i) {
    int regen = 0;
    lw::KnapsackInstance inst = lw::generate_instance(params, rng, &regen);
    lw::json prov;
    prov["seed"] = seed;
    prov["index"] = i;
    prov["bigM"] = params.big_m.str();
    prov["vmax"] = vmax;
    if (regen > 0) std::cerr << "instance " << i << ": regenerated " << regen
                             << " time(s) for gcd normalization\n";
    os << lw::instance_to_json(inst, prov).dump() << '\n';
  }
  return kExitOk;
}

int cmd_pipeline(const std::string& instance_path, bool oracle, long k,
                 bool normalize, bool timings, const std::string& out,
                 const std::string& format) {
  std::ifstream in(instance_path);
  if (!in) {
    std::cerr << "cannot open instance file: " << instance_path << '\n';
    return kExitInput;
  }
  lw::PipelineOptions opts;
  opts.run_oracle = oracle;
  opts.successive_k = k;
  opts.timings = timings;

  std::ofstream file;
  std::ostream& os = open_out(file, out);
  int worst = kExitOk;
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    any = true;
    lw::json doc = lw::json::parse(line);
    lw::KnapsackInstance inst = [&] {
      if (!normalize) return lw::instance_from_json(doc);
      Eigen::Index n = doc.at("n").get<Eigen::Index>();
      lw::IntVec a(n), v(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        a(i) = lw::Int(doc.at("a")[i].get<std::string>());
        v(i) = lw::Int(doc.at("v")[i].get<std::string>());
      }
      return lw::normalize_gcd(a, v, lw::Int(doc.at("beta1").get<std::string>()),
                               lw::Int(doc.at("beta2").get<std::string>()));
    }();
    lw::PipelineOutcome res = lw::run_pipeline(inst, opts);
    if (format == "json") {
      os << res.report.dump(2) << '\n';
    } else if (format == "text") {
      os << "instance n=" << inst.n() << " ok=" << std::boolalpha
         << res.report["ok"].get<bool>() << " hypothesis="
         << res.report["hypothesis"].get<bool>() << " ratio="
         << res.report["rangespace"]["decomposition"]["ratio"]["approx"]
                .get<std::string>()
         << '\n';
    } else if (format == "csv") {
      write_csv_row(os, res.report, inst.n(), 0);
    } else {
      throw CLI::ValidationError("unknown --format");
    }
    worst = std::max(worst, res.exit_code);
  }
  if (!any) {
    std::cerr << "no instance documents in " << instance_path << '\n';
    return kExitInput;
  }
  return worst;
}

int cmd_experiment(const std::string& config_path, const std::string& out_prefix) {
  lw::json cfg = read_json_file(config_path);
  Eigen::Index n_min = cfg.at("n_min").get<Eigen::Index>();
  Eigen::Index n_max = cfg.at("n_max").get<Eigen::Index>();
  int count = cfg.at("count").get<int>();
  unsigned long long seed = cfg.at("seed").get<unsigned long long>();
  long vmax = cfg.value("vmax", 5L);
  bool equality = cfg.value("equality", false);
  bool oracle = cfg.value("oracle", false);

  std::ofstream csv(out_prefix + ".csv");
  std::ofstream js(out_prefix + ".json");
  if (!csv || !js) {
    std::cerr << "cannot open output files with prefix " << out_prefix << '\n';
    return kExitInput;
  }
  csv << "n,index,density,hypothesis,ratio_range,iwidth_range,thm1_range,"
         "branch_bound,ratio_null,iwidth_null,thm1_null,transference,ok\n";

  lw::PipelineOptions opts;
  opts.run_oracle = oracle;
  int worst = kExitOk;
  long total = 0, iwidth_le1 = 0;
  lw::json reports = lw::json::array();
  for (Eigen::Index n = n_min; n <= n_max; ++n) {
    lw::GeneratorParams params;
    params.n = n;
    params.v_max = lw::Int(vmax);
    params.equality = equality;
    if (cfg.contains("bigM"))
      params.big_m = lw::Int(cfg["bigM"].get<std::string>());
    else
      params.big_m = lw::big_m_for_density(n, parse_rat(cfg.at("density").get<std::string>()));
    lw::Rng rng(seed + static_cast<unsigned long long>(n));
    for (int i = 0; i < count; ++i) {
      lw::KnapsackInstance inst = lw::generate_instance(params, rng);
      lw::PipelineOutcome res = lw::run_pipeline(inst, opts);
      write_csv_row(csv, res.report, n, i);
      reports.push_back(res.report);
      worst = std::max(worst, res.exit_code);
      ++total;
      if (lw::Int(res.report["rangespace"]["widths"]["iwidth_en"]
                      .get<std::string>()) <= 1)
        ++iwidth_le1;
    }
  }
  lw::json summary;
  summary["schema"] = "latwidth-experiment/1";
  summary["config"] = cfg;
  summary["total"] = total;
  summary["fraction_iwidth_le1"] =
      total ? lw::decimal6(lw::Rat(iwidth_le1, total)) : "0";
  summary["reports"] = reports;
  js << summary.dump(2) << '\n';
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-reformulation toolkit for knapsack feasibility"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "generate random instances");
  Eigen::Index g_n = 5;
  std::string g_m, g_d, g_out;
  long g_vmax = 5;
  int g_count = 1;
  unsigned long long g_seed = 1;
  bool g_eq = false;
  gen->add_option("--n", g_n, "dimension")->required();
  gen->add_option("--bigM", g_m, "weights uniform on {1..M} (decimal string)");
  gen->add_option("--density", g_d, "target density; sets M = ceil(2^{n/d})");
  gen->add_option("--vmax", g_vmax, "upper bounds uniform on {1..vmax}");
  gen->add_option("--count", g_count, "number of instances");
  gen->add_option("--seed", g_seed, "PRNG seed");
  gen->add_flag("--equality", g_eq, "force beta1 == beta2");
  gen->add_option("--out", g_out, "output file (default stdout)");

  auto* pipe = app.add_subcommand("pipeline", "run the full analysis pipeline");
  std::string p_inst, p_out, p_format = "json";
  bool p_oracle = false, p_norm = false, p_timings = false;
  long p_k = 0;
  pipe->add_option("--instance", p_inst, "instance file (JSON lines)")->required();
  pipe->add_flag("--oracle", p_oracle, "run brute-force oracle cross-checks");
  pipe->add_option("--k", p_k, "successive-approximation depth");
  pipe->add_flag("--normalize-gcd", p_norm, "divide weights by their gcd");
  pipe->add_flag("--timings", p_timings, "include stage timings in the report");
  pipe->add_option("--out", p_out, "output file (default stdout)");
  pipe->add_option("--format", p_format, "json, csv or text");

  auto* exp = app.add_subcommand("experiment", "batch experiment with summary");
  std::string e_cfg, e_out = "experiment";
  exp->add_option("--config", e_cfg, "experiment config JSON")->required();
  exp->add_option("--out", e_out, "output prefix (.csv and .json)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (gen->parsed())
      return cmd_generate(g_n, g_m, g_d, g_vmax, g_count, g_seed, g_eq, g_out);
    if (pipe->parsed())
      return cmd_pipeline(p_inst, p_oracle, p_k, p_norm, p_timings, p_out, p_format);
    if (exp->parsed()) return cmd_experiment(e_cfg, e_out);
  } catch (const lw::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
