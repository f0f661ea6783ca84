// qnr: compute quadratic numerical ranges and run the concentration experiment.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnr/concentration.hpp"
#include "qnr/driver.hpp"
#include "qnr/error.hpp"
#include "qnr/io.hpp"
#include "qnr/zoo.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

// "60s", "500ms", "2m", "1.5h" or a bare number of seconds.
std::optional<qnr::Seconds> parse_duration(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const std::string unit = text.substr(used);
  double scale = 0.0;
  if (unit.empty() || unit == "s") scale = 1.0;
  else if (unit == "ms") scale = 1e-3;
  else if (unit == "m" || unit == "min") scale = 60.0;
  else if (unit == "h") scale = 3600.0;
  else return std::nullopt;
  if (!(value >= 0.0)) return std::nullopt;
  return qnr::Seconds(value * scale);
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("QNR_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw qnr::InvalidArgument(std::string("QNR_SEED is not an unsigned integer: ") + env);
    }
  }
  return flag_seed;
}

// Every k-th point so that at most max_points remain; 0 keeps everything.
qnr::PointCloud thin(const qnr::PointCloud& cloud, std::size_t max_points) {
  qnr::PointCloud out;
  if (max_points == 0 || cloud.size() <= max_points) {
    out.W = cloud.W;
    out.W_tilde = cloud.W_tilde;
    return out;
  }
  const std::size_t stride = (cloud.size() + max_points - 1) / max_points;
  for (std::size_t i = 0; i < cloud.size(); i += stride) out.append_point(cloud.W[i], cloud.W_tilde[i]);
  return out;
}

void write_svg(const std::string& path, const qnr::PointCloud& cloud, const std::string& title) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qnr::IoError("cannot open " + path + " for writing");
  qnr::render_svg(out, cloud, title);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct ComputeArgs {
  std::string gen;
  std::size_t dim = 40;
  std::string matrix;
  std::optional<long> split;
  std::string budget;
  std::optional<std::size_t> iterations;
  std::string method = "algorithm";
  std::optional<std::size_t> samples;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg;
  std::size_t svg_max_points = 200000;
  bool json_pairs = false;
  bool quiet = false;
};

int run_compute(const ComputeArgs& args) {
  const std::uint64_t seed = effective_seed(args.seed);
  std::optional<qnr::Seconds> budget;
  if (!args.budget.empty()) {
    budget = parse_duration(args.budget);
    if (!budget) throw qnr::InvalidArgument("cannot read --budget '" + args.budget + "'");
  }

  std::string matrix_id;
  std::optional<qnr::BlockMatrix> block;
  if (!args.matrix.empty()) {
    block = qnr::load_block_matrix(args.matrix, args.split ? std::optional<qnr::Index>(*args.split) : std::nullopt);
    matrix_id = args.matrix;
  } else {
    block = qnr::generate(args.gen, args.dim);
    matrix_id = args.gen + " dim " + std::to_string(block->dim());
  }

  qnr::PointCloud cloud;
  std::string budget_text;
  if (args.method == "algorithm") {
    qnr::DriverConfig cfg;
    cfg.alpha = args.alpha;
    cfg.seed = seed;
    cfg.max_outer_iterations = args.iterations;
    cfg.time_budget = budget ? budget : (args.iterations ? std::nullopt : std::optional(qnr::Seconds(60.0)));
    if (cfg.time_budget) budget_text = std::to_string(cfg.time_budget->count()) + "s";
    if (args.iterations) budget_text += (budget_text.empty() ? "" : ", ") + std::to_string(*args.iterations) + " iterations";
    qnr::DriverStats stats;
    cloud = qnr::compute_qnr(*block, cfg, &stats, [&](const qnr::PassLog& log) {
      if (args.quiet) return;
      std::fprintf(stderr, "iteration %zu %s: starts %zu, boxes %zu, p %.4g, points %zu, %.2fs\n", log.iteration,
                   log.tilde_pass ? "W~" : "W ", log.starts, log.boxes_per_side, log.penalty, log.cloud_size,
                   log.elapsed_seconds);
    });
    if (!args.quiet)
      std::fprintf(stderr, "done: %zu points, %zu outer iterations, %zu seeks, %.2fs\n", cloud.size(),
                   stats.outer_iterations, stats.seeks, stats.elapsed_seconds);
  } else {
    qnr::SamplingBudget sampling;
    sampling.count = args.samples;
    sampling.duration = budget;
    if (!sampling.count && !sampling.duration) sampling.duration = qnr::Seconds(60.0);
    if (sampling.duration) budget_text = std::to_string(sampling.duration->count()) + "s";
    if (sampling.count) budget_text += (budget_text.empty() ? "" : ", ") + std::to_string(*sampling.count) + " samples";
    cloud = qnr::random_sampling_baseline(*block, sampling, args.alpha, seed, args.json_pairs);
    if (!args.quiet) std::fprintf(stderr, "done: %zu sampled points\n", cloud.size());
  }

  if (ends_with(args.out, ".json")) {
    qnr::write_text_file(args.out, qnr::cloud_to_json(cloud, {matrix_id, seed, budget_text, args.method}, args.json_pairs));
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw qnr::IoError("cannot open " + args.out + " for writing");
    qnr::write_cloud_csv(out, cloud);
  }
  if (!args.svg.empty()) write_svg(args.svg, thin(cloud, args.svg_max_points), matrix_id + ", " + args.method);
  return 0;
}

struct ConcentrationArgs {
  std::string gen = "a5";
  std::vector<std::size_t> dims;
  std::size_t samples = 100000;
  std::vector<double> eps;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg_prefix;
  std::size_t svg_points = 20000;
};

int run_concentration(const ConcentrationArgs& args) {
  qnr::ConcentrationConfig cfg;
  cfg.dims = args.dims;
  cfg.epsilons = args.eps;
  cfg.samples_per_dim = args.samples;
  cfg.seed = effective_seed(args.seed);
  cfg.keep_points = args.svg_prefix.empty() ? 0 : args.svg_points;
  const std::string gen = args.gen;
  const qnr::ConcentrationReport report =
      qnr::concentration_experiment([&gen](std::size_t dim) { return qnr::generate(gen, dim); }, cfg);
  qnr::write_text_file(args.out, qnr::report_to_json(report, gen));
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    if (report.samples[i].empty()) continue;
    write_svg(args.svg_prefix + std::to_string(report.dims[i]) + ".svg", report.samples[i],
              gen + " dim " + std::to_string(report.dims[i]) + ", random sampling");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic numerical range of 2x2 block matrices"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* cmd = app.add_subcommand("compute", "Compute a point cloud of the quadratic numerical range");
  auto* gen_opt = cmd->add_option("--gen", compute.gen, "Built-in matrix: a1, a2, a3, a4 or a5")
                      ->check(CLI::IsMember({"a1", "a2", "a3", "a4", "a5"}));
  cmd->add_option("--dim", compute.dim, "Total dimension for a1/a5")->capture_default_str();
  auto* matrix_opt = cmd->add_option("--matrix", compute.matrix, "Matrix file (.json or Matrix Market)");
  cmd->add_option("--split", compute.split, "Size of the first block (required for Matrix Market)");
  gen_opt->excludes(matrix_opt);
  cmd->add_option("--budget", compute.budget, "Time budget, e.g. 60s, 500ms, 2m");
  cmd->add_option("--iterations", compute.iterations, "Fixed number of outer iterations (algorithm)");
  cmd->add_option("--method", compute.method, "algorithm or sampling")
      ->check(CLI::IsMember({"algorithm", "sampling"}))
      ->capture_default_str();
  cmd->add_option("--samples", compute.samples, "Number of samples (sampling)");
  cmd->add_option("--alpha", compute.alpha, "Splitting angle in radians")->capture_default_str();
  cmd->add_option("--seed", compute.seed, "Random seed (QNR_SEED overrides)")->capture_default_str();
  cmd->add_option("--out", compute.out, "Output cloud (.csv or .json)")->required();
  cmd->add_option("--svg", compute.svg, "Also write a scatter plot");
  cmd->add_option("--svg-max-points", compute.svg_max_points, "Thin the plot to this many points, 0 = all")
      ->capture_default_str();
  cmd->add_flag("--json-pairs", compute.json_pairs, "Store the unit vector pairs in JSON output");
  cmd->add_flag("-q,--quiet", compute.quiet, "No progress output");

  ConcentrationArgs conc;
  auto* ccmd = app.add_subcommand("concentration", "Measure concentration of sampled eigenvalues");
  ccmd->add_option("--gen", conc.gen, "Scalable matrix family: a1 or a5")
      ->check(CLI::IsMember({"a1", "a5"}))
      ->capture_default_str();
  ccmd->add_option("--dims", conc.dims, "Total dimensions, ascending")->delimiter(',')->required();
  ccmd->add_option("--samples", conc.samples, "Samples per dimension")->capture_default_str();
  ccmd->add_option("--eps", conc.eps, "Distance thresholds")->delimiter(',')->required();
  ccmd->add_option("--seed", conc.seed, "Random seed (QNR_SEED overrides)")->capture_default_str();
  ccmd->add_option("--out", conc.out, "Report JSON")->required();
  ccmd->add_option("--svg-prefix", conc.svg_prefix, "Write <prefix><dim>.svg scatter plots");
  ccmd->add_option("--svg-points", conc.svg_points, "Points per plot")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << (app.got_subcommand(cmd) ? cmd->help() : app.got_subcommand(ccmd) ? ccmd->help() : app.help());
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd)) {
      if (compute.gen.empty() && compute.matrix.empty()) {
        std::cerr << "compute needs --gen or --matrix\n" << cmd->help();
        return kExitUsage;
      }
      return run_compute(compute);
    }
    return run_concentration(conc);
  } catch (const qnr::ParseError& e) {
    std::cerr << "qnr: " << e.what() << '\n';
    return kExitInput;
  } catch (const qnr::IoError& e) {
    std::cerr << "qnr: " << e.what() << '\n';
    return kExitInput;
  } catch (const qnr::Error& e) {
    std::cerr << "qnr: " << e.what() << '\n';
    return kExitUsage;
  }
}
