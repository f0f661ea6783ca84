#include "qnr/driver.hpp"

#include <cmath>

#include "qnr/error.hpp"

namespace qnr {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::optional<Seconds> budget) : start_(Clock::now()) {
    if (budget) end_ = start_ + std::chrono::duration_cast<Clock::duration>(*budget);
  }

  bool passed() const { return end_ && Clock::now() > *end_; }
  double elapsed() const { return Seconds(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> end_;
};

void append_labelled(PointCloud& cloud, const BlockMatrix& block, UnitPair pair, double alpha) {
  const EigenSplit split = split_by_alpha(eigen2x2(reduce(block, pair)), alpha);
  cloud.append(split.lambda_alpha, split.lambda_alpha_pi, std::move(pair));
}

}  // namespace

void DriverConfig::validate() const {
  if (!time_budget && !max_outer_iterations)
    throw InvalidArgument("either a time budget or an outer-iteration count is required");
  if (time_budget && !(time_budget->count() > 0.0)) throw InvalidArgument("time budget must be positive");
  if (initial_samples < 1) throw InvalidArgument("initial_samples must be at least 1");
  if (boxes_initial < 2) throw InvalidArgument("boxes_initial must be at least 2");
  if (directions_per_start < 1) throw InvalidArgument("directions_per_start must be at least 1");
  if (seek_iterations < 1) throw InvalidArgument("seek_iterations must be at least 1");
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  if (!(escalation_factor >= 1.0)) throw InvalidArgument("escalation_factor must be at least 1");
  seek.validate();
}

PointCloud compute_qnr(const BlockMatrix& block, const DriverConfig& cfg, DriverStats* stats,
                       const std::function<void(const PassLog&)>& on_pass) {
  cfg.validate();
  const Deadline deadline(cfg.time_budget);
  Rng rng(cfg.seed);

  PointCloud cloud;
  cloud.W.reserve(cfg.initial_samples);
  cloud.W_tilde.reserve(cfg.initial_samples);
  cloud.pairs.reserve(cfg.initial_samples);
  for (std::size_t i = 0; i < cfg.initial_samples; ++i)
    append_labelled(cloud, block, sample_unit_pair(block.n1(), block.n2(), rng), cfg.alpha);

  SeekConfig seek = cfg.seek;
  seek.max_iterations = cfg.seek_iterations;

  std::size_t boxes[2] = {cfg.boxes_initial, cfg.boxes_initial};
  std::size_t counters[2] = {0, 0};
  DriverStats local;
  bool out_of_time = deadline.passed();

  for (std::size_t iteration = 0; !out_of_time; ++iteration) {
    if (cfg.max_outer_iterations && iteration >= *cfg.max_outer_iterations) break;
    for (int pass = 0; pass < 2 && !out_of_time; ++pass) {
      const std::vector<Complex>& component = pass == 0 ? cloud.W : cloud.W_tilde;
      const GridSelection sel = grid_select(component, cloud.pairs, boxes[pass], iteration, cfg.grid);
      const double pass_alpha = cfg.alpha + (pass == 0 ? 0.0 : kPi);

      for (const GridStart& start : sel.starts) {
        const double theta0 = rng.angle();
        for (std::size_t l = 0; l < cfg.directions_per_start; ++l) {
          const double theta =
              theta0 + static_cast<double>(l) * kTwoPi / static_cast<double>(cfg.directions_per_start);
          const Complex rot = std::polar(1.0, theta);
          const BlockMatrix rotated = block.scaled(rot);
          const ObjectiveParams params = ObjectiveParams::make(pass_alpha - theta, rot * start.lambda0, sel.penalty);
          for (UnitPair& p : seek_boundary(rotated, start.pair, params, seek))
            append_labelled(cloud, block, std::move(p), cfg.alpha);
          ++local.seeks;
          if (deadline.passed()) {
            out_of_time = true;
            break;
          }
        }
        if (out_of_time) break;
      }
      if (out_of_time) break;

      ++local.passes;
      const std::size_t count = sel.starts.size();
      if (should_escalate(counters[pass], count, cfg.escalation_ratio))
        boxes[pass] = static_cast<std::size_t>(cfg.escalation_factor * static_cast<double>(boxes[pass]));
      counters[pass] = count;
      if (on_pass)
        on_pass({iteration, pass == 1, count, sel.boxes_per_side, sel.penalty, cloud.size(), deadline.elapsed()});
    }
    if (!out_of_time) ++local.outer_iterations;
  }

  local.boxes_final = boxes[0];
  local.boxes_tilde_final = boxes[1];
  local.elapsed_seconds = deadline.elapsed();
  if (stats) *stats = local;
  return cloud;
}

PointCloud random_sampling_baseline(const BlockMatrix& block, const SamplingBudget& budget, double alpha,
                                    std::uint64_t seed, bool keep_pairs) {
  if (!budget.count && !budget.duration) throw InvalidArgument("sampling needs a count or a duration");
  const Deadline deadline(budget.duration);
  Rng rng(seed);
  PointCloud cloud;
  if (budget.count) {
    cloud.W.reserve(*budget.count);
    cloud.W_tilde.reserve(*budget.count);
    if (keep_pairs) cloud.pairs.reserve(*budget.count);
  }
  constexpr std::size_t kClockStride = 256;
  for (std::size_t i = 0;; ++i) {
    if (budget.count && i >= *budget.count) break;
    if (budget.duration && i % kClockStride == 0 && deadline.passed()) break;
    UnitPair pair = sample_unit_pair(block.n1(), block.n2(), rng);
    const EigenSplit split = split_by_alpha(eigen2x2(reduce(block, pair)), alpha);
    if (keep_pairs)
      cloud.append(split.lambda_alpha, split.lambda_alpha_pi, std::move(pair));
    else
      cloud.append_point(split.lambda_alpha, split.lambda_alpha_pi);
  }
  return cloud;
}

}  // namespace qnr
