#include "dirac_scatter/phase_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dscat {

namespace {

constexpr double pi = std::numbers::pi;

struct Tracker {
  const std::function<PhaseComponents(double)>& phase;
  const TrackingOptions& opts;

  double advance(double x_from, double d_from, double x_to, int depth) const
  {
    const double d_to = nearest_branch(principal_phase(phase(x_to)), d_from);
    if (std::abs(d_to - d_from) <= opts.max_jump || depth >= opts.max_depth)
      return d_to;
    const double mid = 0.5 * (x_from + x_to);
    const double d_mid = advance(x_from, d_from, mid, depth + 1);
    return advance(mid, d_mid, x_to, depth + 1);
  }

  double step_at(double x) const
  {
    double step = opts.max_step;
    if (opts.rel_step > 0.0)
      step = std::min(step, opts.rel_step * std::abs(x));
    return std::max(step, 1e-12 * opts.max_step);
  }
};

} // namespace

double principal_phase(const PhaseComponents& c)
{
  if (c.den == 0.0)
    return pi / 2;
  double d = std::atan(c.num / c.den);
  if (d <= -pi / 2)
    d += pi;
  return d;
}

double nearest_branch(double principal, double reference)
{
  return principal + pi * std::round((reference - principal) / pi);
}

double reduce_half_window(double delta)
{
  double d = delta - pi * std::floor((delta + pi / 2) / pi);
  if (d >= pi / 2)
    d -= pi;
  return d;
}

std::vector<double> track_phase(const std::function<PhaseComponents(double)>& phase,
                                double x_anchor, double delta_anchor,
                                const std::vector<double>& targets,
                                const TrackingOptions& opts)
{
  if (!(opts.max_step > 0.0))
    throw std::invalid_argument("track_phase: max_step must be > 0");
  const Tracker tracker{phase, opts};
  std::vector<double> out(targets.size());

  std::vector<std::size_t> above, below;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!std::isfinite(targets[i]))
      throw std::invalid_argument("track_phase: non-finite target");
    (targets[i] >= x_anchor ? above : below).push_back(i);
  }
  std::sort(above.begin(), above.end(), [&](auto a, auto b) { return targets[a] < targets[b]; });
  std::sort(below.begin(), below.end(), [&](auto a, auto b) { return targets[a] > targets[b]; });

  for (const auto* side : {&above, &below}) {
    double x = x_anchor;
    double d = delta_anchor;
    for (const auto idx : *side) {
      const double target = targets[idx];
      while (x != target) {
        const double step = tracker.step_at(x);
        const double next = std::abs(target - x) <= step ? target : x + std::copysign(step, target - x);
        d = tracker.advance(x, d, next, 0);
        x = next;
      }
      out[idx] = d;
    }
  }
  return out;
}

} // namespace dscat
