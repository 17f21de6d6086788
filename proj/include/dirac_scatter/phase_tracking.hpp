#pragma once

#include <functional>
#include <vector>

namespace dscat {

/// tan(delta) = num / den, kept separate so that den = 0 is representable.
struct PhaseComponents {
  double num = 0.0;
  double den = 1.0;
};

/// Principal value in (-pi/2, pi/2]; den == 0 gives exactly pi/2.
double principal_phase(const PhaseComponents& c);

/// principal + n pi closest to reference.
double nearest_branch(double principal, double reference);

/// Reduce to [-pi/2, pi/2).
double reduce_half_window(double delta);

struct TrackingOptions {
  /// Upper bound on the parameter step between evaluations.
  double max_step = 0.01;
  /// Additional bound rel_step * |x| (0 disables). Keeps sampling dense near x = 0.
  double rel_step = 0.0;
  /// Local bisection is triggered when consecutive values differ by more than this.
  double max_jump = 0.25;
  int max_depth = 40;
};

/// Continue the phase defined mod pi by `phase` along a real parameter,
/// starting from the known branch value delta_anchor at x_anchor.
/// Targets may lie on either side of the anchor and in any order; results are
/// returned in the order of `targets`.
std::vector<double> track_phase(const std::function<PhaseComponents(double)>& phase,
                                double x_anchor, double delta_anchor,
                                const std::vector<double>& targets,
                                const TrackingOptions& opts);

} // namespace dscat
