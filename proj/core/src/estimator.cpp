#include "navskel/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "navskel/error.hpp"

namespace navskel {

double PowerLawFit::operator()(double x) const { return amplitude * std::pow(x, exponent); }

void ScalingConstants::set(std::string_view key, double value) {
  struct Field {
    std::string_view name;
    double ScalingConstants::*member;
  };
  static constexpr Field kFields[] = {
      {"skeleton_amplitude", &ScalingConstants::skeleton_amplitude},
      {"skeleton_exponent", &ScalingConstants::skeleton_exponent},
      {"inverse_amplitude", &ScalingConstants::inverse_amplitude},
      {"inverse_exponent", &ScalingConstants::inverse_exponent},
      {"simp_amplitude", &ScalingConstants::simp_amplitude},
      {"simp_exponent", &ScalingConstants::simp_exponent},
      {"tree_amplitude", &ScalingConstants::tree_amplitude},
      {"tree_exponent", &ScalingConstants::tree_exponent},
  };
  auto it = std::find_if(std::begin(kFields), std::end(kFields),
                         [&](const Field& f) { return f.name == key; });
  if (it == std::end(kFields)) {
    throw ArgumentError(fmt::format("unknown scaling constant '{}'", key));
  }
  this->*(it->member) = value;
  validate();
}

void ScalingConstants::validate() const {
  for (double a : {skeleton_amplitude, inverse_amplitude, simp_amplitude, tree_amplitude}) {
    if (!(a > 0.0)) throw ArgumentError(fmt::format("amplitudes must be positive, got {}", a));
  }
}

PowerLawFit fit_power_law(std::span<const PowerLawPoint> points) {
  if (points.size() < 3) {
    throw DegenerateFitError(fmt::format("need at least 3 points, got {}", points.size()));
  }
  for (const auto& p : points) {
    if (!(p.x > 0.0) || !(p.y > 0.0)) {
      throw DomainError(fmt::format("power-law fit needs positive data, got ({}, {})", p.x, p.y));
    }
  }
  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += std::log(p.x);
    mean_y += std::log(p.y);
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.x) - mean_x;
    const double dy = std::log(p.y) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const bool distinct_x = std::any_of(points.begin(), points.end(),
                                      [&](const auto& p) { return p.x != points.front().x; });
  if (!distinct_x || sxx == 0.0) throw DegenerateFitError("all x values are equal");

  PowerLawFit fit;
  fit.n_points = points.size();
  fit.exponent = sxy / sxx;
  fit.amplitude = std::exp(mean_y - fit.exponent * mean_x);
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0.0;
    for (const auto& p : points) {
      const double r = std::log(p.y) - (mean_y + fit.exponent * (std::log(p.x) - mean_x));
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

double estimate_h_from_skeleton(double h_skeleton, std::uint64_t n_skeleton,
                                std::uint64_t n_original, const ScalingConstants& c) {
  if (n_skeleton == 0) throw ArgumentError("skeleton must have at least one node");
  if (n_skeleton > n_original) {
    throw ArgumentError(fmt::format("skeleton has {} nodes, more than the original {}", n_skeleton,
                                    n_original));
  }
  if (!(h_skeleton >= 0.0)) {
    throw ArgumentError(fmt::format("skeleton search information must be >= 0, got {}", h_skeleton));
  }
  const double ratio = static_cast<double>(n_skeleton) / static_cast<double>(n_original);
  return c.inverse_amplitude * std::pow(ratio, -c.inverse_exponent) * h_skeleton;
}

SkeletonEstimate estimate_from_skeleton(double h_skeleton, std::uint64_t n_skeleton,
                                        std::uint64_t n_original, const ScalingConstants& c) {
  SkeletonEstimate e;
  e.h_skeleton = h_skeleton;
  e.estimate_bits = estimate_h_from_skeleton(h_skeleton, n_skeleton, n_original, c);
  e.ratio = static_cast<double>(n_skeleton) / static_cast<double>(n_original);
  e.low_confidence = e.ratio < kReliableSkeletonRatio;
  return e;
}

double approx_h_tree(std::uint64_t n, const ScalingConstants& c) {
  return c.tree_amplitude * std::pow(static_cast<double>(n), c.tree_exponent);
}

double relative_error(double estimate, double actual) {
  if (!(actual > 0.0)) {
    throw ArgumentError(fmt::format("relative error needs a positive reference, got {}", actual));
  }
  return (estimate - actual) / actual;
}

}  // namespace navskel
