#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace navskel {

struct PowerLawPoint {
  double x = 0.0;
  double y = 0.0;
};

/// y ~ amplitude * x^exponent, with r_squared measured in log-log space.
struct PowerLawFit {
  double amplitude = 0.0;
  double exponent = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;

  double operator()(double x) const;
};

/// Empirical scalings between a network, its skeleton and random trees.
/// The defaults are published corpus fits; every field can be overridden.
struct ScalingConstants {
  /// H_sk / H_o = skeleton_amplitude * (N_sk / N_o)^skeleton_exponent
  double skeleton_amplitude = 0.988;
  double skeleton_exponent = 2.355;
  /// H_o = inverse_amplitude * (N_sk / N_o)^(-inverse_exponent) * H_sk
  double inverse_amplitude = 1.012;
  double inverse_exponent = 2.35;
  /// H_simp / H_o = simp_amplitude * (N_sk / N_o)^simp_exponent
  double simp_amplitude = 0.983;
  double simp_exponent = 2.297;
  /// H_tree(N) = tree_amplitude * N^tree_exponent
  double tree_amplitude = 0.721;
  double tree_exponent = 2.550;

  /// Sets the field called `key` (the member name). Throws ArgumentError for
  /// unknown keys and for non-positive amplitudes.
  void set(std::string_view key, double value);
  void validate() const;
};

/// Skeleton-to-original size ratios below this give unreliable estimates.
inline constexpr double kReliableSkeletonRatio = 0.3;

/// Ordinary least squares of ln y on ln x.
///
/// Throws DomainError for non-positive coordinates and DegenerateFitError for
/// fewer than 3 points or fewer than 2 distinct x values. Constant y yields
/// r_squared = 1.
PowerLawFit fit_power_law(std::span<const PowerLawPoint> points);

/// H_o ~ inverse_amplitude * (n_skeleton / n_original)^(-inverse_exponent) * h_skeleton.
double estimate_h_from_skeleton(double h_skeleton, std::uint64_t n_skeleton,
                                std::uint64_t n_original, const ScalingConstants& c = {});

struct SkeletonEstimate {
  double h_skeleton = 0.0;
  double ratio = 0.0;
  double estimate_bits = 0.0;
  /// ratio < kReliableSkeletonRatio
  bool low_confidence = false;
};

SkeletonEstimate estimate_from_skeleton(double h_skeleton, std::uint64_t n_skeleton,
                                        std::uint64_t n_original, const ScalingConstants& c = {});

/// tree_amplitude * n^tree_exponent.
double approx_h_tree(std::uint64_t n, const ScalingConstants& c = {});

/// (estimate - actual) / actual. Throws ArgumentError unless actual > 0.
double relative_error(double estimate, double actual);

}  // namespace navskel
