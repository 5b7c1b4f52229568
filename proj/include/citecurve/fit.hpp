#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "citecurve/core.hpp"

namespace citecurve {

/// The decay law c_n = c0 * exp(-p * n^a).
struct PowerLawModel {
  double c0 = 1.0;
  double p = 0.5;
  double a = 0.5;

  /// c0 >= 1, p > 0 and 0 < a < 1.
  [[nodiscard]] bool is_valid() const noexcept;
  /// Throws DomainError when !is_valid().
  void validate() const;

  friend bool operator==(const PowerLawModel&, const PowerLawModel&) = default;
};

/// c0 * exp(-p * n^a); exactly c0 at n = 0.
double predict_count(const PowerLawModel& model, double n);

/// -ln(c_1 / c_0). Needs two publications with c_1 >= 1.
double estimate_p_ratio(const CitationList& list);

/// ln(c_0) / sqrt(i_1). Needs c_0 >= 2.
double estimate_p_sharpness(const CitationList& list);

/// Area estimator (c_0 * Gamma(1 + 1/a) / S)^a. At a = 0.5 this is
/// sqrt(2 c_0 / S).
double estimate_p_area(const CitationList& list, double a);
double estimate_p_area(double top, double total, double a);

/// Euler's gamma function for x > 0 (Lanczos, g = 7, nine terms).
double gamma_function(double x);

struct LogLogPoint {
  double x = 0.0;  // ln n
  double y = 0.0;  // ln(ln(c_0 / c_n))

  friend bool operator==(const LogLogPoint&, const LogLogPoint&) = default;
};

/// Points (ln n, ln ln(c_0/c_n)) for ranks n >= 1. Uncited entries and
/// entries tied with the top are skipped. `ranked` must be descending.
std::vector<LogLogPoint> loglog_points(std::span<const double> ranked);
std::vector<LogLogPoint> loglog_points(const CitationList& list);

/// How the slope of the log-log line is computed.
///
/// LeastSquares is the ordinary regression slope cov(x, y) / var(x).
/// Covariance takes the slope to be cov(x, y) itself, the recipe used to
/// produce the published synthetic slope tables; var(ln n) is close to 1
/// for large n so the two agree asymptotically.
enum class SlopeEstimator { LeastSquares, Covariance };

struct LogLogFit {
  double slope = 0.0;      // A estimate
  double intercept = 0.0;  // ln P estimate
  double p = 0.0;          // exp(intercept)
  double rms = 0.0;        // root-mean-square residual about the line
  std::size_t points_used = 0;

  friend bool operator==(const LogLogFit&, const LogLogFit&) = default;
};

/// Straight line through the points; intercept = avg(y) - slope * avg(x).
/// Throws DegenerateDataError for fewer than two points or var(x) = 0.
LogLogFit fit_points(std::span<const LogLogPoint> points,
                     SlopeEstimator estimator = SlopeEstimator::LeastSquares);
LogLogFit fit_loglog(std::span<const double> ranked,
                     SlopeEstimator estimator = SlopeEstimator::LeastSquares);
LogLogFit fit_loglog(const CitationList& list,
                     SlopeEstimator estimator = SlopeEstimator::LeastSquares);

/// All P estimates at a fixed exponent, plus the free log-log regression.
/// Estimators that cannot be evaluated on this list are left empty.
struct FitReport {
  double a = 0.5;
  std::optional<double> p_ratio;
  std::optional<double> p_sharpness;
  std::optional<double> p_area;
  std::optional<double> p_loglog;
  std::optional<double> a_loglog;
  std::optional<double> loglog_rms;
  std::optional<double> h_constant;  // (c0/i10)^a ln(c0/10)
  std::size_t points_used = 0;
  bool a_loglog_out_of_range = false;  // free slope outside (0, 1)

  friend bool operator==(const FitReport&, const FitReport&) = default;
};

/// Throws DegenerateDataError only when every estimator fails.
FitReport fixed_a_fit(const CitationList& list, double a);

/// Predicted i_j / i_k = (ln(c0/j) / ln(c0/k))^(1/a).
double predict_i_ratio(double c0, double a, std::uint64_t j, std::uint64_t k);

/// (c0/ik)^a * ln(c0/k).
double h_constant(double c0, double a, std::uint64_t k, double ik);

/// Solves (c0/h)^a * ln(c0/h) = constant for h in [1, c0) by bisection.
double solve_h(double c0, double a, double constant);

/// h-index implied by i10 through the constant (c0/i10)^a ln(c0/10).
double predict_h(double c0, double a, std::uint64_t i10);

}  // namespace citecurve
