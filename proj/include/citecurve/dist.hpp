#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "citecurve/core.hpp"

namespace citecurve {

/// Leading-digit frequencies against Benford's law. Slot d-1 is digit d.
struct BenfordReport {
  std::array<double, 9> observed{};
  std::array<double, 9> expected{};
  double max_abs_deviation = 0.0;
  double chi_square = 0.0;  // Pearson, 8 degrees of freedom
  std::uint64_t sample_size = 0;

  friend bool operator==(const BenfordReport&, const BenfordReport&) = default;
};

/// Statistics of x = ln C / ln c0 over the cited entries, and the raw-count
/// moments used to estimate lambda.
struct LogNormalSummary {
  double mu = 0.0;
  double sigma = 0.0;
  double lambda_direct = 0.0;  // (mu + sigma) / 2
  std::optional<double> lambda_moments;
  double sample_mean = 0.0;
  double sample_sd = 0.0;
  std::uint64_t entries_used = 0;

  friend bool operator==(const LogNormalSummary&, const LogNormalSummary&) = default;
};

/// log10(1 + 1/d) for d in 1..9.
double benford_expected(int digit);

/// Throws DegenerateDataError when the list has no nonzero count.
BenfordReport benford_report(const CitationList& list);

/// Population-convention mean and standard deviation throughout. Needs
/// c0 >= 2 and at least two cited entries.
LogNormalSummary normalized_log_stats(const CitationList& list);

/// sqrt(ln(1 + (s/m)^2)) / ln(c0), the lambda whose log-normal has ratio s/m.
double lambda_from_moments(double mean, double sd, double c0);

/// sqrt(exp((lambda ln c0)^2) - 1), the s/m ratio the model implies.
double lognormal_sd_over_mean(double lambda, double c0);

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse standard normal CDF (Wichura's AS 241, about 1e-16 relative).
double normal_quantile(double rho);

/// Expected position of the rank-n observation (rank 0 = maximum) among
/// count standard normal draws: q(1 - (n + 0.5) / count).
double expected_order_statistic(std::uint64_t rank, std::uint64_t count);

enum class AsymptoteForm {
  PerLogN,   // ln(ln N^2) / ln N, consistent with the measured slope ratios
  PerLogN2,  // ln(ln N^2) / ln N^2, the alternate printed form
};

/// Large-N bound on the fitted log-log slope of normal order statistics.
double slope_asymptote(std::uint64_t count, AsymptoteForm form = AsymptoteForm::PerLogN);

}  // namespace citecurve
