#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "citecurve/core.hpp"
#include "citecurve/fit.hpp"

namespace citecurve {

/// One seeded Monte Carlo experiment: n_datasets synthetic citation lists
/// of n_articles each, C = exp((lambda + lambda X) ln c0_param), X ~ N(0,1).
struct SimConfig {
  double lambda = 0.25;
  double c0_param = 100.0;
  std::size_t n_articles = 200;
  std::size_t n_datasets = 100;
  std::uint64_t seed = 0;
  bool integer_rounding = true;
  SlopeEstimator estimator = SlopeEstimator::Covariance;

  /// Throws ValidationError on out-of-range fields.
  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

struct SimResult {
  double mean_slope = 0.0;
  double sd_slope = 0.0;  // population convention
  std::vector<double> per_dataset_slopes;       // successful datasets, index order
  std::vector<std::size_t> failed_datasets;     // indices with no usable fit
  SimConfig config;
};

/// Descending synthetic values for one dataset, rounded to the nearest
/// integer when config.integer_rounding.
std::vector<double> generate_sample(const SimConfig& config, std::size_t dataset_index);

/// generate_sample rounded to integer counts regardless of
/// config.integer_rounding.
CitationList generate_dataset(const SimConfig& config, std::size_t dataset_index);

/// Log-log slope with the list's own maximum as c0.
double dataset_slope(std::span<const double> ranked,
                     SlopeEstimator estimator = SlopeEstimator::Covariance);
double dataset_slope(const CitationList& list,
                     SlopeEstimator estimator = SlopeEstimator::Covariance);

/// Runs all datasets (on `threads` workers, 0 = hardware concurrency) and
/// aggregates in index order. The result does not depend on `threads`.
SimResult run_simulation(const SimConfig& config, unsigned threads = 0);

struct TableOptions {
  double c0_param = 100.0;
  bool integer_rounding = true;
  SlopeEstimator estimator = SlopeEstimator::Covariance;
  unsigned threads = 0;
};

inline TableOptions continuous_options() {
  TableOptions options;
  options.integer_rounding = false;
  return options;
}

inline constexpr double kTableLambdas[] = {0.2, 0.25, 0.3, 0.35, 0.4, 0.45};
inline constexpr std::size_t kTableSizes[] = {100, 1000, 10000, 100000, 1000000};

/// One SimResult per lambda. Row r uses seed + r.
std::vector<SimResult> run_lambda_table(std::span<const double> lambdas, std::size_t n_articles,
                                        std::size_t datasets, std::uint64_t seed,
                                        const TableOptions& options = {});

struct ScaleRow {
  SimResult result;
  double asymptote = 0.0;  // slope_asymptote(N)
  double ratio = 0.0;      // mean_slope / asymptote
};

struct ScaleEntry {
  std::size_t n_articles = 0;
  std::size_t datasets = 0;
};

/// One row per entry. Row r uses seed + r. The slope of normal order
/// statistics does not depend on lambda or c0_param unless rounding is on,
/// so the default here is continuous values.
std::vector<ScaleRow> run_n_table(std::span<const ScaleEntry> entries, std::uint64_t seed,
                                  double lambda, TableOptions options = continuous_options());

std::vector<ScaleRow> run_n_table(std::span<const std::size_t> sizes, std::size_t datasets,
                                  std::uint64_t seed, double lambda,
                                  TableOptions options = continuous_options());

}  // namespace citecurve
