#include "citecurve/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "citecurve/dist.hpp"
#include "citecurve/errors.hpp"
#include "citecurve/rng.hpp"

namespace citecurve {

void SimConfig::validate() const {
  std::ostringstream msg;
  if (!(lambda > 0.0 && lambda < 1.0)) {
    msg << "lambda must lie in (0, 1), got " << lambda;
  } else if (!(c0_param > 1.0) || !std::isfinite(c0_param)) {
    msg << "c0 parameter must exceed 1, got " << c0_param;
  } else if (n_articles < 10) {
    msg << "need at least 10 articles per dataset, got " << n_articles;
  } else if (n_datasets < 1) {
    msg << "need at least one dataset";
  } else {
    return;
  }
  throw ValidationError(msg.str());
}

std::vector<double> generate_sample(const SimConfig& config, std::size_t dataset_index) {
  config.validate();
  if (dataset_index >= config.n_datasets) {
    throw ValidationError("dataset index " + std::to_string(dataset_index) +
                          " out of range for " + std::to_string(config.n_datasets) +
                          " datasets");
  }
  const CounterStream stream(derive_stream_key(config.seed, dataset_index));
  const double scale = config.lambda * std::log(config.c0_param);

  std::vector<double> values(config.n_articles);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = normal_quantile(stream.uniform(i));
    const double c = std::exp(scale * (1.0 + x));
    values[i] = config.integer_rounding ? std::round(c) : c;
  }
  std::sort(values.begin(), values.end(), std::greater<>{});
  return values;
}

CitationList generate_dataset(const SimConfig& config, std::size_t dataset_index) {
  const auto values = generate_sample(config, dataset_index);
  std::vector<Count> counts(values.size());
  std::transform(values.begin(), values.end(), counts.begin(),
                 [](double v) { return static_cast<Count>(std::llround(v)); });
  return CitationList::from_raw(counts);
}

double dataset_slope(std::span<const double> ranked, SlopeEstimator estimator) {
  return fit_loglog(ranked, estimator).slope;
}

double dataset_slope(const CitationList& list, SlopeEstimator estimator) {
  return fit_loglog(list, estimator).slope;
}

SimResult run_simulation(const SimConfig& config, unsigned threads) {
  config.validate();
  const std::size_t count = config.n_datasets;
  std::vector<std::optional<double>> slopes(count);

  auto work = [&](std::size_t index) {
    try {
      slopes[index] = dataset_slope(generate_sample(config, index), config.estimator);
    } catch (const DegenerateDataError&) {
      slopes[index].reset();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
    }
  }

  SimResult result;
  result.config = config;
  for (std::size_t i = 0; i < count; ++i) {
    if (slopes[i]) {
      result.per_dataset_slopes.push_back(*slopes[i]);
    } else {
      result.failed_datasets.push_back(i);
    }
  }
  const auto& s = result.per_dataset_slopes;
  if (s.empty()) throw DegenerateDataError("no dataset produced a usable log-log fit");

  double sum = 0.0;
  for (double v : s) sum += v;
  result.mean_slope = sum / static_cast<double>(s.size());
  double ss = 0.0;
  for (double v : s) ss += (v - result.mean_slope) * (v - result.mean_slope);
  result.sd_slope = std::sqrt(ss / static_cast<double>(s.size()));
  return result;
}

std::vector<SimResult> run_lambda_table(std::span<const double> lambdas, std::size_t n_articles,
                                        std::size_t datasets, std::uint64_t seed,
                                        const TableOptions& options) {
  std::vector<SimResult> rows;
  rows.reserve(lambdas.size());
  for (std::size_t r = 0; r < lambdas.size(); ++r) {
    SimConfig config;
    config.lambda = lambdas[r];
    config.c0_param = options.c0_param;
    config.n_articles = n_articles;
    config.n_datasets = datasets;
    config.seed = seed + r;
    config.integer_rounding = options.integer_rounding;
    config.estimator = options.estimator;
    rows.push_back(run_simulation(config, options.threads));
  }
  return rows;
}

std::vector<ScaleRow> run_n_table(std::span<const ScaleEntry> entries, std::uint64_t seed,
                                  double lambda, TableOptions options) {
  std::vector<ScaleRow> rows;
  rows.reserve(entries.size());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    SimConfig config;
    config.lambda = lambda;
    config.c0_param = options.c0_param;
    config.n_articles = entries[r].n_articles;
    config.n_datasets = entries[r].datasets;
    config.seed = seed + r;
    config.integer_rounding = options.integer_rounding;
    config.estimator = options.estimator;

    ScaleRow row;
    row.result = run_simulation(config, options.threads);
    row.asymptote = slope_asymptote(config.n_articles);
    row.ratio = row.result.mean_slope / row.asymptote;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScaleRow> run_n_table(std::span<const std::size_t> sizes, std::size_t datasets,
                                  std::uint64_t seed, double lambda, TableOptions options) {
  std::vector<ScaleEntry> entries;
  entries.reserve(sizes.size());
  for (auto n : sizes) entries.push_back({n, datasets});
  return run_n_table(entries, seed, lambda, options);
}

}  // namespace citecurve
