#include "citecurve/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "citecurve/errors.hpp"

namespace citecurve {

double benford_expected(int digit) {
  if (digit < 1 || digit > 9) {
    throw DomainError("benford_expected: digit must be in 1..9, got " + std::to_string(digit));
  }
  return std::log10(1.0 + 1.0 / static_cast<double>(digit));
}

BenfordReport benford_report(const CitationList& list) {
  const auto hist = first_digit_histogram(list);
  std::uint64_t total = 0;
  for (auto c : hist) total += c;
  if (total == 0) throw DegenerateDataError("Benford test needs at least one nonzero count");

  BenfordReport report;
  report.sample_size = total;
  const auto n = static_cast<double>(total);
  for (int d = 1; d <= 9; ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    report.expected[i] = benford_expected(d);
    report.observed[i] = static_cast<double>(hist[i]) / n;
    report.max_abs_deviation =
        std::max(report.max_abs_deviation, std::abs(report.observed[i] - report.expected[i]));
    const double expected_count = n * report.expected[i];
    const double diff = static_cast<double>(hist[i]) - expected_count;
    report.chi_square += diff * diff / expected_count;
  }
  return report;
}

LogNormalSummary normalized_log_stats(const CitationList& list) {
  const auto top = list.top();
  if (top < 2) throw DegenerateDataError("log-normal statistics need a top count of at least 2");
  const auto cited = i_index(list, 1);
  if (cited < 2) throw DegenerateDataError("log-normal statistics need two cited publications");

  const double log_top = std::log(static_cast<double>(top));
  const auto counts = list.counts().first(cited);
  const auto m = static_cast<double>(cited);

  double mean_x = 0.0;
  double mean_c = 0.0;
  for (Count c : counts) {
    mean_x += std::log(static_cast<double>(c)) / log_top;
    mean_c += static_cast<double>(c);
  }
  mean_x /= m;
  mean_c /= m;

  double var_x = 0.0;
  double var_c = 0.0;
  for (Count c : counts) {
    const double dx = std::log(static_cast<double>(c)) / log_top - mean_x;
    const double dc = static_cast<double>(c) - mean_c;
    var_x += dx * dx;
    var_c += dc * dc;
  }

  LogNormalSummary s;
  s.mu = mean_x;
  s.sigma = std::sqrt(var_x / m);
  s.lambda_direct = 0.5 * (s.mu + s.sigma);
  s.sample_mean = mean_c;
  s.sample_sd = std::sqrt(var_c / m);
  s.entries_used = cited;
  if (s.sample_sd > 0.0) {
    s.lambda_moments = lambda_from_moments(s.sample_mean, s.sample_sd, static_cast<double>(top));
  }
  return s;
}

double lambda_from_moments(double mean, double sd, double c0) {
  if (!(c0 > 1.0)) throw DomainError("lambda_from_moments: c0 must exceed 1");
  if (!(mean > 0.0)) throw DomainError("lambda_from_moments: mean must be positive");
  if (!(sd >= 0.0)) throw DomainError("lambda_from_moments: sd must be non-negative");
  const double ratio = sd / mean;
  return std::sqrt(std::log1p(ratio * ratio)) / std::log(c0);
}

double lognormal_sd_over_mean(double lambda, double c0) {
  if (!(lambda >= 0.0)) throw DomainError("lognormal_sd_over_mean: lambda must be non-negative");
  if (!(c0 > 1.0)) throw DomainError("lognormal_sd_over_mean: c0 must exceed 1");
  const double spread = lambda * std::log(c0);
  return std::sqrt(std::expm1(spread * spread));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    std::ostringstream msg;
    msg << "normal_quantile: probability must lie in (0, 1), got " << rho;
    throw DomainError(msg.str());
  }

  // Wichura, Algorithm AS 241 (PPND16)
  const double q = rho - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                 67265.770927008700853) * r + 45921.953931549871457) * r +
               13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((r * 5226.495278852545925 + 28729.085735721942674) * r +
                 39307.89580009271061) * r + 21213.794301586595867) * r +
               5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }

  double r = q < 0.0 ? rho : 1.0 - rho;
  r = std::sqrt(-std::log(r));
  double value = 0.0;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                  0.24178072517745061177) * r + 1.27045825245236838258) * r +
                3.64784832476320460504) * r + 5.7694972214606914055) * r +
              4.6303378461565452959) * r + 1.42343711074968357734) /
            (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                  0.0151986665636164571966) * r + 0.14810397642748007459) * r +
                0.68976733498510000455) * r + 1.6763848301838038494) * r +
              2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                  0.0012426609473880784386) * r + 0.026532189526576123093) * r +
                0.29656057182850489123) * r + 1.7848265399172913358) * r +
              5.4637849111641143699) * r + 6.6579046435011037772) /
            (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                  1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
                0.0148753612908506148525) * r + 0.13692988092273580531) * r +
              0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -value : value;
}

double expected_order_statistic(std::uint64_t rank, std::uint64_t count) {
  if (count == 0 || rank >= count) {
    throw DomainError("expected_order_statistic: rank " + std::to_string(rank) +
                      " out of range for " + std::to_string(count) + " observations");
  }
  const double rho =
      1.0 - (static_cast<double>(rank) + 0.5) / static_cast<double>(count);
  return normal_quantile(rho);
}

double slope_asymptote(std::uint64_t count, AsymptoteForm form) {
  if (count < 3) throw DomainError("slope_asymptote: needs at least 3 observations");
  const double log_n = std::log(static_cast<double>(count));
  const double numerator = std::log(2.0 * log_n);
  return form == AsymptoteForm::PerLogN ? numerator / log_n : numerator / (2.0 * log_n);
}

}  // namespace citecurve
