#include "citecurve/fit.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "citecurve/errors.hpp"

namespace citecurve {

namespace {

void require_exponent(double a, const char* what) {
  if (!(a > 0.0 && a < 1.0)) {
    std::ostringstream msg;
    msg << what << ": exponent A must lie in (0, 1), got " << a;
    throw DomainError(msg.str());
  }
}

std::vector<double> as_reals(const CitationList& list) {
  const auto counts = list.counts();
  return {counts.begin(), counts.end()};
}

}  // namespace

bool PowerLawModel::is_valid() const noexcept {
  return c0 >= 1.0 && p > 0.0 && a > 0.0 && a < 1.0 && std::isfinite(c0) &&
         std::isfinite(p);
}

void PowerLawModel::validate() const {
  if (!is_valid()) {
    std::ostringstream msg;
    msg << "invalid power-law model (c0=" << c0 << ", P=" << p << ", A=" << a << ")";
    throw DomainError(msg.str());
  }
}

double predict_count(const PowerLawModel& model, double n) {
  if (n == 0.0) return model.c0;
  return model.c0 * std::exp(-model.p * std::pow(n, model.a));
}

double estimate_p_ratio(const CitationList& list) {
  if (list.size() < 2) {
    throw DegenerateDataError("ratio estimate needs at least two publications");
  }
  if (list[1] < 1) {
    throw DegenerateDataError("ratio estimate needs the second publication to be cited");
  }
  return -std::log(static_cast<double>(list[1]) / static_cast<double>(list[0]));
}

double estimate_p_sharpness(const CitationList& list) {
  if (list.top() < 2) {
    throw DegenerateDataError("sharpness estimate needs a top count of at least 2");
  }
  const auto cited = static_cast<double>(i_index(list, 1));
  return std::log(static_cast<double>(list.top())) / std::sqrt(cited);
}

double estimate_p_area(double top, double total, double a) {
  require_exponent(a, "estimate_p_area");
  if (!(total >= 1.0)) throw DegenerateDataError("area estimate needs at least one citation");
  if (!(top >= 1.0)) throw DegenerateDataError("area estimate needs a cited top publication");
  return std::pow(top * gamma_function(1.0 + 1.0 / a) / total, a);
}

double estimate_p_area(const CitationList& list, double a) {
  return estimate_p_area(static_cast<double>(list.top()),
                         static_cast<double>(total_citations(list)), a);
}

std::vector<LogLogPoint> loglog_points(std::span<const double> ranked) {
  std::vector<LogLogPoint> points;
  if (ranked.empty()) return points;
  const double top = ranked.front();
  for (std::size_t n = 1; n < ranked.size(); ++n) {
    const double c = ranked[n];
    if (!(c > 0.0) || c >= top) continue;
    points.push_back({std::log(static_cast<double>(n)), std::log(std::log(top / c))});
  }
  return points;
}

std::vector<LogLogPoint> loglog_points(const CitationList& list) {
  return loglog_points(as_reals(list));
}

LogLogFit fit_points(std::span<const LogLogPoint> points, SlopeEstimator estimator) {
  if (points.size() < 2) {
    throw DegenerateDataError("log-log fit needs at least two points, got " +
                              std::to_string(points.size()));
  }
  const auto m = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& pt : points) {
    mean_x += pt.x;
    mean_y += pt.y;
  }
  mean_x /= m;
  mean_y /= m;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& pt : points) {
    sxx += (pt.x - mean_x) * (pt.x - mean_x);
    sxy += (pt.x - mean_x) * (pt.y - mean_y);
  }
  if (!(sxx > 0.0)) throw DegenerateDataError("log-log fit: all points share one rank");

  LogLogFit fit;
  fit.points_used = points.size();
  fit.slope = estimator == SlopeEstimator::LeastSquares ? sxy / sxx : sxy / m;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.p = std::exp(fit.intercept);

  double ss = 0.0;
  for (const auto& pt : points) {
    const double r = pt.y - (fit.intercept + fit.slope * pt.x);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / m);
  return fit;
}

LogLogFit fit_loglog(std::span<const double> ranked, SlopeEstimator estimator) {
  const auto points = loglog_points(ranked);
  return fit_points(points, estimator);
}

LogLogFit fit_loglog(const CitationList& list, SlopeEstimator estimator) {
  const auto points = loglog_points(list);
  return fit_points(points, estimator);
}

FitReport fixed_a_fit(const CitationList& list, double a) {
  require_exponent(a, "fixed_a_fit");
  FitReport report;
  report.a = a;

  auto attempt = [](auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const DegenerateDataError&) {
      return std::nullopt;
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };

  report.p_ratio = attempt([&] { return estimate_p_ratio(list); });
  report.p_sharpness = attempt([&] { return estimate_p_sharpness(list); });
  report.p_area = attempt([&] { return estimate_p_area(list, a); });

  try {
    const auto fit = fit_loglog(list);
    report.a_loglog = fit.slope;
    report.p_loglog = fit.p;
    report.loglog_rms = fit.rms;
    report.points_used = fit.points_used;
    report.a_loglog_out_of_range = !(fit.slope > 0.0 && fit.slope < 1.0);
  } catch (const DegenerateDataError&) {
  }

  const auto top = static_cast<double>(list.top());
  const auto i10 = i_index(list, 10);
  if (top > 10.0 && i10 >= 1) {
    report.h_constant = h_constant(top, a, 10, static_cast<double>(i10));
  }

  if (!report.p_ratio && !report.p_sharpness && !report.p_area && !report.p_loglog) {
    throw DegenerateDataError("no estimator of P applies to this citation list");
  }
  return report;
}

double predict_i_ratio(double c0, double a, std::uint64_t j, std::uint64_t k) {
  require_exponent(a, "predict_i_ratio");
  if (j == 0 || k == 0) throw DomainError("predict_i_ratio: thresholds must be at least 1");
  const auto jd = static_cast<double>(j);
  const auto kd = static_cast<double>(k);
  if (!(c0 > jd && c0 > kd)) {
    std::ostringstream msg;
    msg << "predict_i_ratio: c0 (" << c0 << ") must exceed both thresholds " << j << " and "
        << k;
    throw DomainError(msg.str());
  }
  if (j == k) return 1.0;
  return std::pow(std::log(c0 / jd) / std::log(c0 / kd), 1.0 / a);
}

double h_constant(double c0, double a, std::uint64_t k, double ik) {
  if (k == 0) throw DomainError("h_constant: threshold must be at least 1");
  if (!(c0 > static_cast<double>(k))) {
    std::ostringstream msg;
    msg << "h_constant: c0 (" << c0 << ") must exceed the threshold " << k;
    throw DomainError(msg.str());
  }
  if (!(ik >= 1.0)) throw DomainError("h_constant: i-index must be at least 1");
  return std::pow(c0 / ik, a) * std::log(c0 / static_cast<double>(k));
}

double solve_h(double c0, double a, double constant) {
  require_exponent(a, "solve_h");
  if (!(c0 > 1.0)) throw DomainError("solve_h: c0 must exceed 1");

  // (c0/h)^a ln(c0/h) falls strictly from c0^a ln(c0) at h = 1 to 0 at h = c0
  auto f = [&](double h) { return std::pow(c0 / h, a) * std::log(c0 / h); };
  double lo = 1.0;
  double hi = c0;
  const double f_lo = f(lo);
  const double f_hi = 0.0;
  if (!(constant > f_hi && constant <= f_lo)) {
    std::ostringstream msg;
    msg << "solve_h: no root for constant " << constant << " on bracket [" << lo << ", " << hi
        << "] where the left side spans [" << f_hi << ", " << f_lo << "]";
    throw DomainError(msg.str());
  }

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double value = f(mid);
    if (std::abs(value - constant) <= 1e-9 * constant) break;
    if (value > constant) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double predict_h(double c0, double a, std::uint64_t i10) {
  if (!(c0 > 10.0)) throw DomainError("predict_h: c0 must exceed 10");
  if (i10 == 0) throw DomainError("predict_h: i10 must be at least 1");
  return solve_h(c0, a, h_constant(c0, a, 10, static_cast<double>(i10)));
}

}  // namespace citecurve
