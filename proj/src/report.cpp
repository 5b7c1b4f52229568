#include "citecurve/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <string>

#include "citecurve/errors.hpp"
#include "citecurve/io.hpp"

namespace citecurve {

using nlohmann::json;

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

json digit_map(const auto& values) {
  json j = json::object();
  for (std::size_t d = 1; d <= 9; ++d) j[std::to_string(d)] = values[d - 1];
  return j;
}

template <typename Array>
void digit_map_from(const json& j, Array& out) {
  for (std::size_t d = 1; d <= 9; ++d) {
    out[d - 1] = j.at(std::to_string(d)).template get<typename Array::value_type>();
  }
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<double> as_reals(const CitationList& list) {
  const auto counts = list.counts();
  return {counts.begin(), counts.end()};
}

const char* estimator_name(SlopeEstimator e) {
  return e == SlopeEstimator::Covariance ? "covariance" : "least_squares";
}

}  // namespace

AnalysisReport build_report(const CitationList& list, std::span<const double> exponents,
                            Provenance provenance) {
  AnalysisReport report;
  report.metrics = summarize(list);
  report.provenance = std::move(provenance);
  if (report.metrics.cited_count == 0) {
    throw DegenerateDataError("no cited publications to analyse");
  }

  for (double a : exponents) report.fits.push_back(fixed_a_fit(list, a));
  try {
    report.free_fit = fit_loglog(list);
  } catch (const DegenerateDataError&) {
  }
  try {
    report.lognormal = normalized_log_stats(list);
  } catch (const DegenerateDataError&) {
  }
  report.benford = benford_report(list);

  const auto top = static_cast<double>(list.top());
  if (const auto model = preferred_model(report, top)) {
    Predictions pred;
    pred.model = *model;
    pred.observed_h = report.metrics.h;
    if (model->a > 0.0 && model->a < 1.0) {
      if (top > 20.0) pred.i10_over_i20 = predict_i_ratio(top, model->a, 10, 20);
      if (top > 10.0 && report.metrics.i10 >= 1) {
        pred.h_constant =
            h_constant(top, model->a, 10, static_cast<double>(report.metrics.i10));
        try {
          pred.h = solve_h(top, model->a, *pred.h_constant);
        } catch (const DomainError&) {
        }
      }
    }
    if (report.metrics.i20 > 0) {
      pred.observed_i10_over_i20 =
          static_cast<double>(report.metrics.i10) / static_cast<double>(report.metrics.i20);
    }
    report.predictions = pred;
  }
  return report;
}

std::optional<PowerLawModel> preferred_model(const AnalysisReport& report, double top) {
  if (report.free_fit && report.free_fit->slope > 0.0 && report.free_fit->slope < 1.0) {
    return PowerLawModel{top, report.free_fit->p, report.free_fit->slope};
  }
  for (const auto& fit : report.fits) {
    if (fit.p_area) return PowerLawModel{top, *fit.p_area, fit.a};
  }
  return std::nullopt;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void to_json(json& j, const MetricsSummary& m) {
  j = json{{"total", m.total},
           {"top", m.top},
           {"h", m.h},
           {"i10", m.i10},
           {"i20", m.i20},
           {"cited_count", m.cited_count},
           {"publications", m.publications},
           {"digit_histogram", digit_map(m.digit_histogram)}};
}

void from_json(const json& j, MetricsSummary& m) {
  j.at("total").get_to(m.total);
  j.at("top").get_to(m.top);
  j.at("h").get_to(m.h);
  j.at("i10").get_to(m.i10);
  j.at("i20").get_to(m.i20);
  j.at("cited_count").get_to(m.cited_count);
  j.at("publications").get_to(m.publications);
  digit_map_from(j.at("digit_histogram"), m.digit_histogram);
}

void to_json(json& j, const FitReport& f) {
  j = json{{"a", f.a},
           {"p_ratio", optional_to_json(f.p_ratio)},
           {"p_sharpness", optional_to_json(f.p_sharpness)},
           {"p_area", optional_to_json(f.p_area)},
           {"p_loglog", optional_to_json(f.p_loglog)},
           {"a_loglog", optional_to_json(f.a_loglog)},
           {"loglog_rms", optional_to_json(f.loglog_rms)},
           {"h_constant", optional_to_json(f.h_constant)},
           {"points_used", f.points_used},
           {"a_loglog_out_of_range", f.a_loglog_out_of_range}};
}

void from_json(const json& j, FitReport& f) {
  j.at("a").get_to(f.a);
  f.p_ratio = optional_from_json<double>(j, "p_ratio");
  f.p_sharpness = optional_from_json<double>(j, "p_sharpness");
  f.p_area = optional_from_json<double>(j, "p_area");
  f.p_loglog = optional_from_json<double>(j, "p_loglog");
  f.a_loglog = optional_from_json<double>(j, "a_loglog");
  f.loglog_rms = optional_from_json<double>(j, "loglog_rms");
  f.h_constant = optional_from_json<double>(j, "h_constant");
  j.at("points_used").get_to(f.points_used);
  j.at("a_loglog_out_of_range").get_to(f.a_loglog_out_of_range);
}

void to_json(json& j, const LogLogFit& f) {
  j = json{{"slope", f.slope},
           {"intercept", f.intercept},
           {"p", f.p},
           {"rms", f.rms},
           {"points_used", f.points_used}};
}

void from_json(const json& j, LogLogFit& f) {
  j.at("slope").get_to(f.slope);
  j.at("intercept").get_to(f.intercept);
  j.at("p").get_to(f.p);
  j.at("rms").get_to(f.rms);
  j.at("points_used").get_to(f.points_used);
}

void to_json(json& j, const LogNormalSummary& s) {
  j = json{{"mu", s.mu},
           {"sigma", s.sigma},
           {"lambda_direct", s.lambda_direct},
           {"lambda_moments", optional_to_json(s.lambda_moments)},
           {"sample_mean", s.sample_mean},
           {"sample_sd", s.sample_sd},
           {"entries_used", s.entries_used}};
}

void from_json(const json& j, LogNormalSummary& s) {
  j.at("mu").get_to(s.mu);
  j.at("sigma").get_to(s.sigma);
  j.at("lambda_direct").get_to(s.lambda_direct);
  s.lambda_moments = optional_from_json<double>(j, "lambda_moments");
  j.at("sample_mean").get_to(s.sample_mean);
  j.at("sample_sd").get_to(s.sample_sd);
  j.at("entries_used").get_to(s.entries_used);
}

void to_json(json& j, const BenfordReport& b) {
  j = json{{"observed", digit_map(b.observed)},
           {"expected", digit_map(b.expected)},
           {"max_abs_deviation", b.max_abs_deviation},
           {"chi_square", b.chi_square},
           {"sample_size", b.sample_size}};
}

void from_json(const json& j, BenfordReport& b) {
  digit_map_from(j.at("observed"), b.observed);
  digit_map_from(j.at("expected"), b.expected);
  j.at("max_abs_deviation").get_to(b.max_abs_deviation);
  j.at("chi_square").get_to(b.chi_square);
  j.at("sample_size").get_to(b.sample_size);
}

void to_json(json& j, const PowerLawModel& m) {
  j = json{{"c0", m.c0}, {"p", m.p}, {"a", m.a}};
}

void from_json(const json& j, PowerLawModel& m) {
  j.at("c0").get_to(m.c0);
  j.at("p").get_to(m.p);
  j.at("a").get_to(m.a);
}

void to_json(json& j, const Predictions& p) {
  j = json{{"model", p.model},
           {"i10_over_i20", optional_to_json(p.i10_over_i20)},
           {"observed_i10_over_i20", optional_to_json(p.observed_i10_over_i20)},
           {"h_constant", optional_to_json(p.h_constant)},
           {"h", optional_to_json(p.h)},
           {"observed_h", p.observed_h}};
}

void from_json(const json& j, Predictions& p) {
  j.at("model").get_to(p.model);
  p.i10_over_i20 = optional_from_json<double>(j, "i10_over_i20");
  p.observed_i10_over_i20 = optional_from_json<double>(j, "observed_i10_over_i20");
  p.h_constant = optional_from_json<double>(j, "h_constant");
  p.h = optional_from_json<double>(j, "h");
  j.at("observed_h").get_to(p.observed_h);
}

void to_json(json& j, const Provenance& p) {
  j = json{{"input", p.input}, {"tool_version", p.tool_version}, {"timestamp", p.timestamp}};
}

void from_json(const json& j, Provenance& p) {
  j.at("input").get_to(p.input);
  j.at("tool_version").get_to(p.tool_version);
  j.at("timestamp").get_to(p.timestamp);
}

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"schema_version", kSchemaVersion},
           {"metrics", r.metrics},
           {"fits", r.fits},
           {"free_fit", optional_to_json(r.free_fit)},
           {"lognormal", optional_to_json(r.lognormal)},
           {"benford", optional_to_json(r.benford)},
           {"predictions", optional_to_json(r.predictions)},
           {"provenance", r.provenance}};
}

void from_json(const json& j, AnalysisReport& r) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::runtime_error("unsupported report schema version");
  }
  j.at("metrics").get_to(r.metrics);
  j.at("fits").get_to(r.fits);
  r.free_fit = optional_from_json<LogLogFit>(j, "free_fit");
  r.lognormal = optional_from_json<LogNormalSummary>(j, "lognormal");
  r.benford = optional_from_json<BenfordReport>(j, "benford");
  r.predictions = optional_from_json<Predictions>(j, "predictions");
  j.at("provenance").get_to(r.provenance);
}

void to_json(json& j, const SimConfig& c) {
  j = json{{"lambda", c.lambda},
           {"c0_param", c.c0_param},
           {"n_articles", c.n_articles},
           {"n_datasets", c.n_datasets},
           {"seed", c.seed},
           {"integer_rounding", c.integer_rounding},
           {"estimator", estimator_name(c.estimator)}};
}

void to_json(json& j, const SimResult& r) {
  j = json{{"mean_slope", r.mean_slope},
           {"sd_slope", r.sd_slope},
           {"per_dataset_slopes", r.per_dataset_slopes},
           {"failed_datasets", r.failed_datasets},
           {"config", r.config}};
}

std::string curve_tsv(std::span<const double> ranked, const PowerLawModel& model) {
  std::string out = "#n\tobserved\tpredicted\n";
  for (std::size_t n = 0; n < ranked.size(); ++n) {
    out += std::to_string(n);
    out += '\t';
    out += format_real(ranked[n]);
    out += '\t';
    out += format_real(predict_count(model, static_cast<double>(n)));
    out += '\n';
  }
  return out;
}

std::string curve_tsv(const CitationList& list, const PowerLawModel& model) {
  return curve_tsv(as_reals(list), model);
}

std::string loglog_tsv(std::span<const double> ranked, const PowerLawModel& model) {
  std::string out = "#ln_n\tln_ln_c0_over_cn\tfitted\n";
  const double ln_p = std::log(model.p);
  for (const auto& pt : loglog_points(ranked)) {
    out += format_real(pt.x);
    out += '\t';
    out += format_real(pt.y);
    out += '\t';
    out += format_real(ln_p + model.a * pt.x);
    out += '\n';
  }
  return out;
}

std::string loglog_tsv(const CitationList& list, const PowerLawModel& model) {
  return loglog_tsv(as_reals(list), model);
}

void emit_plot_data(const CitationList& list, const PowerLawModel& model,
                    const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw IoError("cannot create output directory " + out_dir.string());
  }
  write_file(out_dir / "curve.tsv", curve_tsv(list, model));
  write_file(out_dir / "loglog.tsv", loglog_tsv(list, model));
}

}  // namespace citecurve
