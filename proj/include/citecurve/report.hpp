#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "citecurve/core.hpp"
#include "citecurve/dist.hpp"
#include "citecurve/fit.hpp"
#include "citecurve/sim.hpp"

namespace citecurve {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct Predictions {
  PowerLawModel model;
  std::optional<double> i10_over_i20;           // predicted
  std::optional<double> observed_i10_over_i20;  // from the data
  std::optional<double> h_constant;
  std::optional<double> h;                      // predicted
  std::uint64_t observed_h = 0;

  friend bool operator==(const Predictions&, const Predictions&) = default;
};

struct Provenance {
  std::string input;
  std::string tool_version = kToolVersion;
  std::string timestamp;  // ISO 8601, UTC

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct AnalysisReport {
  MetricsSummary metrics;
  std::vector<FitReport> fits;     // one per requested exponent
  std::optional<LogLogFit> free_fit;
  std::optional<LogNormalSummary> lognormal;
  std::optional<BenfordReport> benford;
  std::optional<Predictions> predictions;
  Provenance provenance;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs every analysis that applies to the list. Parts that cannot be
/// computed are left empty. Throws DegenerateDataError when no publication
/// is cited.
AnalysisReport build_report(const CitationList& list, std::span<const double> exponents,
                            Provenance provenance);

/// Model used for predictions and plots: the free log-log fit when its
/// slope lies in (0, 1), otherwise the first fixed exponent with the area
/// estimate of P.
std::optional<PowerLawModel> preferred_model(const AnalysisReport& report, double top);

std::string utc_timestamp();

void to_json(nlohmann::json& j, const MetricsSummary& m);
void from_json(const nlohmann::json& j, MetricsSummary& m);
void to_json(nlohmann::json& j, const FitReport& f);
void from_json(const nlohmann::json& j, FitReport& f);
void to_json(nlohmann::json& j, const LogLogFit& f);
void from_json(const nlohmann::json& j, LogLogFit& f);
void to_json(nlohmann::json& j, const LogNormalSummary& s);
void from_json(const nlohmann::json& j, LogNormalSummary& s);
void to_json(nlohmann::json& j, const BenfordReport& b);
void from_json(const nlohmann::json& j, BenfordReport& b);
void to_json(nlohmann::json& j, const PowerLawModel& m);
void from_json(const nlohmann::json& j, PowerLawModel& m);
void to_json(nlohmann::json& j, const Predictions& p);
void from_json(const nlohmann::json& j, Predictions& p);
void to_json(nlohmann::json& j, const Provenance& p);
void from_json(const nlohmann::json& j, Provenance& p);
void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);
void to_json(nlohmann::json& j, const SimConfig& c);
void to_json(nlohmann::json& j, const SimResult& r);

/// `#`-prefixed header, tab separated, 9 significant digits.
std::string curve_tsv(std::span<const double> ranked, const PowerLawModel& model);
std::string curve_tsv(const CitationList& list, const PowerLawModel& model);
std::string loglog_tsv(std::span<const double> ranked, const PowerLawModel& model);
std::string loglog_tsv(const CitationList& list, const PowerLawModel& model);

/// Writes curve.tsv and loglog.tsv into out_dir (created if missing).
/// Throws IoError when the directory cannot be written.
void emit_plot_data(const CitationList& list, const PowerLawModel& model,
                    const std::filesystem::path& out_dir);

}  // namespace citecurve
