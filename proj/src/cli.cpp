#include "citecurve/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "citecurve/core.hpp"
#include "citecurve/dist.hpp"
#include "citecurve/errors.hpp"
#include "citecurve/fit.hpp"
#include "citecurve/io.hpp"
#include "citecurve/report.hpp"
#include "citecurve/sim.hpp"

namespace citecurve {

using nlohmann::json;

namespace {

/// Semantically invalid command line (combination of options, value range).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.path, "Citation data (CSV or JSON)")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
}

CitationList load(const InputOptions& in) {
  const InputFormat format = in.format == "csv"    ? InputFormat::Csv
                             : in.format == "json" ? InputFormat::Json
                                                   : InputFormat::Auto;
  auto list = to_citation_list(parse_input(in.path, format));
  if (i_index(list, 1) == 0) {
    throw DegenerateDataError(list.empty() ? "input contains no publications"
                                           : "input contains no cited publications");
  }
  return list;
}

SlopeEstimator parse_estimator(const std::string& name) {
  return name == "least_squares" ? SlopeEstimator::LeastSquares : SlopeEstimator::Covariance;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json header() { return json{{"schema_version", kSchemaVersion}}; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Citation-curve analysis: exponential power-law fits, metrics and simulations",
               "citecurve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // metrics / benford / lognormal
  InputOptions metrics_in;
  auto* metrics_cmd = app.add_subcommand("metrics", "Classical citation metrics");
  add_input(metrics_cmd, metrics_in);

  InputOptions benford_in;
  auto* benford_cmd = app.add_subcommand("benford", "First-digit test against Benford's law");
  add_input(benford_cmd, benford_in);

  InputOptions lognormal_in;
  auto* lognormal_cmd = app.add_subcommand("lognormal", "Normalized-log statistics and lambda");
  add_input(lognormal_cmd, lognormal_in);

  // fit
  InputOptions fit_in;
  std::string fit_a = "free";
  auto* fit_cmd = app.add_subcommand("fit", "Fit c_n = c0 exp(-P n^A)");
  add_input(fit_cmd, fit_in);
  fit_cmd->add_option("--A", fit_a, "Fixed exponent in (0,1), or 'free' for the log-log slope");

  // predict
  double pred_c0 = 0.0;
  double pred_a = 0.0;
  std::vector<std::uint64_t> iratio;
  bool pred_h = false;
  std::optional<std::uint64_t> pred_i10;
  std::optional<double> pred_constant;
  auto* predict_cmd = app.add_subcommand("predict", "Predict i-index ratios or the h-index");
  predict_cmd->set_help_flag("--help", "Print this help message and exit");  // frees --h
  predict_cmd->add_option("--c0", pred_c0, "Top citation count")->required();
  predict_cmd->add_option("--A", pred_a, "Rate exponent in (0,1)")->required();
  auto* iratio_opt =
      predict_cmd->add_option("--iratio", iratio, "Thresholds J K for the i_J / i_K ratio")
          ->expected(2);
  auto* h_flag = predict_cmd->add_flag("--h", pred_h, "Predict the h-index");
  predict_cmd->add_option("--i10", pred_i10, "Observed i10 for the h prediction");
  predict_cmd->add_option("--constant", pred_constant,
                          "Use this constant instead of one derived from --i10");
  iratio_opt->excludes(h_flag);

  // simulate
  SimConfig sim_config;
  bool sim_continuous = false;
  std::string sim_estimator = "covariance";
  unsigned sim_threads = 0;
  auto* simulate_cmd = app.add_subcommand("simulate", "Seeded synthetic citation experiment");
  simulate_cmd->add_option("--lambda", sim_config.lambda, "Generator lambda in (0,1)")
      ->required();
  simulate_cmd->add_option("--n", sim_config.n_articles, "Articles per dataset")->required();
  simulate_cmd->add_option("--datasets", sim_config.n_datasets, "Number of datasets")
      ->required();
  simulate_cmd->add_option("--seed", sim_config.seed, "RNG seed")->required();
  simulate_cmd->add_option("--c0param", sim_config.c0_param, "Generator scale c0")->capture_default_str();
  simulate_cmd->add_flag("--continuous", sim_continuous, "Keep unrounded values");
  simulate_cmd->add_option("--estimator", sim_estimator, "Slope estimator")
      ->check(CLI::IsMember({"covariance", "least_squares"}));
  simulate_cmd->add_option("--threads", sim_threads, "Worker threads (0 = all cores)");

  // table
  std::string table_kind;
  std::uint64_t table_seed = 0;
  std::size_t table_datasets = 100;
  std::optional<std::size_t> table_large_datasets;
  std::size_t table_n = 200;
  double table_lambda = 0.25;
  double table_c0 = 100.0;
  bool table_rounding = false;
  bool table_continuous = false;
  std::string table_estimator = "covariance";
  unsigned table_threads = 0;
  auto* table_cmd = app.add_subcommand("table", "Reproduce the lambda or N slope table");
  table_cmd->add_option("kind", table_kind, "lambda | nscale")
      ->required()
      ->check(CLI::IsMember({"lambda", "nscale"}));
  table_cmd->add_option("--seed", table_seed, "RNG seed")->required();
  table_cmd->add_option("--datasets", table_datasets, "Datasets per row")->capture_default_str();
  table_cmd->add_option("--large-datasets", table_large_datasets,
                        "Datasets per row at N >= 100000 (nscale; default --datasets)");
  table_cmd->add_option("--n", table_n, "Articles per dataset (lambda table)")->capture_default_str();
  table_cmd->add_option("--lambda", table_lambda, "Generator lambda (nscale table)")->capture_default_str();
  table_cmd->add_option("--c0param", table_c0, "Generator scale c0")->capture_default_str();
  auto* rounding_flag =
      table_cmd->add_flag("--rounding", table_rounding, "Round values (nscale default: off)");
  auto* continuous_flag = table_cmd->add_flag("--continuous", table_continuous,
                                              "Unrounded values (lambda default: rounded)");
  rounding_flag->excludes(continuous_flag);
  table_cmd->add_option("--estimator", table_estimator, "Slope estimator")
      ->check(CLI::IsMember({"covariance", "least_squares"}));
  table_cmd->add_option("--threads", table_threads, "Worker threads (0 = all cores)");

  // report
  InputOptions report_in;
  std::string report_out;
  std::vector<double> report_exponents;
  auto* report_cmd = app.add_subcommand("report", "Full analysis report and plot data");
  add_input(report_cmd, report_in);
  report_cmd->add_option("--out", report_out, "Directory for report.json, curve.tsv, loglog.tsv");
  report_cmd->add_option("--A", report_exponents, "Fixed exponents to fit (default 0.5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (metrics_cmd->parsed()) {
      auto j = header();
      j["metrics"] = summarize(load(metrics_in));
      print(out, j);
    } else if (benford_cmd->parsed()) {
      auto j = header();
      j["benford"] = benford_report(load(benford_in));
      print(out, j);
    } else if (lognormal_cmd->parsed()) {
      auto j = header();
      j["lognormal"] = normalized_log_stats(load(lognormal_in));
      print(out, j);
    } else if (fit_cmd->parsed()) {
      const auto list = load(fit_in);
      auto j = header();
      if (fit_a == "free") {
        const auto free_fit = fit_loglog(list);
        j["free_fit"] = free_fit;
        const bool in_range = free_fit.slope > 0.0 && free_fit.slope < 1.0;
        j["a_out_of_range"] = !in_range;
        j["fit"] = in_range ? json(fixed_a_fit(list, free_fit.slope)) : json(nullptr);
      } else {
        double a = 0.0;
        try {
          std::size_t used = 0;
          a = std::stod(fit_a, &used);
          if (used != fit_a.size()) throw std::invalid_argument(fit_a);
        } catch (const std::logic_error&) {
          throw UsageError("--A must be a number in (0,1) or 'free', got '" + fit_a + "'");
        }
        j["fit"] = fixed_a_fit(list, a);
      }
      print(out, j);
    } else if (predict_cmd->parsed()) {
      auto j = header();
      j["c0"] = pred_c0;
      j["a"] = pred_a;
      if (!iratio.empty()) {
        j["iratio"] = json{{"j", iratio[0]},
                           {"k", iratio[1]},
                           {"ratio", predict_i_ratio(pred_c0, pred_a, iratio[0], iratio[1])}};
      } else if (pred_h) {
        double constant = 0.0;
        if (pred_constant) {
          constant = *pred_constant;
        } else if (pred_i10) {
          if (!(pred_c0 > 10.0)) throw DomainError("--c0 must exceed 10 for an h prediction");
          constant = h_constant(pred_c0, pred_a, 10, static_cast<double>(*pred_i10));
        } else {
          throw UsageError("--h needs --i10 or --constant");
        }
        j["h"] = json{{"constant", constant},
                      {"i10", pred_i10 ? json(*pred_i10) : json(nullptr)},
                      {"h", solve_h(pred_c0, pred_a, constant)}};
      } else {
        throw UsageError("predict needs --iratio J K or --h");
      }
      print(out, j);
    } else if (simulate_cmd->parsed()) {
      sim_config.integer_rounding = !sim_continuous;
      sim_config.estimator = parse_estimator(sim_estimator);
      auto j = header();
      j["simulation"] = run_simulation(sim_config, sim_threads);
      print(out, j);
    } else if (table_cmd->parsed()) {
      TableOptions options;
      options.c0_param = table_c0;
      options.estimator = parse_estimator(table_estimator);
      options.threads = table_threads;
      auto j = header();
      j["table"] = table_kind;
      j["seed"] = table_seed;
      json rows = json::array();
      if (table_kind == "lambda") {
        options.integer_rounding = !table_continuous;
        for (const auto& r : run_lambda_table(kTableLambdas, table_n, table_datasets,
                                              table_seed, options)) {
          rows.push_back(json{{"lambda", r.config.lambda},
                              {"n_articles", r.config.n_articles},
                              {"datasets", r.config.n_datasets},
                              {"failed", r.failed_datasets.size()},
                              {"mean_slope", r.mean_slope},
                              {"sd_slope", r.sd_slope}});
        }
      } else {
        options.integer_rounding = table_rounding;
        std::vector<ScaleEntry> entries;
        for (auto n : kTableSizes) {
          entries.push_back(
              {n, n >= 100000 ? table_large_datasets.value_or(table_datasets) : table_datasets});
        }
        for (const auto& r : run_n_table(entries, table_seed, table_lambda, options)) {
          rows.push_back(json{{"n_articles", r.result.config.n_articles},
                              {"datasets", r.result.config.n_datasets},
                              {"failed", r.result.failed_datasets.size()},
                              {"mean_slope", r.result.mean_slope},
                              {"sd_slope", r.result.sd_slope},
                              {"asymptote", r.asymptote},
                              {"ratio", r.ratio}});
        }
      }
      j["rows"] = rows;
      print(out, j);
    } else if (report_cmd->parsed()) {
      const auto list = load(report_in);
      if (report_exponents.empty()) report_exponents.push_back(0.5);
      Provenance prov;
      prov.input = report_in.path;
      prov.timestamp = utc_timestamp();
      const auto report = build_report(list, report_exponents, prov);
      const json j = report;
      if (report_out.empty()) {
        print(out, j);
      } else {
        const std::filesystem::path dir(report_out);
        const auto model = preferred_model(report, static_cast<double>(list.top()));
        if (!model) throw DegenerateDataError("no model could be fitted for plot data");
        emit_plot_data(list, *model, dir);
        write_file(dir / "report.json", j.dump(2) + "\n");
        print(out, json{{"schema_version", kSchemaVersion},
                        {"written", {(dir / "report.json").string(), (dir / "curve.tsv").string(),
                                     (dir / "loglog.tsv").string()}}});
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DegenerateDataError& e) {
    err << "degenerate data: " << e.what() << '\n';
    return kExitDegenerate;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(args.size()), argv.data(), out, err);
}

}  // namespace citecurve
