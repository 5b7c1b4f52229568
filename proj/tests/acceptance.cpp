// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: citecurve_acceptance [path-to-citecurve-binary]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citecurve/dist.hpp"
#include "citecurve/fit.hpp"
#include "citecurve/io.hpp"
#include "citecurve/sim.hpp"

using namespace citecurve;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 7;

int failures = 0;

void verdict(const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %-22s %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

void i_ratio_fixture() {
  const auto start = Clock::now();
  const double r = predict_i_ratio(109, 0.5, 10, 20);
  const double ms = millis_since(start);
  verdict("i-ratio", std::abs(r - 1.98) <= 0.01 && ms < 1.0,
          fmt("i10/i20 = %.6f (want 1.98 +- 0.01), %.4f ms", r, ms));
}

void h_fixture() {
  const auto start = Clock::now();
  const double h = solve_h(109, 0.5, 4.8);
  const double ms = millis_since(start);
  verdict("h-solve", std::abs(h - 16.67) <= 0.05 && ms < 1.0,
          fmt("h = %.6f (want 16.67 +- 0.05), %.4f ms", h, ms));
}

void area_fixture() {
  const double p = estimate_p_area(58.7, 1000.0, 0.4);
  const double g = gamma_function(3.5);
  const double exact = 15.0 / 8.0 * std::sqrt(std::numbers::pi);
  verdict("area-P", std::abs(p - 0.520) <= 0.002 && std::abs(g - 3.3233510) <= 1e-6,
          fmt("P = %.6f (want 0.520 +- 0.002), Gamma(3.5) = %.9f (15/8 sqrt(pi) = %.9f)", p, g,
              exact));
}

void area_coherence() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> top(2.0, 5000.0);
  std::uniform_real_distribution<double> spread(1.5, 400.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double c0 = top(rng);
    const double s = c0 * spread(rng);
    const double want = std::sqrt(2.0 * c0 / s);
    worst = std::max(worst, std::abs(estimate_p_area(c0, s, 0.5) - want) / want);
  }
  verdict("area-coherence", worst <= 1e-12, fmt("max relative error %.3g over 100 pairs", worst));
}

void lambda_table() {
  constexpr double published_mean[] = {0.396119, 0.405471, 0.411451, 0.384616, 0.400892, 0.413907};
  const auto start = Clock::now();
  const auto rows = run_lambda_table(kTableLambdas, 200, 100, kSeed);
  const double seconds = millis_since(start) / 1000.0;
  bool pass = seconds < 30.0;
  std::ostringstream detail;
  detail << fmt("%.2f s;", seconds);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool ok = std::abs(rows[r].mean_slope - published_mean[r]) <= 0.03 &&
                    rows[r].sd_slope >= 0.05 && rows[r].sd_slope <= 0.12;
    pass = pass && ok;
    detail << fmt(" [%.2f: %.4f/%.4f vs %.4f%s]", rows[r].config.lambda, rows[r].mean_slope,
                  rows[r].sd_slope, published_mean[r], ok ? "" : " !");
  }
  verdict("lambda-table", pass, detail.str());
}

void n_table() {
  constexpr double published_mean[] = {0.463705, 0.363892, 0.279002, 0.233939, 0.204701};
  const ScaleEntry entries[] = {{100, 100}, {1000, 100}, {10000, 100}, {100000, 20}, {1000000, 20}};
  const auto start = Clock::now();
  const auto rows = run_n_table(entries, kSeed, 0.25);
  const double seconds = millis_since(start) / 1000.0;

  bool pass = seconds < 600.0;
  std::ostringstream detail;
  detail << fmt("%.1f s;", seconds);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double tol = entries[r].n_articles <= 10000 ? 0.04 : 0.03;
    bool ok = std::abs(rows[r].result.mean_slope - published_mean[r]) <= tol;
    if (r > 0) ok = ok && rows[r].result.mean_slope < rows[r - 1].result.mean_slope;
    pass = pass && ok;
    detail << fmt(" [%zu: %.4f vs %.4f%s]", entries[r].n_articles, rows[r].result.mean_slope,
                  published_mean[r], ok ? "" : " !");
  }
  verdict("n-table", pass, detail.str());

  bool ratios_ok = true;
  std::ostringstream ratios;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool ok = rows[r].ratio >= 0.83 && rows[r].ratio <= 0.98;
    if (r > 0) ok = ok && rows[r].ratio < rows[r - 1].ratio;
    ratios_ok = ratios_ok && ok;
    ratios << fmt(" %zu: %.4f%s", entries[r].n_articles, rows[r].ratio, ok ? "" : " !");
  }
  verdict("asymptote-ratio", ratios_ok, ratios.str());
}

void fit_recovery() {
  double worst_a = 0.0;
  double worst_p = 0.0;
  for (double a : {0.3, 0.4, 0.5}) {
    for (double p : {0.4, 0.5, 1.0}) {
      std::vector<double> curve(200);
      for (std::size_t n = 0; n < curve.size(); ++n) {
        curve[n] = std::round(1000.0 * std::exp(-p * std::pow(static_cast<double>(n), a)));
      }
      const auto fit = fit_loglog(curve);
      worst_a = std::max(worst_a, std::abs(fit.slope - a));
      worst_p = std::max(worst_p, std::abs(fit.p - p) / p);
    }
  }
  verdict("fit-recovery", worst_a <= 0.05 && worst_p <= 0.10,
          fmt("worst |A err| %.4f (<= 0.05), worst P rel err %.4f (<= 0.10)", worst_a, worst_p));
}

void benford_suite() {
  double sum = 0.0;
  double analytic = 0.0;
  for (int d = 1; d <= 9; ++d) {
    sum += benford_expected(d);
    analytic = std::max(analytic, std::abs(benford_expected(d) - std::log10(1.0 + 1.0 / d)));
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  std::vector<Count> raw(10000);
  for (auto& c : raw) c = static_cast<Count>(std::floor(std::pow(10.0, u(rng))));
  const auto report = benford_report(make_citation_list(raw));
  verdict("benford",
          std::abs(sum - 1.0) <= 1e-12 && analytic <= 1e-15 && report.max_abs_deviation < 0.01,
          fmt("|sum - 1| %.2g, synthetic max deviation %.4f (< 0.01)", std::abs(sum - 1.0),
              report.max_abs_deviation));
}

void lambda_round_trip() {
  bool pass = true;
  std::ostringstream detail;
  for (double lambda : {0.2, 0.25, 0.3}) {
    SimConfig config;
    config.lambda = lambda;
    config.n_articles = 10000;
    config.n_datasets = 1;
    config.seed = kSeed;
    const auto stats = normalized_log_stats(generate_dataset(config, 0));
    const double got = lambda_from_moments(stats.sample_mean, stats.sample_sd, config.c0_param);
    const bool ok = std::abs(got - lambda) <= 0.1 * lambda;
    pass = pass && ok;
    detail << fmt(" %.2f -> %.4f%s", lambda, got, ok ? "" : " !");
  }
  verdict("lambda-round-trip", pass, detail.str());
}

void determinism(const std::string& cli) {
  if (cli.empty()) {
    verdict("determinism", false, "no CLI path given");
    return;
  }
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::string> invocations = {
      "simulate --lambda 0.3 --n 500 --datasets 40 --seed 7",
      "table lambda --seed 7 --datasets 20",
      "table nscale --seed 7 --datasets 5 --large-datasets 2",
  };
  bool pass = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < invocations.size(); ++i) {
    std::string outputs[2];
    for (int k = 0; k < 2; ++k) {
      const auto file = dir / ("citecurve_det_" + std::to_string(i) + "_" + std::to_string(k));
      const std::string cmd = "\"" + cli + "\" " + invocations[i] + " > \"" + file.string() + "\"";
      if (std::system(cmd.c_str()) != 0) {
        pass = false;
        break;
      }
      outputs[k] = read_file(file);
      std::filesystem::remove(file);
    }
    const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
    pass = pass && same;
    detail << " [" << invocations[i] << ": " << (same ? "identical" : "differs") << "]";
  }
  verdict("determinism", pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  i_ratio_fixture();
  h_fixture();
  area_fixture();
  area_coherence();
  lambda_table();
  n_table();
  fit_recovery();
  benford_suite();
  lambda_round_trip();
  determinism(cli);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
