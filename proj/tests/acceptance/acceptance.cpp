// Acceptance suite: one self-contained check per release criterion, each
// printed as a single [PASS]/[FAIL] line with its runtime. The process exits
// with the number of failed criteria. argv[1] (optional) is the path to the
// CLI binary, needed by the determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "random_problems.hpp"
#include "specrec/specrec.hpp"

using namespace specrec;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    }
    std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), seconds, detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<double> decade_grid(int from_exp, int to_exp) {
    std::vector<double> out;
    for (int j = from_exp; j <= to_exp; ++j) out.push_back(std::pow(10.0, -j));
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    // --- 1 & 2: oracle equivalence and attainment over randomized problems.
    std::vector<testsupport::RandomProblemCase> cases;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        cases.push_back(testsupport::random_tabulated_case(seed));
    }

    criterion(1, "brute-force oracle equals the closed worst-case formula", 10.0,
              [&](std::string& detail) {
                  double worst_gap = 0.0;
                  for (const auto& c : cases) {
                      const double formula = worst_case_error(c.problem, c.delta, c.n).total;
                      const auto oracle = brute_force_worst_case(
                          c.problem, c.delta, c.n, c.problem.horizon(), 64, 123);
                      worst_gap = std::max(
                          worst_gap, std::abs(oracle.value - formula) / formula);
                  }
                  detail = "max relative gap " + format_number(worst_gap) + " over 200 problems";
                  return worst_gap <= 1e-12;
              });

    criterion(2, "extremal pair attains the worst-case formula", 10.0,
              [&](std::string& detail) {
                  double worst_gap = 0.0;
                  for (const auto& c : cases) {
                      const double formula = worst_case_error(c.problem, c.delta, c.n).total;
                      const double attained = empirical_error(
                          c.problem, extremal_pair(c.problem, c.delta, c.n), c.n);
                      worst_gap = std::max(
                          worst_gap, std::abs(attained - formula) / formula);
                  }
                  detail = "max relative gap " + format_number(worst_gap);
                  return worst_gap <= 1e-12;
              });

    // --- 3: sandwich bounds with a bounded optimality constant.
    criterion(3, "lower/upper sandwich with bounded constant on differentiation", 1.0,
              [&](std::string& detail) {
                  const auto p = numdiff_problem(4.0, 4096);
                  const auto deltas = decade_grid(1, 8);
                  double k_max = 0.0;
                  for (const double delta : deltas) {
                      const Index n = std::max<Index>(1, p.threshold_index(delta));
                      const auto rep = sandwich(p, delta, n);
                      const double k = rep.optimality_constant;
                      k_max = std::max(k_max, k);
                      if (!(rep.lower_any_n <= rep.upper_truncation * (1.0 + 1e-12))) return false;
                      if (!(rep.upper_truncation <= k * rep.lower_any_n * (1.0 + 1e-12))) return false;
                  }
                  detail = "max constant " + format_number(k_max);
                  return k_max <= 4.2;
              });

    // --- 4: the three regime inequalities over a structured grid.
    criterion(4, "small-n, large-n and noise-matched inequalities on a grid", 5.0,
              [&](std::string& detail) {
                  std::vector<SpectralProblem> problems;
                  problems.push_back(numdiff_problem(4.0, 2048));
                  problems.push_back(numdiff_problem(5.0, 2048));
                  problems.push_back(numdiff_problem(6.0, 2048));
                  problems.push_back(SpectralProblem(
                      Sequence(GeneralForm{1.0, 0.0, std::log(2.0), 1.0}),
                      Sequence(GeneralForm{1.0, 0.0, std::log(8.0), 1.0}),
                      RatioCertificate{0, 1}, 2048));
                  {
                      HeatProblem hp;
                      hp.gamma = 1.0;
                      hp.t = 0.5;
                      hp.T = 1.0;
                      hp.s = 0.0;
                      problems.push_back(heat_spectral_problem(hp, 2048));
                      hp.t = 1.0;
                      hp.s = 2.0;
                      problems.push_back(heat_spectral_problem(hp, 2048));
                  }
                  const double sqrt2 = std::sqrt(2.0);
                  std::size_t combos = 0;
                  for (const auto& p : problems) {
                      for (const double delta : decade_grid(1, 8)) {
                          const Index threshold = p.threshold_index(delta);
                          const double at_threshold =
                              threshold >= 1 ? worst_case_error(p, delta, threshold).total
                                             : 0.0;
                          const Index n_hi = threshold + 12;
                          for (Index n = 1; n <= n_hi; ++n) {
                              const double total = worst_case_error(p, delta, n).total;
                              ++combos;
                              if (n < threshold) {
                                  if (!(total <= sqrt2 * p.ratio(n) * (1.0 + 1e-12))) return false;
                              } else if (n > threshold && threshold >= 1) {
                                  if (!(total >= at_threshold / sqrt2 * (1.0 - 1e-12))) return false;
                              }
                              if (n == threshold && threshold >= 1) {
                                  const double c = std::exp(std::log(delta) + p.log_xi(threshold));
                                  if (!(c >= 1.0 - 1e-12)) return false;  // threshold definition
                                  const double cap = std::sqrt(1.0 + c * c) * p.ratio(threshold);
                                  if (!(total <= cap * (1.0 + 1e-12))) return false;
                              }
                          }
                          // exactly noise-matched delta: the sqrt(2) cap
                          if (threshold >= 1) {
                              const double snapped = std::exp(-p.log_xi(threshold));
                              const Index m = p.threshold_index(snapped);
                              const double cap = sqrt2 * p.ratio(m) * (1.0 + 1e-12);
                              ++combos;
                              if (!(worst_case_error(p, snapped, m).total <= cap)) return false;
                          }
                      }
                  }
                  detail = std::to_string(combos) + " combinations";
                  return combos >= 1000;
              });

    // --- 5: numerical differentiation rate.
    criterion(5, "differentiation error decays like the half power of the noise", 30.0,
              [&](std::string& detail) {
                  std::vector<double> deltas;
                  for (int j = 0; j <= 20; ++j) deltas.push_back(std::pow(10.0, -2.0 - 0.25 * j));
                  RateOptions opt;
                  opt.horizon = 4096;
                  const auto table = rate_experiment(NumDiffApp{4.0}, deltas, 2000, 2024, opt);
                  for (const auto& row : table.rows) {
                      if (!(row.empirical_max <= row.total * (1.0 + 1e-12))) return false;
                      if (!(row.lower <= row.total * (1.0 + 1e-12))) return false;
                  }
                  detail = "fitted slope " + format_number(table.fit->slope);
                  return table.fit->slope >= 0.4 && table.fit->slope <= 0.6;
              });

    // --- 6: backward heat, moderate and severe regimes.
    criterion(6, "backward heat rates: power for t < T, logarithmic for t = T", 30.0,
              [&](std::string& detail) {
                  HeatProblem moderate;
                  moderate.gamma = 1.0;
                  moderate.t = 0.5;
                  moderate.T = 1.0;
                  moderate.s = 0.0;
                  RateOptions opt;
                  opt.horizon = 512;
                  const auto mod_table =
                      rate_experiment(HeatApp{moderate}, decade_grid(1, 8), 500, 9, opt);

                  HeatProblem severe;
                  severe.gamma = 1.0;
                  severe.t = 1.0;
                  severe.T = 1.0;
                  severe.s = 2.0;
                  const auto sev_table =
                      rate_experiment(HeatApp{severe}, decade_grid(2, 10), 500, 9, opt);

                  detail = "moderate slope " + format_number(mod_table.fit->slope) +
                           ", severe exponent " + format_number(sev_table.fit->slope);
                  const bool mod_ok =
                      mod_table.fit->slope >= 0.4 && mod_table.fit->slope <= 0.6;
                  const bool sev_ok =
                      sev_table.fit->slope >= -2.3 && sev_table.fit->slope <= -1.7;
                  return mod_ok && sev_ok;
              });

    // --- 7: L_q brackets on the differentiation family.
    criterion(7, "L_q brackets hold and dominate empirical grid errors", 30.0,
              [&](std::string& detail) {
                  std::vector<double> deltas;
                  for (int j = 1; j <= 6; ++j) deltas.push_back(std::pow(10.0, -j));
                  RateOptions opt;
                  opt.horizon = 2048;
                  opt.qs = {2.0, 4.0, std::numeric_limits<double>::infinity()};
                  opt.grid_samples = 2048;
                  opt.lq_attack_instances = 16;
                  const auto table = rate_experiment(NumDiffApp{4.0}, deltas, 200, 31, opt);
                  std::size_t brackets = 0;
                  for (const auto& row : table.rows) {
                      for (const auto& [q, bracket] : row.lq) {
                          ++brackets;
                          if (!(bracket.lower <= bracket.upper)) return false;
                          if (!(bracket.empirical <= bracket.upper + 1e-8)) return false;
                      }
                  }
                  detail = std::to_string(brackets) + " brackets over q in {2, 4, inf}";
                  return brackets == table.rows.size() * 3;
              });

    // --- 8: order-matched regime stays within a constant; fast growth
    //        correctly empties the matching window.
    criterion(8, "order-matched choice is within a fixed factor of optimal", 10.0,
              [&](std::string& detail) {
                  const SpectralProblem power_xi(
                      Sequence(Power{2.0}), Sequence(GeneralForm{1.0, 4.0, 0.0, 1.0}),
                      RatioCertificate{0, 1}, 1 << 15);
                  const SpectralProblem subexp_xi(
                      Sequence(Power{1.0}), Sequence(GeneralForm{1.0, 0.0, 1.0, 0.5}),
                      RatioCertificate{4, 1}, 1 << 15);
                  double worst = 0.0;
                  for (const auto& p : {power_xi, subexp_xi}) {
                      for (const double delta : decade_grid(1, 8)) {
                          const Index n = select_n(p, delta, MatchedDecay{1.0});
                          const double total = worst_case_error(p, delta, n).total;
                          worst = std::max(worst, total / lower_bound_at(p, delta, n));
                      }
                  }
                  if (!(worst <= 10.0)) return false;

                  const SpectralProblem fast(
                      Sequence(Power{1.0}), Sequence(GeneralForm{1.0, 0.0, 5.0, 1.0}),
                      RatioCertificate{0, 1}, 4096);
                  if (matched_window(fast, 1e-2).empty()) return false;
                  for (int j = 3; j <= 8; ++j) {
                      if (!matched_window(fast, std::pow(10.0, -j)).empty()) return false;
                  }
                  detail = "max total/lower " + format_number(worst) +
                           "; fast-growth window empty for small deltas";
                  return true;
              });

    // --- 9: byte-identical sweep outputs for identical config and seed.
    criterion(9, "sweep outputs are byte-identical across reruns", 60.0,
              [&](std::string& detail) {
                  if (cli_path.empty()) {
                      detail = "cli path not provided";
                      return false;
                  }
                  const fs::path work = fs::current_path() / "acceptance_tmp";
                  fs::remove_all(work);
                  fs::create_directories(work);
                  const fs::path cfg_path = work / "sweep.cfg";
                  {
                      std::ofstream cfg(cfg_path);
                      cfg << "schema_version = 1\n"
                             "family = numdiff\n"
                             "gamma = 4\n"
                             "delta = 1e-1 1e-2 1e-3 1e-4\n"
                             "strategy = matched\n"
                             "horizon = 1024\n"
                             "grid_samples = 1024\n"
                             "trials = 300\n"
                             "q = 2 inf\n";
                  }
                  for (const char* run : {"a", "b"}) {
                      std::ostringstream cmd;
                      cmd << '"' << cli_path << '"' << " sweep --config " << cfg_path
                          << " --seed 7 --out " << (work / run) << " > /dev/null";
                      if (std::system(cmd.str().c_str()) != 0) {
                          detail = "cli run failed";
                          return false;
                      }
                  }
                  for (const char* file : {"rates.csv", "rates_fit.csv", "plot.csv"}) {
                      const auto a = read_file(work / "a" / file);
                      const auto b = read_file(work / "b" / file);
                      if (a.empty() || a != b) {
                          detail = std::string("mismatch in ") + file;
                          return false;
                      }
                  }
                  detail = "rates.csv, rates_fit.csv, plot.csv identical";
                  return true;
              });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
