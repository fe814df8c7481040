// Acceptance gate: one check per numbered criterion, each printed as a
// single pass/fail line with the measured worst value against its pinned
// tolerance. Returns the number of failed criteria.
//
// The command-line binary path is expected as argv[1] (used by the sweep
// and ledger criteria).

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/entropy.hpp"
#include "landau/phase_space.hpp"
#include "landau/quadrature.hpp"
#include "landau/report.hpp"
#include "landau/specfun.hpp"
#include "landau/statistics.hpp"

namespace sf = landau::specfun;
namespace quad = landau::quadrature;
namespace ps = landau::phase_space;
namespace st = landau::statistics;
namespace en = landau::entropy;
namespace rep = landau::report;

namespace {

int g_failures = 0;
std::string g_cli_path;

void report_line(int id, bool ok, const std::string& what,
                 const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", id, ok ? "PASS" : "FAIL",
              what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

void criterion(int id, const std::string& what,
               const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [ok, detail] = body();
    report_line(id, ok, what, detail);
  } catch (const std::exception& e) {
    report_line(id, false, what, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) { return rep::format_double(v); }

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int run_cli(const std::string& args) {
  const std::string cmd = "'" + g_cli_path + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  // 1. Normalization of both density families.
  criterion(1, "density normalization", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int m = 0; m <= 12; ++m)
      for (int j = 0; j <= 12; ++j) {
        const auto rule = quad::gauss_laguerre_rule(m + j + 4);
        double mass = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
          mass += rule.weights[i] * std::exp(rule.nodes[i]) *
                  ps::husimi_pure(m, j, rule.nodes[i]);
        worst = std::max(worst, std::abs(mass - 1.0));
      }
    quad::QuadratureSpec spec;
    for (int m = 0; m <= 8; ++m)
      for (double beta : {0.25, 1.0, 4.0}) {
        const ps::ThermalParams th(beta);
        const auto mass = quad::integrate_halfline(
            [&](double t) { return ps::husimi_thermal(m, th, t); }, spec,
            th.eta());
        worst = std::max(worst, std::abs(mass.value - 1.0));
      }
    const double secs = elapsed_s(t0);
    return std::pair{worst <= 1e-10 && secs < 5.0,
                     "worst |mass-1| = " + fmt(worst) + ", " + fmt(secs) + " s"};
  });

  // 2. Wavefunction-overlap oracle across the 54-point grid.
  criterion(2, "overlap oracle equivalence (54 points)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const int pairs[6][2] = {{0, 1}, {1, 1}, {2, 4}, {3, 3}, {5, 2}, {6, 0}};
    const double centers[3][2] = {{0.3, 0.0}, {1.0, 1.0}, {-0.5, 2.0}};
    double worst = 0.0;
    int points = 0;
    for (const auto& p : pairs)
      for (double B : {0.5, 1.0, 2.0})
        for (const auto& c : centers) {
          const double lam = ps::lambda_of(B, c[0], c[1]);
          worst = std::max(worst,
                           std::abs(ps::overlap_oracle(p[0], p[1], B, c[0], c[1]) -
                                    ps::husimi_pure(p[0], p[1], lam)));
          ++points;
        }
    const double secs = elapsed_s(t0);
    return std::pair{worst <= 1e-8 && points == 54 && secs < 10.0,
                     "worst diff = " + fmt(worst) + ", " + fmt(secs) + " s"};
  });

  // 3. Pure moments and characteristic function against quadrature.
  criterion(3, "pure moments and CF vs quadrature", [] {
    double worst_m = 0.0, worst_cf = 0.0;
    for (int m = 0; m <= 10; ++m)
      for (int j = 0; j <= 10; ++j) {
        const auto d = ps::make_pure_density(m, j);
        const auto qm = st::moments_quadrature(d);
        worst_m = std::max(worst_m, std::abs(qm.mean - (m + j + 1.0)));
        worst_m = std::max(worst_m,
                           std::abs(qm.variance - (2.0 * m * j + m + j + 1.0)));
      }
    for (int m = 0; m <= 6; ++m)
      for (int j = 0; j <= 6; ++j) {
        const auto d = ps::make_pure_density(m, j);
        for (double u : {-2.0, -0.5, 0.3, 1.0, 5.0})
          worst_cf = std::max(worst_cf, std::abs(st::cf_pure(m, j, u) -
                                                 st::cf_quadrature(d, u)));
      }
    return std::pair{worst_m <= 1e-8 && worst_cf <= 1e-8,
                     "worst moment diff = " + fmt(worst_m) +
                         ", worst CF diff = " + fmt(worst_cf)};
  });

  // 4. Thermal closed form vs truncated series oracle (72 points).
  criterion(4, "thermal series resummation (72 points)", [] {
    double worst = 0.0;
    int points = 0;
    for (int m = 0; m <= 7; ++m)
      for (double beta : {0.25, 1.0, 4.0})
        for (double lambda : {0.1, 1.0, 10.0}) {
          const ps::ThermalParams th(beta);
          const double q = std::exp(-beta);
          const double series = quad::series_sum(
              [&](int j) {
                return th.eta() * std::pow(q, j) * ps::husimi_pure(m, j, lambda);
              },
              [&](int j) { return std::pow(q, j + 1) / (1.0 - q); }, 1e-13);
          worst = std::max(worst,
                           std::abs(ps::husimi_thermal(m, th, lambda) - series));
          ++points;
        }
    return std::pair{worst <= 1e-10 && points == 72,
                     "worst diff = " + fmt(worst)};
  });

  // 5. Thermal CF/variance; printed variance flagged except at m = 1.
  criterion(5, "thermal CF and variance discrepancy pattern", [] {
    double worst_cf = 0.0, worst_var = 0.0;
    for (int m = 0; m <= 6; m += 2)
      for (double beta : {0.5, 1.0, 2.0}) {
        const ps::ThermalParams th(beta);
        const auto d = ps::make_thermal_density(m, th);
        for (double u : {-2.0, -0.5, 0.3, 1.0, 5.0})
          worst_cf = std::max(worst_cf, std::abs(st::cf_thermal(m, th, u) -
                                                 st::cf_quadrature(d, u)));
        const auto qm = st::moments_quadrature(d);
        worst_var = std::max(
            worst_var, std::abs(qm.variance - st::moments_thermal(m, th).variance));
      }
    bool pattern = true;
    const ps::ThermalParams th1(1.0);
    for (int m : {0, 1, 2, 3}) {
      const auto d = ps::make_thermal_density(m, th1);
      const double diff = std::abs(st::moments_quadrature(d).variance -
                                   st::paper_stated_variance(m, th1));
      pattern = pattern && ((m == 1) == (diff <= 1e-8));
    }
    return std::pair{worst_cf <= 1e-8 && worst_var <= 1e-8 && pattern,
                     "worst CF diff = " + fmt(worst_cf) + ", worst var diff = " +
                         fmt(worst_var) +
                         (pattern ? ", printed variance passes only at m=1"
                                  : ", discrepancy pattern BROKEN")};
  });

  // 6. Finite-m quotient against the limiting log-MGF at m = 200.
  // NOTE: the gap is exactly log(eta/(eta-u))/m independent of the
  // implementation, which exceeds the pinned 5e-3 at four of the six grid
  // points; the criterion is reproduced as stated and reported honestly.
  criterion(6, "limiting log-MGF quotient at m=200 (tolerance as pinned)", [] {
    double worst = 0.0;
    std::string detail;
    for (double beta : {0.5, 1.0}) {
      const ps::ThermalParams th(beta);
      for (double u : {-1.0, 0.3, 0.9 * th.eta()}) {
        const double gap = std::abs(st::log_mgf_finite_m(200, th, u) -
                                    st::log_mgf_limit(th, u));
        worst = std::max(worst, gap);
      }
    }
    return std::pair{worst <= 5e-3,
                     "worst |quotient - limit| = " + fmt(worst) +
                         " vs 5e-3; exact gap is log(eta/(eta-u))/200"};
  });

  // 7. Rate-function stationarity and the printed u_xi discrepancy.
  criterion(7, "rate function stationarity and printed u_xi", [] {
    double worst = 0.0;
    for (double beta : {0.5, 1.0, 2.0}) {
      const ps::ThermalParams th(beta);
      for (double xi : {0.5, 1.0, 2.0, 5.0}) {
        auto objective = [&](double u) {
          return xi * u - st::log_mgf_limit(th, u);
        };
        const double gold = quad::golden_section_max(
            objective, -50.0, th.eta() - 1e-12, 1e-12);
        worst = std::max(worst,
                         std::abs(gold - st::rate_thermal(th, xi).u_star));
      }
    }
    const ps::ThermalParams th1(1.0);
    const double at_mean = std::abs(st::rate_thermal(th1, 1.0).value);
    const double printed = st::paper_u_xi(th1, 1.0);
    const bool flagged = std::abs(printed - (-th1.eta() / 2.0)) <= 1e-10 &&
                         std::abs(printed) > 1e-3;
    return std::pair{worst <= 1e-8 && at_mean <= 1e-10 && flagged,
                     "worst u_star diff = " + fmt(worst) + ", rate(1) = " +
                         fmt(at_mean) + ", printed u_xi(1) = " + fmt(printed)};
  });

  // 8. Numeric Legendre transform of the pure-limit log-MGF.
  criterion(8, "pure-limit Legendre transform", [] {
    double worst = 0.0;
    for (double xi : {0.5, 1.0, 2.0, std::exp(1.0)}) {
      auto objective = [&](double u) { return xi * u + std::log1p(-u); };
      const double gold =
          quad::golden_section_max(objective, -50.0, 1.0 - 1e-12, 1e-13);
      worst = std::max(worst, std::abs(objective(gold) - st::rate_pure_limit(xi)));
    }
    return std::pair{worst <= 1e-10, "worst diff = " + fmt(worst)};
  });

  // 9. Count distribution of the mixed light.
  criterion(9, "mixed-light count law", [] {
    const ps::ThermalParams th(1.0);
    const auto masses =
        st::pmf_truncate([&](int m) { return st::pmf_Y(m, 1.0, th); });
    double total = 0.0, mean = 0.0, second = 0.0;
    for (std::size_t m = 0; m < masses.size(); ++m) {
      total += masses[m];
      mean += m * masses[m];
      second += static_cast<double>(m) * m * masses[m];
    }
    const double sum_err = std::abs(total - 1.0);

    double be_err = 0.0;
    const double nt = th.mean_photons();
    for (int m = 0; m <= 10; ++m)
      be_err = std::max(be_err,
                        std::abs(st::pmf_Y(m, 0.0, th) -
                                 std::pow(nt, m) / std::pow(1.0 + nt, m + 1)));

    const ps::ThermalParams cold = ps::ThermalParams::from_temperature(0.05);
    double tv = 0.0;
    for (int m = 0; m <= 40; ++m)
      tv += std::abs(st::pmf_Y(m, 1.0, cold) -
                     std::exp(-1.0 - sf::log_factorial(m)));
    tv *= 0.5;

    const auto draws =
        st::sample_pmf([&](int m) { return st::pmf_Y(m, 1.0, th); }, 100000, 7);
    double emp = 0.0;
    for (int s : draws) emp += s;
    emp /= static_cast<double>(draws.size());
    const double sigma = std::sqrt((second - mean * mean) / draws.size());
    const bool clt = std::abs(emp - mean) <= 4.0 * sigma;

    return std::pair{sum_err <= 1e-10 && be_err <= 1e-14 && tv <= 1e-2 && clt,
                     "|sum-1| = " + fmt(sum_err) + ", TV = " + fmt(tv) +
                         ", sampler |diff| = " + fmt(std::abs(emp - mean)) +
                         " vs 4 sigma = " + fmt(4.0 * sigma)};
  });

  // 10. Closed-form pure Wehrl entropy at min index 0.
  criterion(10, "pure Wehrl closed form (j <= 8)", [] {
    double worst = 0.0;
    for (int j = 0; j <= 8; ++j)
      worst = std::max(worst,
                       std::abs(en::wehrl_numeric(ps::make_pure_density(0, j)) -
                                en::wehrl_pure_m0(j)));
    return std::pair{worst <= 1e-8, "worst diff = " + fmt(worst)};
  });

  // 11. Asymptotic trend along m = j and the entropy lower bound.
  criterion(11, "asymptotic trend and lower bound", [] {
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true, bound = true;
    std::string gaps;
    for (int m : {6, 10, 14}) {
      const double s = en::wehrl_numeric(ps::make_pure_density(m, m));
      const double gap = std::abs(s - std::log(2.0 * std::numbers::pi * m /
                                               std::exp(1.0)));
      monotone = monotone && gap <= prev;
      bound = bound && s >= 1.0 - 1e-9;
      prev = gap;
      gaps += (gaps.empty() ? "" : ", ") + fmt(gap);
    }
    return std::pair{monotone && bound, "gaps: " + gaps};
  });

  // 12. Thermal Wehrl entropy: closed form at m = 0, ground-state anchor
  // and the recorded closed-form discrepancy for m >= 1.
  criterion(12, "thermal Wehrl verification", [] {
    double worst_m0 = 0.0;
    for (double beta : {0.25, 1.0, 4.0}) {
      const auto r = en::wehrl_thermal_verify(0, ps::ThermalParams(beta));
      worst_m0 = std::max(worst_m0, *r.abs_diff);
    }
    double worst_anchor = 0.0, min_recorded = 1e300;
    for (int m : {1, 2}) {
      const auto r = en::wehrl_thermal_verify(m, ps::ThermalParams(10.0));
      worst_anchor = std::max(
          worst_anchor, std::abs(r.numeric_value - en::wehrl_pure_m0(m)));
      min_recorded = std::min(min_recorded, *r.abs_diff);
    }
    return std::pair{worst_m0 <= 1e-6 && worst_anchor <= 1e-3 &&
                         min_recorded > 1.0,
                     "m=0 diff = " + fmt(worst_m0) + ", anchor diff = " +
                         fmt(worst_anchor) + ", recorded discrepancy >= " +
                         fmt(min_recorded)};
  });

  // 13. Minimum of the printed thermal entropy.
  criterion(13, "entropy minimum solver", [] {
    const auto s1 = en::min_entropy(1);
    const double tau_err = std::abs(s1.tau - 0.5);
    const double smin_err =
        std::abs(s1.s_min - (1.0 + 2.0 * std::log(2.0) + 0.25));
    double worst_res = 0.0, worst_agree = 0.0, worst_gold = 0.0;
    for (int m = 1; m <= 50; ++m) {
      const auto s = en::min_entropy(m);
      worst_res = std::max(worst_res, s.cubic_residual);
      worst_agree = std::max(worst_agree, std::abs(s.tau - s.tau_closed_form));
      const double gold = quad::golden_section_min(
          [m](double beta) {
            return en::wehrl_thermal_paper(m, ps::ThermalParams(beta));
          },
          1e-4, 20.0, 1e-12);
      worst_gold = std::max(worst_gold, std::abs(gold - s.beta_min));
    }
    return std::pair{tau_err <= 1e-12 && smin_err <= 1e-12 &&
                         worst_res <= 1e-10 && worst_agree <= 1e-10 &&
                         worst_gold <= 1e-8,
                     "tau_1 err = " + fmt(tau_err) + ", S_min(1) err = " +
                         fmt(smin_err) + ", residual <= " + fmt(worst_res) +
                         ", golden diff <= " + fmt(worst_gold)};
  });

  // 14. Renyi entropies: quadrature anchors plus the recorded comparison
  // of the Bell-polynomial formula.
  criterion(14, "Renyi entropy anchors and recorded comparison", [] {
    const double log2_err =
        std::abs(en::renyi_numeric(ps::make_pure_density(0, 0), 2.0) -
                 std::log(2.0));
    const auto d12 = ps::make_pure_density(1, 2);
    const double cont =
        std::abs(en::renyi_numeric(d12, 1.001) - en::wehrl_numeric(d12));
    double worst_recorded = 0.0;
    int recorded = 0, non_finite = 0;
    for (int m = 0; m <= 4; ++m)
      for (int j = 0; j <= 4; ++j)
        for (double q : {1.5, 2.0, 3.0}) {
          const double diff =
              std::abs(en::renyi_bell(m, j, q) -
                       en::renyi_numeric(ps::make_pure_density(m, j), q));
          if (std::isfinite(diff))
            worst_recorded = std::max(worst_recorded, diff);
          else
            ++non_finite;  // the stated sum can turn negative
          ++recorded;
        }
    return std::pair{log2_err <= 1e-10 && cont <= 1e-2 && recorded == 75,
                     "log2 err = " + fmt(log2_err) + ", q->1 gap = " +
                         fmt(cont) + ", recorded (ledgered) worst formula-vs-" +
                         "oracle diff = " + fmt(worst_recorded) + " plus " +
                         std::to_string(non_finite) + " non-finite"};
  });

  // 15. von Neumann comparison and the sweep CSV's qualitative content.
  criterion(15, "von Neumann bound and sweep data", [] {
    double worst_excess = 0.0;
    for (int m = 0; m <= 4; ++m)
      for (double beta : {0.5, 1.0, 2.0}) {
        const ps::ThermalParams th(beta);
        worst_excess = std::max(
            worst_excess,
            en::von_neumann_thermal(th) -
                en::wehrl_numeric(ps::make_thermal_density(m, th)));
      }
    const double vn40 = en::von_neumann_thermal(ps::ThermalParams(40.0));

    if (g_cli_path.empty())
      return std::pair{false, std::string("CLI path not supplied")};
    char tmpl[] = "/tmp/landau_acceptXXXXXX";
    const std::string dir = mkdtemp(tmpl);
    const std::string csv = dir + "/fig1.csv";
    if (run_cli("fig1 --m-max 8 --t-grid 0.05:20:120 --out " + csv) != 0)
      return std::pair{false, std::string("fig1 subcommand failed")};

    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::array<double, 10>> rows;
    while (std::getline(in, line)) {
      std::array<double, 10> row{};
      std::istringstream ls(line);
      std::string cell;
      for (int c = 0; c < 10 && std::getline(ls, cell, ','); ++c)
        row[c] = std::stod(cell);
      rows.push_back(row);
    }
    bool csv_ok = rows.size() == 120;
    double m0_err = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m0_err = std::max(
          m0_err, std::abs(rows[r][1] -
                           (1.0 - std::log(1.0 - std::exp(-1.0 / rows[r][0])))));
      for (int c = 1; c < 10; ++c) csv_ok = csv_ok && rows[r][c] >= 1.0;
      if (r) csv_ok = csv_ok && rows[r][1] > rows[r - 1][1];  // m=0 monotone in T
    }
    csv_ok = csv_ok && m0_err <= 1e-12;
    const double step = rows.size() > 1 ? rows[1][0] - rows[0][0] : 0.0;
    for (int m = 1; m <= 8; ++m) {
      std::size_t argmin = 0;
      for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r][m + 1] < rows[argmin][m + 1]) argmin = r;
      csv_ok = csv_ok && argmin > 0 && argmin + 1 < rows.size();
      csv_ok = csv_ok &&
               std::abs(rows[argmin][0] - en::min_entropy(m).t_min) <= step + 1e-12;
    }
    return std::pair{worst_excess <= 1e-8 && std::abs(vn40) <= 1e-12 && csv_ok,
                     "max (S_N - S_W) = " + fmt(worst_excess) + ", S_N(40) = " +
                         fmt(vn40) + ", sweep m0 err = " + fmt(m0_err)};
  });

  // 16. Full verification ledger through the CLI.
  criterion(16, "full verification ledger", [] {
    if (g_cli_path.empty())
      return std::pair{false, std::string("CLI path not supplied")};
    char tmpl[] = "/tmp/landau_verifyXXXXXX";
    const std::string dir = mkdtemp(tmpl);
    const std::string json_path = dir + "/report.json";
    const auto t0 = std::chrono::steady_clock::now();
    const int code = run_cli("verify --suite all --strict --out " + json_path);
    const double secs = elapsed_s(t0);
    if (code != 0)
      return std::pair{false, "exit code " + std::to_string(code)};

    std::ifstream in(json_path);
    const auto records = nlohmann::json::parse(in);
    std::set<std::string> discrepancy_families;
    int unexpected = 0;
    for (const auto& r : records) {
      if (r["verdict"] == "discrepancy") {
        discrepancy_families.insert(
            rep::claim_family(r["claim_id"].get<std::string>()));
        if (!r["expected_discrepancy"].get<bool>()) ++unexpected;
      }
    }
    const auto& expected = rep::expected_discrepancy_families();
    const bool families_match =
        discrepancy_families ==
        std::set<std::string>(expected.begin(), expected.end());
    return std::pair{secs < 120.0 && unexpected == 0 && families_match,
                     std::to_string(records.size()) + " records, " +
                         std::to_string(discrepancy_families.size()) +
                         " discrepancy families, " + std::to_string(unexpected) +
                         " unexpected, " + fmt(secs) + " s"};
  });

  std::printf("%d of 16 criteria failed\n", g_failures);
  return g_failures;
}
