// Command-line frontend: single evaluations, parameter sweeps, Monte Carlo
// checks, figure data, and the verification ledger.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure,
// 3 strict-mode discrepancy.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landau/entropy.hpp"
#include "landau/phase_space.hpp"
#include "landau/quadrature.hpp"
#include "landau/report.hpp"
#include "landau/statistics.hpp"

namespace ps = landau::phase_space;
namespace st = landau::statistics;
namespace en = landau::entropy;
namespace quad = landau::quadrature;
namespace rep = landau::report;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a:b:n" -> n evenly spaced points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  long n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 ||
      (in >> std::ws, !in.eof()))
    throw UsageError("bad grid '" + text + "', expected a:b:n with n >= 1");
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    pts[static_cast<std::size_t>(i)] =
        n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1.0);
  return pts;
}

// Relative --out paths land in $LANDAU_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("LANDAU_OUT_DIR");
  if (!dir || !*dir || path.empty() || path.front() == '/') return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

// Runs `emit` against --out (if given) or stdout.
template <typename Emit>
void with_output(const std::string& out_path, Emit emit) {
  if (out_path.empty()) {
    emit(std::cout);
    return;
  }
  const std::string resolved = resolve_out(out_path);
  std::ofstream os(resolved);
  if (!os) throw UsageError("cannot open output file '" + resolved + "'");
  emit(os);
}

void write_table(const rep::SweepTable& t, const std::string& out,
                 const std::string& format) {
  with_output(out, [&](std::ostream& os) {
    if (format == "json")
      t.write_json(os);
    else
      t.write_csv(os);
  });
}

ps::ThermalParams thermal_from(const std::optional<double>& beta,
                               const std::optional<double>& temperature) {
  if (beta.has_value() == temperature.has_value())
    throw UsageError("exactly one of --beta / --temperature is required");
  return beta ? ps::ThermalParams(*beta)
              : ps::ThermalParams::from_temperature(*temperature);
}

int run_husimi(int m, std::optional<int> j, std::optional<double> beta,
               std::optional<double> temperature, std::optional<double> lambda,
               std::optional<double> x, std::optional<double> y,
               std::optional<double> b_field, const std::string& grid,
               const std::string& out, const std::string& format) {
  const bool pure = j.has_value();
  if (pure && (beta || temperature))
    throw UsageError("--j conflicts with --beta/--temperature");
  if (!pure && !beta && !temperature)
    throw UsageError("need exactly one of --j, --beta, --temperature");

  std::function<double(double)> density;
  if (pure) {
    density = [m, jj = *j](double t) { return ps::husimi_pure(m, jj, t); };
  } else {
    const ps::ThermalParams th = thermal_from(beta, temperature);
    density = [m, th](double t) { return ps::husimi_thermal(m, th, t); };
  }

  if (!grid.empty()) {
    if (lambda || x || y || b_field)
      throw UsageError("--grid conflicts with --lambda/--x/--y/--b-field");
    rep::SweepTable t;
    t.columns = {"lambda", "density"};
    t.provenance = {{"density", pure ? "pure-husimi" : "thermal-husimi"}};
    for (double l : parse_grid(grid)) t.add_row({l, density(l)});
    write_table(t, out, format);
    return 0;
  }

  double point;
  if (lambda) {
    if (x || y || b_field)
      throw UsageError("--lambda conflicts with --x/--y/--b-field");
    point = *lambda;
  } else {
    if (!(x && y && b_field))
      throw UsageError("need --lambda or all of --x, --y, --b-field");
    point = ps::lambda_of(*b_field, *x, *y);
  }
  with_output(out, [&](std::ostream& os) {
    os << rep::format_double(density(point)) << "\n";
  });
  return 0;
}

int run_entropy(int m, std::optional<int> j, std::optional<double> beta,
                std::optional<double> temperature, const std::string& method,
                const std::string& out) {
  const int given = int(j.has_value()) + int(beta.has_value()) +
                    int(temperature.has_value());
  if (given != 1)
    throw UsageError("need exactly one of --j, --beta, --temperature");

  std::optional<double> paper;
  double numeric = 0.0;
  std::string subject, formula;
  if (j) {
    subject = "pure(m=" + std::to_string(m) + ",j=" + std::to_string(*j) + ")";
    if (method != "paper") numeric = en::wehrl_numeric(ps::make_pure_density(m, *j));
    if (std::min(m, *j) == 0) {
      paper = en::wehrl_pure_m0(std::max(m, *j));
      formula = "pure-wehrl-min0";
    } else if (method == "paper") {
      throw UsageError("no closed form for min(m, j) >= 1; use --method numeric");
    }
  } else {
    const ps::ThermalParams th = thermal_from(beta, temperature);
    const auto report = en::wehrl_thermal_verify(m, th);
    subject = report.subject;
    formula = report.formula_id;
    numeric = report.numeric_value;
    paper = report.paper_value;
  }

  with_output(out, [&](std::ostream& os) {
    if (method == "numeric") {
      os << rep::format_double(numeric) << "\n";
    } else if (method == "paper") {
      os << rep::format_double(*paper) << "\n";
    } else {
      os << "subject=" << subject << "\n";
      os << "numeric=" << rep::format_double(numeric) << "\n";
      if (paper) {
        const double diff = std::abs(*paper - numeric);
        os << "paper=" << rep::format_double(*paper) << "\n";
        os << "formula=" << formula << "\n";
        os << "abs_diff=" << rep::format_double(diff) << "\n";
        os << "verdict=" << (diff <= 1e-6 ? "agree" : "discrepancy") << "\n";
      }
    }
  });
  return 0;
}

int run_min_entropy(std::optional<int> m, std::optional<int> max_m,
                    const std::string& out, const std::string& format) {
  if (m.has_value() == max_m.has_value())
    throw UsageError("need exactly one of --m, --max-m");
  rep::SweepTable t;
  t.columns = {"m", "tau", "beta_min", "t_min", "s_min", "residual"};
  const int lo = m ? *m : 1;
  const int hi = m ? *m : *max_m;
  for (int k = lo; k <= hi; ++k) {
    const auto sol = en::min_entropy(k);
    t.add_row({static_cast<double>(k), sol.tau, sol.beta_min, sol.t_min,
               sol.s_min, sol.cubic_residual});
  }
  write_table(t, out, format);
  return 0;
}

int run_fig1(int m_max, const std::string& t_grid, const std::string& out,
             const std::string& format) {
  if (m_max < 0) throw UsageError("--m-max must be >= 0");
  rep::SweepTable t;
  t.columns = {"T"};
  for (int m = 0; m <= m_max; ++m) t.columns.push_back("S_m" + std::to_string(m));
  t.provenance = {{"S_m*", "thermal-wehrl-closed-form"}};
  for (double temp : parse_grid(t_grid)) {
    std::vector<double> row = {temp};
    const ps::ThermalParams th = ps::ThermalParams::from_temperature(temp);
    for (int m = 0; m <= m_max; ++m)
      row.push_back(en::wehrl_thermal_paper(m, th));
    t.add_row(std::move(row));
  }
  write_table(t, out, format);
  return 0;
}

int run_dist(const std::string& law, std::optional<int> m,
             std::optional<double> lambda, std::optional<double> beta,
             std::optional<double> temperature, std::optional<long> sample,
             std::uint64_t seed, const std::string& out,
             const std::string& format) {
  if (!lambda) throw UsageError("--lambda is required");
  std::function<double(int)> pmf;
  if (law == "x") {
    if (!m) throw UsageError("--law x requires --m");
    if (beta || temperature)
      throw UsageError("--law x conflicts with --beta/--temperature");
    pmf = [mm = *m, l = *lambda](int k) { return st::pmf_X(mm, l, k); };
  } else {
    const ps::ThermalParams th = thermal_from(beta, temperature);
    pmf = [l = *lambda, th](int k) { return st::pmf_Y(k, l, th); };
  }

  const auto masses = st::pmf_truncate(pmf);
  double mean = 0.0, second = 0.0;
  for (std::size_t k = 0; k < masses.size(); ++k) {
    mean += static_cast<double>(k) * masses[k];
    second += static_cast<double>(k) * static_cast<double>(k) * masses[k];
  }

  if (sample) {
    if (*sample < 1) throw UsageError("--sample must be >= 1");
    const auto draws = st::sample_pmf(pmf, static_cast<std::size_t>(*sample), seed);
    double emp = 0.0;
    for (int d : draws) emp += d;
    emp /= static_cast<double>(draws.size());
    const double sigma =
        std::sqrt((second - mean * mean) / static_cast<double>(draws.size()));
    with_output(out, [&](std::ostream& os) {
      os << "n=" << draws.size() << "\n";
      os << "seed=" << seed << "\n";
      os << "exact_mean=" << rep::format_double(mean) << "\n";
      os << "empirical_mean=" << rep::format_double(emp) << "\n";
      os << "sigma=" << rep::format_double(sigma) << "\n";
      os << "abs_diff=" << rep::format_double(std::abs(emp - mean)) << "\n";
      os << "within_4sigma="
         << (std::abs(emp - mean) <= 4.0 * sigma ? "true" : "false") << "\n";
    });
    return 0;
  }

  rep::SweepTable t;
  t.columns = {"k", "mass"};
  t.provenance = {{"mass", law == "x" ? "pure-count-law" : "laguerre-count-law"}};
  for (std::size_t k = 0; k < masses.size(); ++k)
    t.add_row({static_cast<double>(k), masses[k]});
  write_table(t, out, format);
  return 0;
}

int run_rate(std::optional<double> beta, std::optional<double> temperature,
             const std::string& xi_grid, bool pure_limit,
             const std::string& out, const std::string& format) {
  rep::SweepTable t;
  if (pure_limit) {
    if (beta || temperature)
      throw UsageError("--pure-limit conflicts with --beta/--temperature");
    t.columns = {"xi", "rate"};
    t.provenance = {{"rate", "pure-rate-function"}};
    for (double xi : parse_grid(xi_grid))
      t.add_row({xi, st::rate_pure_limit(xi)});
    write_table(t, out, format);
    return 0;
  }
  const ps::ThermalParams th = thermal_from(beta, temperature);
  t.columns = {"xi", "u_star", "rate", "paper_u_xi", "confirmed"};
  t.provenance = {{"rate", "thermal-rate-function"},
                  {"paper_u_xi", "printed-stationary-point"}};
  for (double xi : parse_grid(xi_grid)) {
    const auto r = st::rate_thermal(th, xi);
    auto objective = [&](double u) { return xi * u - st::log_mgf_limit(th, u); };
    const double u_gold =
        quad::golden_section_max(objective, -50.0, th.eta() - 1e-12, 1e-12);
    const bool confirmed = std::abs(u_gold - r.u_star) <= 1e-8;
    t.add_row({xi, r.u_star, r.value, st::paper_u_xi(th, xi),
               confirmed ? 1.0 : 0.0});
  }
  write_table(t, out, format);
  return 0;
}

int run_verify(const std::string& suite, bool strict, const std::string& out) {
  const auto records = rep::run_suite(suite);
  with_output(out, [&](std::ostream& os) { rep::write_json(os, records); });

  std::size_t passes = 0, recorded = 0, expected = 0, unexpected = 0;
  for (const auto& r : records) {
    if (r.verdict == "pass")
      ++passes;
    else if (r.verdict == "recorded")
      ++recorded;
    else if (r.expected_discrepancy)
      ++expected;
    else
      ++unexpected;
  }
  std::cerr << "verify: " << records.size() << " records, " << passes
            << " pass, " << recorded << " recorded, " << expected
            << " expected discrepancies, " << unexpected << " unexpected\n";
  if (strict && unexpected > 0) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-space densities, count statistics and entropies for "
               "displaced oscillator modes"};
  app.require_subcommand(1);

  // husimi
  auto* husimi = app.add_subcommand("husimi", "Evaluate a phase-space density");
  int h_m = 0;
  std::optional<int> h_j;
  std::optional<double> h_beta, h_temp, h_lambda, h_x, h_y, h_b;
  std::string h_grid, h_out, h_format = "csv";
  husimi->add_option("--m", h_m)->required()->check(CLI::NonNegativeNumber);
  husimi->add_option("--j", h_j)->check(CLI::NonNegativeNumber);
  husimi->add_option("--beta", h_beta);
  husimi->add_option("--temperature", h_temp);
  husimi->add_option("--lambda", h_lambda);
  husimi->add_option("--x", h_x);
  husimi->add_option("--y", h_y);
  husimi->add_option("--b-field", h_b);
  husimi->add_option("--grid", h_grid, "lambda grid a:b:n");
  husimi->add_option("--out", h_out);
  husimi->add_option("--format", h_format)->check(CLI::IsMember({"csv", "json"}));

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Wehrl entropy of a density");
  int e_m = 0;
  std::optional<int> e_j;
  std::optional<double> e_beta, e_temp;
  std::string e_method = "numeric", e_out;
  entropy->add_option("--m", e_m)->required()->check(CLI::NonNegativeNumber);
  entropy->add_option("--j", e_j)->check(CLI::NonNegativeNumber);
  entropy->add_option("--beta", e_beta);
  entropy->add_option("--temperature", e_temp);
  entropy->add_option("--method", e_method)
      ->check(CLI::IsMember({"paper", "numeric", "both"}));
  entropy->add_option("--out", e_out);

  // min-entropy
  auto* mine = app.add_subcommand("min-entropy",
                                  "Entropy minimum over temperature");
  std::optional<int> n_m, n_max_m;
  std::string n_out, n_format = "csv";
  mine->add_option("--m", n_m)->check(CLI::PositiveNumber);
  mine->add_option("--max-m", n_max_m)->check(CLI::PositiveNumber);
  mine->add_option("--out", n_out);
  mine->add_option("--format", n_format)->check(CLI::IsMember({"csv", "json"}));

  // fig1
  auto* fig1 = app.add_subcommand("fig1", "Entropy-vs-temperature sweep data");
  int f_m_max = 8;
  std::string f_grid = "0.05:20:120", f_out, f_format = "csv";
  fig1->add_option("--m-max", f_m_max);
  fig1->add_option("--t-grid", f_grid, "temperature grid a:b:n");
  fig1->add_option("--out", f_out);
  fig1->add_option("--format", f_format)->check(CLI::IsMember({"csv", "json"}));

  // dist
  auto* dist = app.add_subcommand("dist", "Photon-count distributions");
  std::string d_law;
  std::optional<int> d_m;
  std::optional<double> d_lambda, d_beta, d_temp;
  std::optional<long> d_sample;
  std::uint64_t d_seed = 0;
  std::string d_out, d_format = "csv";
  dist->add_option("--law", d_law)->required()->check(CLI::IsMember({"x", "y"}));
  dist->add_option("--m", d_m)->check(CLI::NonNegativeNumber);
  dist->add_option("--lambda", d_lambda);
  dist->add_option("--beta", d_beta);
  dist->add_option("--temperature", d_temp);
  dist->add_option("--sample", d_sample);
  dist->add_option("--seed", d_seed);
  dist->add_option("--out", d_out);
  dist->add_option("--format", d_format)->check(CLI::IsMember({"csv", "json"}));

  // rate
  auto* rate = app.add_subcommand("rate", "Large-deviation rate function");
  std::optional<double> r_beta, r_temp;
  std::string r_grid = "0.5:5:10", r_out, r_format = "csv";
  bool r_pure = false;
  rate->add_option("--beta", r_beta);
  rate->add_option("--temperature", r_temp);
  rate->add_option("--xi-grid", r_grid, "xi grid a:b:n");
  rate->add_flag("--pure-limit", r_pure);
  rate->add_option("--out", r_out);
  rate->add_option("--format", r_format)->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification ledger");
  std::string v_suite = "all", v_out;
  bool v_strict = false;
  verify->add_option("--suite", v_suite)
      ->check(CLI::IsMember({"all", "pure", "thermal", "entropy", "rate", "dist"}));
  verify->add_flag("--strict", v_strict);
  verify->add_option("--out", v_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (husimi->parsed())
      return run_husimi(h_m, h_j, h_beta, h_temp, h_lambda, h_x, h_y, h_b,
                        h_grid, h_out, h_format);
    if (entropy->parsed())
      return run_entropy(e_m, e_j, e_beta, e_temp, e_method, e_out);
    if (mine->parsed()) return run_min_entropy(n_m, n_max_m, n_out, n_format);
    if (fig1->parsed()) return run_fig1(f_m_max, f_grid, f_out, f_format);
    if (dist->parsed())
      return run_dist(d_law, d_m, d_lambda, d_beta, d_temp, d_sample, d_seed,
                      d_out, d_format);
    if (rate->parsed())
      return run_rate(r_beta, r_temp, r_grid, r_pure, r_out, r_format);
    if (verify->parsed()) return run_verify(v_suite, v_strict, v_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const quad::numerical_failure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
