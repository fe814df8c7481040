#include "landau/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "landau/entropy.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"
#include "landau/statistics.hpp"

namespace landau::report {

namespace sf = landau::specfun;
namespace quad = landau::quadrature;
namespace ps = landau::phase_space;
namespace st = landau::statistics;
namespace en = landau::entropy;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("SweepTable: row arity mismatch");
  rows.push_back(std::move(row));
}

void SweepTable::write_csv(std::ostream& os) const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << (c ? "," : "") << columns[c];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << format_double(row[c]);
    os << "\n";
  }
}

void SweepTable::write_json(std::ostream& os) const {
  os << "{\n  \"columns\": [";
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << (c ? ", " : "") << '"' << columns[c] << '"';
  os << "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "    [";
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      os << (c ? ", " : "") << format_double(rows[r][c]);
    os << (r + 1 < rows.size() ? "],\n" : "]\n");
  }
  os << "  ]";
  if (!provenance.empty()) {
    os << ",\n  \"provenance\": {";
    bool first = true;
    for (const auto& [col, id] : provenance) {
      os << (first ? "" : ", ") << '"' << col << "\": \"" << id << '"';
      first = false;
    }
    os << "}";
  }
  os << "\n}\n";
}

std::string claim_family(const std::string& claim_id) {
  return claim_id.substr(0, claim_id.find('['));
}

namespace {
// JSON has no literal for infinities or NaN; emit null for those.
std::string json_number(double v) {
  return std::isfinite(v) ? format_double(v) : "null";
}
}  // namespace

void write_json(std::ostream& os, const std::vector<VerificationRecord>& recs) {
  os << "[\n";
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    os << "  {\"claim_id\": \"" << r.claim_id << "\", \"paper_value\": "
       << json_number(r.paper_value)
       << ", \"oracle_value\": " << json_number(r.oracle_value)
       << ", \"abs_err\": " << json_number(r.abs_err)
       << ", \"rel_err\": " << json_number(r.rel_err)
       << ", \"tolerance\": " << json_number(r.tolerance)
       << ", \"expected_discrepancy\": "
       << (r.expected_discrepancy ? "true" : "false") << ", \"verdict\": \""
       << r.verdict << "\"}" << (i + 1 < recs.size() ? "," : "") << "\n";
  }
  os << "]\n";
}

const std::vector<std::string>& expected_discrepancy_families() {
  static const std::vector<std::string> families = {
      "prop3.3.variance", "prop3.4.u_xi", "prop4.2.closed-form"};
  return families;
}

namespace {

void add_record(std::vector<VerificationRecord>& out, std::string id,
                double paper, double oracle, double tol,
                bool expected = false) {
  VerificationRecord r;
  r.claim_id = std::move(id);
  r.paper_value = paper;
  r.oracle_value = oracle;
  r.abs_err = std::abs(paper - oracle);
  r.rel_err = oracle != 0.0 ? r.abs_err / std::abs(oracle) : r.abs_err;
  r.tolerance = tol;
  r.expected_discrepancy = expected;
  // An infinite tolerance marks a comparison that is recorded for the ledger
  // without being adjudicated (the reference value may not even be finite).
  if (std::isinf(tol))
    r.verdict = "recorded";
  else
    r.verdict = r.abs_err <= tol ? "pass" : "discrepancy";
  out.push_back(std::move(r));
}

// Tracks the worst deviation over a parameter grid and emits one record.
class WorstCase {
 public:
  void update(double paper, double oracle, const std::string& where) {
    const double err = std::abs(paper - oracle);
    if (err >= worst_err_) {
      worst_err_ = err;
      paper_ = paper;
      oracle_ = oracle;
      where_ = where;
    }
  }
  void emit(std::vector<VerificationRecord>& out, const std::string& family,
            double tol, bool expected = false) const {
    add_record(out, family + "[worst:" + where_ + "]", paper_, oracle_, tol,
               expected);
  }

 private:
  double worst_err_ = -1.0;
  double paper_ = 0.0;
  double oracle_ = 0.0;
  std::string where_;
};

// The 54-point overlap grid: six (m, j) pairs, three fields, three centers.
struct OverlapGrid {
  static constexpr int kPairs[6][2] = {{0, 1}, {1, 1}, {2, 4},
                                       {3, 3}, {5, 2}, {6, 0}};
  static constexpr double kFields[3] = {0.5, 1.0, 2.0};
  static constexpr double kCenters[3][2] = {{0.3, 0.0}, {1.0, 1.0}, {-0.5, 2.0}};
};

double pure_mass(int m, int j) {
  // Gauss-Laguerre is exact here: e^{-lambda} times a polynomial.
  const auto rule = quad::gauss_laguerre_rule(m + j + 4);
  double mass = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    mass += rule.weights[i] * std::exp(t) * ps::husimi_pure(m, j, t);
  }
  return mass;
}

std::vector<VerificationRecord> suite_pure() {
  std::vector<VerificationRecord> recs;

  WorstCase norm;
  for (int m = 0; m <= 12; ++m)
    for (int j = 0; j <= 12; ++j)
      norm.update(1.0, pure_mass(m, j),
                  "m=" + std::to_string(m) + ",j=" + std::to_string(j));
  norm.emit(recs, "husimi.pure.normalization", 1e-10);

  WorstCase overlap;
  for (const auto& pair : OverlapGrid::kPairs)
    for (double B : OverlapGrid::kFields)
      for (const auto& c : OverlapGrid::kCenters) {
        const double lam = ps::lambda_of(B, c[0], c[1]);
        overlap.update(ps::husimi_pure(pair[0], pair[1], lam),
                       ps::overlap_oracle(pair[0], pair[1], B, c[0], c[1]),
                       "m=" + std::to_string(pair[0]) +
                           ",j=" + std::to_string(pair[1]) +
                           ",B=" + format_double(B));
      }
  overlap.emit(recs, "appendixA.overlap-oracle", 1e-8);

  WorstCase mean, var;
  for (int m = 0; m <= 10; ++m)
    for (int j = 0; j <= 10; ++j) {
      const auto d = ps::make_pure_density(m, j);
      const auto qm = st::moments_quadrature(d);
      const auto cm = st::moments_pure(m, j);
      const std::string where =
          "m=" + std::to_string(m) + ",j=" + std::to_string(j);
      mean.update(cm.mean, qm.mean, where);
      var.update(cm.variance, qm.variance, where);
    }
  mean.emit(recs, "prop3.1.mean", 1e-8);
  var.emit(recs, "prop3.1.variance", 1e-8);

  WorstCase cf;
  for (int m = 0; m <= 6; m += 2)
    for (int j = 0; j <= 6; j += 3) {
      const auto d = ps::make_pure_density(m, j);
      for (double u : {-2.0, -0.5, 0.3, 1.0, 5.0}) {
        const auto closed = st::cf_pure(m, j, u);
        const auto oracle = st::cf_quadrature(d, u);
        cf.update(0.0, std::abs(closed - oracle),
                  "m=" + std::to_string(m) + ",j=" + std::to_string(j) +
                      ",u=" + format_double(u));
      }
    }
  cf.emit(recs, "prop3.1.cf", 1e-8);

  WorstCase zeros;
  for (const auto& [m, j] : {std::pair{3, 5}, {2, 2}, {6, 1}}) {
    for (double r : ps::husimi_zero_radii(m, j, 1.0))
      zeros.update(0.0, ps::husimi_pure(m, j, 0.5 * r * r),
                   "m=" + std::to_string(m) + ",j=" + std::to_string(j));
  }
  zeros.emit(recs, "remark3.1.zero-circles", 1e-12);
  return recs;
}

double thermal_series_oracle(int m, const ps::ThermalParams& th,
                             double lambda) {
  const double eta = th.eta();
  const double q = std::exp(-th.beta());
  auto term = [&](int j) {
    return eta * std::pow(q, j) * ps::husimi_pure(m, j, lambda);
  };
  auto tail = [&](int j) { return std::pow(q, j + 1) / (1.0 - q); };
  return quad::series_sum(term, tail, 1e-13);
}

std::vector<VerificationRecord> suite_thermal() {
  std::vector<VerificationRecord> recs;

  WorstCase norm;
  for (int m = 0; m <= 8; ++m)
    for (double beta : {0.25, 1.0, 4.0}) {
      const ps::ThermalParams th(beta);
      quad::QuadratureSpec spec;
      spec.abs_tol = 1e-12;
      auto pdf = [&](double t) { return ps::husimi_thermal(m, th, t); };
      norm.update(1.0, quad::integrate_halfline(pdf, spec, th.eta()).value,
                  "m=" + std::to_string(m) + ",beta=" + format_double(beta));
    }
  norm.emit(recs, "husimi.thermal.normalization", 1e-10);

  WorstCase series;
  for (int m = 0; m <= 7; ++m)
    for (double beta : {0.25, 1.0, 4.0})
      for (double lambda : {0.1, 1.0, 10.0}) {
        const ps::ThermalParams th(beta);
        series.update(ps::husimi_thermal(m, th, lambda),
                      thermal_series_oracle(m, th, lambda),
                      "m=" + std::to_string(m) + ",beta=" + format_double(beta) +
                          ",lambda=" + format_double(lambda));
      }
  series.emit(recs, "appendixC.series-resummation", 1e-10);

  WorstCase cf, mean, var_cumulant;
  for (int m = 0; m <= 6; m += 2)
    for (double beta : {0.5, 1.0, 2.0}) {
      const ps::ThermalParams th(beta);
      const auto d = ps::make_thermal_density(m, th);
      const std::string where =
          "m=" + std::to_string(m) + ",beta=" + format_double(beta);
      for (double u : {-2.0, -0.5, 0.3, 1.0, 5.0}) {
        const auto closed = st::cf_thermal(m, th, u);
        const auto oracle = st::cf_quadrature(d, u);
        cf.update(0.0, std::abs(closed - oracle), where + ",u=" + format_double(u));
      }
      const auto qm = st::moments_quadrature(d);
      const auto cm = st::moments_thermal(m, th);
      mean.update(cm.mean, qm.mean, where);
      var_cumulant.update(cm.variance, qm.variance, where);
    }
  cf.emit(recs, "prop3.3.cf", 1e-8);
  mean.emit(recs, "prop3.3.mean", 1e-8);
  var_cumulant.emit(recs, "prop3.3.variance-cumulant", 1e-8);

  // The printed variance disagrees with the CF cumulants except at m = 1;
  // difference (m-1) e^{-2 beta} / eta^2.
  const ps::ThermalParams th1(1.0);
  for (int m : {0, 1, 2, 3}) {
    const auto d = ps::make_thermal_density(m, th1);
    const auto qm = st::moments_quadrature(d);
    add_record(recs, "prop3.3.variance[m=" + std::to_string(m) + ",beta=1]",
               st::paper_stated_variance(m, th1), qm.variance, 1e-8,
               /*expected=*/m != 1);
  }
  return recs;
}

std::vector<VerificationRecord> suite_rate() {
  std::vector<VerificationRecord> recs;

  // Cor 3.1 is a limit statement; verified here as convergence of the
  // finite-m quotient at large m.
  WorstCase limit;
  for (double beta : {0.5, 1.0}) {
    const ps::ThermalParams th(beta);
    for (double u : {-1.0, 0.3, 0.9 * th.eta()})
      limit.update(st::log_mgf_limit(th, u), st::log_mgf_finite_m(2000, th, u),
                   "beta=" + format_double(beta) + ",u=" + format_double(u));
  }
  limit.emit(recs, "cor3.1.limiting-log-mgf", 5e-3);

  WorstCase stationarity, sup_value;
  for (double beta : {0.5, 1.0, 2.0})
    for (double xi : {0.5, 1.0, 2.0, 5.0}) {
      const ps::ThermalParams th(beta);
      const auto rate = st::rate_thermal(th, xi);
      auto objective = [&](double u) { return xi * u - st::log_mgf_limit(th, u); };
      const double u_gold =
          quad::golden_section_max(objective, -50.0, th.eta() - 1e-12, 1e-12);
      const std::string where =
          "beta=" + format_double(beta) + ",xi=" + format_double(xi);
      stationarity.update(rate.u_star, u_gold, where);
      sup_value.update(rate.value, objective(u_gold), where);
    }
  stationarity.emit(recs, "prop3.4.stationarity-root", 1e-8);
  sup_value.emit(recs, "prop3.4.rate-value", 1e-8);

  const ps::ThermalParams th1(1.0);
  add_record(recs, "prop3.4.rate-at-mean[beta=1]", 0.0,
             st::rate_thermal(th1, 1.0).value, 1e-10);
  // The printed u_xi evaluates to -eta/2 at xi = 1 where stationarity
  // demands 0.
  add_record(recs, "prop3.4.u_xi[xi=1,beta=1]", st::paper_u_xi(th1, 1.0),
             st::rate_thermal(th1, 1.0).u_star, 1e-10, /*expected=*/true);

  WorstCase pure_rate;
  for (double xi : {0.5, 1.0, 2.0, std::exp(1.0)}) {
    auto objective = [xi](double u) { return xi * u + std::log1p(-u); };
    const double u_gold =
        quad::golden_section_max(objective, -50.0, 1.0 - 1e-12, 1e-13);
    pure_rate.update(st::rate_pure_limit(xi), objective(u_gold),
                     "xi=" + format_double(xi));
  }
  pure_rate.emit(recs, "remark3.2.pure-rate-legendre", 1e-10);
  return recs;
}

std::vector<VerificationRecord> suite_entropy() {
  std::vector<VerificationRecord> recs;

  WorstCase m0;
  for (int j = 0; j <= 8; ++j)
    m0.update(en::wehrl_pure_m0(j),
              en::wehrl_numeric(ps::make_pure_density(0, j)),
              "j=" + std::to_string(j));
  m0.emit(recs, "remark4.1.pure-wehrl-m0", 1e-8);

  // Prop 4.1 carries an unquantified o(1); the registered claim is the
  // trend: the gap to the leading term does not grow along m = j.
  double prev_gap = std::numeric_limits<double>::infinity();
  double worst_increase = 0.0;
  for (int m : {6, 10, 14}) {
    const double gap =
        std::abs(en::wehrl_numeric(ps::make_pure_density(m, m)) -
                 en::wehrl_pure_asymptotic(m, m).value);
    worst_increase = std::max(worst_increase, gap - prev_gap);
    prev_gap = gap;
  }
  add_record(recs, "prop4.1.asymptotic-trend[m=j in {6,10,14}]", 0.0,
             std::max(worst_increase, 0.0), 1e-12);

  WorstCase thermal_m0;
  for (double beta : {0.25, 1.0, 4.0}) {
    const auto rep = en::wehrl_thermal_verify(0, ps::ThermalParams(beta));
    thermal_m0.update(*rep.paper_value, rep.numeric_value,
                      "beta=" + format_double(beta));
  }
  thermal_m0.emit(recs, "prop4.2.m0-closed-form", 1e-6);

  for (int m : {1, 2}) {
    const ps::ThermalParams th(10.0);
    const auto rep = en::wehrl_thermal_verify(m, th);
    add_record(recs, "prop4.2.ground-state-anchor[m=" + std::to_string(m) + "]",
               en::wehrl_pure_m0(m), rep.numeric_value, 1e-3);
    add_record(recs, "prop4.2.closed-form[m=" + std::to_string(m) + ",beta=10]",
               *rep.paper_value, rep.numeric_value, 1e-6, /*expected=*/true);
  }

  WorstCase residual, agreement, golden;
  for (int m = 1; m <= 50; ++m) {
    const auto sol = en::min_entropy(m);
    const std::string where = "m=" + std::to_string(m);
    residual.update(0.0, sol.cubic_residual, where);
    agreement.update(sol.tau_closed_form, sol.tau, where);
    auto paper_entropy = [m](double beta) {
      return en::wehrl_thermal_paper(m, ps::ThermalParams(beta));
    };
    golden.update(sol.beta_min,
                  quad::golden_section_min(paper_entropy, 1e-4, 20.0, 1e-12),
                  where);
  }
  residual.emit(recs, "prop4.3.cubic-residual", 1e-10);
  agreement.emit(recs, "prop4.3.closed-form-vs-newton", 1e-10);
  golden.emit(recs, "prop4.3.beta-min-golden", 1e-8);
  add_record(recs, "prop4.3.tau[m=1]", 0.5, en::min_entropy(1).tau, 1e-12);

  // Renyi Bell-polynomial formula vs the quadrature oracle. The formula's
  // provenance requires oracle arbitration, so these records are
  // informational: the difference is recorded without a pass threshold.
  for (const auto& [m, j] : {std::pair{0, 0}, {0, 2}, {1, 1}, {2, 4}, {4, 4}})
    for (double q : {1.5, 2.0, 3.0}) {
      const auto d = ps::make_pure_density(m, j);
      add_record(recs,
                 "eq-renyi.bell-vs-numeric[m=" + std::to_string(m) +
                     ",j=" + std::to_string(j) + ",q=" + format_double(q) + "]",
                 en::renyi_bell(m, j, q), en::renyi_numeric(d, q),
                 std::numeric_limits<double>::infinity());
    }

  WorstCase lieb, wehrl_vs_vn;
  for (int m = 0; m <= 4; ++m)
    for (double beta : {0.5, 1.0, 2.0}) {
      const ps::ThermalParams th(beta);
      const double sw = en::wehrl_numeric(ps::make_thermal_density(m, th));
      const double sn = en::von_neumann_thermal(th);
      const std::string where =
          "m=" + std::to_string(m) + ",beta=" + format_double(beta);
      lieb.update(0.0, std::max(0.0, 1.0 - sw), where);
      wehrl_vs_vn.update(0.0, std::max(0.0, sn - sw), where);
    }
  lieb.emit(recs, "lieb.bound-thermal", 1e-9);
  wehrl_vs_vn.emit(recs, "remark4.2.wehrl-dominates-von-neumann", 1e-8);
  add_record(recs, "remark4.2.von-neumann-zero-T[beta=40]", 0.0,
             en::von_neumann_thermal(ps::ThermalParams(40.0)), 1e-12);
  return recs;
}

std::vector<VerificationRecord> suite_dist() {
  std::vector<VerificationRecord> recs;

  WorstCase sum_x, sum_y;
  for (const auto& [m, lambda] : {std::pair{0, 2.0}, {2, 1.5}, {5, 4.0}}) {
    const auto masses =
        st::pmf_truncate([&](int j) { return st::pmf_X(m, lambda, j); });
    double total = 0.0;
    for (double p : masses) total += p;
    sum_x.update(1.0, total,
                 "m=" + std::to_string(m) + ",lambda=" + format_double(lambda));
  }
  sum_x.emit(recs, "remark3.3.pmf-X-sums-to-one", 1e-10);

  for (double beta : {0.5, 1.0}) {
    const ps::ThermalParams th(beta);
    const auto masses =
        st::pmf_truncate([&](int m) { return st::pmf_Y(m, 1.0, th); });
    double total = 0.0;
    for (double p : masses) total += p;
    sum_y.update(1.0, total, "lambda=1,beta=" + format_double(beta));
  }
  sum_y.emit(recs, "eq3.16.pmf-Y-sums-to-one", 1e-10);

  // Dual route: the printed N_T form against the stabilized evaluation.
  WorstCase duality;
  const ps::ThermalParams th1(1.0);
  const double nt = th1.mean_photons();
  for (int m = 0; m <= 6; ++m)
    for (double lambda : {0.0, 1.0, 2.0}) {
      const double printed = std::pow(nt, m) / std::pow(1.0 + nt, m + 1) *
                             std::exp(-lambda / (1.0 + nt)) *
                             sf::laguerre(m, 0.0, -lambda / (nt * (1.0 + nt)));
      duality.update(printed, st::pmf_Y(m, lambda, th1),
                     "m=" + std::to_string(m) + ",lambda=" + format_double(lambda));
    }
  duality.emit(recs, "eq3.16.printed-form-duality", 1e-12);

  // Bose-Einstein limit at lambda = 0.
  WorstCase bose;
  for (int m = 0; m <= 8; ++m)
    bose.update(std::pow(nt, m) / std::pow(1.0 + nt, m + 1),
                st::pmf_Y(m, 0.0, th1), "m=" + std::to_string(m));
  bose.emit(recs, "eq3.16.bose-einstein-limit", 1e-14);

  // Poisson limit at T = 0.05 in total variation.
  const ps::ThermalParams cold = ps::ThermalParams::from_temperature(0.05);
  double tv = 0.0;
  for (int m = 0; m <= 40; ++m) {
    const double poisson = std::exp(-1.0 - sf::log_factorial(m));
    tv += std::abs(st::pmf_Y(m, 1.0, cold) - poisson);
  }
  add_record(recs, "eq3.16.poisson-limit[T=0.05,lambda=1]", 0.0, 0.5 * tv,
             1e-2);

  // Seeded sampler mean within the 4-sigma CLT band.
  const auto samples = st::sample_pmf(
      [&](int m) { return st::pmf_Y(m, 1.0, th1); }, 100000, 7);
  double emp_mean = 0.0;
  for (int s : samples) emp_mean += s;
  emp_mean /= static_cast<double>(samples.size());
  const auto masses =
      st::pmf_truncate([&](int m) { return st::pmf_Y(m, 1.0, th1); });
  double exact_mean = 0.0, exact_second = 0.0;
  for (std::size_t m = 0; m < masses.size(); ++m) {
    exact_mean += m * masses[m];
    exact_second += static_cast<double>(m) * m * masses[m];
  }
  const double sigma =
      std::sqrt((exact_second - exact_mean * exact_mean) / samples.size());
  add_record(recs, "eq3.16.sampler-clt[n=1e5,seed=7]", exact_mean, emp_mean,
             4.0 * sigma);
  return recs;
}

}  // namespace

std::vector<VerificationRecord> run_suite(const std::string& suite) {
  std::vector<VerificationRecord> recs;
  auto append = [&recs](std::vector<VerificationRecord> more) {
    recs.insert(recs.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  };
  if (suite == "pure" || suite == "all") append(suite_pure());
  if (suite == "thermal" || suite == "all") append(suite_thermal());
  if (suite == "rate" || suite == "all") append(suite_rate());
  if (suite == "entropy" || suite == "all") append(suite_entropy());
  if (suite == "dist" || suite == "all") append(suite_dist());
  if (recs.empty())
    throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  return recs;
}

}  // namespace landau::report
