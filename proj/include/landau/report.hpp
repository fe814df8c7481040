#ifndef LANDAU_REPORT_HPP
#define LANDAU_REPORT_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

// Tabular and verification-record output shared by the CLI and the test
// suites. All numerics are printed with 17 significant digits so CSV
// round-trips are bit-exact for 64-bit floats.

namespace landau::report {

/// One float formatted with 17 significant digits.
std::string format_double(double v);

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> provenance;  // column -> formula id

  void add_row(std::vector<double> row);
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

struct VerificationRecord {
  std::string claim_id;  // e.g. "prop3.3.variance[m=2,beta=1]"
  double paper_value = 0.0;
  double oracle_value = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool expected_discrepancy = false;
  std::string verdict;  // "pass" | "discrepancy"
};

/// Claim family: the id up to the first '[' (parameter bracket).
std::string claim_family(const std::string& claim_id);

void write_json(std::ostream& os, const std::vector<VerificationRecord>& recs);

/// Run one registered verification suite:
/// "pure", "thermal", "entropy", "rate", "dist" or "all".
std::vector<VerificationRecord> run_suite(const std::string& suite);

/// Names of the claim families registered as expected discrepancies
/// (paper typos reproduced on purpose).
const std::vector<std::string>& expected_discrepancy_families();

}  // namespace landau::report

#endif  // LANDAU_REPORT_HPP
