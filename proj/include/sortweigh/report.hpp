#pragma once
// Report assembly for the command-line front end: build the table, exception,
// range, and conjecture reports, cross-check them against the oracle on
// request, and render them as markdown, CSV, or JSON.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sortweigh/frobenius.hpp"
#include "sortweigh/oracle.hpp"
#include "sortweigh/sequence.hpp"

namespace sortweigh {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { markdown, csv, json };

/// Accepts "md", "markdown", "csv", "json"; throws std::invalid_argument.
Format parse_format(const std::string& name);

/// Raised when a solver result disagrees with the brute-force oracle.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Revealing factor of one fake count, rendered to strings for reporting.
struct RevealingCell {
  long long fakes = 0;
  std::string old_count;
  std::string new_count;
  std::string ratio;
  std::string approx;
};

struct ReportRow {
  std::string sequence;
  std::string binary;
  long long k = 0;
  std::vector<long long> possible;
  std::vector<long long> discreet;
  std::optional<Thresholds> thresholds;  ///< absent for single-class rows
  std::vector<RevealingCell> revealing;  ///< filled only on request
};

struct TableOptions {
  bool oracle = false;
  bool revealing = false;
  int jobs = 1;
  long long max_states = kDefaultMaxStates;
};

struct TableReport {
  int piles = 0;
  long long coins_per_pile = 0;
  std::vector<ReportRow> rows;
};

/// One row per sorting sequence of length piles, in lexicographic order.
/// With options.oracle set, every row is recomputed by configuration
/// enumeration and a mismatch raises CrossCheckError.
TableReport make_table_report(int piles, long long k, const TableOptions& options = {});

struct ExceptionsReport {
  int max_piles = 0;
  std::vector<ExceptionRow> rows;
};

ExceptionsReport make_exceptions_report(int max_piles);

struct RangesRow {
  long long k = 0;
  std::vector<long long> possible;
  std::vector<long long> discreet;
  std::optional<Thresholds> thresholds;
  std::optional<std::pair<long long, long long>> predicted;
  std::optional<std::pair<long long, long long>> predicted_discreet;
  std::vector<long long> low;          ///< possible values <= gamma
  std::vector<long long> progression;  ///< the open middle range
  std::vector<long long> high;         ///< possible values >= pk - gamma'
};

struct RangesReport {
  std::string sequence;
  std::string binary;
  std::vector<RangesRow> rows;
};

RangesReport make_ranges_report(const SortingSequence& s, const std::vector<long long>& ks);

struct ConjectureReport {
  int max_piles = 0;
  bool verified = false;                  ///< no exception at or above k = p/c
  bool exceptions_below_p_over_c = false; ///< every exception found has k < p/c
  long long cells_checked = 0;
  long long spot_checks = 0;              ///< oracle agreements along the way
  std::vector<ExceptionRow> exceptions;
};

/// Sweeps every sequence with at most max_piles piles over all pile sizes up
/// to the possible-range theorem's threshold.  Capped at max_piles <= 8.
ConjectureReport make_conjecture_report(int max_piles, int jobs = 1);

std::string render(const TableReport& report, Format format);
std::string render(const ExceptionsReport& report, Format format);
std::string render(const RangesReport& report, Format format);
std::string render(const ConjectureReport& report, Format format);

/// Full command-line entry point; returns the process exit code.  Exit code
/// 0 only when the command ran and every requested cross-check passed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sortweigh
