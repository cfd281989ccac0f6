#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sortweigh/report.hpp"
#include "sortweigh/revealing.hpp"
#include "sortweigh/solver.hpp"

#include <json.hpp>

namespace sortweigh {

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "md";
};

void attach_format(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "output format: md, csv, or json")
      ->check(CLI::IsMember({"md", "markdown", "csv", "json"}));
}

std::string render_frobenius(const std::vector<long long>& coeffs, Format format) {
  const CoefficientSet set(coeffs);
  const FrobeniusResult result = frobenius_bounds(set);
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["coeffs"] = coeffs;
      doc["gcd"] = set.gcd();
      doc["number"] = result.number;
      doc["schur"] = result.schur;
      doc["erdosGraham"] = result.erdos_graham;
      doc["selmer"] = result.selmer;
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "key,value\n";
      out << "coeffs," << "\"";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? ";" : "") << coeffs[i];
      out << "\"\n";
      out << "gcd," << set.gcd() << "\n";
      out << "number," << result.number << "\n";
      out << "schur," << result.schur << "\n";
      out << "erdosGraham," << result.erdos_graham << "\n";
      out << "selmer," << result.selmer << "\n";
      return out.str();
    }
    case Format::markdown: {
      std::ostringstream out;
      out << "coefficients: ";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i];
      out << "\n";
      out << "gcd: " << set.gcd() << "\n";
      out << "frobenius number: " << result.number << "\n";
      out << "schur bound: " << result.schur << "\n";
      out << "erdos-graham bound: " << result.erdos_graham << "\n";
      out << "selmer bound: " << result.selmer << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unreachable format");
}

std::string render_revealing(const std::string& sequence_text, long long k, long long fakes,
                             Format format) {
  const SortingSequence seq = SortingSequence::parse(sequence_text);
  const WeighingInstance inst(seq, k);
  const RevealingFactor factor = revealing_factor(inst, fakes);
  const std::string ratio = boost::multiprecision::numerator(factor.ratio).str() + "/" +
                            boost::multiprecision::denominator(factor.ratio).str();
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["sequence"] = seq.to_string();
      doc["k"] = k;
      doc["f"] = fakes;
      doc["old"] = factor.old_count.str();
      doc["new"] = factor.new_count.str();
      doc["ratio"] = ratio;
      doc["approx"] = factor.approx;
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "key,value\n";
      out << "sequence," << '"' << seq.to_string() << '"' << "\n";
      out << "k," << k << "\n";
      out << "f," << fakes << "\n";
      out << "old," << factor.old_count.str() << "\n";
      out << "new," << factor.new_count.str() << "\n";
      out << "ratio," << '"' << ratio << '"' << "\n";
      out << "approx," << factor.approx << "\n";
      return out.str();
    }
    case Format::markdown: {
      std::ostringstream out;
      out << "sequence: " << seq.to_string() << "\n";
      out << "k: " << k << ", f: " << fakes << "\n";
      out << "old possibilities: " << factor.old_count.str() << "\n";
      out << "new possibilities: " << factor.new_count.str() << "\n";
      out << "revealing factor: " << ratio << " (" << factor.approx << ")\n";
      return out.str();
    }
  }
  throw std::logic_error("unreachable format");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tables for the sorting strategy of discreet coin weighing"};
  app.name("sortweigh");
  app.require_subcommand(1);

  // table
  CommonOptions table_common;
  int table_p = 0;
  long long table_k = 0;
  TableOptions table_options;
  CLI::App* cmd_table = app.add_subcommand(
      "table", "possible and discreet fake counts for every sequence of length p");
  cmd_table->add_option("--p", table_p, "pile count")->required()
      ->check(CLI::Range(1, kMaxPileCount));
  cmd_table->add_option("--k", table_k, "coins per pile")->required()
      ->check(CLI::PositiveNumber);
  cmd_table->add_flag("--oracle", table_options.oracle,
                      "cross-check every row by brute-force configuration enumeration");
  cmd_table->add_flag("--revealing", table_options.revealing,
                      "include the revealing factor of every possible f");
  cmd_table->add_option("--jobs", table_options.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd_table->add_option("--max-states", table_options.max_states,
                        "oracle state guard override")->check(CLI::PositiveNumber);
  attach_format(cmd_table, table_common);

  // exceptions
  CommonOptions exceptions_common;
  int exceptions_max_p = 0;
  CLI::App* cmd_exceptions = app.add_subcommand(
      "exceptions", "instances below the range threshold with no height-bounded solution");
  cmd_exceptions->add_option("--max-p", exceptions_max_p, "largest pile count")->required()
      ->check(CLI::Range(1, 8));
  attach_format(cmd_exceptions, exceptions_common);

  // verify-conjecture
  CommonOptions conjecture_common;
  int conjecture_max_p = 8;
  int conjecture_jobs = 1;
  CLI::App* cmd_conjecture = app.add_subcommand(
      "verify-conjecture", "sweep all k up to the range threshold for exceptions");
  cmd_conjecture->add_option("--max-p", conjecture_max_p, "largest pile count")
      ->check(CLI::Range(1, 8));
  cmd_conjecture->add_option("--jobs", conjecture_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  attach_format(cmd_conjecture, conjecture_common);

  // ranges
  CommonOptions ranges_common;
  std::string ranges_sequence;
  std::vector<long long> ranges_ks;
  CLI::App* cmd_ranges = app.add_subcommand(
      "ranges", "threshold structure of one sequence across pile sizes");
  cmd_ranges->add_option("sequence", ranges_sequence, "sequence text, e.g. \"(0,1,1,1)\"")
      ->required();
  cmd_ranges->add_option("--k", ranges_ks, "pile sizes, comma separated")->required()
      ->delimiter(',')->check(CLI::PositiveNumber);
  attach_format(cmd_ranges, ranges_common);

  // frobenius
  CommonOptions frobenius_common;
  std::vector<long long> frobenius_coeffs;
  CLI::App* cmd_frobenius = app.add_subcommand(
      "frobenius", "Frobenius number and classical bounds of a coefficient set");
  cmd_frobenius->add_option("coeffs", frobenius_coeffs, "strictly increasing positive integers")
      ->required()->expected(-1);
  attach_format(cmd_frobenius, frobenius_common);

  // revealing
  CommonOptions revealing_common;
  std::string revealing_sequence;
  long long revealing_k = 0;
  long long revealing_f = 0;
  CLI::App* cmd_revealing = app.add_subcommand(
      "revealing", "revealing factor of one observed outcome");
  cmd_revealing->add_option("sequence", revealing_sequence, "sequence text")->required();
  cmd_revealing->add_option("k", revealing_k, "coins per pile")->required()
      ->check(CLI::PositiveNumber);
  cmd_revealing->add_option("f", revealing_f, "fake coin total")->required();
  attach_format(cmd_revealing, revealing_common);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sortweigh");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (cmd_table->parsed()) {
      const TableReport report = make_table_report(table_p, table_k, table_options);
      out << render(report, parse_format(table_common.format));
    } else if (cmd_exceptions->parsed()) {
      const ExceptionsReport report = make_exceptions_report(exceptions_max_p);
      out << render(report, parse_format(exceptions_common.format));
    } else if (cmd_conjecture->parsed()) {
      const ConjectureReport report = make_conjecture_report(conjecture_max_p, conjecture_jobs);
      out << render(report, parse_format(conjecture_common.format));
      if (!report.verified) {
        err << "conjecture sweep found an exception at or above k = p/c\n";
        return 1;
      }
    } else if (cmd_ranges->parsed()) {
      const SortingSequence seq = SortingSequence::parse(ranges_sequence);
      const RangesReport report = make_ranges_report(seq, ranges_ks);
      out << render(report, parse_format(ranges_common.format));
    } else if (cmd_frobenius->parsed()) {
      out << render_frobenius(frobenius_coeffs, parse_format(frobenius_common.format));
    } else if (cmd_revealing->parsed()) {
      out << render_revealing(revealing_sequence, revealing_k, revealing_f,
                              parse_format(revealing_common.format));
    }
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sortweigh
