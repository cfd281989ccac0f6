#include "sortweigh/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sortweigh/revealing.hpp"
#include "sortweigh/solver.hpp"

namespace sortweigh {

namespace {

using nlohmann::ordered_json;

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
          next.store(n);
          return;
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

std::string join(const std::vector<long long>& values, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

// "0,**5**,**10**,15": discreet values bolded inside the possible list.
std::string marked_values(const std::vector<long long>& possible,
                          const std::vector<long long>& discreet) {
  std::ostringstream out;
  for (std::size_t i = 0; i < possible.size(); ++i) {
    if (i > 0) out << ',';
    const bool bold = std::binary_search(discreet.begin(), discreet.end(), possible[i]);
    if (bold) out << "**" << possible[i] << "**";
    else out << possible[i];
  }
  return out.str();
}

std::string thresholds_cell(const std::optional<Thresholds>& t) {
  if (!t) return "-";
  std::ostringstream out;
  out << t->gamma << '/' << t->gamma_prime << '/' << t->delta << '/' << t->delta_prime;
  return out.str();
}

std::string csv_quote(const std::string& text) {
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += "\"\"";
    else quoted += ch;
  }
  quoted += '"';
  return quoted;
}

ordered_json thresholds_json(const std::optional<Thresholds>& t) {
  if (!t) return nullptr;
  ordered_json obj;
  obj["gamma"] = t->gamma;
  obj["gammaPrime"] = t->gamma_prime;
  obj["delta"] = t->delta;
  obj["deltaPrime"] = t->delta_prime;
  return obj;
}

ordered_json range_json(const std::optional<std::pair<long long, long long>>& range) {
  if (!range) return nullptr;
  return ordered_json::array({range->first, range->second});
}

bool is_discreet_member(const std::vector<long long>& discreet, long long f) {
  return std::binary_search(discreet.begin(), discreet.end(), f);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "md" || name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "' (expected md, csv, or json)");
}

TableReport make_table_report(int piles, long long k, const TableOptions& options) {
  TableReport report;
  report.piles = piles;
  report.coins_per_pile = k;
  const std::uint64_t rows = count_sequences(piles);
  report.rows.assign(rows, ReportRow{});
  parallel_for(rows, options.jobs, [&](std::size_t index) {
    const SortingSequence seq = SortingSequence::from_index(piles, index);
    const WeighingInstance inst(seq, k);
    const PileProfile prof = profile(seq);
    ReportRow row;
    row.sequence = seq.to_string();
    row.binary = seq.binary();
    row.k = k;
    row.possible = possible_fakes(inst);
    row.discreet = discreet_fakes(inst);
    if (prof.classes >= 2) row.thresholds = thresholds(seq);
    if (options.oracle) {
      const OracleScan scan = oracle_scan(inst, options.max_states);
      for (long long f = 0; f <= inst.total_coins; ++f) {
        const bool solver_possible = std::binary_search(row.possible.begin(), row.possible.end(), f);
        if (solver_possible != (scan.possible[f] != 0))
          throw CrossCheckError("oracle disagrees on possible f=" + std::to_string(f) +
                                " for sequence " + row.sequence);
        const bool solver_discreet = is_discreet_member(row.discreet, f);
        const bool oracle_discreet = scan.fake_everywhere[f] && scan.real_everywhere[f];
        if (solver_discreet != oracle_discreet)
          throw CrossCheckError("oracle disagrees on discreet f=" + std::to_string(f) +
                                " for sequence " + row.sequence);
      }
    }
    if (options.revealing) {
      for (long long f : row.possible) {
        const RevealingFactor factor = revealing_factor(inst, f);
        RevealingCell cell;
        cell.fakes = f;
        cell.old_count = factor.old_count.str();
        cell.new_count = factor.new_count.str();
        cell.ratio = boost::multiprecision::numerator(factor.ratio).str() + "/" +
                     boost::multiprecision::denominator(factor.ratio).str();
        cell.approx = factor.approx;
        row.revealing.push_back(std::move(cell));
      }
    }
    report.rows[index] = std::move(row);
  });
  return report;
}

ExceptionsReport make_exceptions_report(int max_piles) {
  ExceptionsReport report;
  report.max_piles = max_piles;
  report.rows = oracle_exceptions(max_piles);
  return report;
}

RangesReport make_ranges_report(const SortingSequence& s, const std::vector<long long>& ks) {
  RangesReport report;
  report.sequence = s.to_string();
  report.binary = s.binary();
  const PileProfile prof = profile(s);
  for (long long k : ks) {
    const WeighingInstance inst(s, k);
    RangesRow row;
    row.k = k;
    row.possible = possible_fakes(inst);
    row.discreet = discreet_fakes(inst);
    if (prof.classes >= 2) {
      row.thresholds = thresholds(s);
      row.predicted = predicted_range(inst);
      row.predicted_discreet = predicted_discreet_range(inst);
      const long long lower = row.thresholds->gamma;
      const long long upper = inst.total_coins - row.thresholds->gamma_prime;
      for (long long f : row.possible) {
        if (f <= lower) row.low.push_back(f);
        else if (f < upper) row.progression.push_back(f);
        else row.high.push_back(f);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConjectureReport make_conjecture_report(int max_piles, int jobs) {
  if (max_piles < 1 || max_piles > 8)
    throw std::length_error("conjecture sweep is capped at 8 piles");
  ConjectureReport report;
  report.max_piles = max_piles;

  std::vector<SortingSequence> sequences;
  for (int p = 1; p <= max_piles; ++p)
    for (std::uint64_t index = 0; index < count_sequences(p); ++index)
      sequences.push_back(SortingSequence::from_index(p, index));

  std::vector<std::vector<ExceptionRow>> found(sequences.size());
  std::atomic<long long> cells{0};
  std::atomic<long long> spots{0};
  std::atomic<long long> pair_counter{0};
  constexpr long long kSpotStride = 13;  // oracle-verify every 13th (sequence, k) pair

  parallel_for(sequences.size(), jobs, [&](std::size_t si) {
    const SortingSequence& seq = sequences[si];
    const PileProfile prof = profile(seq);
    if (prof.classes < 2) return;
    const PileProfile rev_prof = profile(seq.reversed());
    const long long bound = range_threshold(prof);
    for (long long k = 1; k <= bound; ++k) {
      const WeighingInstance inst(seq, k);
      const bool spot_check = pair_counter.fetch_add(1) % kSpotStride == 0;
      std::vector<char> oracle_totals;
      if (spot_check) oracle_totals = oracle_bounded_totals(prof, k);
      std::vector<long long> bad;
      for (long long f = 0; f <= inst.total_coins; ++f) {
        const bool bounded = has_solution(inst, f, true);
        if (spot_check) {
          if (bounded != (oracle_totals[f] != 0))
            throw CrossCheckError("oracle disagrees on bounded solvability of f=" +
                                  std::to_string(f) + " for sequence " + seq.to_string() +
                                  " at k=" + std::to_string(k));
          spots.fetch_add(1);
        }
        cells.fetch_add(1);
        if (bounded) continue;
        if (has_general_solution(prof, f) &&
            has_general_solution(rev_prof, inst.total_coins - f))
          bad.push_back(f);
      }
      if (!bad.empty())
        found[si].push_back(ExceptionRow{seq.pile_count(), k, seq, std::move(bad)});
    }
  });

  for (auto& rows : found)
    for (auto& row : rows) report.exceptions.push_back(std::move(row));
  std::stable_sort(report.exceptions.begin(), report.exceptions.end(),
                   [](const ExceptionRow& a, const ExceptionRow& b) {
                     if (a.piles != b.piles) return a.piles < b.piles;
                     if (a.coins_per_pile != b.coins_per_pile)
                       return a.coins_per_pile < b.coins_per_pile;
                     return a.sequence.index() < b.sequence.index();
                   });

  report.cells_checked = cells.load();
  report.spot_checks = spots.load();
  report.verified = true;
  report.exceptions_below_p_over_c = true;
  for (const ExceptionRow& row : report.exceptions) {
    const PileProfile prof = profile(row.sequence);
    const long long conjecture_floor = prof.piles / prof.gcd;  // c divides p
    if (row.coins_per_pile >= conjecture_floor) {
      report.verified = false;
      report.exceptions_below_p_over_c = false;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_markdown(const TableReport& report) {
  std::ostringstream out;
  const bool with_revealing = !report.rows.empty() && !report.rows.front().revealing.empty();
  out << "# Possible and discreet fake counts, p=" << report.piles
      << " k=" << report.coins_per_pile << "\n\n";
  out << "| Binary rep | Sorting sequence | k | gamma/gamma'/delta/delta' | Values of f |";
  if (with_revealing) out << " Revealing |";
  out << "\n| --- | --- | --- | --- | --- |";
  if (with_revealing) out << " --- |";
  out << "\n";
  for (const ReportRow& row : report.rows) {
    out << "| " << row.binary << " | " << row.sequence << " | " << row.k << " | "
        << thresholds_cell(row.thresholds) << " | "
        << marked_values(row.possible, row.discreet) << " |";
    if (with_revealing) {
      out << ' ';
      for (std::size_t i = 0; i < row.revealing.size(); ++i) {
        if (i > 0) out << "; ";
        out << "f=" << row.revealing[i].fakes << " X=" << row.revealing[i].ratio
            << " (" << row.revealing[i].approx << ")";
      }
      out << " |";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_csv(const TableReport& report) {
  std::ostringstream out;
  const bool with_revealing = !report.rows.empty() && !report.rows.front().revealing.empty();
  out << "binary,sequence,k,f,discreet,gamma,gammaPrime,delta,deltaPrime";
  if (with_revealing) out << ",old,new,ratio,approx";
  out << "\n";
  for (const ReportRow& row : report.rows) {
    for (std::size_t i = 0; i < row.possible.size(); ++i) {
      const long long f = row.possible[i];
      out << row.binary << ',' << csv_quote(row.sequence) << ',' << row.k << ',' << f << ','
          << (is_discreet_member(row.discreet, f) ? "true" : "false") << ',';
      if (row.thresholds)
        out << row.thresholds->gamma << ',' << row.thresholds->gamma_prime << ','
            << row.thresholds->delta << ',' << row.thresholds->delta_prime;
      else
        out << ",,,";
      if (with_revealing) {
        const RevealingCell& cell = row.revealing[i];
        out << ',' << cell.old_count << ',' << cell.new_count << ','
            << csv_quote(cell.ratio) << ',' << cell.approx;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string render_json(const TableReport& report) {
  ordered_json doc;
  doc["meta"]["p"] = report.piles;
  doc["meta"]["k"] = report.coins_per_pile;
  doc["meta"]["version"] = kVersion;
  doc["rows"] = ordered_json::array();
  for (const ReportRow& row : report.rows) {
    ordered_json jrow;
    jrow["sequence"] = row.sequence;
    jrow["binary"] = row.binary;
    jrow["k"] = row.k;
    jrow["possible"] = row.possible;
    jrow["discreet"] = row.discreet;
    jrow["thresholds"] = thresholds_json(row.thresholds);
    if (!row.revealing.empty()) {
      ordered_json cells = ordered_json::array();
      for (const RevealingCell& cell : row.revealing) {
        ordered_json jcell;
        jcell["f"] = cell.fakes;
        jcell["old"] = cell.old_count;
        jcell["new"] = cell.new_count;
        jcell["ratio"] = cell.ratio;
        jcell["approx"] = cell.approx;
        cells.push_back(std::move(jcell));
      }
      jrow["revealing"] = std::move(cells);
    }
    doc["rows"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

std::string render_markdown(const ExceptionsReport& report) {
  std::ostringstream out;
  out << "# Exceptions below the possible-range threshold, p <= " << report.max_piles << "\n\n";
  out << "| p | k | Sorting sequence | Values of f |\n| --- | --- | --- | --- |\n";
  for (const ExceptionRow& row : report.rows)
    out << "| " << row.piles << " | " << row.coins_per_pile << " | "
        << row.sequence.to_string() << " | " << join(row.fakes) << " |\n";
  return out.str();
}

std::string render_csv(const ExceptionsReport& report) {
  std::ostringstream out;
  out << "p,k,sequence,f\n";
  for (const ExceptionRow& row : report.rows)
    for (long long f : row.fakes)
      out << row.piles << ',' << row.coins_per_pile << ','
          << csv_quote(row.sequence.to_string()) << ',' << f << "\n";
  return out.str();
}

std::string render_json(const ExceptionsReport& report) {
  ordered_json doc;
  doc["meta"]["maxP"] = report.max_piles;
  doc["meta"]["version"] = kVersion;
  doc["rows"] = ordered_json::array();
  for (const ExceptionRow& row : report.rows) {
    ordered_json jrow;
    jrow["p"] = row.piles;
    jrow["k"] = row.coins_per_pile;
    jrow["sequence"] = row.sequence.to_string();
    jrow["f"] = row.fakes;
    doc["rows"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

std::string range_text(const std::optional<std::pair<long long, long long>>& range) {
  if (!range) return "below threshold";
  std::ostringstream out;
  out << '(' << range->first << ", " << range->second << ')';
  return out.str();
}

std::string render_markdown(const RangesReport& report) {
  std::ostringstream out;
  out << "# Ranges for " << report.sequence << "  [binary " << report.binary << "]\n\n";
  if (!report.rows.empty() && report.rows.front().thresholds) {
    const Thresholds& t = *report.rows.front().thresholds;
    out << "gamma=" << t.gamma << " gammaPrime=" << t.gamma_prime << " delta=" << t.delta
        << " deltaPrime=" << t.delta_prime << "\n\n";
  } else {
    out << "single-class sequence: no thresholds\n\n";
  }
  out << "| k | Values of f |\n| --- | --- |\n";
  for (const RangesRow& row : report.rows)
    out << "| " << row.k << " | " << marked_values(row.possible, row.discreet) << " |\n";
  out << "\n";
  for (const RangesRow& row : report.rows) {
    out << "## k = " << row.k << "\n";
    if (row.thresholds) {
      out << "- predicted possible range: " << range_text(row.predicted) << "\n";
      out << "- predicted discreet range: " << range_text(row.predicted_discreet) << "\n";
      out << "- low part: " << (row.low.empty() ? "(none)" : join(row.low)) << "\n";
      out << "- progression part: "
          << (row.progression.empty() ? "(none)" : join(row.progression)) << "\n";
      out << "- high part: " << (row.high.empty() ? "(none)" : join(row.high)) << "\n";
    } else {
      out << "- single-class sequence: every multiple of p in [0, pk]\n";
    }
  }
  return out.str();
}

std::string render_csv(const RangesReport& report) {
  std::ostringstream out;
  out << "sequence,binary,k,f,discreet,part,gamma,gammaPrime,delta,deltaPrime,"
         "predictedLow,predictedHigh,predictedDiscreetLow,predictedDiscreetHigh\n";
  for (const RangesRow& row : report.rows) {
    for (long long f : row.possible) {
      std::string part;
      if (row.thresholds) {
        if (std::binary_search(row.low.begin(), row.low.end(), f)) part = "low";
        else if (std::binary_search(row.high.begin(), row.high.end(), f)) part = "high";
        else part = "progression";
      }
      out << csv_quote(report.sequence) << ',' << report.binary << ',' << row.k << ',' << f
          << ',' << (is_discreet_member(row.discreet, f) ? "true" : "false") << ',' << part << ',';
      if (row.thresholds)
        out << row.thresholds->gamma << ',' << row.thresholds->gamma_prime << ','
            << row.thresholds->delta << ',' << row.thresholds->delta_prime;
      else
        out << ",,,";
      out << ',';
      if (row.predicted) out << row.predicted->first << ',' << row.predicted->second;
      else out << ',';
      out << ',';
      if (row.predicted_discreet)
        out << row.predicted_discreet->first << ',' << row.predicted_discreet->second;
      else
        out << ',';
      out << "\n";
    }
  }
  return out.str();
}

std::string render_json(const RangesReport& report) {
  ordered_json doc;
  doc["meta"]["sequence"] = report.sequence;
  doc["meta"]["binary"] = report.binary;
  doc["meta"]["version"] = kVersion;
  doc["rows"] = ordered_json::array();
  for (const RangesRow& row : report.rows) {
    ordered_json jrow;
    jrow["k"] = row.k;
    jrow["possible"] = row.possible;
    jrow["discreet"] = row.discreet;
    jrow["thresholds"] = thresholds_json(row.thresholds);
    jrow["predictedRange"] = range_json(row.predicted);
    jrow["predictedDiscreetRange"] = range_json(row.predicted_discreet);
    jrow["parts"]["low"] = row.low;
    jrow["parts"]["progression"] = row.progression;
    jrow["parts"]["high"] = row.high;
    doc["rows"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

std::string render_markdown(const ConjectureReport& report) {
  std::ostringstream out;
  out << "# Conjecture sweep, p <= " << report.max_piles << "\n\n";
  out << "- cells checked: " << report.cells_checked << "\n";
  out << "- oracle spot checks: " << report.spot_checks << "\n";
  out << "- no exception at or above k = p/c: " << (report.verified ? "verified" : "FAILED") << "\n";
  out << "- every exception has k < p/c: "
      << (report.exceptions_below_p_over_c ? "yes" : "NO") << "\n\n";
  out << "| p | k | Sorting sequence | Values of f |\n| --- | --- | --- | --- |\n";
  for (const ExceptionRow& row : report.exceptions)
    out << "| " << row.piles << " | " << row.coins_per_pile << " | "
        << row.sequence.to_string() << " | " << join(row.fakes) << " |\n";
  return out.str();
}

std::string render_csv(const ConjectureReport& report) {
  std::ostringstream out;
  out << "key,value\n";
  out << "maxP," << report.max_piles << "\n";
  out << "cellsChecked," << report.cells_checked << "\n";
  out << "spotChecks," << report.spot_checks << "\n";
  out << "verified," << (report.verified ? "true" : "false") << "\n";
  out << "exceptionsBelowPOverC," << (report.exceptions_below_p_over_c ? "true" : "false") << "\n";
  out << "\np,k,sequence,f\n";
  for (const ExceptionRow& row : report.exceptions)
    for (long long f : row.fakes)
      out << row.piles << ',' << row.coins_per_pile << ','
          << csv_quote(row.sequence.to_string()) << ',' << f << "\n";
  return out.str();
}

std::string render_json(const ConjectureReport& report) {
  ordered_json doc;
  doc["meta"]["maxP"] = report.max_piles;
  doc["meta"]["version"] = kVersion;
  doc["verified"] = report.verified;
  doc["exceptionsBelowPOverC"] = report.exceptions_below_p_over_c;
  doc["cellsChecked"] = report.cells_checked;
  doc["spotChecks"] = report.spot_checks;
  doc["exceptions"] = ordered_json::array();
  for (const ExceptionRow& row : report.exceptions) {
    ordered_json jrow;
    jrow["p"] = row.piles;
    jrow["k"] = row.coins_per_pile;
    jrow["sequence"] = row.sequence.to_string();
    jrow["f"] = row.fakes;
    doc["exceptions"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

template <typename Report>
std::string render_any(const Report& report, Format format) {
  switch (format) {
    case Format::markdown: return render_markdown(report);
    case Format::csv: return render_csv(report);
    case Format::json: return render_json(report);
  }
  throw std::logic_error("unreachable format");
}

}  // namespace

std::string render(const TableReport& report, Format format) { return render_any(report, format); }
std::string render(const ExceptionsReport& report, Format format) { return render_any(report, format); }
std::string render(const RangesReport& report, Format format) { return render_any(report, format); }
std::string render(const ConjectureReport& report, Format format) { return render_any(report, format); }

}  // namespace sortweigh
