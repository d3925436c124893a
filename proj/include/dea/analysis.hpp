#pragma once

// Cross-measure reports: improvement-item histograms and dominance audits.

#include "dea/measures.hpp"
#include "dea/technology.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dea {

struct ImprovementHistogram {
  std::string model;
  std::map<std::size_t, std::size_t> counts;  // item count -> number of DMUs

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [items, dmus] : counts) n += dmus;
    return n;
  }
};

inline ImprovementHistogram improvement_histogram(const std::vector<MeasureResult>& results) {
  ImprovementHistogram h;
  if (!results.empty()) h.model = label(results.front().model);
  for (const MeasureResult& r : results) ++h.counts[r.improvement_items.size()];
  return h;
}

/// Renders histograms as a table: one row per model, one column per item
/// count from 0 to `max_items`, spanned by the heading "Number of DMUs by
/// number of improvement items". Empty buckets print as "-".
inline std::string render_histograms(const std::vector<ImprovementHistogram>& histograms,
                                     std::size_t max_items) {
  static const std::string title = "Number of DMUs by number of improvement items";
  std::vector<std::string> header{"DEA model"};
  for (std::size_t k = 0; k <= max_items; ++k)
    header.push_back(std::to_string(k) + (k <= 1 ? " item" : " items"));
  std::vector<std::vector<std::string>> rows;
  for (const auto& h : histograms) {
    std::vector<std::string> row{h.model};
    for (std::size_t k = 0; k <= max_items; ++k) {
      const auto it = h.counts.find(k);
      row.push_back(it == h.counts.end() || it->second == 0 ? "-" : std::to_string(it->second) + " DMUs");
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::size_t counts_span = 0;
  for (std::size_t c = 1; c < width.size(); ++c) counts_span += width[c] + (c > 1 ? 2 : 0);
  if (counts_span < title.size()) {
    const std::size_t columns = width.size() - 1;
    const std::size_t extra = title.size() - counts_span;
    for (std::size_t c = 1; c < width.size(); ++c) width[c] += extra / columns + (c <= extra % columns ? 1 : 0);
    counts_span = title.size();
  }
  const std::size_t span = width[0] + 2 + counts_span;

  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& cells) {
    out << cells[0] << std::string(width[0] - cells[0].size(), ' ');
    for (std::size_t c = 1; c < cells.size(); ++c)
      out << "  " << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    out << '\n';
  };
  out << std::string(span, '=') << '\n';
  out << header[0] << std::string(width[0] - header[0].size() + 2, ' ') << title << '\n';
  out << std::string(width[0] + 2, ' ') << std::string(counts_span, '-') << '\n';
  std::vector<std::string> item_row = header;
  item_row[0].clear();
  line(item_row);
  out << std::string(span, '-') << '\n';
  for (const auto& row : rows) line(row);
  out << std::string(span, '=') << '\n';
  return out.str();
}

inline std::string render_histograms(const std::vector<ImprovementHistogram>& histograms) {
  std::size_t max_items = 0;
  for (const auto& h : histograms)
    for (const auto& [items, dmus] : h.counts) max_items = std::max(max_items, items);
  return render_histograms(histograms, max_items);
}

enum class Verdict { consistent, violation };

inline const char* to_string(Verdict v) { return v == Verdict::consistent ? "consistent" : "violation"; }

struct MonotonicityFinding {
  std::string model;
  std::string dominating;
  std::string dominated;
  double dominating_score;
  double dominated_score;
  Verdict verdict;
};

/// Score gap below which a dominating DMU is not considered strictly better.
inline constexpr double kScoreTieTolerance = 1e-9;

/// True when j uses no more of every input, produces no less of every
/// output, and differs from k somewhere.
inline bool dominates(const Dataset& d, Index j, Index k) {
  const bool weakly = (d.inputs.row(j).array() <= d.inputs.row(k).array()).all() &&
                      (d.outputs.row(j).array() >= d.outputs.row(k).array()).all();
  const bool differs = (d.inputs.row(j).array() != d.inputs.row(k).array()).any() ||
                       (d.outputs.row(j).array() != d.outputs.row(k).array()).any();
  return weakly && differs;
}

/// One finding per model and dominating pair; scores are per DMU in dataset
/// order, keyed by model label.
inline std::vector<MonotonicityFinding> dominance_audit(
    const Dataset& d, const std::map<std::string, std::vector<double>>& scores) {
  std::vector<MonotonicityFinding> findings;
  for (const auto& [model, per_dmu] : scores) {
    if (static_cast<Index>(per_dmu.size()) != d.size())
      throw DataError("score list for " + model + " does not cover every DMU");
    for (Index j = 0; j < d.size(); ++j) {
      for (Index k = 0; k < d.size(); ++k) {
        if (j == k || !dominates(d, j, k)) continue;
        const double sj = per_dmu[static_cast<std::size_t>(j)];
        const double sk = per_dmu[static_cast<std::size_t>(k)];
        findings.push_back({model, d.dmu_ids[static_cast<std::size_t>(j)],
                            d.dmu_ids[static_cast<std::size_t>(k)], sj, sk,
                            sj <= sk + kScoreTieTolerance ? Verdict::violation : Verdict::consistent});
      }
    }
  }
  return findings;
}

inline std::size_t violation_count(const std::vector<MonotonicityFinding>& findings) {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const auto& f) {
    return f.verdict == Verdict::violation;
  }));
}

}  // namespace dea
