#pragma once

// Command-line front end: CSV ingestion, scoring runs and report rendering.

#include "dea/analysis.hpp"
#include "dea/facets.hpp"
#include "dea/measures.hpp"
#include "dea/technology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dea::cli {

using json = nlohmann::ordered_json;

enum class Command { facets, score, audit };
enum class Format { table, json, csv };

struct RunConfig {
  Command command = Command::score;
  std::string data_path;
  std::vector<Model> models{Model::sbm_exfa, Model::max_sbm, Model::rm_exfa, Model::max_rm};
  Format format = Format::table;
  Tolerances tol;
  std::string fixed_facets_path;
  bool audit = false;
};

enum ExitCode { kSuccess = 0, kFailure = 1, kDataError = 2, kNoFacet = 3 };

namespace detail {

inline std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

inline std::optional<double> parse_number(const std::string& cell) {
  double value = 0.0;
  const char* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (cell.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace detail

/// Reads a dataset whose header is `dmu,in:<name>...,out:<name>...`.
/// Row and column numbers in errors are 1-based, counting the header row.
inline Dataset parse_dataset(std::istream& in, const std::string& source = "<input>") {
  const auto fail = [&](const std::string& what) { throw DataError(source + ": " + what); };

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::trim(line).empty()) {
      header = detail::split_csv_line(line);
      break;
    }
  }
  if (header.empty()) fail("empty file");

  std::vector<std::size_t> in_cols, out_cols;
  Dataset d;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string& h = header[c];
    if (h.rfind("in:", 0) == 0) {
      in_cols.push_back(c);
      d.input_names.push_back(h.substr(3));
    } else if (h.rfind("out:", 0) == 0) {
      out_cols.push_back(c);
      d.output_names.push_back(h.substr(4));
    } else {
      fail("missing prefix columns: header '" + h + "' in column " + std::to_string(c + 1) +
           " is neither in: nor out:");
    }
  }
  if (in_cols.empty() || out_cols.empty())
    fail("missing prefix columns: need at least one in: and one out: column");

  std::vector<std::vector<double>> in_rows, out_rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size())
      fail("row " + std::to_string(line_no) + " has " + std::to_string(cells.size()) + " cells, expected " +
           std::to_string(header.size()));
    const auto read = [&](std::size_t c) {
      const auto value = detail::parse_number(cells[c]);
      const std::string where = "row " + std::to_string(line_no) + ", column " + std::to_string(c + 1);
      if (!value) fail("non-numeric cell at " + where + ": '" + cells[c] + "'");
      if (!(*value > 0.0)) fail("non-positive value at " + where + ": " + cells[c]);
      return *value;
    };
    d.dmu_ids.push_back(cells[0]);
    in_rows.emplace_back();
    out_rows.emplace_back();
    for (auto c : in_cols) in_rows.back().push_back(read(c));
    for (auto c : out_cols) out_rows.back().push_back(read(c));
  }

  const auto n = static_cast<Index>(d.dmu_ids.size());
  d.inputs.resize(n, static_cast<Index>(in_cols.size()));
  d.outputs.resize(n, static_cast<Index>(out_cols.size()));
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < d.inputs.cols(); ++i) d.inputs(j, i) = in_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (Index r = 0; r < d.outputs.cols(); ++r) d.outputs(j, r) = out_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
  }
  try {
    validate(d);
  } catch (const DataError& e) {
    fail(e.what());
  }
  return d;
}

inline Dataset parse_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  return parse_dataset(in, path);
}

// ---- facets as JSON --------------------------------------------------------

inline json facet_to_json(const Facet& f, const Dataset* data) {
  json record;
  record["v"] = std::vector<double>(f.hyperplane.v.data(), f.hyperplane.v.data() + f.hyperplane.v.size());
  record["u"] = std::vector<double>(f.hyperplane.u.data(), f.hyperplane.u.data() + f.hyperplane.u.size());
  record["psi"] = f.hyperplane.psi;
  json members = json::array();
  for (Index j : f.members) {
    if (data)
      members.push_back(data->dmu_ids[static_cast<std::size_t>(j)]);
    else
      members.push_back(j);
  }
  record["members"] = members;
  return record;
}

/// Loads facet records, either a bare array or {"facets": [...]}. Member ids
/// are resolved against `data` when given. Coefficients are rescaled to sum
/// to one when they do not already.
inline std::vector<Facet> facets_from_json(const json& doc, const Dataset* data, const std::string& source) {
  const auto fail = [&](const std::string& what) { throw DataError(source + ": " + what); };
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("facets")) fail("expected a facet array or an object with a 'facets' key");
    list = &doc.at("facets");
  }
  if (!list->is_array()) fail("facets must be an array");

  std::vector<Facet> facets;
  for (std::size_t k = 0; k < list->size(); ++k) {
    const json& rec = (*list)[k];
    const std::string where = "facet " + std::to_string(k + 1);
    if (!rec.is_object() || !rec.contains("v") || !rec.contains("u") || !rec.contains("psi"))
      fail(where + " needs v, u and psi");
    std::vector<double> v, u;
    double psi = 0.0;
    try {
      v = rec.at("v").get<std::vector<double>>();
      u = rec.at("u").get<std::vector<double>>();
      psi = rec.at("psi").get<double>();
    } catch (const json::exception&) {
      fail(where + " has non-numeric coefficients");
    }
    Hyperplane h{Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Index>(v.size())),
                 Eigen::Map<Eigen::VectorXd>(u.data(), static_cast<Index>(u.size())), psi};
    if (h.v.size() == 0 || h.u.size() == 0 || h.v.minCoeff() <= 0.0 || h.u.minCoeff() <= 0.0)
      fail(where + " needs strictly positive v and u");
    if (std::abs(h.v.sum() + h.u.sum() - 1.0) > 1e-12) h = *normalized(h.v, h.u, h.psi);

    Facet facet{h, {}};
    if (data && rec.contains("members")) {
      for (const auto& id : rec.at("members")) {
        std::optional<Index> j;
        if (id.is_string()) j = data->find(id.get<std::string>());
        else if (id.is_number_integer() && id.get<Index>() >= 0 && id.get<Index>() < data->size()) j = id.get<Index>();
        if (!j) fail(where + " names unknown member " + id.dump());
        facet.members.push_back(*j);
      }
      std::sort(facet.members.begin(), facet.members.end());
    }
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw NoFacetError();
  return facets;
}

inline std::vector<Facet> load_facets(const std::string& path, const Dataset* data) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
  return facets_from_json(doc, data, path);
}

// ---- run -------------------------------------------------------------------

struct ScoreRow {
  MeasureResult result;
  std::optional<MaxRmResult> max_rm;
};

struct ModelRun {
  Model model;
  std::vector<ScoreRow> rows;
};

struct Report {
  std::shared_ptr<const Dataset> data;
  std::optional<ExtendedTechnology> exfa;
  std::optional<FreeLunchReport> free_lunch;
  std::vector<ModelRun> runs;
  std::optional<std::vector<MonotonicityFinding>> audit;
};

inline bool needs_exfa(Model m) { return m != Model::rm_p && m != Model::m_nonextended; }

/// Runs the pipeline without rendering.
inline Report evaluate(const RunConfig& config) {
  Report report;
  if (!config.data_path.empty()) {
    Dataset d = parse_dataset(config.data_path);
    report.data = std::make_shared<const Dataset>(std::move(d));
  }
  const bool scoring = config.command != Command::facets;
  if (scoring && !report.data) throw DataError("scoring needs --data");
  if (!report.data && config.fixed_facets_path.empty()) throw DataError("needs --data or --fixed-facets");

  const bool need_exfa = !scoring || std::any_of(config.models.begin(), config.models.end(), needs_exfa);
  const bool auditing = config.audit || config.command == Command::audit;
  std::optional<VrsTechnology> tech;
  if (report.data) tech.emplace(report.data);
  if (need_exfa || auditing) {
    try {
      if (!config.fixed_facets_path.empty())
        report.exfa.emplace(load_facets(config.fixed_facets_path, report.data.get()), report.data);
      else
        report.exfa.emplace(build_exfa(*tech, config.tol));
      report.free_lunch = detect_free_lunch(*report.exfa, config.tol);
    } catch (const NoFacetError&) {
      // The audit's free-lunch section is optional when no model needs facets.
      if (need_exfa) throw;
    }
  }
  if (!scoring) return report;

  std::vector<std::vector<Index>> faces;
  if (std::find(config.models.begin(), config.models.end(), Model::m_nonextended) != config.models.end())
    faces = enumerate_efficient_faces(*tech, config.tol);

  const Dataset& d = *report.data;
  for (Model model : config.models) {
    std::vector<std::future<ScoreRow>> pending;
    for (Index j = 0; j < d.size(); ++j) {
      pending.push_back(std::async(std::launch::async, [&, j, model]() {
        const Point p = d.dmu(j);
        switch (model) {
          case Model::rm_p: return ScoreRow{rm(*tech, p, config.tol), std::nullopt};
          case Model::rm_exfa: return ScoreRow{rm(*report.exfa, p, config.tol), std::nullopt};
          case Model::sbm_exfa: return ScoreRow{sbm_exfa(*report.exfa, p, config.tol), std::nullopt};
          case Model::max_sbm: return ScoreRow{max_sbm(*report.exfa, p, config.tol), std::nullopt};
          case Model::max_rm: {
            MaxRmResult r = max_rm(*report.exfa, p, config.tol);
            return ScoreRow{r.base, r};
          }
          case Model::m_nonextended: return ScoreRow{max_rm_nonextended(*tech, p, faces, config.tol), std::nullopt};
        }
        throw Error("unknown model");
      }));
    }
    ModelRun run{model, {}};
    for (auto& f : pending) run.rows.push_back(f.get());
    report.runs.push_back(std::move(run));
  }

  if (auditing) {
    std::map<std::string, std::vector<double>> scores;
    for (const auto& run : report.runs)
      for (const auto& row : run.rows) scores[label(run.model)].push_back(row.result.score);
    report.audit = dominance_audit(d, scores);
  }
  return report;
}

// ---- rendering ---------------------------------------------------------------

namespace detail {

inline double round_to(double value, double unit) { return std::round(value / unit) * unit; }

inline std::string fixed(double value, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  std::string text = s.str();
  if (text.find_first_not_of("-0.") == std::string::npos) text = std::string("0.") + std::string(static_cast<std::size_t>(digits), '0');
  return text;
}

inline std::vector<double> flat(const Point& p) {
  std::vector<double> out(p.x.data(), p.x.data() + p.x.size());
  out.insert(out.end(), p.y.data(), p.y.data() + p.y.size());
  return out;
}

inline std::vector<double> rounded(std::vector<double> values) {
  for (double& v : values) v = round_to(v, 1e-9) + 0.0;
  return values;
}

inline std::vector<std::string> coordinate_names(const Dataset& d) {
  std::vector<std::string> names = d.input_names;
  names.insert(names.end(), d.output_names.begin(), d.output_names.end());
  return names;
}

inline void render_table(std::ostream& out, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      if (c == 0)
        out << cells[c] << std::string(width[c] - cells[c].size(), ' ');
      else
        out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

inline std::string point_text(const Point& p) {
  std::string text = "(";
  const auto values = flat(p);
  for (std::size_t k = 0; k < values.size(); ++k) text += (k ? ", " : "") + fixed(values[k]);
  return text + ")";
}

}  // namespace detail

inline json to_json(const Report& report) {
  json doc;
  doc["facets"] = json::array();
  if (report.exfa)
    for (const Facet& f : report.exfa->facets()) doc["facets"].push_back(facet_to_json(f, report.data.get()));

  if (report.free_lunch) {
    json fl;
    fl["allows_free_lunch"] = report.free_lunch->allows_free_lunch;
    fl["intercepts"] = report.free_lunch->intercepts;
    if (report.free_lunch->witness)
      fl["witness"] = detail::rounded(detail::flat(*report.free_lunch->witness));
    else
      fl["witness"] = nullptr;
    doc["free_lunch"] = fl;
  } else {
    doc["free_lunch"] = nullptr;
  }

  doc["results"] = json::array();
  for (const auto& run : report.runs) {
    for (std::size_t j = 0; j < run.rows.size(); ++j) {
      const ScoreRow& row = run.rows[j];
      json r;
      r["model"] = cli_name(run.model);
      r["dmu"] = report.data->dmu_ids[j];
      r["score"] = detail::round_to(row.result.score, 1e-4) + 0.0;
      r["score_exact"] = row.result.score;
      r["projection"] = detail::rounded(detail::flat(row.result.projection));
      r["items"] = row.result.improvement_items.size();
      if (row.result.active_facet)
        r["active_facet"] = *row.result.active_facet + 1;
      else
        r["active_facet"] = nullptr;
      if (row.max_rm) {
        r["d_minus"] = row.max_rm->d_minus;
        r["d_plus"] = row.max_rm->d_plus;
        r["winning_side"] = to_string(row.max_rm->winning_side);
      }
      doc["results"].push_back(r);
    }
  }

  if (report.audit) {
    json findings = json::array();
    for (const auto& f : *report.audit)
      findings.push_back({{"model", f.model},
                          {"dominating", f.dominating},
                          {"dominated", f.dominated},
                          {"dominating_score", f.dominating_score},
                          {"dominated_score", f.dominated_score},
                          {"verdict", to_string(f.verdict)}});
    doc["audit"] = findings;
  } else {
    doc["audit"] = nullptr;
  }
  return doc;
}

inline void render_facets_table(std::ostream& out, const Report& report) {
  const ExtendedTechnology& exfa = *report.exfa;
  std::vector<std::string> header{"Facet"};
  for (Index i = 0; i < exfa.inputs(); ++i)
    header.push_back("v:" + (report.data ? report.data->input_names[static_cast<std::size_t>(i)] : std::to_string(i + 1)));
  for (Index r = 0; r < exfa.outputs(); ++r)
    header.push_back("u:" + (report.data ? report.data->output_names[static_cast<std::size_t>(r)] : std::to_string(r + 1)));
  header.insert(header.end(), {"psi", "Members"});
  std::vector<std::vector<std::string>> rows;
  for (Index k = 0; k < exfa.size(); ++k) {
    const Facet& f = exfa.facet(k);
    std::vector<std::string> row{std::to_string(k + 1)};
    for (Index i = 0; i < exfa.inputs(); ++i) row.push_back(detail::fixed(f.hyperplane.v[i], 6));
    for (Index r = 0; r < exfa.outputs(); ++r) row.push_back(detail::fixed(f.hyperplane.u[r], 6));
    row.push_back(detail::fixed(f.hyperplane.psi, 6));
    std::string members;
    for (Index j : f.members)
      members += (members.empty() ? "" : " ") +
                 (report.data ? report.data->dmu_ids[static_cast<std::size_t>(j)] : std::to_string(j + 1));
    row.push_back(members.empty() ? "-" : members);
    rows.push_back(std::move(row));
  }
  detail::render_table(out, header, rows);
}

inline void render_free_lunch(std::ostream& out, const FreeLunchReport& fl) {
  out << "Free lunch: " << (fl.allows_free_lunch ? "yes" : "no");
  if (fl.witness) out << ", witness " << detail::point_text(*fl.witness);
  out << '\n';
}

inline void render_text(std::ostream& out, const Report& report) {
  if (report.runs.empty() && report.exfa) {
    render_facets_table(out, report);
    out << '\n';
    render_free_lunch(out, *report.free_lunch);
    return;
  }
  const Dataset& d = *report.data;
  const auto names = detail::coordinate_names(d);
  std::vector<ImprovementHistogram> histograms;
  for (const auto& run : report.runs) {
    out << label(run.model) << '\n';
    std::vector<std::string> header{"DMU", "Score"};
    header.insert(header.end(), names.begin(), names.end());
    header.insert(header.end(), {"Items", "Facet"});
    std::vector<std::vector<std::string>> rows;
    std::vector<MeasureResult> results;
    for (std::size_t j = 0; j < run.rows.size(); ++j) {
      const MeasureResult& r = run.rows[j].result;
      std::vector<std::string> row{d.dmu_ids[j], detail::fixed(r.score)};
      for (double v : detail::flat(r.projection)) row.push_back(detail::fixed(v));
      row.push_back(std::to_string(r.improvement_items.size()));
      row.push_back(r.active_facet ? std::to_string(*r.active_facet + 1) : "-");
      rows.push_back(std::move(row));
      results.push_back(r);
    }
    detail::render_table(out, header, rows);
    out << '\n';
    histograms.push_back(improvement_histogram(results));
  }
  out << render_histograms(histograms, static_cast<std::size_t>(d.input_count() + d.output_count()));

  if (report.audit) {
    out << "\nDominance audit\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : *report.audit)
      rows.push_back({f.model, f.dominating, f.dominated, detail::fixed(f.dominating_score),
                      detail::fixed(f.dominated_score), to_string(f.verdict)});
    if (rows.empty())
      out << "no dominated pairs\n";
    else
      detail::render_table(out, {"Model", "Dominating", "Dominated", "Score", "Score", "Verdict"}, rows);
    if (report.free_lunch) {
      out << '\n';
      render_free_lunch(out, *report.free_lunch);
    }
  }
}

inline void render_csv(std::ostream& out, const Report& report) {
  if (report.runs.empty() && report.exfa) {
    out << "facet";
    for (Index i = 0; i < report.exfa->inputs(); ++i) out << ",v" << i + 1;
    for (Index r = 0; r < report.exfa->outputs(); ++r) out << ",u" << r + 1;
    out << ",psi,members\n";
    for (Index k = 0; k < report.exfa->size(); ++k) {
      const Facet& f = report.exfa->facet(k);
      out << k + 1;
      for (double c : f.hyperplane.coefficients()) out << ',' << std::setprecision(12) << c;
      out << ',';
      for (std::size_t q = 0; q < f.members.size(); ++q)
        out << (q ? " " : "")
            << (report.data ? report.data->dmu_ids[static_cast<std::size_t>(f.members[q])] : std::to_string(f.members[q] + 1));
      out << '\n';
    }
    return;
  }
  const Dataset& d = *report.data;
  out << "model,dmu,score";
  for (const auto& name : detail::coordinate_names(d)) out << ",target:" << name;
  out << ",items,facet\n";
  for (const auto& run : report.runs) {
    for (std::size_t j = 0; j < run.rows.size(); ++j) {
      const MeasureResult& r = run.rows[j].result;
      out << cli_name(run.model) << ',' << d.dmu_ids[j] << ',' << detail::fixed(r.score);
      for (double v : detail::flat(r.projection)) out << ',' << detail::fixed(v, 6);
      out << ',' << r.improvement_items.size() << ',';
      if (r.active_facet) out << *r.active_facet + 1;
      out << '\n';
    }
  }
  if (report.audit) {
    out << "\nmodel,dominating,dominated,dominating_score,dominated_score,verdict\n";
    for (const auto& f : *report.audit)
      out << f.model << ',' << f.dominating << ',' << f.dominated << ',' << detail::fixed(f.dominating_score) << ','
          << detail::fixed(f.dominated_score) << ',' << to_string(f.verdict) << '\n';
  }
}

/// Evaluates and renders; errors go to `err` and select the exit code.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Report report = evaluate(config);
    switch (config.format) {
      case Format::json: out << to_json(report).dump(2) << '\n'; break;
      case Format::csv: render_csv(out, report); break;
      case Format::table: render_text(out, report); break;
    }
    return kSuccess;
  } catch (const NoFacetError& e) {
    err << "error: " << e.what() << '\n';
    return kNoFacet;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

/// Parses the command line and runs it.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Efficiency scores and efficient facets for DEA datasets"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<std::string> models;
  std::string format = "table";
  double tol_feas = config.tol.feasibility;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--data", config.data_path, "CSV with header dmu,in:<name>...,out:<name>...");
    sub->add_option("--fixed-facets", config.fixed_facets_path, "JSON facet records to use instead of enumeration");
    sub->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--tol-feas", tol_feas, "feasibility tolerance")->check(CLI::PositiveNumber);
  };
  CLI::App* facets = app.add_subcommand("facets", "list efficient facets and the free-lunch check");
  CLI::App* score = app.add_subcommand("score", "score every DMU");
  CLI::App* audit = app.add_subcommand("audit", "score every DMU and check dominance consistency");
  for (CLI::App* sub : {facets, score, audit}) add_common(sub);
  for (CLI::App* sub : {score, audit}) {
    sub->add_option("--models", models, "comma-separated: rm, rm-exfa, sbm-exfa, max-sbm, max-rm, m-nonextended")
        ->delimiter(',');
    sub->add_flag("--audit", config.audit, "append dominance findings and the free-lunch check");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kDataError;
  }

  if (facets->parsed()) config.command = Command::facets;
  if (audit->parsed()) {
    config.command = Command::audit;
    config.audit = true;
  }
  config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
  config.tol.feasibility = tol_feas;
  if (!models.empty()) {
    config.models.clear();
    for (const auto& name : models) {
      const auto m = parse_model(name);
      if (!m) {
        err << "error: unknown model '" << name << "'\n";
        return kDataError;
      }
      if (std::find(config.models.begin(), config.models.end(), *m) == config.models.end())
        config.models.push_back(*m);
    }
  }
  return run(config, out, err);
}

}  // namespace dea::cli
