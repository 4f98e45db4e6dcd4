#pragma once

// Renderers for every CLI document. Each renderer is a pure function from
// computed results to a string; all rationals appear as canonical "p/q"
// text so exact output never passes through floating point.

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "coalesce/analysis.hpp"
#include "coalesce/chain.hpp"
#include "coalesce/partition.hpp"
#include "coalesce/simulate.hpp"
#include "coalesce/symmetric.hpp"

namespace coalesce {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, pretty };

inline Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

namespace detail {

// Round-trippable for CSV, shortened for human tables.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_double_brief(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

// Label-bordered grid: one header row, then one row per matrix row, columns
// padded to equal width. `separator_after` inserts a column divider.
inline std::string render_grid(const std::vector<std::string>& header,
                               const std::vector<std::vector<std::string>>& rows,
                               std::size_t separator_after) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      if (separator_after > 0 && c == separator_after + 1) out << "| ";
      out << pad(row[c], widths[c]);
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

inline std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += csv_cell(cells[i]);
  }
  row += '\n';
  return row;
}

}  // namespace detail

// ---- enumeration ----------------------------------------------------------

inline std::string render_enumeration(int n, const std::vector<StageSpace>& stages,
                                      Format format) {
  if (format == Format::json) {
    Json doc;
    doc["n"] = n;
    doc["stages"] = Json::array();
    for (const auto& stage : stages) {
      Json entry;
      entry["t"] = stage.t();
      entry["size"] = stage.size();
      Json states = Json::array();
      for (const auto& p : stage.states()) states.push_back(p.part_string());
      entry["states"] = states;
      doc["stages"].push_back(entry);
    }
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "t,index,partition\n";
    for (const auto& stage : stages)
      for (std::size_t i = 0; i < stage.size(); ++i)
        out += detail::csv_row({std::to_string(stage.t()), std::to_string(i),
                                stage.state(i).part_string()});
    return out;
  }
  std::ostringstream out;
  for (const auto& stage : stages) {
    out << "S(" << n << "," << stage.t() << "), " << stage.size()
        << (stage.size() == 1 ? " state:" : " states:");
    for (const auto& p : stage.states()) out << ' ' << p.part_string();
    out << '\n';
  }
  return out.str();
}

// ---- transition matrices ---------------------------------------------------

inline std::string render_stage_matrices(int n, const std::vector<StageMatrices>& chain,
                                         Format format, int max_n = kDefaultMaxN) {
  if (format == Format::json) {
    Json doc;
    doc["n"] = n;
    doc["stages"] = Json::array();
    for (const auto& stage : chain) {
      const StageSpace space = enumerate_stage(n, stage.t, max_n);
      Json entry;
      entry["t"] = stage.t;
      Json states = Json::array();
      for (const auto& p : space.states()) states.push_back(p.part_string());
      entry["states"] = states;
      Json within = Json::array();
      for (std::size_t r = 0; r < stage.a_t.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < stage.a_t.cols(); ++c)
          row.push_back(to_string(stage.a_t(r, c)));
        within.push_back(row);
      }
      entry["within"] = within;
      if (stage.a_down) {
        const StageSpace down = enumerate_stage(n, stage.t - 1, max_n);
        Json down_states = Json::array();
        for (const auto& p : down.states()) down_states.push_back(p.part_string());
        entry["descent_states"] = down_states;
        Json descent = Json::array();
        for (std::size_t r = 0; r < stage.a_down->rows(); ++r) {
          Json row = Json::array();
          for (std::size_t c = 0; c < stage.a_down->cols(); ++c)
            row.push_back(to_string((*stage.a_down)(r, c)));
          descent.push_back(row);
        }
        entry["descent"] = descent;
      }
      doc["stages"].push_back(entry);
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  for (const auto& stage : chain) {
    const StageSpace space = enumerate_stage(n, stage.t, max_n);
    std::vector<std::string> header{"t=" + std::to_string(stage.t)};
    for (const auto& p : space.states()) header.push_back(p.part_string());
    std::size_t separator_after = 0;
    if (stage.a_down) {
      separator_after = space.size();
      const StageSpace down = enumerate_stage(n, stage.t - 1, max_n);
      for (const auto& p : down.states()) header.push_back(p.part_string());
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < stage.a_t.rows(); ++r) {
      std::vector<std::string> row{space.state(r).part_string()};
      for (std::size_t c = 0; c < stage.a_t.cols(); ++c)
        row.push_back(to_string(stage.a_t(r, c)));
      if (stage.a_down)
        for (std::size_t c = 0; c < stage.a_down->cols(); ++c)
          row.push_back(to_string((*stage.a_down)(r, c)));
      rows.push_back(std::move(row));
    }
    if (format == Format::csv) {
      out += detail::csv_row(header);
      for (const auto& row : rows) out += detail::csv_row(row);
      out += '\n';
    } else {
      out += detail::render_grid(header, rows, separator_after);
      out += '\n';
    }
  }
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

// ---- chain analysis --------------------------------------------------------

inline std::string landing_label_line(const StageSpace& space,
                                      const std::vector<Rational>& probabilities) {
  std::string line;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (i > 0) line += "  ";
    line += space.state(i).part_string() + " " + to_string(probabilities[i]);
  }
  return line;
}

inline std::string render_analysis(const ChainAnalysis& analysis, Format format,
                                   int max_n = kDefaultMaxN) {
  if (format == Format::json) {
    Json doc;
    doc["n"] = analysis.n;
    doc["stages"] = Json::array();
    for (std::size_t i = 0; i < analysis.landing.size(); ++i) {
      Json entry;
      entry["t"] = analysis.landing[i].t;
      Json landing = Json::array();
      for (const auto& p : analysis.landing[i].probabilities) landing.push_back(to_string(p));
      entry["landing"] = landing;
      if (i < analysis.stage_times.size()) entry["e"] = to_string(analysis.stage_times[i]);
      doc["stages"].push_back(entry);
    }
    doc["total"] = to_string(analysis.total_time);
    if (analysis.variance) doc["variance"] = to_string(*analysis.variance);
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "t,e,landing\n";
    for (std::size_t i = 0; i < analysis.landing.size(); ++i) {
      const StageSpace space = enumerate_stage(analysis.n, analysis.landing[i].t, max_n);
      std::string landing;
      for (std::size_t s = 0; s < analysis.landing[i].probabilities.size(); ++s) {
        if (s > 0) landing += ';';
        landing += space.state(s).part_string() + "=" +
                   to_string(analysis.landing[i].probabilities[s]);
      }
      const std::string e =
          i < analysis.stage_times.size() ? to_string(analysis.stage_times[i]) : "";
      out += detail::csv_row({std::to_string(analysis.landing[i].t), e, landing});
    }
    out += detail::csv_row({"total", to_string(analysis.total_time), ""});
    if (analysis.variance)
      out += detail::csv_row({"variance", to_string(*analysis.variance), ""});
    return out;
  }
  std::ostringstream out;
  out << "n = " << analysis.n << '\n';
  for (std::size_t i = 0; i < analysis.landing.size(); ++i) {
    const StageSpace space = enumerate_stage(analysis.n, analysis.landing[i].t, max_n);
    out << "t = " << analysis.landing[i].t;
    if (i < analysis.stage_times.size())
      out << "  e = " << to_string(analysis.stage_times[i]);
    out << "  landing: " << landing_label_line(space, analysis.landing[i].probabilities)
        << '\n';
  }
  out << "total = " << to_string(analysis.total_time) << '\n';
  if (analysis.variance) out << "variance = " << to_string(*analysis.variance) << '\n';
  return out.str();
}

// ---- symmetric system ------------------------------------------------------

inline std::string render_symmetric(const SymmetricSystem& system,
                                    const std::vector<Rational>& x, Format format) {
  if (format == Format::json) {
    Json doc;
    doc["n"] = system.n;
    Json values = Json::array();
    for (const auto& v : x) values.push_back(to_string(v));
    doc["x"] = values;
    doc["total"] = to_string(Rational(system.n) * x.front());
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "i,x_i\n";
    for (std::size_t i = 0; i < x.size(); ++i)
      out += detail::csv_row({std::to_string(i + 1), to_string(x[i])});
    return out;
  }
  std::ostringstream out;
  out << "n = " << system.n << '\n';
  for (std::size_t i = 0; i < x.size(); ++i)
    out << "x_" << (i + 1) << " = " << to_string(x[i]) << '\n';
  out << "n * x_1 = " << to_string(Rational(system.n) * x.front()) << '\n';
  return out.str();
}

// ---- simulation ------------------------------------------------------------

inline std::string render_comparison(const SimulationReport& report,
                                     const ComparisonReport& comparison, Format format) {
  if (format == Format::json) {
    Json doc;
    doc["n"] = report.n;
    doc["trials"] = report.trials;
    doc["master_seed"] = report.master_seed;
    doc["z_threshold"] = comparison.z_threshold;
    Json stages = Json::array();
    for (const auto& stage : report.stages) {
      Json entry;
      entry["t"] = stage.t;
      entry["landing_counts"] = stage.landing_counts;
      if (stage.t >= 2) {
        entry["mean_time"] =
            static_cast<double>(stage.steps_sum) / static_cast<double>(report.trials);
      }
      stages.push_back(entry);
    }
    doc["stages"] = stages;
    doc["total_mean"] = report.total_mean();
    doc["total_variance"] = report.total_variance();
    Json rows = Json::array();
    for (const auto& row : comparison.rows) {
      Json entry;
      entry["quantity"] = row.quantity;
      entry["observed"] = row.observed;
      entry["expected"] = row.expected;
      entry["se"] = row.se;
      entry["z"] = row.z;
      entry["within"] = row.within;
      rows.push_back(entry);
    }
    doc["comparison"] = rows;
    doc["max_abs_z"] = comparison.max_abs_z;
    doc["all_within"] = comparison.all_within;
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "quantity,observed,expected,se,z,within\n";
    for (const auto& row : comparison.rows)
      out += detail::csv_row({row.quantity, detail::format_double(row.observed),
                              detail::format_double(row.expected),
                              detail::format_double(row.se), detail::format_double(row.z),
                              row.within ? "true" : "false"});
    return out;
  }
  std::ostringstream out;
  out << "n = " << report.n << ", trials = " << report.trials
      << ", master seed = " << report.master_seed << '\n';
  std::vector<std::string> header{"quantity", "observed", "expected", "se", "z", "within"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : comparison.rows)
    rows.push_back({row.quantity, detail::format_double_brief(row.observed),
                    detail::format_double_brief(row.expected),
                    detail::format_double_brief(row.se), detail::format_double_brief(row.z),
                    row.within ? "yes" : "NO"});
  out << detail::render_grid(header, rows, 0);
  out << "max |z| = " << detail::format_double_brief(comparison.max_abs_z) << " ("
      << (comparison.all_within ? "all within" : "OUTSIDE") << " threshold "
      << detail::format_double_brief(comparison.z_threshold) << ")\n";
  return out.str();
}

// ---- identity checks -------------------------------------------------------

inline std::string render_checks(int n, const std::vector<CheckReport>& checks,
                                 Format format) {
  bool all_pass = true;
  for (const auto& check : checks) all_pass = all_pass && check.pass;
  if (format == Format::json) {
    Json doc;
    doc["n"] = n;
    Json rows = Json::array();
    for (const auto& check : checks) {
      Json entry;
      entry["name"] = check.name;
      entry["pass"] = check.pass;
      if (!check.pass) entry["detail"] = check.detail;
      rows.push_back(entry);
    }
    doc["checks"] = rows;
    doc["all_pass"] = all_pass;
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "name,pass,detail\n";
    for (const auto& check : checks)
      out += detail::csv_row({check.name, check.pass ? "true" : "false", check.detail});
    return out;
  }
  std::ostringstream out;
  out << "n = " << n << '\n';
  for (const auto& check : checks) {
    out << (check.pass ? "PASS  " : "FAIL  ") << check.name;
    if (!check.pass) out << "  (" << check.detail << ")";
    out << '\n';
  }
  out << (all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
  return out.str();
}

}  // namespace coalesce
